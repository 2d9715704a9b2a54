#pragma once

// Run configuration (flat "key = value" text) and CSV/SVG emitters.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "heatswitch/common.hpp"
#include "heatswitch/estimates.hpp"
#include "heatswitch/fdm.hpp"
#include "heatswitch/records.hpp"
#include "heatswitch/series.hpp"
#include "heatswitch/switching.hpp"

namespace heatswitch {

enum class RunMode { Analytic, Fdm, Estimate, Compare };

std::string_view to_string(RunMode m) noexcept;
std::optional<RunMode> parse_run_mode(std::string_view text) noexcept;

struct RunConfig {
  RunMode mode = RunMode::Analytic;
  PhysicalParams physical;
  SeriesConfig series;           // used by analytic and compare
  std::optional<FdmConfig> fdm;  // fdm and compare
  StopRule stop;                 // analytic; estimate uses max_switches
  double sample_dt = 0.01;       // analytic trace spacing
  int profile_points = 50;       // analytic profile nodes - 1
  int snapshot_stride = 10;
  std::string output_dir = ".";
  bool emit_svg = false;

  bool operator==(const RunConfig&) const = default;
};

/// Parses and validates a configuration. Lines are `key = value`; `#` starts
/// a comment; blank lines are skipped. Unknown or repeated keys and malformed
/// lines raise ParseError with the 1-based line number; a missing `mode` is a
/// ParseError; invariant violations raise ValidationError.
/// forced_mode (from the command line) fills a missing mode and must agree
/// with a present one.
RunConfig parse_config(std::string_view text, std::optional<RunMode> forced_mode = std::nullopt);

/// Inverse of parse_config for validated configs.
std::string render_config(const RunConfig& config);

void emit_switch_table(const Schedule& schedule, std::ostream& out);
void emit_trace(std::span<const TraceRecord> records, std::ostream& out);
void emit_trace_svg(std::span<const TraceRecord> records, std::ostream& out);
void emit_profiles(std::span<const ProfileSnapshot> snapshots, std::ostream& out);

/// Per-index switch times from the finite-difference run, the spectral run
/// and both closed-form estimates, with deviations and late-time gap means.
/// Throws IndexMismatch with fewer than 3 common switches.
void compare_report(const Schedule& analytic, const Schedule& fdm, const EstimateParams& est,
                    std::ostream& out);

/// Writes via the callback into path, throwing IoError naming the path.
template <class Writer>
void write_file(const std::filesystem::path& path, Writer&& writer);

std::string read_file(const std::filesystem::path& path);

}  // namespace heatswitch

#include <fstream>

namespace heatswitch {

template <class Writer>
void write_file(const std::filesystem::path& path, Writer&& writer) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  writer(out);
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace heatswitch
