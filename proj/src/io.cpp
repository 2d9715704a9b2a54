#include "heatswitch/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace heatswitch {

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string fixed6(double v) { return fmt("%.6f", v); }

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_error(int line, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

[[noreturn]] void validation_error(const std::string& msg) {
  throw Error(ErrorCode::ValidationError, msg);
}

const std::set<std::string, std::less<>> kKeys = {
    "mode", "u0",  "a", "M",  "m",          "K",          "crossing_tol",
    "mass_tail_tol", "J", "dt", "T", "max_switches", "sample_dt", "profile_points",
    "snapshot_stride", "output_dir", "svg"};

struct Entry {
  std::string value;
  int line = 0;
};

class Fields {
 public:
  explicit Fields(std::map<std::string, Entry, std::less<>> entries) : entries_(std::move(entries)) {}

  bool has(std::string_view key) const { return entries_.find(key) != entries_.end(); }

  double real(std::string_view key) const {
    const auto& e = at(key);
    double v = 0.0;
    const char* end = e.value.data() + e.value.size();
    auto [ptr, ec] = std::from_chars(e.value.data(), end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
      parse_error(e.line, std::string(key) + ": not a number: '" + e.value + "'");
    }
    return v;
  }

  double real(std::string_view key, double fallback) const { return has(key) ? real(key) : fallback; }

  int integer(std::string_view key) const {
    const auto& e = at(key);
    int v = 0;
    const char* end = e.value.data() + e.value.size();
    auto [ptr, ec] = std::from_chars(e.value.data(), end, v);
    if (ec != std::errc() || ptr != end) {
      parse_error(e.line, std::string(key) + ": not an integer: '" + e.value + "'");
    }
    return v;
  }

  int integer(std::string_view key, int fallback) const {
    return has(key) ? integer(key) : fallback;
  }

  bool boolean(std::string_view key, bool fallback) const {
    if (!has(key)) return fallback;
    const auto& e = at(key);
    if (e.value == "true" || e.value == "1") return true;
    if (e.value == "false" || e.value == "0") return false;
    parse_error(e.line, std::string(key) + ": expected true or false");
  }

  const Entry& at(std::string_view key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) validation_error(std::string(key) + " is required");
    return it->second;
  }

 private:
  std::map<std::string, Entry, std::less<>> entries_;
};

Fields tokenize(std::string_view text) {
  std::map<std::string, Entry, std::less<>> entries;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) parse_error(line_no, "expected 'key = value'");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) parse_error(line_no, "expected 'key = value'");
    if (!kKeys.contains(key)) parse_error(line_no, "unknown key '" + std::string(key) + "'");
    if (entries.contains(key)) parse_error(line_no, "duplicate key '" + std::string(key) + "'");
    entries.emplace(std::string(key), Entry{std::string(value), line_no});
  }
  return Fields(std::move(entries));
}

}  // namespace

std::string_view to_string(RunMode m) noexcept {
  switch (m) {
    case RunMode::Analytic: return "analytic";
    case RunMode::Fdm: return "fdm";
    case RunMode::Estimate: return "estimate";
    case RunMode::Compare: return "compare";
  }
  return "analytic";
}

std::optional<RunMode> parse_run_mode(std::string_view text) noexcept {
  for (auto m : {RunMode::Analytic, RunMode::Fdm, RunMode::Estimate, RunMode::Compare}) {
    if (text == to_string(m)) return m;
  }
  return std::nullopt;
}

RunConfig parse_config(std::string_view text, std::optional<RunMode> forced_mode) {
  const Fields f = tokenize(text);

  // type errors first, so they are reported with their line before any
  // missing-key validation
  for (const char* key : {"u0", "a", "M", "m", "crossing_tol", "mass_tail_tol", "dt", "T", "sample_dt"}) {
    if (f.has(key)) f.real(key);
  }
  for (const char* key : {"K", "J", "max_switches", "profile_points", "snapshot_stride"}) {
    if (f.has(key)) f.integer(key);
  }

  RunConfig cfg;
  if (f.has("mode")) {
    const auto& e = f.at("mode");
    const auto mode = parse_run_mode(e.value);
    if (!mode) parse_error(e.line, "unknown mode '" + e.value + "'");
    if (forced_mode && *forced_mode != *mode) {
      validation_error("config mode '" + e.value + "' disagrees with command-line mode '" +
                       std::string(to_string(*forced_mode)) + "'");
    }
    cfg.mode = *mode;
  } else if (forced_mode) {
    cfg.mode = *forced_mode;
  } else {
    parse_error(0, "mode is missing");
  }

  cfg.physical = PhysicalParams{f.real("a"), f.real("u0"), f.real("M"), f.real("m")};
  cfg.series.num_modes = f.integer("K", cfg.series.num_modes);
  cfg.series.crossing_tol = f.real("crossing_tol", cfg.series.crossing_tol);
  cfg.series.mass_tail_tol = f.real("mass_tail_tol", cfg.series.mass_tail_tol);
  cfg.sample_dt = f.real("sample_dt", cfg.sample_dt);
  cfg.profile_points = f.integer("profile_points", cfg.profile_points);
  cfg.snapshot_stride = f.integer("snapshot_stride", cfg.snapshot_stride);
  if (f.has("output_dir")) cfg.output_dir = f.at("output_dir").value;
  cfg.emit_svg = f.boolean("svg", cfg.emit_svg);

  if (f.has("T")) cfg.stop.final_time = f.real("T");
  if (f.has("max_switches")) cfg.stop.max_switches = f.integer("max_switches");

  const bool wants_fdm = cfg.mode == RunMode::Fdm || cfg.mode == RunMode::Compare;
  if (wants_fdm) {
    cfg.fdm = FdmConfig{f.integer("J"), f.real("dt"), f.real("T"), cfg.snapshot_stride};
  }
  if (cfg.mode == RunMode::Estimate && !cfg.stop.max_switches) cfg.stop.max_switches = 20;

  cfg.physical.validate();
  if (cfg.mode == RunMode::Analytic || cfg.mode == RunMode::Compare) cfg.series.validate();
  if (cfg.fdm) cfg.fdm->validate();
  cfg.stop.validate();
  if (!(cfg.sample_dt > 0.0)) validation_error("sample_dt > 0 required");
  if (cfg.profile_points < 2) validation_error("profile_points >= 2 required");
  if (cfg.snapshot_stride < 1) validation_error("snapshot_stride >= 1 required");
  return cfg;
}

std::string render_config(const RunConfig& config) {
  std::ostringstream out;
  auto real = [&](const char* key, double v) { out << key << " = " << fmt("%.17g", v) << '\n'; };
  out << "mode = " << to_string(config.mode) << '\n';
  real("u0", config.physical.u0);
  real("a", config.physical.diffusivity);
  real("M", config.physical.upper_mass);
  real("m", config.physical.lower_mass);
  out << "K = " << config.series.num_modes << '\n';
  real("crossing_tol", config.series.crossing_tol);
  real("mass_tail_tol", config.series.mass_tail_tol);
  if (config.fdm) {
    out << "J = " << config.fdm->J << '\n';
    real("dt", config.fdm->dt);
  }
  if (config.stop.final_time) real("T", *config.stop.final_time);
  if (config.stop.max_switches) out << "max_switches = " << *config.stop.max_switches << '\n';
  real("sample_dt", config.sample_dt);
  out << "profile_points = " << config.profile_points << '\n';
  out << "snapshot_stride = " << config.snapshot_stride << '\n';
  out << "output_dir = " << config.output_dir << '\n';
  out << "svg = " << (config.emit_svg ? "true" : "false") << '\n';
  return out.str();
}

void emit_switch_table(const Schedule& schedule, std::ostream& out) {
  out << "n,t_n,gap,mass_at_switch,phase_ended\n";
  for (const auto& e : schedule.events) {
    out << e.n << ',' << fixed6(e.t) << ',' << fixed6(e.gap) << ',' << fixed6(e.mass_at_switch)
        << ',' << to_string(e.ended_phase) << '\n';
  }
}

void emit_trace(std::span<const TraceRecord> records, std::ostream& out) {
  out << "t,mass,phase,u_center\n";
  for (const auto& r : records) {
    out << fixed6(r.t) << ',' << fmt("%.10g", r.mass) << ',' << to_string(r.phase) << ','
        << fmt("%.10g", r.center_value) << '\n';
  }
}

void emit_profiles(std::span<const ProfileSnapshot> snapshots, std::ostream& out) {
  out << "stage,t,x,u\n";
  for (const auto& s : snapshots) {
    for (std::size_t j = 0; j < s.x.size(); ++j) {
      out << s.stage << ',' << fixed6(s.t) << ',' << fixed6(s.x[j]) << ',' << fmt("%.10g", s.u[j])
          << '\n';
    }
  }
}

void emit_trace_svg(std::span<const TraceRecord> records, std::ostream& out) {
  constexpr double width = 800, height = 400, left = 60, right = 20, top = 30, bottom = 40;
  double t_max = 0.0, y_max = 0.0;
  for (const auto& r : records) {
    t_max = std::max(t_max, r.t);
    y_max = std::max({y_max, r.mass, r.center_value});
  }
  if (t_max <= 0.0) t_max = 1.0;
  y_max = y_max <= 0.0 ? 1.0 : 1.05 * y_max;
  auto px = [&](double t) { return left + (width - left - right) * t / t_max; };
  auto py = [&](double y) { return height - bottom - (height - top - bottom) * y / y_max; };
  auto coord = [&](double v) { return fmt("%.2f", v); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << height - bottom << "\" x2=\"" << width - right
      << "\" y2=\"" << height - bottom << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
      << height - bottom << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double t = t_max * i / 5.0;
    const double y = y_max * i / 5.0;
    out << "<text x=\"" << coord(px(t)) << "\" y=\"" << height - bottom + 15
        << "\" text-anchor=\"middle\">" << fmt("%.3g", t) << "</text>\n";
    out << "<text x=\"" << left - 5 << "\" y=\"" << coord(py(y) + 4)
        << "\" text-anchor=\"end\">" << fmt("%.3g", y) << "</text>\n";
  }
  out << "<text x=\"" << (width + left) / 2 << "\" y=\"" << height - 5
      << "\" text-anchor=\"middle\">t</text>\n";

  auto polyline = [&](const char* color, auto value) {
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.2\" points=\"";
    for (const auto& r : records) out << coord(px(r.t)) << ',' << coord(py(value(r))) << ' ';
    out << "\"/>\n";
  };
  polyline("steelblue", [](const TraceRecord& r) { return r.mass; });
  polyline("firebrick", [](const TraceRecord& r) { return r.center_value; });
  out << "<text x=\"" << left + 10 << "\" y=\"" << top - 10
      << "\" fill=\"steelblue\">mass</text>\n";
  out << "<text x=\"" << left + 60 << "\" y=\"" << top - 10
      << "\" fill=\"firebrick\">u(0.5)</text>\n";
  out << "</svg>\n";
}

void compare_report(const Schedule& analytic, const Schedule& fdm, const EstimateParams& est,
                    std::ostream& out) {
  const std::size_t common = std::min(analytic.events.size(), fdm.events.size());
  if (common < 3) {
    throw Error(ErrorCode::IndexMismatch,
                "need at least 3 common switches, have " + std::to_string(common));
  }
  const double a = fdm.params.diffusivity;
  const bool has_first_term = est.alpha > 0.0 && est.alpha < 0.5;
  std::optional<PhaseGaps> gaps;
  try {
    gaps = higher_order_gaps(est, a);
  } catch (const Error&) {
  }

  auto cell = [](std::optional<double> v, const char* spec) {
    return v ? fmt(spec, *v) : std::string();
  };
  auto row = [&](const std::string& label, double t_fdm, double t_an, std::optional<double> t_ho,
                 std::optional<double> t_ft) {
    const double abs_dev = std::abs(t_an - t_fdm);
    const double rel_dev = t_fdm != 0.0 ? abs_dev / std::abs(t_fdm) : 0.0;
    out << label << ',' << fixed6(t_fdm) << ',' << fixed6(t_an) << ',' << cell(t_ho, "%.6f") << ','
        << cell(t_ft, "%.6f") << ',' << fmt("%.6e", abs_dev) << ',' << fmt("%.6e", rel_dev) << '\n';
  };

  out << "n,t_fdm,t_analytic,t_higher_order,t_first_term,abs_dev,rel_dev\n";
  for (std::size_t i = 0; i < common; ++i) {
    const int n = static_cast<int>(i) + 1;
    std::optional<double> ho, ft;
    try {
      ho = higher_order_switch_time(n, est, a);
    } catch (const Error&) {
    }
    if (has_first_term) ft = first_term_switch_time(n, est.alpha, a);
    row(std::to_string(n), fdm.events[i].t, analytic.events[i].t, ho, ft);
  }

  // late-time gap means skip the first two switches (initial ramp)
  for (const Phase ended : {Phase::Charging, Phase::Discharging}) {
    double sum_fdm = 0.0, sum_an = 0.0;
    int count = 0;
    for (std::size_t i = 2; i < common; ++i) {
      if (fdm.events[i].ended_phase != ended) continue;
      sum_fdm += fdm.events[i].gap;
      sum_an += analytic.events[i].gap;
      ++count;
    }
    if (count == 0) continue;
    const bool up = ended == Phase::Charging;
    std::optional<double> ho;
    if (gaps) ho = up ? gaps->up_gap : gaps->down_gap;
    std::optional<double> ft;
    if (has_first_term) ft = first_term_gap(est.alpha, a);
    row(up ? "up_gap_mean" : "down_gap_mean", sum_fdm / count, sum_an / count, ho, ft);
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace heatswitch
