#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "heatswitch/io.hpp"

namespace heatswitch {

/// Runs the configured mode and writes its files into config.output_dir
/// (created if needed). Progress and warnings go to log. Returns the files
/// written.
std::vector<std::filesystem::path> execute(const RunConfig& config, std::ostream& log);

}  // namespace heatswitch
