// heatswitch: relay-controlled boundary switching for the 1D heat equation.
//
//   heatswitch <analytic|fdm|estimate|compare> --config <path> [--out <dir>] [--svg]
//
// Exit status: 0 success, 1 parse/validation error, 2 runtime error.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "heatswitch/io.hpp"
#include "heatswitch/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Thermostat-style boundary control of the 1D heat equation"};
  std::string mode_text;
  std::string config_path;
  std::string out_dir;
  bool svg = false;
  app.add_option("mode", mode_text, "analytic, fdm, estimate or compare")
      ->required()
      ->check(CLI::IsMember({"analytic", "fdm", "estimate", "compare"}));
  app.add_option("--config", config_path, "key = value configuration file")->required();
  app.add_option("--out", out_dir, "output directory (overrides output_dir)");
  app.add_flag("--svg", svg, "also write trace.svg");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? EXIT_SUCCESS : 1;
  }

  using namespace heatswitch;
  RunConfig config;
  try {
    config = parse_config(read_file(config_path), parse_run_mode(mode_text));
  } catch (const Error& e) {
    std::cerr << "heatswitch: " << e.what() << '\n';
    return e.code() == ErrorCode::IoError ? 2 : 1;
  }
  if (!out_dir.empty()) config.output_dir = out_dir;
  if (svg) config.emit_svg = true;

  try {
    for (const auto& p : execute(config, std::cerr)) std::cout << p.string() << '\n';
  } catch (const Error& e) {
    std::cerr << "heatswitch: " << e.what() << '\n';
    return e.code() == ErrorCode::ValidationError ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "heatswitch: " << e.what() << '\n';
    return 2;
  }
  return EXIT_SUCCESS;
}
