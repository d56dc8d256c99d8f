#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "adw/cli/config.hpp"
#include "adw/cli/run.hpp"
#include "adw/core/error.hpp"

int main(int argc, char** argv) {
  CLI::App app{"shear-free congruence and lightcone-equation toolkit"};
  app.set_version_flag("--version", std::string(adw::kToolVersion));

  std::string mode;
  std::string config_path;
  std::vector<std::string> overrides;
  app.add_option("mode", mode,
                 "one of: congruence, caustics, fields, uwl, render")
      ->required();
  app.add_option("--config", config_path, "path to the run configuration")
      ->required();
  app.add_option("--set", overrides, "override a config entry, section.key=value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    adw::RunConfig cfg = adw::RunConfig::load(config_path);
    for (const std::string& ov : overrides) cfg.set_override(ov);
    adw::run_mode(cfg, mode);
  } catch (const adw::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const adw::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const adw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
