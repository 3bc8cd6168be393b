#include <cstring>
#include <iostream>
#include <string>

#include "euler1d/scenario.hpp"

namespace {

void usage(std::ostream& os) {
  os << "usage: euler1d <exact|rp|tvd-compare|verify|subchar> --config <path>"
        " [--out <dir>] [--seed <n>]\n"
        "\n"
        "  exact        evaluate an exact-solution family on a grid, write CSV snapshots\n"
        "  rp           solve the generalized Riemann problem for the ideal-gas source\n"
        "  tvd-compare  integrate the in-fan scalar equation with the TVD scheme and\n"
        "               compare against the exact fan over grid refinements\n"
        "  verify       run initial-data, residual and structural checks for a family\n"
        "  subchar      equilibrium-subsystem margins and asymptotic fan comparison\n"
        "\n"
        "Config values can be overridden via EULER1D_<SECTION>_<KEY> variables.\n";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace euler1d;
  if (argc < 2) {
    usage(std::cerr);
    return kExitConfig;
  }
  const std::string cmd = argv[1];
  Scenario sc;
  if (cmd == "exact") sc.kind = ScenarioKind::exact;
  else if (cmd == "rp") sc.kind = ScenarioKind::rp;
  else if (cmd == "tvd-compare") sc.kind = ScenarioKind::tvd_compare;
  else if (cmd == "verify") sc.kind = ScenarioKind::verify;
  else if (cmd == "subchar") sc.kind = ScenarioKind::subchar;
  else {
    std::cerr << "error: unknown subcommand '" << cmd << "'\n";
    usage(std::cerr);
    return kExitConfig;
  }

  std::string config_path;
  for (int i = 2; i < argc; ++i) {
    const std::string arg = argv[i];
    auto next = [&]() -> std::string {
      if (i + 1 >= argc) {
        std::cerr << "error: " << arg << " needs a value\n";
        std::exit(kExitConfig);
      }
      return argv[++i];
    };
    if (arg == "--config") config_path = next();
    else if (arg == "--out") sc.out_dir = next();
    else if (arg == "--seed") sc.seed = static_cast<unsigned>(std::stoul(next()));
    else if (arg == "--help" || arg == "-h") {
      usage(std::cout);
      return kExitOk;
    } else {
      std::cerr << "error: unknown flag '" << arg << "'\n";
      return kExitConfig;
    }
  }
  if (config_path.empty()) {
    std::cerr << "error: --config is required\n";
    return kExitConfig;
  }

  try {
    sc.cfg = Config::parse_file(config_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return run_scenario(sc, std::cout);
}
