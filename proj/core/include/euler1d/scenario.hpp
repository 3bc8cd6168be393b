#pragma once

#include <filesystem>
#include <iosfwd>

#include "euler1d/config.hpp"
#include "euler1d/families.hpp"

namespace euler1d {

enum class ScenarioKind { exact, rp, tvd_compare, verify, subchar };

struct Scenario {
  ScenarioKind kind = ScenarioKind::exact;
  Config cfg;
  std::filesystem::path out_dir = "out";
  unsigned seed = 12345;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitConstraint = 2;
inline constexpr int kExitValidity = 3;
inline constexpr int kExitInadmissible = 4;
inline constexpr int kExitVerifyFailed = 5;

/// Runs one scenario, writing outputs under out_dir and diagnostics to
/// log. Returns the documented exit code, never throws.
int run_scenario(const Scenario& sc, std::ostream& log);

/// Family construction from a [family] config section (or the named
/// default fixture when `fixture = default`).
struct FamilyBundle {
  FamilySolution fs;
  Fixture fixture;  // sampling box used by verify
};
FamilyBundle family_from_config(const Config& cfg);

Profile profile_from_spec(const std::string& spec);
EntropyFn entropy_from_spec(const std::string& spec);

}  // namespace euler1d
