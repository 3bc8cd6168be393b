#pragma once

#include <memory>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "euler1d/profile.hpp"
#include "euler1d/wave_system.hpp"

namespace euler1d {

enum class FamilyId {
  ig_i,      // lambda3, ideal gas, k0 = k1 = 0
  ig_ii,     // lambda3, ideal gas, k0 = k2 = 0
  vk_a,      // lambda3, Von Karman, a'(S) != 0
  ch_psi,    // lambda3, Chaplygin, f = c0 (R1)^2
  ch_m0,     // lambda3, Chaplygin, travelling-label solution
  l2_i,      // lambda2, any law, u0 constant, equilibrium transport
  l2_ii,     // lambda2, F1 = 0, spatially uniform velocity
  l2_iii,    // lambda2, F2 = 0, ideal gas
  l2_iv_1,   // lambda2, ideal gas, k1 = 0 with density-weighted source
  l2_iv_2,   // lambda2, ideal gas, mu = 0, linear damping source
  l2_iv_vk,  // lambda2, Von Karman, mu = 0
  l2_v,      // lambda2, Von Karman, p linear in x
  l2_v_ch,   // lambda2, Chaplygin specialization of l2_v
  simple_wave,
};

const char* family_name(FamilyId id);
std::optional<FamilyId> family_from_name(std::string_view name);

// ---------------------------------------------------------------------------
// Per-family parameter records.
// ---------------------------------------------------------------------------

struct IgIParams {
  double gamma = 2.0, cv = 1.0, s_hat = 0.0;
  double k2 = 0.0;  // source strength
  double c1 = 0.0;  // constant value of R1 on the initial data
};

struct IgIiParams {
  double gamma = 2.0, cv = 1.0, s_hat = 0.0;
  double k1 = 0.0;
  double S0 = 0.0;  // uniform entropy
};

struct VkAParams {
  EntropyFn a, b;
  double c0 = 0.0, c1 = 0.0;
};

struct ChPsiParams {
  double a0 = 1.0;
  double c0 = 0.0;  // f = c0 (R1)^2, F = (c0/a0) R1 R2
};

struct ChM0Params {
  double a0 = 1.0;
  double m0 = 0.0;
  double S0 = 0.0;
  Profile psi;  // monotone; R1 = psi(xi)
  Profile phi;  // in-fan shape, range inside (0,1)
};

struct L2IParams {
  PressureLaw law;
  double u0 = 0.0;
  SourceTerm f;  // must satisfy dp0/dx = rho0 f on the initial data
};

struct L2IiParams {
  PressureLaw law;
  double u0 = 0.0;
  std::function<double(double u)> F2;
  std::function<double(double p, double S)> psi;
};

struct L2IiiParams {
  double gamma = 2.0, cv = 1.0, s_hat = 0.0;
  std::function<double(double u)> pi0;  // f = pi0(u) rho^(gamma+1)
};

struct L2Iv1Params {
  double gamma = 2.0, cv = 1.0, s_hat = 0.0;
  double k0 = -0.5;  // u = -k0 x
  double mu0 = 0.0;
};

struct L2Iv2Params {
  double gamma = 2.0, cv = 1.0, s_hat = 0.0;
  double k0 = 0.3, k1 = 0.5;
};

struct L2IvVkParams {
  EntropyFn a, b;
  double k0 = 0.4, k1 = 0.1;
  double c0 = -0.5;  // uniform initial pressure
};

struct L2VParams {
  EntropyFn a, b;
  double k0 = 0.4, k1 = 0.3;
};

struct L2VChParams {
  double a0 = 1.0;
  double k0 = 0.5, k1 = 0.4;
  double c_hat = 0.3;  // u0 = c_hat x
};

struct SimpleParams {
  PressureLaw law;
  double r1 = 0.0;  // constant Riemann invariants of the lambda3 family
  double r2 = 0.0;
};

using FamilyParams =
    std::variant<IgIParams, IgIiParams, VkAParams, ChPsiParams, ChM0Params, L2IParams, L2IiParams,
                 L2IiiParams, L2Iv1Params, L2Iv2Params, L2IvVkParams, L2VParams, L2VChParams,
                 SimpleParams>;

/// Initial data. Families that can derive consistent companions from a
/// subset (documented per family in the scenario schema) accept missing
/// entries; explicitly supplied profiles are taken as-is and validated
/// by the constraints module.
struct InitialData {
  std::optional<Profile> rho0, u0, S0;
  std::optional<Profile> v0;  // simple-wave velocity profile
  double x_lo = -1.0, x_hi = 1.0;
  double anchor_x = 0.0;     // anchor for profiles produced by an ODE solve
  double anchor_value = 0.0;
  double t_max = 10.0;       // cap for validity scans and cached trajectories
};

/// Named pointwise identity that must vanish on solution states.
struct StructuralIdentity {
  std::string name;
  std::function<double(const State&)> residual;
};

namespace detail {
struct FamilyImpl;
}

/// One closed-form exact solution family: immutable after construction,
/// evaluation is pure and reentrant.
class FamilySolution {
 public:
  FamilyId id() const;
  const PressureLaw& law() const;
  SpeedTag tag() const;

  /// Earliest breakdown time (denominator zero or characteristic
  /// crossing), +infinity when none exists below the scan cap.
  double time_horizon() const;
  std::pair<double, double> x_domain() const;

  State evaluate(double x, double t) const;
  double wave_variable(double x, double t) const;
  SourceTerm source() const;

  /// Differential-constraint right-hand side q^alpha(U), alpha in {0,1}
  /// indexing the non-N characteristic fields in ascending order.
  double q_constraint(int alpha, const State& s) const;

  const Profile& rho0() const;
  const Profile& u0() const;
  const Profile& S0() const;

  /// Structural identities with the source closure under test
  /// substituted; pass nullptr to test the family's own source.
  std::vector<StructuralIdentity> structural_identities(const SourceTerm* f_test = nullptr) const;

  WaveSystem wave_system() const;

 private:
  friend FamilySolution make_family(const FamilyParams&, const InitialData&);
  explicit FamilySolution(std::shared_ptr<const detail::FamilyImpl> impl);
  std::shared_ptr<const detail::FamilyImpl> impl_;
};

FamilySolution make_family(const FamilyParams& params, const InitialData& init);

/// Self-consistent default scenario for every family id; the fixtures
/// behind the verification suites and the shipped scenario files.
struct Fixture {
  FamilyParams params;
  InitialData init;
  // sampling box guaranteed interior to the validity domain
  double x_lo, x_hi, t_lo, t_hi;
};

Fixture default_fixture(FamilyId id);

}  // namespace euler1d
