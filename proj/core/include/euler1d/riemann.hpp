#pragma once

#include <optional>
#include <span>
#include <vector>

#include "euler1d/profile.hpp"
#include "euler1d/wave_system.hpp"

namespace euler1d {

/// Riemann problem between two equilibrium states, solved inside the
/// smooth (generalized rarefaction) class.
struct RPInput {
  State left, right;
  WaveSystem sys;
  std::optional<Profile> v0;  // fan datum v0(a), a in [0,1]; linear when absent
};

struct RPSolution {
  State left, right;
  double lambda_L = 0.0, lambda_R = 0.0;
  double R1 = 0.0, R2 = 0.0;  // invariants frozen across the wave
  SpeedTag tag = SpeedTag::lambda3;
  bool degenerate = false;  // v_L == v_R: constant solution

  std::function<State(double x, double t)> eval;
  std::function<double(double t, double a)> fan_x;  // characteristic position x(t; a)
  std::function<double(double t, double a)> fan_v;  // carried value v_hat(t, v0(a))
};

/// Generalized rarefaction solution; throws InadmissibleData naming the
/// first violated hypothesis.
RPSolution solve_rp(const RPInput& in);

/// States with the same lambda^3-Riemann invariants as `left`, densities
/// from `rhos`.
std::vector<State> rarefaction_curve(const WaveSystem& sys, const State& left,
                                     std::span<const double> rhos);

/// Closed-form ideal-gas Riemann problem for the ccc source family.
RPSolution explicit_ideal_rp(const IdealCcc& p, double rho_L, double rho_R);

/// Contact discontinuity for an exceptional lambda^N.
RPSolution contact_rp(const RPInput& in);

/// Reduced system on the equilibrium manifold f = 0, with u eliminated.
struct EquilibriumSubsystem {
  std::function<double(double rho, double S)> u_hat;
  std::function<double(double rho, double S)> u_hat_rho;
  bool mu1_exceptional = true;

  double mu1(double rho, double S) const { return u_hat(rho, S); }
  double mu2(double rho, double S) const { return u_hat(rho, S) + rho * u_hat_rho(rho, S); }
};

/// Generic construction by root finding in u; throws NoEquilibrium when
/// f has no zero.
EquilibriumSubsystem equilibrium_subsystem(const WaveSystem& sys);

/// Closed-form construction for the ccc closure.
EquilibriumSubsystem equilibrium_subsystem(const IdealCcc& p);

struct SubcharRow {
  State s;
  double c = 0.0;
  double rho_u_rho = 0.0;
  double margin = 0.0;  // c - rho u_hat_rho
  bool pass = false;
};

struct SubcharReport {
  std::vector<SubcharRow> rows;
  bool pass = false;
  double min_margin = 0.0;
};

SubcharReport subcharacteristic_check(const EquilibriumSubsystem& sub, const PressureLaw& law,
                                      std::span<const State> states);

/// L1 distance between the full-system fan density and the equilibrium
/// subsystem rarefaction, per sampled time.
std::vector<double> asymptotic_compare(const RPSolution& rp, const EquilibriumSubsystem& sub,
                                       std::span<const double> times, double x_lo, double x_hi,
                                       int nx);

}  // namespace euler1d
