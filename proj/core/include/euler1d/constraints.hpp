#pragma once

#include <iosfwd>
#include <span>

#include "euler1d/families.hpp"

namespace euler1d {

struct ResidualEntry {
  std::string equation;
  double max_resid = 0.0;
  double l2_resid = 0.0;  // RMS over the sample set
  double h = 0.0;         // finite-difference step used
  double ratio = 0.0;     // l2(h) / l2(h/2), when meaningful
  bool has_ratio = false;
  bool pass = false;
};

struct ResidualReport {
  std::string check;
  std::vector<ResidualEntry> entries;
  bool pass = false;

  std::string to_text() const;
  void write_csv(std::ostream& os) const;
};

/// Tensor (x,t) samples plus seeded random interior points.
struct SampleGrid {
  double x_lo = -1.0, x_hi = 1.0;
  int nx = 50;
  double t_lo = 0.02, t_hi = 0.3;
  int nt = 20;
  int n_random = 200;
  unsigned seed = 12345;

  static SampleGrid from_fixture(const Fixture& fx);
};

std::vector<double> linspace(double lo, double hi, int n);

/// Initial data decoupled from a family; lets callers check perturbed
/// or hand-built profiles against a constraint closure.
struct InitialDataSpec {
  PressureLaw law;
  SpeedTag tag = SpeedTag::lambda3;
  Profile rho0, u0, S0;
  std::function<double(int alpha, const State&)> q;
  std::string label = "initial-data";
};

/// Residual of l^alpha(U0) . dU0/dx - q^alpha(U0) on the initial data.
ResidualReport check_initial_constraints(const InitialDataSpec& spec, std::span<const double> xs,
                                         double tol = 1e-8);
ResidualReport check_initial_constraints(const FamilySolution& fs, std::span<const double> xs,
                                         double tol = 1e-8);

/// Central-difference residual of the three balance equations on the
/// family evaluator, at step h and h/2; the ratio column tracks the
/// expected O(h^2) decay.
ResidualReport pde_residual(const FamilySolution& fs, const SampleGrid& grid, double h = 1e-4,
                            double tol = 1e-6);

/// A candidate constraint closure pair in Riemann-invariant coordinates.
struct CompatFunctions {
  PressureLaw law;
  SpeedTag tag = SpeedTag::lambda3;
  std::function<double(double R1, double R2, double v)> q1, q2;
  SourceTerm f;
};

/// Numeric residual of the two involutiveness conditions of the
/// overdetermined system, via finite differences in (R^gamma, v).
ResidualReport verify_compatibility(const CompatFunctions& cf, std::span<const CharField> samples,
                                    double tol = 1e-6);

/// Family structural identities evaluated on solution states.
ResidualReport verify_structural(const FamilySolution& fs, const SampleGrid& grid,
                                 double tol = 1e-10, const SourceTerm* f_test = nullptr);

}  // namespace euler1d
