#pragma once

#include <array>
#include <functional>
#include <string>

#include "euler1d/eigen.hpp"

namespace euler1d {

/// Force term f(rho, u, S) entering the momentum balance.
struct SourceTerm {
  std::function<double(double rho, double u, double S)> f;
  std::string form;  // printable closed form, for reports

  double operator()(const State& s) const { return f(s.rho, s.u, s.S); }
};

/// The closures Theorem-1 style wave machinery needs from one
/// characteristic family: the pressure law, which speed plays lambda^N,
/// the two differential-constraint right-hand sides q^alpha, and the
/// source. Everything else (h, H, lambda^N as functions of the
/// Riemann-invariant coordinates) derives from these.
struct WaveSystem {
  PressureLaw law;
  SpeedTag tag = SpeedTag::lambda3;
  std::function<double(const State&)> q_a;  // constraint on the lower non-N field
  std::function<double(const State&)> q_b;  // constraint on the upper non-N field
  SourceTerm source;

  State state_of(double R1, double R2, double v) const;
  double lambdaN(double R1, double R2, double v) const;

  /// Fan ODE right-hand side h = B_j + (lambda^N - lambda^beta) q^beta d^beta_j.
  double h_rhs(double R1, double R2, double v) const;

  /// Right-hand sides of the R^alpha transport equations,
  /// H^alpha = sigma^alpha_beta l^beta.B + (lambda^N - lambda^beta) sigma^alpha_beta q^beta.
  std::array<double, 2> H_vec(double R1, double R2, double v) const;

  double q_alpha(int alpha, const State& s) const { return alpha == 0 ? q_a(s) : q_b(s); }
};

/// Ideal-gas source closure f = k2/(1-gamma) rho^gamma + (k0 u + k1) rho^((gamma+1)/2)
/// together with its compatible constraint pair; the workhorse behind the
/// explicit Riemann problem and the equilibrium subsystem analysis.
struct IdealCcc {
  double gamma = 2.0;
  double cv = 1.0;
  double s_hat = 0.0;
  double k0 = 1.0;
  double k1 = 0.0;
  double k2 = 1.0;

  IdealGas gas() const { return IdealGas{gamma, cv, s_hat}; }

  /// Entropy level that makes both fan source components vanish,
  /// S = s_hat + cv ln(k2^2 / (4 gamma k0^2)).
  double equilibrium_entropy() const;

  /// Velocity on the equilibrium/rarefaction curve at density rho.
  double u_on_curve(double rho) const;

  double f(double rho, double u, double S) const;
};

WaveSystem make_ccc_system(const IdealCcc& p);

}  // namespace euler1d
