#pragma once

#include <variant>

#include "euler1d/entropy.hpp"

namespace euler1d {

/// Primitive fluid state. rho must stay positive; hyperbolicity
/// (p_rho > 0) additionally depends on the active pressure law and is
/// enforced by sound_speed / eigen.
struct State {
  double rho = 1.0;
  double u = 0.0;
  double S = 0.0;
};

/// p = A(S) rho^gamma with A(S) = exp((S - s_hat)/cv).
struct IdealGas {
  double gamma = 1.4;
  double cv = 1.0;
  double s_hat = 0.0;

  double A(double S) const;
  double A_deriv(double S) const;
  double S_from_A(double A_value) const;
};

/// p = -a(S)^2 / rho + b(S), a > 0 on the working entropy range.
struct VonKarman {
  EntropyFn a;
  EntropyFn b;
};

/// p = -a0^2 / rho; the Von Karman law with constant a and b = 0.
struct Chaplygin {
  double a0 = 1.0;
};

using PressureLaw = std::variant<IdealGas, VonKarman, Chaplygin>;

double pressure(const PressureLaw& law, const State& s);
double pressure_rho(const PressureLaw& law, const State& s);  // dp/drho at fixed S
double pressure_S(const PressureLaw& law, const State& s);    // dp/dS at fixed rho

/// c = sqrt(dp/drho). Throws NonHyperbolic when dp/drho <= 0.
double sound_speed(const PressureLaw& law, const State& s);

/// I(rho,S) = int c/rho drho in the closed form fixed per law
/// (ideal gas: 2c/(gamma-1); Von Karman / Chaplygin: -a(S)/rho).
double char_integral(const PressureLaw& law, const State& s);

/// dI/dS at fixed rho, again in closed form per law.
double char_integral_S(const PressureLaw& law, const State& s);

void validate_state(const State& s);

}  // namespace euler1d
