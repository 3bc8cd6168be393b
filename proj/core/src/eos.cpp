#include "euler1d/eos.hpp"

#include <cmath>

namespace euler1d {

double IdealGas::A(double S) const { return std::exp((S - s_hat) / cv); }

double IdealGas::A_deriv(double S) const { return A(S) / cv; }

double IdealGas::S_from_A(double A_value) const {
  if (!(A_value > 0.0)) {
    throw Error(Errc::inversion_failure, "IdealGas::S_from_A: A must be positive");
  }
  return s_hat + cv * std::log(A_value);
}

void validate_state(const State& s) {
  if (!(s.rho > 0.0) || !std::isfinite(s.rho) || !std::isfinite(s.u) || !std::isfinite(s.S)) {
    throw Error(Errc::bad_state, "state requires finite fields and rho > 0");
  }
}

double pressure(const PressureLaw& law, const State& s) {
  validate_state(s);
  return std::visit(
      [&](const auto& l) -> double {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, IdealGas>) {
          return l.A(s.S) * std::pow(s.rho, l.gamma);
        } else if constexpr (std::is_same_v<T, VonKarman>) {
          const double a = l.a(s.S);
          return -a * a / s.rho + l.b(s.S);
        } else {
          return -l.a0 * l.a0 / s.rho;
        }
      },
      law);
}

double pressure_rho(const PressureLaw& law, const State& s) {
  validate_state(s);
  return std::visit(
      [&](const auto& l) -> double {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, IdealGas>) {
          return l.gamma * l.A(s.S) * std::pow(s.rho, l.gamma - 1.0);
        } else if constexpr (std::is_same_v<T, VonKarman>) {
          const double a = l.a(s.S);
          return a * a / (s.rho * s.rho);
        } else {
          return l.a0 * l.a0 / (s.rho * s.rho);
        }
      },
      law);
}

double pressure_S(const PressureLaw& law, const State& s) {
  validate_state(s);
  return std::visit(
      [&](const auto& l) -> double {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, IdealGas>) {
          return l.A_deriv(s.S) * std::pow(s.rho, l.gamma);
        } else if constexpr (std::is_same_v<T, VonKarman>) {
          return -2.0 * l.a(s.S) * l.a.deriv(s.S) / s.rho + l.b.deriv(s.S);
        } else {
          return 0.0;
        }
      },
      law);
}

double sound_speed(const PressureLaw& law, const State& s) {
  const double prho = pressure_rho(law, s);
  if (!(prho > 0.0)) {
    throw Error(Errc::non_hyperbolic, "sound_speed: dp/drho <= 0");
  }
  return std::sqrt(prho);
}

double char_integral(const PressureLaw& law, const State& s) {
  return std::visit(
      [&](const auto& l) -> double {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, IdealGas>) {
          return 2.0 * sound_speed(law, s) / (l.gamma - 1.0);
        } else if constexpr (std::is_same_v<T, VonKarman>) {
          return -l.a(s.S) / s.rho;
        } else {
          return -l.a0 / s.rho;
        }
      },
      law);
}

double char_integral_S(const PressureLaw& law, const State& s) {
  return std::visit(
      [&](const auto& l) -> double {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, IdealGas>) {
          const double A = l.A(s.S);
          return sound_speed(law, s) * l.A_deriv(s.S) / ((l.gamma - 1.0) * A);
        } else if constexpr (std::is_same_v<T, VonKarman>) {
          return -l.a.deriv(s.S) / s.rho;
        } else {
          return 0.0;
        }
      },
      law);
}

}  // namespace euler1d
