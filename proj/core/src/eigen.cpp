#include "euler1d/eigen.hpp"

#include <cmath>

namespace euler1d {

EigenStructure eigen(const PressureLaw& law, const State& s) {
  const double c = sound_speed(law, s);
  const double c2 = c * c;
  const double ps = pressure_S(law, s);
  EigenStructure es;
  es.lambda = {s.u - c, s.u, s.u + c};
  es.left[0] = {c2 / s.rho, -c, ps / s.rho};
  es.left[1] = {0.0, 0.0, 1.0};
  es.left[2] = {c2 / s.rho, c, ps / s.rho};
  es.right[0] = {s.rho / (2 * c2), -1.0 / (2 * c), 0.0};
  es.right[1] = {-ps / c2, 0.0, 1.0};
  es.right[2] = {s.rho / (2 * c2), 1.0 / (2 * c), 0.0};
  return es;
}

std::array<int, 2> constraint_indices(SpeedTag tag) {
  return tag == SpeedTag::lambda3 ? std::array<int, 2>{0, 1} : std::array<int, 2>{0, 2};
}

int v_index(SpeedTag tag) { return tag == SpeedTag::lambda3 ? 1 : 2; }

double lambda_of(const PressureLaw& law, const State& s, SpeedTag tag) {
  return tag == SpeedTag::lambda3 ? s.u + sound_speed(law, s) : s.u;
}

CharField to_char(const PressureLaw& law, const State& s, SpeedTag tag) {
  CharField cf;
  cf.tag = tag;
  if (tag == SpeedTag::lambda3) {
    cf.R1 = s.u - char_integral(law, s);
    cf.R2 = s.S;
    cf.v = s.u;
  } else {
    cf.R1 = pressure(law, s);
    cf.R2 = s.u;
    cf.v = s.S;
  }
  return cf;
}

namespace {

State from_char_lambda3(const PressureLaw& law, const CharField& cf) {
  return std::visit(
      [&](const auto& l) -> State {
        using T = std::decay_t<decltype(l)>;
        State s;
        s.u = cf.v;
        s.S = cf.R2;
        if constexpr (std::is_same_v<T, IdealGas>) {
          // v - R1 = 2c/(gamma-1)
          const double c = 0.5 * (l.gamma - 1.0) * (cf.v - cf.R1);
          if (!(c > 0.0)) {
            throw Error(Errc::inversion_failure, "from_char: implied sound speed <= 0");
          }
          s.rho = std::pow(c * c / (l.gamma * l.A(cf.R2)), 1.0 / (l.gamma - 1.0));
        } else {
          // R1 - v = a(S)/rho
          const double a = std::is_same_v<T, Chaplygin> ? std::get<Chaplygin>(law).a0
                                                        : std::get<VonKarman>(law).a(cf.R2);
          const double d = cf.R1 - cf.v;
          if (!(d > 0.0) || !(a > 0.0)) {
            throw Error(Errc::inversion_failure, "from_char: implied density <= 0");
          }
          s.rho = a / d;
        }
        return s;
      },
      law);
}

State from_char_lambda2(const PressureLaw& law, const CharField& cf) {
  return std::visit(
      [&](const auto& l) -> State {
        using T = std::decay_t<decltype(l)>;
        State s;
        s.u = cf.R2;
        s.S = cf.v;
        if constexpr (std::is_same_v<T, IdealGas>) {
          if (!(cf.R1 > 0.0)) {
            throw Error(Errc::inversion_failure, "from_char: ideal-gas pressure must be > 0");
          }
          s.rho = std::pow(cf.R1 / l.A(cf.v), 1.0 / l.gamma);
        } else if constexpr (std::is_same_v<T, VonKarman>) {
          const double a = l.a(cf.v);
          const double d = l.b(cf.v) - cf.R1;
          if (!(d > 0.0)) {
            throw Error(Errc::inversion_failure, "from_char: pressure above Von Karman bound");
          }
          s.rho = a * a / d;
        } else {
          if (!(cf.R1 < 0.0)) {
            throw Error(Errc::inversion_failure, "from_char: Chaplygin pressure must be < 0");
          }
          s.rho = -l.a0 * l.a0 / cf.R1;
        }
        return s;
      },
      law);
}

}  // namespace

State from_char(const PressureLaw& law, const CharField& cf) {
  State s = (cf.tag == SpeedTag::lambda3) ? from_char_lambda3(law, cf)
                                          : from_char_lambda2(law, cf);
  validate_state(s);
  return s;
}

SigmaMatrix sigma_matrix(const PressureLaw& law, const State& s, SpeedTag tag) {
  const double c = sound_speed(law, s);
  SigmaMatrix sg{};
  if (tag == SpeedTag::lambda3) {
    sg[0][0] = -1.0 / c;
    sg[0][1] = pressure_S(law, s) / (s.rho * c) - char_integral_S(law, s);
    sg[1][0] = 0.0;
    sg[1][1] = 1.0;
  } else {
    sg[0][0] = 0.5 * s.rho;
    sg[0][1] = 0.5 * s.rho;
    sg[1][0] = -0.5 / c;
    sg[1][1] = 0.5 / c;
  }
  return sg;
}

}  // namespace euler1d
