#include <cmath>

#include "families_impl.hpp"

namespace euler1d {

namespace {

// IG_I default closed forms: u0 = 2 + x/4, gamma = 2, k2 = 0.2, c1 = 0,
// A(S0)^2 = 1 + (k2/3)(u0^3 - 8) integrates the initial-data relation.
struct IgIFixture {
  static constexpr double k2 = 0.2;
  static double u0(double x) { return 2.0 + 0.25 * x; }
  static double A2(double x) {
    const double u = u0(x);
    return 1.0 + k2 / 3.0 * (u * u * u - 8.0);
  }
  static double S0(double x) { return 0.5 * std::log(A2(x)); }
  static double S0p(double x) {
    const double u = u0(x);
    return 0.25 * k2 * 0.5 * u * u / A2(x);  // = k2 u0^2 u0' / (2 A^2), u0' = 1/4
  }
};

}  // namespace

Fixture default_fixture(FamilyId id) {
  switch (id) {
    case FamilyId::ig_i: {
      IgIParams p;
      p.gamma = 2.0;
      p.cv = 1.0;
      p.s_hat = 0.0;
      p.k2 = IgIFixture::k2;
      p.c1 = 0.0;
      InitialData init;
      init.x_lo = -1.0;
      init.x_hi = 1.0;
      init.t_max = 2.0;
      init.u0 = Profile::linear(2.0, 0.25);
      init.S0 = Profile::callable([](double x) { return IgIFixture::S0(x); },
                                  [](double x) { return IgIFixture::S0p(x); });
      return {p, init, -0.6, 0.6, 0.01, 0.1};
    }
    case FamilyId::ig_ii: {
      IgIiParams p;
      p.gamma = 2.0;
      p.cv = 1.0;
      p.s_hat = 0.0;
      p.k1 = 0.4;
      p.S0 = 0.0;
      InitialData init;
      init.x_lo = -1.0;
      init.x_hi = 1.0;
      init.t_max = 5.0;
      init.rho0 = Profile::constant(1.0);
      init.anchor_x = 0.0;
      init.anchor_value = -1.3;  // u0(0); u0 + c then hovers near zero
      return {p, init, -0.7, 0.7, 0.02, 0.5};
    }
    case FamilyId::vk_a: {
      VkAParams p;
      p.a = EntropyFn::linear(1.0, 0.5);
      p.b = EntropyFn::linear(0.3, 0.2);
      p.c0 = 0.3;
      p.c1 = 0.1;
      InitialData init;
      init.x_lo = -1.0;
      init.x_hi = 1.0;
      init.t_max = 1.5;
      init.S0 = Profile::linear(0.1, 1.0);
      init.anchor_x = 0.0;
      init.anchor_value = 0.4;  // u0(0)
      return {p, init, -0.25, 0.5, 0.01, 0.25};
    }
    case FamilyId::ch_psi: {
      ChPsiParams p;
      p.a0 = 1.0;
      p.c0 = 0.2;
      InitialData init;
      init.x_lo = -1.0;
      init.x_hi = 1.0;
      init.t_max = 1.0;
      init.rho0 = Profile::constant(1.0);
      // R1_0(x) = 1/(1 + 0.2 x) solves the initial-data relation with rho0 = 1
      init.u0 = Profile::callable([](double x) { return 1.0 / (1.0 + 0.2 * x) - 1.0; },
                                  [](double x) {
                                    const double d = 1.0 + 0.2 * x;
                                    return -0.2 / (d * d);
                                  });
      init.S0 = Profile::linear(1.0, 0.2);  // c_hat / R1_0 with c_hat = 1
      return {p, init, -0.55, 0.55, 0.01, 0.3};
    }
    case FamilyId::ch_m0: {
      ChM0Params p;
      p.a0 = 1.0;
      p.m0 = 0.5;
      p.S0 = 0.3;
      p.psi = Profile::linear(1.5, 0.2);
      p.phi = Profile::tanh_ramp(0.4, 0.1, 1.0, 0.0);
      InitialData init;
      init.x_lo = -1.0;
      init.x_hi = 1.0;
      init.t_max = 2.0;
      return {p, init, -0.7, 0.7, 0.02, 0.3};
    }
    case FamilyId::l2_i: {
      L2IParams p;
      p.law = IdealGas{2.0, 1.0, 0.0};
      p.u0 = 0.5;
      // rho0 = e^{0.3x}, S0 = 0.1 e^{0.5x}; p0' = rho0 f closes with
      // f(rho) evaluated through x = ln(rho)/0.3
      p.f = {[](double rho, double, double) {
               const double x = std::log(rho) / 0.3;
               const double e5 = std::exp(0.5 * x);
               const double p0 = std::exp(0.1 * e5 + 0.6 * x);
               return p0 * (0.05 * e5 + 0.6) / rho;
             },
             "d/dx p0 / rho0 along the initial data"};
      InitialData init;
      init.x_lo = -1.0;
      init.x_hi = 1.0;
      init.t_max = 4.0;
      init.rho0 = Profile::exponential(1.0, 0.3, 0.0);
      init.S0 = Profile::exponential(0.1, 0.5, 0.0);
      return {p, init, -0.7, 0.7, 0.02, 0.5};
    }
    case FamilyId::l2_ii: {
      L2IiParams p;
      p.law = IdealGas{2.0, 1.0, 0.0};
      p.u0 = 1.0;
      p.F2 = [](double u) { return 0.3 * u; };
      p.psi = [](double pv, double S) { return 0.2 * pv * std::exp(-S); };  // 0.2 p / A(S)
      InitialData init;
      init.x_lo = -1.0;
      init.x_hi = 1.0;
      init.t_max = 3.0;
      init.S0 = Profile::linear(0.0, 0.1);
      // p0 = exp(2 - 2 e^{-0.1x}) solves p0' = 0.2 p0 e^{-0.1x}
      init.rho0 = Profile::callable(
          [](double x) { return std::exp(1.0 - std::exp(-0.1 * x) - 0.05 * x); },
          [](double x) {
            const double v = std::exp(1.0 - std::exp(-0.1 * x) - 0.05 * x);
            return v * (0.1 * std::exp(-0.1 * x) - 0.05);
          });
      return {p, init, -0.5, 0.85, 0.02, 0.4};
    }
    case FamilyId::l2_iii: {
      L2IiiParams p;
      p.gamma = 2.0;
      p.cv = 1.0;
      p.s_hat = 0.0;
      // rho0 = 1 + 0.1x, S0 = 0, u0' = rho0; pi0 recovered from the data
      p.pi0 = [](double u) {
        const double x = (std::sqrt(1.0 + 0.2 * u) - 1.0) / 0.1;
        const double r = 1.0 + 0.1 * x;
        return 0.2 / (r * r * r);
      };
      InitialData init;
      init.x_lo = -1.0;
      init.x_hi = 1.0;
      init.t_max = 3.0;
      init.rho0 = Profile::linear(1.0, 0.1);
      init.S0 = Profile::constant(0.0);
      init.anchor_x = 0.0;
      init.anchor_value = 0.0;
      return {p, init, -0.7, 0.7, 0.02, 0.5};
    }
    case FamilyId::l2_iv_1: {
      L2Iv1Params p;
      p.gamma = 2.0;
      p.cv = 1.0;
      p.s_hat = 0.0;
      p.k0 = -0.5;
      p.mu0 = -0.4;
      InitialData init;
      init.x_lo = 1.0;
      init.x_hi = 2.0;
      init.t_max = 2.0;
      init.rho0 = Profile::linear(0.85, 0.1);
      return {p, init, 1.15, 1.9, 0.02, 0.25};
    }
    case FamilyId::l2_iv_2: {
      L2Iv2Params p;
      p.gamma = 2.0;
      p.cv = 1.0;
      p.s_hat = 0.0;
      p.k0 = 0.3;
      p.k1 = 0.5;
      InitialData init;
      init.x_lo = -1.0;
      init.x_hi = 1.0;
      init.t_max = 3.0;
      init.rho0 = Profile::linear(1.0, 0.1);
      return {p, init, -0.85, 0.85, 0.02, 0.4};
    }
    case FamilyId::l2_iv_vk: {
      L2IvVkParams p;
      p.a = EntropyFn::linear(1.0, 0.5);
      p.b = EntropyFn::linear(0.2, 0.1);
      p.k0 = 0.4;
      p.k1 = 0.1;
      p.c0 = -0.5;
      InitialData init;
      init.x_lo = -1.0;
      init.x_hi = 1.0;
      init.t_max = 2.0;
      init.S0 = Profile::linear(0.0, 0.2);
      init.anchor_x = 0.0;
      init.anchor_value = 0.3;
      return {p, init, -0.7, 0.7, 0.02, 0.4};
    }
    case FamilyId::l2_v: {
      L2VParams p;
      p.a = EntropyFn::linear(1.0, 0.5);
      p.b = EntropyFn::linear(0.2, 0.1);
      p.k0 = 0.4;
      p.k1 = 0.3;
      InitialData init;
      init.x_lo = -1.0;
      init.x_hi = 0.3;
      init.t_max = 1.0;
      init.S0 = Profile::linear(0.0, 0.2);
      init.anchor_x = -0.4;
      init.anchor_value = 1.0;
      return {p, init, -0.6, 0.0, 0.02, 0.2};
    }
    case FamilyId::l2_v_ch: {
      L2VChParams p;
      p.a0 = 1.0;
      p.k0 = 0.5;
      p.k1 = 0.4;
      p.c_hat = 0.3;
      InitialData init;
      init.x_lo = -2.0;
      init.x_hi = -0.5;
      init.t_max = 2.0;
      init.S0 = Profile::linear(0.2, 0.1);
      return {p, init, -1.8, -0.7, 0.02, 0.3};
    }
    case FamilyId::simple_wave: {
      SimpleParams p;
      p.law = IdealGas{1.4, 1.0, 0.0};
      p.r2 = 0.0;
      p.r1 = -2.0 * std::sqrt(1.4) / 0.4;  // R1 of the state (rho=1, u=0, S=0)
      InitialData init;
      init.x_lo = -2.5;
      init.x_hi = 2.5;
      init.t_max = 2.0;
      init.v0 = Profile::tanh_ramp(0.15, 0.15, 2.0, 0.0);
      return {p, init, -1.5, 1.5, 0.02, 0.45};
    }
  }
  throw Error(Errc::bad_params, "default_fixture: unknown family id");
}

}  // namespace euler1d
