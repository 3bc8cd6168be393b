#include <cmath>
#include <sstream>
#include <string>

#include "doctest.h"
#include "euler1d/constraints.hpp"
#include "euler1d/riemann.hpp"

using namespace euler1d;

namespace {

std::vector<CharField> char_samples(const PressureLaw& law, SpeedTag tag,
                                    const std::vector<State>& states) {
  std::vector<CharField> out;
  out.reserve(states.size());
  for (const State& s : states) out.push_back(to_char(law, s, tag));
  return out;
}

std::vector<State> box_states(double rho_lo, double rho_hi, double u_lo, double u_hi, double S_lo,
                              double S_hi, int n) {
  std::vector<State> out;
  for (int i = 0; i < n; ++i) {
    const double f = n == 1 ? 0.5 : static_cast<double>(i) / (n - 1);
    out.push_back(State{rho_lo + f * (rho_hi - rho_lo), u_lo + (1.0 - f) * (u_hi - u_lo),
                        S_lo + f * (S_hi - S_lo)});
  }
  return out;
}

}  // namespace

TEST_CASE("compatibility holds for the ideal-gas ccc constraint pair") {
  IdealCcc p;
  p.gamma = 2.0;
  p.cv = 1.0;
  p.s_hat = 0.0;
  p.k0 = 0.4;
  p.k1 = 0.2;
  p.k2 = 0.7;
  const WaveSystem sys = make_ccc_system(p);

  CompatFunctions cf;
  cf.law = sys.law;
  cf.tag = SpeedTag::lambda3;
  cf.f = sys.source;
  cf.q1 = [sys](double R1, double R2, double v) {
    return sys.q_a(sys.state_of(R1, R2, v));
  };
  cf.q2 = [sys](double R1, double R2, double v) {
    return sys.q_b(sys.state_of(R1, R2, v));
  };

  const auto samples =
      char_samples(sys.law, SpeedTag::lambda3, box_states(0.5, 2.0, -0.5, 0.8, -0.3, 0.4, 25));
  const auto rep = verify_compatibility(cf, samples);
  CAPTURE(rep.to_text());
  CHECK(rep.pass);
}

TEST_CASE("compatibility holds for the Von Karman case-ii closure") {
  // a(S) with a' != 0, b constant; q1/q2 from the exceptional-speed
  // branch with F2 = -(k0 a + k1)/a', F1 = (b'/a) F2 - 2H + k0 R1.
  // The numeric involutiveness conditions additionally force
  // H'(R1) F1 = (dF1/dR1) H, satisfied by H proportional to R1 once b' = 0.
  const EntropyFn a = EntropyFn::linear(1.2, 0.4);
  const EntropyFn b = EntropyFn::constant(0.2);
  const double k0 = 0.5, k1 = 0.2;
  const PressureLaw law = VonKarman{a, b};

  auto H = [](double r1) { return 0.3 * r1; };  // nonzero, linear through the origin
  auto F2 = [a, k0, k1](double S) { return -(k0 * a(S) + k1) / a.deriv(S); };
  auto F1 = [a, b, k0, H, F2](double r1, double S) {
    return b.deriv(S) / a(S) * F2(S) - 2.0 * H(r1) + k0 * r1;
  };

  CompatFunctions cf;
  cf.law = law;
  cf.tag = SpeedTag::lambda3;
  cf.f = {[k0, k1](double rho, double u, double) { return k0 * u - k1 / rho; }, "k0 u - k1/rho"};
  cf.q1 = [a, b, H, F1, F2](double R1, double R2, double v) {
    const double D = R1 - v;  // a(S)/rho
    return H(R1) + (a.deriv(R2) / a(R2) * D - b.deriv(R2) / a(R2)) * F2(R2) + F1(R1, R2);
  };
  cf.q2 = [F2](double R1, double R2, double v) { return -F2(R2) / (R1 - v); };

  const auto samples =
      char_samples(law, SpeedTag::lambda3, box_states(0.8, 2.2, -0.4, 0.6, -0.2, 0.5, 25));
  const auto rep = verify_compatibility(cf, samples);
  CAPTURE(rep.to_text());
  CHECK(rep.pass);
}

TEST_CASE("compatibility holds for the Chaplygin case-iii closure") {
  const double a0 = 1.0, m0 = 0.5;
  const PressureLaw law = Chaplygin{a0};
  auto G1 = [](double r1) { return 0.2 * r1; };

  CompatFunctions cf;
  cf.law = law;
  cf.tag = SpeedTag::lambda3;
  cf.f = {[a0, m0, G1](double rho, double u, double) {
            return (u - a0 / rho + m0) * G1(u + a0 / rho);
          },
          "(u - c + m0) G1(R1)"};
  cf.q1 = [G1](double R1, double, double v) { return -(R1 - v) * G1(R1); };  // -c G1
  cf.q2 = [](double, double, double) { return 0.0; };

  const auto samples =
      char_samples(law, SpeedTag::lambda3, box_states(0.6, 2.5, -0.5, 0.7, -0.3, 0.4, 25));
  const auto rep = verify_compatibility(cf, samples);
  CAPTURE(rep.to_text());
  CHECK(rep.pass);
}

TEST_CASE("compatibility is trivial for q = 0 with no source") {
  CompatFunctions cf;
  cf.law = IdealGas{1.4, 1.0, 0.0};
  cf.tag = SpeedTag::lambda3;
  cf.f = {[](double, double, double) { return 0.0; }, "0"};
  cf.q1 = [](double, double, double) { return 0.0; };
  cf.q2 = [](double, double, double) { return 0.0; };
  const auto samples =
      char_samples(cf.law, SpeedTag::lambda3, box_states(0.5, 2.0, -1.0, 1.0, -0.3, 0.3, 15));
  const auto rep = verify_compatibility(cf, samples);
  CHECK(rep.pass);
  for (const auto& e : rep.entries) CHECK(e.max_resid <= 1e-12);
}

TEST_CASE("compatibility detects a constant q2 with nonconstant sound speed") {
  CompatFunctions cf;
  cf.law = IdealGas{1.4, 1.0, 0.0};
  cf.tag = SpeedTag::lambda3;
  cf.f = {[](double, double, double) { return 0.0; }, "0"};
  cf.q1 = [](double, double, double) { return 0.0; };
  cf.q2 = [](double, double, double) { return 0.7; };  // violates c dq2/dv = q2
  const auto samples =
      char_samples(cf.law, SpeedTag::lambda3, box_states(0.5, 2.0, -1.0, 1.0, -0.3, 0.3, 15));
  const auto rep = verify_compatibility(cf, samples);
  CHECK_FALSE(rep.pass);
  // the alpha = 2 condition carries the violation, |residual| = |q2|
  CHECK(rep.entries[1].max_resid == doctest::Approx(0.7).epsilon(1e-6));
}

TEST_CASE("perturbed initial data fails the constraint check") {
  const Fixture fx = default_fixture(FamilyId::ig_ii);
  const FamilySolution fs = make_family(fx.params, fx.init);
  const auto xs = linspace(fx.x_lo, fx.x_hi, 151);
  CHECK(check_initial_constraints(fs, xs).pass);

  InitialDataSpec spec;
  spec.law = fs.law();
  spec.tag = fs.tag();
  spec.rho0 = fs.rho0();
  spec.S0 = fs.S0();
  const Profile base = fs.u0();
  spec.u0 = Profile::callable(
      [base](double x) { return base(x) + 1e-3 * std::exp(-25.0 * x * x); },
      [base](double x) { return base.deriv(x) - 1e-3 * 50.0 * x * std::exp(-25.0 * x * x); });
  spec.q = [&fs](int a, const State& s) { return fs.q_constraint(a, s); };
  const auto rep = check_initial_constraints(spec, xs);
  CHECK_FALSE(rep.pass);
  CHECK(rep.entries[0].max_resid >= 1e-4);
}

TEST_CASE("constant equilibrium data has zero residual") {
  // uniform state with f = 0 and q = 0
  InitialDataSpec spec;
  spec.law = IdealGas{1.4, 1.0, 0.0};
  spec.tag = SpeedTag::lambda3;
  spec.rho0 = Profile::constant(1.0);
  spec.u0 = Profile::constant(0.3);
  spec.S0 = Profile::constant(0.0);
  spec.q = [](int, const State&) { return 0.0; };
  const auto xs = linspace(-1.0, 1.0, 51);
  const auto rep = check_initial_constraints(spec, xs);
  CHECK(rep.pass);
  for (const auto& e : rep.entries) CHECK(e.max_resid == 0.0);
}

TEST_CASE("pde_residual on a constant equilibrium state is exactly zero") {
  // L2_I with constant profiles and zero source solves the system exactly
  L2IParams p;
  p.law = IdealGas{1.4, 1.0, 0.0};
  p.u0 = 0.5;
  p.f = {[](double, double, double) { return 0.0; }, "0"};
  InitialData init;
  init.x_lo = -2.0;
  init.x_hi = 2.0;
  init.rho0 = Profile::constant(1.0);
  init.S0 = Profile::constant(0.2);
  const FamilySolution fs = make_family(p, init);
  SampleGrid g;
  g.x_lo = -1.0;
  g.x_hi = 1.0;
  g.t_lo = 0.05;
  g.t_hi = 0.5;
  g.nx = 8;
  g.nt = 5;
  g.n_random = 8;
  const auto rep = pde_residual(fs, g);
  CHECK(rep.pass);
  for (const auto& e : rep.entries) CHECK(e.max_resid <= 1e-14);
}

TEST_CASE("report serialization carries the documented CSV columns") {
  const Fixture fx = default_fixture(FamilyId::l2_i);
  const FamilySolution fs = make_family(fx.params, fx.init);
  SampleGrid g = SampleGrid::from_fixture(fx);
  g.nx = 6;
  g.nt = 4;
  g.n_random = 5;
  const auto rep = pde_residual(fs, g);
  std::ostringstream os;
  rep.write_csv(os);
  const std::string csv = os.str();
  CHECK(csv.rfind("check,equation,max_resid,l2_resid,h,ratio,pass\n", 0) == 0);
  CHECK(csv.find("mass") != std::string::npos);
  CHECK(csv.find("momentum") != std::string::npos);
  CHECK(csv.find("entropy") != std::string::npos);
  const std::string txt = rep.to_text();
  CHECK(txt.find("pde-residual") != std::string::npos);
}

TEST_CASE("residual grids are reproducible for a fixed seed") {
  const Fixture fx = default_fixture(FamilyId::l2_iii);
  const FamilySolution fs = make_family(fx.params, fx.init);
  SampleGrid g = SampleGrid::from_fixture(fx);
  g.nx = 6;
  g.nt = 4;
  g.n_random = 30;
  const auto a = pde_residual(fs, g);
  const auto b = pde_residual(fs, g);
  CHECK(a.entries[0].max_resid == b.entries[0].max_resid);
  CHECK(a.entries[1].l2_resid == b.entries[1].l2_resid);
}
