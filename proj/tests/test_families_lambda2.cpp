#include <cmath>

#include "doctest.h"
#include <string>

#include "euler1d/constraints.hpp"

using namespace euler1d;

namespace {

const FamilyId kL2[] = {FamilyId::l2_i,    FamilyId::l2_ii,   FamilyId::l2_iii,
                        FamilyId::l2_iv_1, FamilyId::l2_iv_2, FamilyId::l2_iv_vk,
                        FamilyId::l2_v,    FamilyId::l2_v_ch};

SampleGrid small_grid(const Fixture& fx) {
  SampleGrid g = SampleGrid::from_fixture(fx);
  g.nx = 12;
  g.nt = 6;
  g.n_random = 20;
  return g;
}

}  // namespace

TEST_CASE("lambda2 families reproduce their initial data at t = 0") {
  for (FamilyId id : kL2) {
    const std::string fam = family_name(id);
    CAPTURE(fam);
    const Fixture fx = default_fixture(id);
    const FamilySolution fs = make_family(fx.params, fx.init);
    for (double x : linspace(fx.x_lo, fx.x_hi, 9)) {
      const State s = fs.evaluate(x, 0.0);
      CHECK(std::abs(s.rho - fs.rho0()(x)) <= 1e-8 * std::max(1.0, s.rho));
      CHECK(std::abs(s.u - fs.u0()(x)) <= 1e-9 * std::max(1.0, std::abs(s.u)));
      CHECK(std::abs(s.S - fs.S0()(x)) <= 1e-8 * std::max(1.0, std::abs(s.S)));
      CHECK(fs.wave_variable(x, 0.0) == doctest::Approx(x).epsilon(1e-10));
    }
  }
}

TEST_CASE("initial-data constraints hold for every lambda2 fixture") {
  for (FamilyId id : kL2) {
    const std::string fam = family_name(id);
    CAPTURE(fam);
    const Fixture fx = default_fixture(id);
    const FamilySolution fs = make_family(fx.params, fx.init);
    const auto xs = linspace(fx.x_lo, fx.x_hi, 101);
    const auto rep = check_initial_constraints(fs, xs);
    CAPTURE(rep.to_text());
    CHECK(rep.pass);
  }
}

TEST_CASE("PDE residual oracle accepts every lambda2 fixture") {
  for (FamilyId id : kL2) {
    const std::string fam = family_name(id);
    CAPTURE(fam);
    const Fixture fx = default_fixture(id);
    const FamilySolution fs = make_family(fx.params, fx.init);
    const auto rep = pde_residual(fs, small_grid(fx));
    CAPTURE(rep.to_text());
    CHECK(rep.pass);
  }
}

TEST_CASE("structural identities pass and detect tampering") {
  for (FamilyId id : kL2) {
    const std::string fam = family_name(id);
    CAPTURE(fam);
    const Fixture fx = default_fixture(id);
    const FamilySolution fs = make_family(fx.params, fx.init);
    const auto rep = verify_structural(fs, small_grid(fx));
    CAPTURE(rep.to_text());
    CHECK(rep.pass);

    const SourceTerm own = fs.source();
    const SourceTerm bad = {[own](double rho, double u, double S) {
                              return own.f(rho, u, S) + 0.01 * rho;
                            },
                            "tampered"};
    const auto rep_bad = verify_structural(fs, small_grid(fx), 1e-10, &bad);
    CHECK_FALSE(rep_bad.pass);
  }
}

TEST_CASE("L2_I: profiles translate with the uniform velocity") {
  const Fixture fx = default_fixture(FamilyId::l2_i);
  const FamilySolution fs = make_family(fx.params, fx.init);
  const auto& p = std::get<L2IParams>(fx.params);
  const double x = 0.2, t = 0.4;
  const State s = fs.evaluate(x, t);
  CHECK(s.u == doctest::Approx(p.u0));
  CHECK(s.rho == doctest::Approx(fs.rho0()(x - p.u0 * t)).epsilon(1e-12));
  CHECK(s.S == doctest::Approx(fs.S0()(x - p.u0 * t)).epsilon(1e-12));
  CHECK(std::isinf(fs.time_horizon()));
}

TEST_CASE("L2_II: velocity is spatially uniform and follows the damping ODE") {
  const Fixture fx = default_fixture(FamilyId::l2_ii);
  const FamilySolution fs = make_family(fx.params, fx.init);
  for (double t : {0.1, 0.3}) {
    const double expect = std::exp(-0.3 * t);  // du/dt = -0.3 u, u(0) = 1
    for (double x : {-0.2, 0.3, 0.6}) {
      CHECK(std::abs(fs.evaluate(x, t).u - expect) <= 1e-10);
    }
  }
  // pressure rides the labels: p(x,t) = p0(xi)
  const double t = 0.25;
  const double x = 0.4;
  const double xi = fs.wave_variable(x, t);
  const State s = fs.evaluate(x, t);
  const State s0 = fs.evaluate(xi, 0.0);
  CHECK(pressure(fs.law(), s) == doctest::Approx(pressure(fs.law(), s0)).epsilon(1e-10));
}

TEST_CASE("L2_III: the documented special case collapses to rho = 1/(1+t)") {
  // rho0 = 1, A0 = 1, gamma = 2, u0' = rho0 => u0 = x; pi0 = 0
  L2IiiParams p;
  p.gamma = 2.0;
  p.cv = 1.0;
  p.s_hat = 0.0;
  p.pi0 = [](double) { return 0.0; };
  InitialData init;
  init.x_lo = -1.5;
  init.x_hi = 1.5;
  init.rho0 = Profile::constant(1.0);
  init.S0 = Profile::constant(0.0);
  init.u0 = Profile::linear(0.0, 1.0);
  const FamilySolution fs = make_family(p, init);
  for (double t : {0.2, 0.7}) {
    for (double x : {-0.4, 0.0, 0.5}) {
      const State s = fs.evaluate(x, t);
      CHECK(s.rho == doctest::Approx(1.0 / (1.0 + t)).epsilon(1e-12));
      CHECK(s.u == doctest::Approx(x / (1.0 + t)).epsilon(1e-12));
    }
  }
  SampleGrid g;
  g.x_lo = -0.8;
  g.x_hi = 0.8;
  g.t_lo = 0.05;
  g.t_hi = 0.6;
  g.nx = 8;
  g.nt = 5;
  g.n_random = 10;
  CHECK(pde_residual(fs, g).pass);
}

TEST_CASE("L2_IV_1: exponential label stretch keeps the source balanced") {
  const Fixture fx = default_fixture(FamilyId::l2_iv_1);
  const FamilySolution fs = make_family(fx.params, fx.init);
  const auto& p = std::get<L2Iv1Params>(fx.params);
  const double x = 1.4, t = 0.2;
  const State s = fs.evaluate(x, t);
  CHECK(s.u == doctest::Approx(-p.k0 * x));
  const double xi = x * std::exp(p.k0 * t);
  CHECK(s.rho == doctest::Approx(fs.rho0()(xi) * std::exp(p.k0 * t)).epsilon(1e-12));
}

TEST_CASE("L2_IV_2: pressure stays spatially uniform") {
  const Fixture fx = default_fixture(FamilyId::l2_iv_2);
  const FamilySolution fs = make_family(fx.params, fx.init);
  const double t = 0.3;
  const double p_ref = pressure(fs.law(), fs.evaluate(0.0, t));
  for (double x : {-0.6, -0.2, 0.4, 0.7}) {
    CHECK(pressure(fs.law(), fs.evaluate(x, t)) == doctest::Approx(p_ref).epsilon(1e-10));
  }
}

TEST_CASE("L2_V: pressure profile is frozen at k0 x") {
  const Fixture fx = default_fixture(FamilyId::l2_v);
  const FamilySolution fs = make_family(fx.params, fx.init);
  const auto& p = std::get<L2VParams>(fx.params);
  for (double t : {0.05, 0.15}) {
    for (double x : {-0.5, -0.2, 0.1}) {
      CHECK(pressure(fs.law(), fs.evaluate(x, t)) ==
            doctest::Approx(p.k0 * x).epsilon(1e-10));
    }
  }
}

TEST_CASE("L2_V_CH: closed-form specialization") {
  const Fixture fx = default_fixture(FamilyId::l2_v_ch);
  const FamilySolution fs = make_family(fx.params, fx.init);
  const auto& p = std::get<L2VChParams>(fx.params);
  const double x = -1.2, t = 0.2;
  const State s = fs.evaluate(x, t);
  CHECK(pressure(fs.law(), s) == doctest::Approx(p.k0 * x).epsilon(1e-12));
  const double E = std::expm1(p.k0 * p.k1 * t);
  const double D = p.k0 * p.k1 + p.c_hat * E;
  CHECK(s.u == doctest::Approx(p.c_hat * p.k0 * p.k1 * x * std::exp(p.k0 * p.k1 * t) / D)
                   .epsilon(1e-12));
  CHECK(fs.wave_variable(x, t) == doctest::Approx(p.k0 * p.k1 * x / D).epsilon(1e-12));
}

TEST_CASE("conserved quantities along particle paths for lambda2 families") {
  // S is constant along dx/dt = u for every family; for L2_IV_2 the
  // velocity follows the closed damping law on the same path
  const Fixture fx = default_fixture(FamilyId::l2_iv_2);
  const FamilySolution fs = make_family(fx.params, fx.init);
  const auto& p = std::get<L2Iv2Params>(fx.params);
  OdeConfig oc;
  oc.tol = 1e-12;
  for (double x0 : {-0.4, 0.2}) {
    const auto tr = ode_solve(
        [&](double t, const std::vector<double>& y, std::vector<double>& d) {
          d[0] = fs.evaluate(y[0], t).u;
        },
        {x0}, 0.0, 0.35, oc);
    const State a = fs.evaluate(x0, 0.0);
    const State b = fs.evaluate(tr.eval(0.35, 0), 0.35);
    CHECK(std::abs(b.S - a.S) <= 1e-8);
    const double u_expect = -p.k1 / p.k0 + (a.u + p.k1 / p.k0) * std::exp(-p.k0 * 0.35);
    CHECK(std::abs(b.u - u_expect) <= 1e-8);
  }
}
