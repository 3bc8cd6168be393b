#include <cmath>

#include "doctest.h"
#include "euler1d/numerics.hpp"

using namespace euler1d;

TEST_CASE("find_root solves simple brackets") {
  CHECK(find_root([](double x) { return x - 1.0; }, 0.0, 2.0) == doctest::Approx(1.0));
  const double r = find_root([](double x) { return x * x - 2.0; }, 0.0, 2.0);
  CHECK(std::abs(r - std::sqrt(2.0)) <= 1e-12);
}

TEST_CASE("find_root reports a missing sign change") {
  RootConfig rc;
  rc.max_expansions = 3;
  CHECK_THROWS_AS(find_root([](double) { return 1.0; }, 0.0, 1.0, rc), Error);
  try {
    find_root([](double) { return 1.0; }, 0.0, 1.0, rc);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::no_bracket);
  }
}

TEST_CASE("find_root expands brackets and stays inside the final one") {
  // root at 37, initial bracket far away
  const double r = find_root([](double x) { return x - 37.0; }, 0.0, 1.0);
  CHECK(std::abs(r - 37.0) <= 1e-9);
}

TEST_CASE("quad integrates polynomials and exponentials") {
  CHECK(quad([](double) { return 1.0; }, 0.0, 1.0) == doctest::Approx(1.0));
  CHECK(quad([](double x) { return x; }, 0.0, 1.0) == doctest::Approx(0.5));
  const double e = quad([](double x) { return std::exp(x); }, 0.0, 1.0);
  CHECK(std::abs(e - (std::exp(1.0) - 1.0)) <= 1e-10);
  // Simpson is exact on cubics panel-wise
  CHECK(std::abs(quad([](double x) { return x * x * x; }, -1.0, 2.0) - 15.0 / 4.0) <= 1e-13);
}

TEST_CASE("quad flips sign with the orientation of the interval") {
  const double a = quad([](double x) { return std::cos(x); }, 0.0, 1.5);
  const double b = quad([](double x) { return std::cos(x); }, 1.5, 0.0);
  CHECK(a == doctest::Approx(-b));
}

TEST_CASE("ode_solve reproduces closed forms") {
  OdeConfig oc;
  auto tr0 = ode_solve([](double, const std::vector<double>&, std::vector<double>& d) { d[0] = 0.0; },
                       {3.0}, 0.0, 2.0, oc);
  CHECK(tr0.eval(1.3, 0) == doctest::Approx(3.0));

  auto tr1 = ode_solve(
      [](double, const std::vector<double>& y, std::vector<double>& d) { d[0] = y[0]; }, {1.0},
      0.0, 1.0, oc);
  CHECK(std::abs(tr1.eval(1.0, 0) - std::exp(1.0)) <= 1e-8);

  auto tr2 = ode_solve(
      [](double, const std::vector<double>& y, std::vector<double>& d) { d[0] = -y[0] * y[0]; },
      {1.0}, 0.0, 1.0, oc);
  CHECK(std::abs(tr2.eval(1.0, 0) - 0.5) <= 1e-8);
}

TEST_CASE("rk4 fixed-step order check: halving gains a factor >= 12") {
  auto run = [](double h) {
    OdeConfig oc;
    oc.method = OdeMethod::rk4_fixed;
    oc.step = h;
    auto tr = ode_solve(
        [](double, const std::vector<double>& y, std::vector<double>& d) { d[0] = y[0]; }, {1.0},
        0.0, 1.0, oc);
    return std::abs(tr.eval(1.0, 0) - std::exp(1.0));
  };
  const double e1 = run(0.05), e2 = run(0.025);
  CHECK(e1 / e2 >= 12.0);
}

TEST_CASE("dense output interpolates between steps") {
  OdeConfig oc;
  oc.method = OdeMethod::rk4_fixed;
  oc.step = 0.1;
  auto tr = ode_solve(
      [](double t, const std::vector<double>&, std::vector<double>& d) { d[0] = std::cos(t); },
      {0.0}, 0.0, 1.0, oc);
  for (double t : {0.13, 0.47, 0.99}) {
    CHECK(std::abs(tr.eval(t, 0) - std::sin(t)) <= 1e-7);
  }
}

TEST_CASE("fd_derivative matches analytic derivatives") {
  CHECK(fd_derivative([](double) { return 5.0; }, 0.3) == doctest::Approx(0.0));
  CHECK(std::abs(fd_derivative([](double x) { return x * x; }, 1.0) - 2.0) <= 1e-8);
  CHECK(std::abs(fd_derivative([](double x) { return std::sin(x); }, 0.0) - 1.0) <= 1e-10);
}

TEST_CASE("fd_partial differentiates one slot at a time") {
  auto f = [](const std::vector<double>& x) { return x[0] * x[0] + 3.0 * x[1]; };
  CHECK(std::abs(fd_partial(f, {2.0, 1.0}, 0) - 4.0) <= 1e-8);
  CHECK(std::abs(fd_partial(f, {2.0, 1.0}, 1) - 3.0) <= 1e-8);
}
