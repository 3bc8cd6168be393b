#include <cmath>
#include <random>

#include "doctest.h"
#include "euler1d/eigen.hpp"

using namespace euler1d;

namespace {

const PressureLaw kIdeal2 = IdealGas{2.0, 1.0, 0.0};
const PressureLaw kIdeal3 = IdealGas{3.0, 1.0, 0.0};
const PressureLaw kVk = VonKarman{EntropyFn::linear(1.0, 0.5), EntropyFn::linear(0.3, 0.2)};
const PressureLaw kCh = Chaplygin{1.0};

std::vector<State> random_states(unsigned seed, int n) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> ur(0.1, 5.0), uu(-3.0, 3.0), us(-1.0, 1.0);
  std::vector<State> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(State{ur(rng), uu(rng), us(rng)});
  return out;
}

double dot3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

}  // namespace

TEST_CASE("pressure closed forms") {
  CHECK(pressure(kIdeal2, {1.0, 0.0, 0.0}) == doctest::Approx(1.0));  // A(0) = 1
  CHECK(pressure(kCh, {2.0, 0.0, 0.0}) == doctest::Approx(-0.5));
  const PressureLaw vk_const =
      VonKarman{EntropyFn::constant(2.0), EntropyFn::constant(3.0)};
  CHECK(pressure(vk_const, {4.0, 0.0, 0.7}) == doctest::Approx(2.0));  // -4/4 + 3
}

TEST_CASE("sound speed closed forms") {
  CHECK(sound_speed(kIdeal2, {1.0, 0.0, 0.0}) == doctest::Approx(std::sqrt(2.0)));
  CHECK(sound_speed(kCh, {1.0, 0.0, 0.0}) == doctest::Approx(1.0));
  CHECK(sound_speed(kIdeal3, {2.0, 0.0, 0.0}) == doctest::Approx(std::sqrt(12.0)));
}

TEST_CASE("sound speed raises NonHyperbolic instead of returning NaN") {
  // a(S) hits zero at S = -2
  const PressureLaw law = VonKarman{EntropyFn::linear(1.0, 0.5), EntropyFn::constant(0.0)};
  CHECK_THROWS_AS((void)sound_speed(law, {1.0, 0.0, -2.0}), Error);
  try {
    (void)sound_speed(law, {1.0, 0.0, -2.0});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::non_hyperbolic);
  }
}

TEST_CASE("eigen speeds") {
  const auto es = eigen(kIdeal2, {1.0, 0.0, 0.0});
  CHECK(es.lambda[0] == doctest::Approx(-std::sqrt(2.0)));
  CHECK(es.lambda[1] == doctest::Approx(0.0));
  CHECK(es.lambda[2] == doctest::Approx(std::sqrt(2.0)));
  const auto ch = eigen(kCh, {1.0, 1.0, 0.0});
  CHECK(ch.lambda[0] == doctest::Approx(0.0));
  CHECK(ch.lambda[1] == doctest::Approx(1.0));
  CHECK(ch.lambda[2] == doctest::Approx(2.0));
}

TEST_CASE("eigen speeds are symmetric around zero when u = 0") {
  for (const auto* law : {&kIdeal2, &kVk, &kCh}) {
    const auto es = eigen(*law, {1.7, 0.0, 0.2});
    CHECK(es.lambda[0] == doctest::Approx(-es.lambda[2]));
    CHECK(es.lambda[1] == doctest::Approx(0.0));
  }
}

TEST_CASE("left/right eigenvector orthonormality over random states") {
  for (const auto* law : {&kIdeal2, &kVk, &kCh}) {
    for (const State& s : random_states(7, 1000)) {
      const auto es = eigen(*law, s);
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          const double expect = (i == j) ? 1.0 : 0.0;
          CHECK(std::abs(dot3(es.left[i], es.right[j]) - expect) <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("char integral matches a quadrature oracle") {
  // I(rho) - I(rho0) = int_{rho0}^{rho} c/r dr at fixed S
  for (const auto* law : {&kIdeal2, &kIdeal3, &kVk, &kCh}) {
    const double S = 0.2, rho0 = 0.5, rho1 = 2.0;
    const double closed =
        char_integral(*law, {rho1, 0.0, S}) - char_integral(*law, {rho0, 0.0, S});
    const double numeric = quad(
        [&](double r) { return sound_speed(*law, {r, 0.0, S}) / r; }, rho0, rho1,
        QuadConfig{1e-12, 48});
    CHECK(std::abs(closed - numeric) <= 1e-10);
  }
}

TEST_CASE("char integral S-derivative matches a quadrature oracle") {
  for (const auto* law : {&kIdeal2, &kVk, &kCh}) {
    const double S = 0.1, rho0 = 0.5, rho1 = 2.0;
    const double closed =
        char_integral_S(*law, {rho1, 0.0, S}) - char_integral_S(*law, {rho0, 0.0, S});
    const double numeric = quad(
        [&](double r) {
          return fd_derivative([&](double s) { return sound_speed(*law, {r, 0.0, s}); }, S) / r;
        },
        rho0, rho1, QuadConfig{1e-11, 48});
    CHECK(std::abs(closed - numeric) <= 1e-7);
  }
}

TEST_CASE("to_char closed forms") {
  // gamma = 3, A = 1: int c/rho drho = c = sqrt(3) at rho = 1
  const CharField cf = to_char(kIdeal3, {1.0, 0.0, 0.0}, SpeedTag::lambda3);
  CHECK(cf.R1 == doctest::Approx(-std::sqrt(3.0)));
  CHECK(cf.R2 == doctest::Approx(0.0));
  CHECK(cf.v == doctest::Approx(0.0));

  const CharField ch = to_char(kCh, {1.0, 2.0, 0.4}, SpeedTag::lambda3);
  CHECK(ch.R1 == doctest::Approx(3.0));  // u + a0/rho

  const CharField l2 = to_char(kIdeal2, {2.0, 0.7, 0.0}, SpeedTag::lambda2);
  CHECK(l2.R1 == doctest::Approx(4.0));  // p = rho^2
  CHECK(l2.R2 == doctest::Approx(0.7));
  CHECK(l2.v == doctest::Approx(0.0));
}

TEST_CASE("from_char inverts to_char on random states") {
  for (const auto* law : {&kIdeal2, &kIdeal3, &kVk, &kCh}) {
    for (SpeedTag tag : {SpeedTag::lambda3, SpeedTag::lambda2}) {
      for (const State& s : random_states(12, 100)) {
        const State back = from_char(*law, to_char(*law, s, tag));
        CHECK(std::abs(back.rho - s.rho) <= 1e-10 * std::max(1.0, s.rho));
        CHECK(std::abs(back.u - s.u) <= 1e-10 * std::max(1.0, std::abs(s.u)));
        CHECK(std::abs(back.S - s.S) <= 1e-10 * std::max(1.0, std::abs(s.S)));
      }
    }
  }
}

TEST_CASE("from_char rejects values outside the image") {
  // ideal gas, lambda3: needs v > R1
  CHECK_THROWS_AS((void)from_char(kIdeal2, CharField{1.0, 0.0, 0.5, SpeedTag::lambda3}), Error);
  // lambda2: ideal gas needs positive pressure
  CHECK_THROWS_AS((void)from_char(kIdeal2, CharField{-1.0, 0.0, 0.0, SpeedTag::lambda2}), Error);
  // Chaplygin lambda2 needs negative pressure
  CHECK_THROWS_AS((void)from_char(kCh, CharField{0.5, 0.0, 0.0, SpeedTag::lambda2}), Error);
}

TEST_CASE("sigma matrix stated entries") {
  for (const auto* law : {&kIdeal2, &kVk, &kCh}) {
    for (const State& s : random_states(3, 20)) {
      const auto sg2 = sigma_matrix(*law, s, SpeedTag::lambda2);
      CHECK(sg2[0][0] == doctest::Approx(sg2[0][1]));            // sigma^1_1 = sigma^1_3
      CHECK(sg2[1][0] == doctest::Approx(-sg2[1][1]));           // sigma^2_1 = -sigma^2_3
      CHECK(sg2[0][0] == doctest::Approx(0.5 * s.rho));
      const auto sg3 = sigma_matrix(*law, s, SpeedTag::lambda3);
      CHECK(sg3[1][0] == doctest::Approx(0.0));
      CHECK(sg3[1][1] == doctest::Approx(1.0));
    }
  }
}

namespace {

double R_alpha(const PressureLaw& law, const State& s, SpeedTag tag, int alpha) {
  const CharField cf = to_char(law, s, tag);
  return alpha == 0 ? cf.R1 : cf.R2;
}

std::array<double, 3> fd_gradient(const PressureLaw& law, const State& s, SpeedTag tag,
                                  int alpha) {
  auto at = [&](int comp, double h) {
    State sp = s, sm = s;
    (comp == 0 ? sp.rho : comp == 1 ? sp.u : sp.S) += h;
    (comp == 0 ? sm.rho : comp == 1 ? sm.u : sm.S) -= h;
    return (R_alpha(law, sp, tag, alpha) - R_alpha(law, sm, tag, alpha)) / (2.0 * h);
  };
  std::array<double, 3> g{};
  const double hs[3] = {1e-6 * s.rho, 1e-6, 1e-6};
  for (int c = 0; c < 3; ++c) g[c] = at(c, hs[c]);
  return g;
}

}  // namespace

TEST_CASE("grad R^alpha reconstructed from sigma matches finite differences") {
  for (const auto* law : {&kIdeal2, &kVk, &kCh}) {
    for (const State& s : random_states(9, 25)) {
      const auto es = eigen(*law, s);
      const auto sg = sigma_matrix(*law, s, SpeedTag::lambda3);
      for (int alpha = 0; alpha < 2; ++alpha) {
        const auto grad = fd_gradient(*law, s, SpeedTag::lambda3, alpha);
        for (int c = 0; c < 3; ++c) {
          const double recon = sg[alpha][0] * es.left[0][c] + sg[alpha][1] * es.left[1][c];
          CHECK(std::abs(recon - grad[c]) <= 1e-6 * std::max(1.0, std::abs(grad[c])));
        }
      }
    }
  }
}

TEST_CASE("Riemann invariants annihilate the lambda^N eigenvector") {
  for (const auto* law : {&kIdeal2, &kVk, &kCh}) {
    for (const State& s : random_states(21, 50)) {
      const auto es = eigen(*law, s);
      for (int alpha = 0; alpha < 2; ++alpha) {
        const auto g3 = fd_gradient(*law, s, SpeedTag::lambda3, alpha);
        CHECK(std::abs(dot3(g3, es.right[2])) <= 1e-8);
        const auto g2 = fd_gradient(*law, s, SpeedTag::lambda2, alpha);
        CHECK(std::abs(dot3(g2, es.right[1])) <= 1e-8);
      }
    }
  }
}

TEST_CASE("linear degeneracy: lambda2 always, lambda3 for Von Karman and Chaplygin") {
  auto grad_lambda = [](const PressureLaw& law, const State& s, int which) {
    auto lam = [&](const State& q) { return eigen(law, q).lambda[which]; };
    std::array<double, 3> g{};
    const double hs[3] = {1e-6 * s.rho, 1e-6, 1e-6};
    for (int c = 0; c < 3; ++c) {
      State sp = s, sm = s;
      (c == 0 ? sp.rho : c == 1 ? sp.u : sp.S) += hs[c];
      (c == 0 ? sm.rho : c == 1 ? sm.u : sm.S) -= hs[c];
      g[c] = (lam(sp) - lam(sm)) / (2.0 * hs[c]);
    }
    return g;
  };
  for (const auto* law : {&kIdeal2, &kVk, &kCh}) {
    for (const State& s : random_states(5, 30)) {
      const auto es = eigen(*law, s);
      CHECK(std::abs(dot3(grad_lambda(*law, s, 1), es.right[1])) <= 1e-8);
    }
  }
  for (const auto* law : {&kVk, &kCh}) {
    for (const State& s : random_states(6, 30)) {
      const auto es = eigen(*law, s);
      CHECK(std::abs(dot3(grad_lambda(*law, s, 2), es.right[2])) <= 1e-8);
    }
  }
}

TEST_CASE("entropy function derivative agrees with central differences") {
  const auto tab_x = [] {
    std::vector<double> x;
    for (int i = 0; i <= 20; ++i) x.push_back(-1.0 + 0.1 * i);
    return x;
  }();
  std::vector<double> tab_y;
  for (double x : tab_x) tab_y.push_back(std::exp(0.4 * x) + 0.1 * x);

  const EntropyFn fns[] = {EntropyFn::constant(2.0), EntropyFn::linear(1.0, 0.5),
                           EntropyFn::exponential(1.0, 0.0, 1.0),
                           EntropyFn::tabulated(tab_x, tab_y)};
  for (const auto& fn : fns) {
    for (double S : {-0.5, -0.1, 0.0, 0.3, 0.8}) {
      const double fd = (fn(S + 1e-5) - fn(S - 1e-5)) / 2e-5;
      const double scale = std::max(1.0, std::abs(fd));
      CHECK(std::abs(fn.deriv(S) - fd) <= 1e-6 * scale);
    }
  }
}

TEST_CASE("entropy function inversion round-trips") {
  const EntropyFn exp_fn = EntropyFn::exponential(1.0, 0.0, 1.0);
  CHECK(exp_fn.invert(exp_fn(0.37)) == doctest::Approx(0.37));
  const EntropyFn lin = EntropyFn::linear(1.0, 0.5);
  CHECK(lin.invert(lin(-0.4)) == doctest::Approx(-0.4));
  CHECK_FALSE(EntropyFn::constant(1.0).invertible());
}
