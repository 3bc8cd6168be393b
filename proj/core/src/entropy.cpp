#include "euler1d/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace euler1d {

EntropyFn EntropyFn::constant(double c) {
  return EntropyFn([c](double) { return c; }, [](double) { return 0.0; }, nullptr);
}

EntropyFn EntropyFn::linear(double a, double b) {
  std::function<double(double)> inv;
  if (b != 0.0) inv = [a, b](double y) { return (y - a) / b; };
  return EntropyFn([a, b](double S) { return a + b * S; }, [b](double) { return b; },
                   std::move(inv));
}

EntropyFn EntropyFn::exponential(double scale, double s0, double k) {
  if (scale == 0.0 || k == 0.0) {
    throw Error(Errc::bad_params, "EntropyFn::exponential: scale and k must be nonzero");
  }
  auto v = [scale, s0, k](double S) { return scale * std::exp((S - s0) / k); };
  auto d = [scale, s0, k](double S) { return scale / k * std::exp((S - s0) / k); };
  auto inv = [scale, s0, k](double y) {
    if (y / scale <= 0.0) {
      throw Error(Errc::inversion_failure, "EntropyFn: value outside exponential range");
    }
    return s0 + k * std::log(y / scale);
  };
  return EntropyFn(std::move(v), std::move(d), std::move(inv));
}

namespace {

// natural cubic spline through (s_i, y_i)
struct Spline {
  std::vector<double> s, y, m;  // m = second derivatives

  double value(double x) const {
    const auto [i, h, u] = piece(x);
    const double a = (s[i + 1] - x) / h, b = (x - s[i]) / h;
    return a * y[i] + b * y[i + 1] +
           ((a * a * a - a) * m[i] + (b * b * b - b) * m[i + 1]) * h * h / 6.0;
  }

  double deriv(double x) const {
    const auto [i, h, u] = piece(x);
    const double a = (s[i + 1] - x) / h, b = (x - s[i]) / h;
    return (y[i + 1] - y[i]) / h +
           ((3 * b * b - 1) * m[i + 1] - (3 * a * a - 1) * m[i]) * h / 6.0;
  }

  std::tuple<std::size_t, double, double> piece(double x) const {
    auto it = std::upper_bound(s.begin(), s.end(), x);
    std::size_t i = (it == s.begin()) ? 0 : static_cast<std::size_t>(it - s.begin()) - 1;
    i = std::min(i, s.size() - 2);
    return {i, s[i + 1] - s[i], x};
  }
};

Spline make_spline(std::vector<double> s, std::vector<double> y) {
  const std::size_t n = s.size();
  if (n < 3) throw Error(Errc::bad_params, "EntropyFn::tabulated: need at least 3 points");
  for (std::size_t i = 1; i < n; ++i) {
    if (!(s[i] > s[i - 1])) {
      throw Error(Errc::bad_params, "EntropyFn::tabulated: abscissae must increase");
    }
  }
  std::vector<double> m(n, 0.0), u(n, 0.0), l(n, 1.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double sig = (s[i] - s[i - 1]) / (s[i + 1] - s[i - 1]);
    const double p = sig * m[i - 1] + 2.0;
    m[i] = (sig - 1.0) / p;
    u[i] = (y[i + 1] - y[i]) / (s[i + 1] - s[i]) - (y[i] - y[i - 1]) / (s[i] - s[i - 1]);
    u[i] = (6.0 * u[i] / (s[i + 1] - s[i - 1]) - sig * u[i - 1]) / p;
  }
  for (std::size_t i = n - 1; i-- > 0;) m[i] = m[i] * m[i + 1] + u[i];
  m[n - 1] = 0.0;
  return Spline{std::move(s), std::move(y), std::move(m)};
}

}  // namespace

EntropyFn EntropyFn::tabulated(std::vector<double> s, std::vector<double> y) {
  auto sp = std::make_shared<Spline>(make_spline(std::move(s), std::move(y)));
  const double lo = sp->s.front(), hi = sp->s.back();
  const bool increasing = sp->y.back() > sp->y.front();
  auto inv = [sp, lo, hi, increasing](double target) {
    RootConfig rc;
    rc.abs_tol = 1e-13 * std::max(1.0, std::abs(target));
    rc.max_expansions = 0;  // stay on the knot range
    return find_root([&](double x) { return sp->value(x) - target; }, lo, hi, rc);
  };
  (void)increasing;
  return EntropyFn([sp](double S) { return sp->value(S); },
                   [sp](double S) { return sp->deriv(S); }, std::move(inv));
}

double EntropyFn::invert(double y) const {
  if (!invert_) {
    throw Error(Errc::inversion_failure, "EntropyFn::invert: representation is not invertible");
  }
  return invert_(y);
}

}  // namespace euler1d
