#include "euler1d/profile.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace euler1d {

Profile Profile::constant(double c) {
  return Profile([c](double) { return c; }, [](double) { return 0.0; });
}

Profile Profile::linear(double a, double b) {
  return Profile([a, b](double x) { return a + b * x; }, [b](double) { return b; });
}

Profile Profile::poly(std::vector<double> coeffs) {
  if (coeffs.empty()) throw Error(Errc::bad_params, "Profile::poly: empty coefficient list");
  auto v = [coeffs](double x) {
    double acc = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
  };
  auto d = [coeffs](double x) {
    double acc = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 1;) acc = acc * x + coeffs[i] * static_cast<double>(i);
    return acc;
  };
  return Profile(std::move(v), std::move(d));
}

Profile Profile::exponential(double A, double B, double C) {
  return Profile([A, B, C](double x) { return A * std::exp(B * x) + C; },
                 [A, B](double x) { return A * B * std::exp(B * x); });
}

Profile Profile::tanh_ramp(double a, double b, double c, double d) {
  return Profile([a, b, c, d](double x) { return a + b * std::tanh(c * x + d); },
                 [b, c, d](double x) {
                   const double t = std::cosh(c * x + d);
                   return b * c / (t * t);
                 });
}

namespace {

struct CubicTable {
  std::vector<double> x, y, m;  // natural-spline second derivatives

  std::size_t piece(double q) const {
    auto it = std::upper_bound(x.begin(), x.end(), q);
    std::size_t i = (it == x.begin()) ? 0 : static_cast<std::size_t>(it - x.begin()) - 1;
    return std::min(i, x.size() - 2);
  }

  double value(double q) const {
    const std::size_t i = piece(q);
    const double h = x[i + 1] - x[i];
    const double a = (x[i + 1] - q) / h, b = (q - x[i]) / h;
    return a * y[i] + b * y[i + 1] +
           ((a * a * a - a) * m[i] + (b * b * b - b) * m[i + 1]) * h * h / 6.0;
  }

  double deriv(double q) const {
    const std::size_t i = piece(q);
    const double h = x[i + 1] - x[i];
    const double a = (x[i + 1] - q) / h, b = (q - x[i]) / h;
    return (y[i + 1] - y[i]) / h +
           ((3 * b * b - 1) * m[i + 1] - (3 * a * a - 1) * m[i]) * h / 6.0;
  }
};

CubicTable build_table(std::vector<double> x, std::vector<double> y) {
  const std::size_t n = x.size();
  if (n != y.size() || n < 3) {
    throw Error(Errc::bad_params, "Profile::tabulated: need matching arrays with >= 3 points");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (!(x[i] > x[i - 1])) {
      throw Error(Errc::bad_params, "Profile::tabulated: abscissae must increase");
    }
  }
  std::vector<double> m(n, 0.0), u(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double sig = (x[i] - x[i - 1]) / (x[i + 1] - x[i - 1]);
    const double p = sig * m[i - 1] + 2.0;
    m[i] = (sig - 1.0) / p;
    u[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]) - (y[i] - y[i - 1]) / (x[i] - x[i - 1]);
    u[i] = (6.0 * u[i] / (x[i + 1] - x[i - 1]) - sig * u[i - 1]) / p;
  }
  for (std::size_t i = n - 1; i-- > 0;) m[i] = m[i] * m[i + 1] + u[i];
  m[n - 1] = 0.0;
  return CubicTable{std::move(x), std::move(y), std::move(m)};
}

}  // namespace

Profile Profile::tabulated(std::vector<double> x, std::vector<double> y) {
  auto tab = std::make_shared<CubicTable>(build_table(std::move(x), std::move(y)));
  const double lo = tab->x.front(), hi = tab->x.back();
  auto guard = [lo, hi](double q) {
    const double pad = 1e-9 * std::max(1.0, hi - lo);
    if (q < lo - pad || q > hi + pad) {
      throw Error(Errc::out_of_validity, "Profile::tabulated: query outside knot range");
    }
    return std::clamp(q, lo, hi);
  };
  return Profile([tab, guard](double q) { return tab->value(guard(q)); },
                 [tab, guard](double q) { return tab->deriv(guard(q)); });
}

Profile Profile::callable(std::function<double(double)> f, std::function<double(double)> df) {
  if (!f || !df) throw Error(Errc::bad_params, "Profile::callable: null function");
  return Profile(std::move(f), std::move(df));
}

Profile Profile::from_ode(const std::function<double(double, double)>& rhs, double x0, double y0,
                          double x_lo, double x_hi, double tol) {
  if (!(x_lo < x_hi) || x0 < x_lo || x0 > x_hi) {
    throw Error(Errc::bad_params, "Profile::from_ode: anchor must lie in [x_lo, x_hi]");
  }
  (void)tol;
  // fixed small steps keep the dense-output interpolant at rounding level
  OdeConfig oc;
  oc.method = OdeMethod::rk4_fixed;
  oc.step = (x_hi - x_lo) / 16384.0;
  auto wrap = [rhs](double x, const std::vector<double>& y, std::vector<double>& d) {
    d[0] = rhs(x, y[0]);
  };
  auto down = std::make_shared<Trajectory>(
      x0 > x_lo ? ode_solve(wrap, {y0}, x0, x_lo, oc)
                : Trajectory({x0}, {{y0}}, {{rhs(x0, y0)}}));
  auto up = std::make_shared<Trajectory>(
      x0 < x_hi ? ode_solve(wrap, {y0}, x0, x_hi, oc)
                : Trajectory({x0}, {{y0}}, {{rhs(x0, y0)}}));
  auto value = [down, up, x0, x_lo, x_hi](double x) {
    const double pad = 1e-9 * std::max(1.0, x_hi - x_lo);
    if (x < x_lo - pad || x > x_hi + pad) {
      throw Error(Errc::out_of_validity, "Profile::from_ode: query outside [x_lo, x_hi]");
    }
    return (x <= x0 ? *down : *up).eval(std::clamp(x, x_lo, x_hi), 0);
  };
  auto deriv = [value, rhs](double x) { return rhs(x, value(x)); };
  return Profile(std::move(value), std::move(deriv));
}

}  // namespace euler1d
