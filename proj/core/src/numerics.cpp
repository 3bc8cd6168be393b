#include "euler1d/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace euler1d {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::bad_params: return "BadParams";
    case Errc::bad_state: return "BadState";
    case Errc::non_hyperbolic: return "NonHyperbolic";
    case Errc::inversion_failure: return "InversionFailure";
    case Errc::no_bracket: return "NoBracket";
    case Errc::max_iter_exceeded: return "MaxIterExceeded";
    case Errc::max_depth_exceeded: return "MaxDepthExceeded";
    case Errc::max_steps_exceeded: return "MaxStepsExceeded";
    case Errc::non_finite: return "NonFinite";
    case Errc::constraint_violation: return "ConstraintViolation";
    case Errc::out_of_validity: return "OutOfValidity";
    case Errc::cfl_violation: return "CflViolation";
    case Errc::vacuum_formed: return "VacuumFormed";
    case Errc::inadmissible_data: return "InadmissibleData";
    case Errc::no_equilibrium: return "NoEquilibrium";
    case Errc::io_error: return "IoError";
  }
  return "UnknownError";
}

namespace {

bool finite(double x) { return std::isfinite(x); }

}  // namespace

double find_root(const ScalarFn& f, double lo, double hi, const RootConfig& cfg) {
  if (!(cfg.abs_tol > 0) || cfg.max_iter < 1) {
    throw Error(Errc::bad_params, "find_root: abs_tol must be > 0 and max_iter >= 1");
  }
  if (lo > hi) std::swap(lo, hi);
  double flo = f(lo);
  double fhi = f(hi);
  if (!finite(flo) || !finite(fhi)) {
    throw Error(Errc::non_finite, "find_root: endpoint evaluation not finite");
  }
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;

  int grown = 0;
  while (flo * fhi > 0.0) {
    if (++grown > cfg.max_expansions) {
      throw Error(Errc::no_bracket, "find_root: no sign change after bracket expansion");
    }
    const double width = hi - lo;
    const double mid = 0.5 * (lo + hi);
    lo = mid - 0.5 * cfg.expand * width;
    hi = mid + 0.5 * cfg.expand * width;
    flo = f(lo);
    fhi = f(hi);
    if (!finite(flo) || !finite(fhi)) {
      throw Error(Errc::non_finite, "find_root: endpoint evaluation not finite");
    }
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
  }

  double a = lo, b = hi, fa = flo, fb = fhi;
  double x = 0.5 * (a + b);
  for (int it = 0; it < cfg.max_iter; ++it) {
    x = 0.5 * (a + b);
    const double fx = f(x);
    if (!finite(fx)) throw Error(Errc::non_finite, "find_root: interior evaluation not finite");
    if (fx == 0.0 || std::abs(fx) <= cfg.abs_tol || (b - a) <= cfg.abs_tol) {
      // secant polish, rejected whenever it escapes the bracket
      double x0 = x, f0 = fx;
      double x1 = (fa * fx < 0.0) ? a : b;
      double f1 = (fa * fx < 0.0) ? fa : fb;
      for (int k = 0; k < 4 && f0 != f1; ++k) {
        const double xn = x0 - f0 * (x1 - x0) / (f1 - f0);
        if (!(xn >= a && xn <= b)) break;
        const double fn = f(xn);
        if (!finite(fn)) break;
        x1 = x0; f1 = f0; x0 = xn; f0 = fn;
        if (f0 == 0.0) break;
      }
      return (std::abs(f0) <= std::abs(fx)) ? x0 : x;
    }
    if (fa * fx < 0.0) {
      b = x; fb = fx;
    } else {
      a = x; fa = fx;
    }
  }
  throw Error(Errc::max_iter_exceeded, "find_root: bisection budget exhausted");
}

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const ScalarFn& f, double a, double fa, double b, double fb, double m,
                        double fm, double whole, double eps, int depth, int max_depth) {
  if (depth > max_depth) {
    throw Error(Errc::max_depth_exceeded, "quad: adaptive refinement exceeded max_depth");
  }
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  if (!std::isfinite(flm) || !std::isfinite(frm)) {
    throw Error(Errc::non_finite, "quad: integrand not finite");
  }
  const double left = simpson(a, fa, m, fm, flm);
  const double right = simpson(m, fm, b, fb, frm);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * eps) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(f, a, fa, m, fm, lm, flm, left, 0.5 * eps, depth + 1, max_depth) +
         adaptive_simpson(f, m, fm, b, fb, rm, frm, right, 0.5 * eps, depth + 1, max_depth);
}

}  // namespace

double quad(const ScalarFn& f, double a, double b, const QuadConfig& cfg) {
  if (!(cfg.rel_tol > 0)) throw Error(Errc::bad_params, "quad: rel_tol must be > 0");
  if (a == b) return 0.0;
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }
  const double fa = f(a);
  const double fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  if (!std::isfinite(fa) || !std::isfinite(fb) || !std::isfinite(fm)) {
    throw Error(Errc::non_finite, "quad: integrand not finite");
  }
  const double whole = simpson(a, fa, b, fb, fm);
  const double scale = std::max({std::abs(whole), std::abs(b - a), 1e-300});
  const double eps = cfg.rel_tol * scale;
  return sign * adaptive_simpson(f, a, fa, b, fb, m, fm, whole, eps, 0, cfg.max_depth);
}

Trajectory::Trajectory(std::vector<double> t, std::vector<std::vector<double>> y,
                       std::vector<std::vector<double>> dydt)
    : t_(std::move(t)), y_(std::move(y)), dydt_(std::move(dydt)) {}

std::size_t Trajectory::locate(double t) const {
  // stored times are monotone in the direction of integration
  const bool asc = t_.back() >= t_.front();
  std::size_t i;
  if (asc) {
    auto it = std::upper_bound(t_.begin(), t_.end(), t);
    i = (it == t_.begin()) ? 0 : static_cast<std::size_t>(it - t_.begin()) - 1;
  } else {
    auto it = std::upper_bound(t_.begin(), t_.end(), t, std::greater<double>());
    i = (it == t_.begin()) ? 0 : static_cast<std::size_t>(it - t_.begin()) - 1;
  }
  return std::min(i, t_.size() - 2);
}

std::vector<double> Trajectory::eval(double t) const {
  if (t_.size() == 1) return y_.front();
  const double lo = std::min(t_.front(), t_.back());
  const double hi = std::max(t_.front(), t_.back());
  const double pad = 1e-9 * std::max(1.0, std::abs(hi - lo));
  if (t < lo - pad || t > hi + pad) {
    throw Error(Errc::out_of_validity, "Trajectory::eval: t outside stored range");
  }
  t = std::clamp(t, lo, hi);
  const std::size_t i = locate(t);
  const double h = t_[i + 1] - t_[i];
  const double s = (t - t_[i]) / h;
  const double s2 = s * s, s3 = s2 * s;
  const double h00 = 2 * s3 - 3 * s2 + 1;
  const double h10 = s3 - 2 * s2 + s;
  const double h01 = -2 * s3 + 3 * s2;
  const double h11 = s3 - s2;
  std::vector<double> out(y_[i].size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = h00 * y_[i][k] + h10 * h * dydt_[i][k] + h01 * y_[i + 1][k] + h11 * h * dydt_[i + 1][k];
  }
  return out;
}

double Trajectory::eval(double t, std::size_t component) const { return eval(t)[component]; }

namespace {

void rk4_step(const OdeRhs& rhs, double t, std::vector<double>& y, double h,
              std::vector<double>& k1, std::vector<double>& k2, std::vector<double>& k3,
              std::vector<double>& k4, std::vector<double>& tmp) {
  const std::size_t n = y.size();
  rhs(t, y, k1);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
  rhs(t + 0.5 * h, tmp, k2);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
  rhs(t + 0.5 * h, tmp, k3);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * k3[i];
  rhs(t + h, tmp, k4);
  for (std::size_t i = 0; i < n; ++i) y[i] += h / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
}

// Dormand-Prince 5(4) tableau
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

}  // namespace

Trajectory ode_solve(const OdeRhs& rhs, std::vector<double> y0, double t0, double t1,
                     const OdeConfig& cfg) {
  const std::size_t n = y0.size();
  std::vector<double> ts{t0};
  std::vector<std::vector<double>> ys{y0};
  std::vector<std::vector<double>> ds;
  std::vector<double> d0(n);
  rhs(t0, y0, d0);
  for (double v : d0) {
    if (!std::isfinite(v)) throw Error(Errc::non_finite, "ode_solve: rhs not finite at t0");
  }
  ds.push_back(d0);
  if (t1 == t0) return Trajectory(std::move(ts), std::move(ys), std::move(ds));
  const double dir = (t1 > t0) ? 1.0 : -1.0;

  if (cfg.method == OdeMethod::rk4_fixed) {
    if (!(cfg.step > 0)) throw Error(Errc::bad_params, "ode_solve: step must be > 0");
    std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
    std::vector<double> y = y0;
    double t = t0;
    long steps = 0;
    while (dir * (t1 - t) > 1e-14 * std::max(1.0, std::abs(t1))) {
      if (++steps > cfg.max_steps) {
        throw Error(Errc::max_steps_exceeded, "ode_solve: rk4 step budget exhausted");
      }
      const double h = dir * std::min(cfg.step, dir * (t1 - t));
      rk4_step(rhs, t, y, h, k1, k2, k3, k4, tmp);
      t += h;
      for (double v : y) {
        if (!std::isfinite(v)) throw Error(Errc::non_finite, "ode_solve: state not finite");
      }
      rhs(t, y, k1);
      ts.push_back(t);
      ys.push_back(y);
      ds.push_back(k1);
    }
    return Trajectory(std::move(ts), std::move(ys), std::move(ds));
  }

  // embedded Dormand-Prince with PI-free step control
  if (!(cfg.tol > 0)) throw Error(Errc::bad_params, "ode_solve: tol must be > 0");
  std::vector<double> y = y0, k1 = d0, k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), tmp(n), ynew(n);
  double t = t0;
  double h = dir * std::min(std::abs(t1 - t0), std::max(1e-8, std::abs(t1 - t0) / 100.0));
  long steps = 0;
  while (dir * (t1 - t) > 1e-14 * std::max(1.0, std::abs(t1))) {
    if (++steps > cfg.max_steps) {
      throw Error(Errc::max_steps_exceeded, "ode_solve: rk45 step budget exhausted");
    }
    if (dir * (t + h) > dir * t1) h = t1 - t;
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * a21 * k1[i];
    rhs(t + c2 * h, tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    rhs(t + c3 * h, tmp, k3);
    for (std::size_t i = 0; i < n; ++i)
      tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    rhs(t + c4 * h, tmp, k4);
    for (std::size_t i = 0; i < n; ++i)
      tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    rhs(t + c5 * h, tmp, k5);
    for (std::size_t i = 0; i < n; ++i)
      tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    rhs(t + h, tmp, k6);
    for (std::size_t i = 0; i < n; ++i)
      ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    rhs(t + h, ynew, k7);

    double err = 0.0;
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::isfinite(ynew[i])) {
        ok = false;
        break;
      }
      const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                             e7 * k7[i]);
      const double sc = cfg.tol * (1.0 + std::max(std::abs(y[i]), std::abs(ynew[i])));
      err = std::max(err, std::abs(ei) / sc);
    }
    if (!ok) {
      h *= 0.25;
      if (std::abs(h) < 1e-16 * std::max(1.0, std::abs(t))) {
        throw Error(Errc::non_finite, "ode_solve: state not finite at minimal step");
      }
      continue;
    }
    if (err <= 1.0) {
      t += h;
      y = ynew;
      k1 = k7;  // FSAL
      ts.push_back(t);
      ys.push_back(y);
      ds.push_back(k7);
    }
    const double fac = std::clamp(0.9 * std::pow(std::max(err, 1e-12), -0.2), 0.2, 5.0);
    h *= fac;
  }
  return Trajectory(std::move(ts), std::move(ys), std::move(ds));
}

double fd_derivative(const ScalarFn& f, double x, double h) {
  if (h <= 0.0) h = 1e-5 * std::max(1.0, std::abs(x));
  const double d = (f(x + h) - f(x - h)) / (2.0 * h);
  if (!std::isfinite(d)) throw Error(Errc::non_finite, "fd_derivative: not finite");
  return d;
}

double fd_partial(const MultiFn& f, std::vector<double> x, std::size_t i, double h) {
  if (h <= 0.0) h = 1e-5 * std::max(1.0, std::abs(x[i]));
  const double xi = x[i];
  x[i] = xi + h;
  const double fp = f(x);
  x[i] = xi - h;
  const double fm = f(x);
  const double d = (fp - fm) / (2.0 * h);
  if (!std::isfinite(d)) throw Error(Errc::non_finite, "fd_partial: not finite");
  return d;
}

}  // namespace euler1d
