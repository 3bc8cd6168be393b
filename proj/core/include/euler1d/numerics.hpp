#pragma once

#include <functional>
#include <vector>

#include "euler1d/errors.hpp"

namespace euler1d {

using ScalarFn = std::function<double(double)>;

struct RootConfig {
  double abs_tol = 1e-12;
  int max_iter = 200;
  double expand = 2.0;       // bracket growth factor
  int max_expansions = 20;   // sign-change search budget
};

struct QuadConfig {
  double rel_tol = 1e-10;
  int max_depth = 40;
};

enum class OdeMethod { rk4_fixed, rk45_adaptive };

struct OdeConfig {
  OdeMethod method = OdeMethod::rk45_adaptive;
  double step = 1e-3;    // rk4_fixed step size
  double tol = 1e-10;    // rk45 local error tolerance
  long max_steps = 2000000;
};

/// Bracketed scalar root. Bisection carries the bracket to convergence,
/// a few Newton-secant polish steps sharpen the result without ever
/// leaving the bracket. If [lo,hi] does not change sign the bracket is
/// grown geometrically up to cfg.max_expansions times before giving up.
double find_root(const ScalarFn& f, double lo, double hi, const RootConfig& cfg = {});

/// Adaptive Simpson quadrature of f over [a,b].
double quad(const ScalarFn& f, double a, double b, const QuadConfig& cfg = {});

using OdeRhs = std::function<void(double t, const std::vector<double>& y, std::vector<double>& dydt)>;

/// Dense ODE output: stored accepted steps plus cubic Hermite
/// interpolation between them.
class Trajectory {
 public:
  Trajectory(std::vector<double> t, std::vector<std::vector<double>> y,
             std::vector<std::vector<double>> dydt);

  std::vector<double> eval(double t) const;
  double eval(double t, std::size_t component) const;

  double t_begin() const { return t_.front(); }
  double t_end() const { return t_.back(); }
  std::size_t size() const { return t_.size(); }
  const std::vector<double>& times() const { return t_; }
  const std::vector<double>& state(std::size_t i) const { return y_[i]; }

 private:
  std::size_t locate(double t) const;

  std::vector<double> t_;
  std::vector<std::vector<double>> y_;
  std::vector<std::vector<double>> dydt_;
};

Trajectory ode_solve(const OdeRhs& rhs, std::vector<double> y0, double t0, double t1,
                     const OdeConfig& cfg = {});

/// Central difference (f(x+h)-f(x-h))/2h. h <= 0 picks 1e-5*max(1,|x|).
double fd_derivative(const ScalarFn& f, double x, double h = 0.0);

using MultiFn = std::function<double(const std::vector<double>&)>;

double fd_partial(const MultiFn& f, std::vector<double> x, std::size_t i, double h = 0.0);

}  // namespace euler1d
