#pragma once

#include <functional>
#include <vector>

#include "euler1d/numerics.hpp"

namespace euler1d {

/// Initial-data profile: a smooth scalar function of x with its first
/// derivative. Closed-form presets cover the scenario files; tabulated
/// profiles (cubic spline) and callable profiles serve fixtures whose
/// consistent initial data only exists as the solution of an ODE.
class Profile {
 public:
  Profile() : Profile(constant(0.0)) {}

  static Profile constant(double c);
  static Profile linear(double a, double b);              // a + b x
  static Profile poly(std::vector<double> coeffs);        // c0 + c1 x + c2 x^2 + ...
  static Profile exponential(double A, double B, double C);  // A exp(B x) + C
  static Profile tanh_ramp(double a, double b, double c, double d);  // a + b tanh(c x + d)
  static Profile tabulated(std::vector<double> x, std::vector<double> y);
  static Profile callable(std::function<double(double)> f, std::function<double(double)> df);

  /// Tabulate an ODE solution y'(x) = rhs(x, y) as a profile.
  static Profile from_ode(const std::function<double(double, double)>& rhs, double x0, double y0,
                          double x_lo, double x_hi, double tol = 1e-12);

  double operator()(double x) const { return value_(x); }
  double deriv(double x) const { return deriv_(x); }

 private:
  Profile(std::function<double(double)> v, std::function<double(double)> d)
      : value_(std::move(v)), deriv_(std::move(d)) {}

  std::function<double(double)> value_;
  std::function<double(double)> deriv_;
};

}  // namespace euler1d
