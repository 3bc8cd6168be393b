#pragma once

#include <functional>
#include <vector>

#include "euler1d/numerics.hpp"

namespace euler1d {

/// Smooth scalar function of the entropy, e.g. the a(S), b(S) factors of
/// the Von Karman closure. Carries its first derivative; the parametric
/// presets use analytic derivatives, the tabulated form differentiates
/// its cubic interpolant.
class EntropyFn {
 public:
  EntropyFn() : EntropyFn(constant(0.0)) {}

  static EntropyFn constant(double c);
  static EntropyFn linear(double a, double b);                    // a + b*S
  static EntropyFn exponential(double scale, double s0, double k);  // scale*exp((S-s0)/k)
  static EntropyFn tabulated(std::vector<double> s, std::vector<double> y);

  double operator()(double S) const { return value_(S); }
  double deriv(double S) const { return deriv_(S); }

  bool invertible() const { return invert_ != nullptr; }

  /// Solve value(S) = y. Parametric presets invert in closed form,
  /// tabulated ones go through find_root on the declared knot range.
  double invert(double y) const;

 private:
  EntropyFn(std::function<double(double)> v, std::function<double(double)> d,
            std::function<double(double)> inv)
      : value_(std::move(v)), deriv_(std::move(d)), invert_(std::move(inv)) {}

  std::function<double(double)> value_;
  std::function<double(double)> deriv_;
  std::function<double(double)> invert_;
};

}  // namespace euler1d
