#pragma once

#include <array>

#include "euler1d/eos.hpp"

namespace euler1d {

/// Characteristic speeds u-c, u, u+c with the left/right eigenvector
/// pairs normalized to left[i] . right[j] = delta_ij.
struct EigenStructure {
  std::array<double, 3> lambda{};
  std::array<std::array<double, 3>, 3> left{};
  std::array<std::array<double, 3>, 3> right{};
};

EigenStructure eigen(const PressureLaw& law, const State& s);

/// Which characteristic speed plays the role of lambda^N in the
/// Riemann-invariant transform.
enum class SpeedTag { lambda3, lambda2 };

/// Riemann-invariant coordinates of one state.
///   lambda3: R1 = u - int c/rho drho, R2 = S, v = u
///   lambda2: R1 = p,                  R2 = u, v = S
struct CharField {
  double R1 = 0.0;
  double R2 = 0.0;
  double v = 0.0;
  SpeedTag tag = SpeedTag::lambda3;
};

CharField to_char(const PressureLaw& law, const State& s, SpeedTag tag);

/// Inverse of to_char. Throws InversionFailure when (R1,R2,v) lies
/// outside the image (e.g. nonpositive implied sound speed or density).
State from_char(const PressureLaw& law, const CharField& cf);

/// Components of grad R^alpha on the left-eigenvector basis, rows
/// alpha = 1,2 and columns running over the two non-N eigenvector
/// indices in ascending order (lambda3 tag: l^1,l^2; lambda2: l^1,l^3).
using SigmaMatrix = std::array<std::array<double, 2>, 2>;

SigmaMatrix sigma_matrix(const PressureLaw& law, const State& s, SpeedTag tag);

/// Indices of the non-N characteristic fields for a tag, ascending.
std::array<int, 2> constraint_indices(SpeedTag tag);

/// Index j of the field variable v = u_j in U = (rho, u, S).
int v_index(SpeedTag tag);

double lambda_of(const PressureLaw& law, const State& s, SpeedTag tag);

}  // namespace euler1d
