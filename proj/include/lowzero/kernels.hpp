#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "lowzero/grid_function.hpp"

namespace lowzero {

/// The five classical compact group types governing zero statistics.
enum class SymmetryGroup { SOEven, SOOdd, O, U, Sp };

inline constexpr std::array<SymmetryGroup, 5> kAllGroups = {
    SymmetryGroup::SOEven, SymmetryGroup::SOOdd, SymmetryGroup::O,
    SymmetryGroup::U, SymmetryGroup::Sp};

/// Parity forced on the order of vanishing by the functional equation.
enum class RankParity { Even, Odd, Any };

RankParity rank_parity(SymmetryGroup g);

/// Shell-friendly group names: so-even, so-odd, o, u, sp.
std::string_view group_name(SymmetryGroup g);
std::optional<SymmetryGroup> parse_group(std::string_view name);

/// Normalized kernel m(x) = a + b|x| + c x^2 on [-1, 1]. The closed-form
/// solver requires b >= 0.
struct QuadraticKernel {
  double a;
  double b;
  double c;
  double operator()(double x) const;
};

/// Fourier-side weight c * delta + kernel for one group. The kernel grid
/// holds the non-Dirac part, unnormalized until normalize() divides it by
/// c_const.
struct WeightDecomposition {
  SymmetryGroup group;
  double c_const;
  GridFunction kernel;
  bool normalized;
};

/// Dirac-mass coefficient c_G = psi_ratio + {-1/2, 0, +1/2} for Sp, U and
/// the orthogonal flavors, where psi_ratio = psi_hat(0)/psi(0).
double group_constant(SymmetryGroup g, double psi_ratio);

/// Builds the unnormalized kernel from an arbitrary admissible psi_hat
/// sampled on [-1, 1]. psi0 = psi(0) is passed explicitly; when psi's
/// transform lives in [-1, 1] it equals value_at_zero_from_transform(psi_hat).
/// Accepting sampled psi_hat is what lets a previously computed optimum
/// (phi_hat = g * g~) be fed back in for iteration.
WeightDecomposition weight_kernel(SymmetryGroup g, const GridFunction& psi_hat, double psi0);

/// Divides the kernel pointwise by c_const; c_const itself is kept for the
/// bound formulas.
WeightDecomposition normalize(WeightDecomposition w);

/// Hard-coded normalized (a, b, c) for psi(y) = (sin(pi y)/(pi y))^2,
/// i.e. psi_hat the unit triangle.
QuadraticKernel quadratic_coefficients(SymmetryGroup g);

/// The unit triangle (1 - |x|) on [-1, 1].
GridFunction triangle_psi_hat(int n);

/// Samples a quadratic kernel on [-1, 1].
GridFunction sample_kernel(const QuadraticKernel& k, int n);

}  // namespace lowzero
