#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lowzero/kernels.hpp"

namespace lowzero {

enum class Provenance { Analytic, Nystrom, NeumannTruncated };

/// Assembled record of the 2-level quantities for one group.
struct BoundReport {
  SymmetryGroup group;
  double naive_value;    // functional at the trivial f = 1
  double optimal_value;  // c_G / <1, g>
  double g_integral;     // <1, g>
  double c_const;        // Dirac coefficient c_G
  Provenance provenance;
  int truncation_terms = 0;  // set when provenance == NeumannTruncated
};

/// Which central-point inequality supplies the bound constant.
enum class Level { OneLevelSupport2, OneLevelSupport3, TwoLevel };

/// Stored optimal one-level values for the orthogonal flavors: exact
/// cotangent expressions at support [-2, 2], published decimals at
/// support [-3, 3]. Throws UnsupportedCombination elsewhere.
double reference_one_level(SymmetryGroup g, int support);

/// Coefficient of Prob(r) in the 2-level central-point inequality:
/// 4m(m-1) at r = 2m, 4m^2 at r = 2m + 1. Zero at r = 1, 2.
std::int64_t central_point_coefficient(std::int64_t rank);

/// Closed-form optimal 2-level value c_G / <1, g> from the analytic
/// solution of the group's quadratic kernel.
BoundReport optimal_value(SymmetryGroup g);

/// Same value through the dense Nystrom solve at grid_n nodes; agrees with
/// the analytic route to ~h^4.
BoundReport nystrom_value(SymmetryGroup g, int grid_n);

/// Upper bound from the truncated Neumann series on the weight rebuilt
/// from phi_hat = g * g~ (one round of iteration). The optimal_value field
/// holds the truncation, which converges down to the iterated minimum;
/// short truncations can still sit above naive_value.
BoundReport neumann_truncated_value(SymmetryGroup g, int grid_n, int terms);

/// Functional value at the trivial test function: c_G (1 + a + b/3 + c/6).
double naive_value(SymmetryGroup g);

/// Upper bound on Prob(vanishing to order >= rank).
double upper_bound_order(SymmetryGroup g, std::int64_t rank, Level level);

/// Lower bound on the proportion of low rank: for the parity groups k is
/// the threshold index (SO(even): ranks 0..2k; SO(odd): ranks 1..2k+1);
/// for O, U, Sp only the rank <= 2 two-level variant exists (k = 2).
double lower_bound_low_rank(SymmetryGroup g, int k, Level level);

struct ComparisonRow {
  std::int64_t order;
  double one_level;  // support-2 reference constant / order
  double two_level;  // optimal 2-level value / coefficient
};

/// Side-by-side one-level vs two-level vanishing bounds for a parity group.
std::vector<ComparisonRow> comparison_table(std::span<const std::int64_t> orders,
                                            SymmetryGroup g);

}  // namespace lowzero
