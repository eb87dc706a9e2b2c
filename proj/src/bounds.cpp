#include "lowzero/bounds.hpp"

#include <cmath>
#include <string>

#include "lowzero/errors.hpp"
#include "lowzero/fredholm.hpp"

namespace lowzero {

namespace {

bool parity_ok(SymmetryGroup g, std::int64_t rank) {
  switch (rank_parity(g)) {
    case RankParity::Even: return rank % 2 == 0;
    case RankParity::Odd: return rank % 2 == 1;
    case RankParity::Any: return true;
  }
  return true;
}

void require_parity(SymmetryGroup g, std::int64_t rank) {
  if (!parity_ok(g, rank))
    throw ParityMismatch("rank " + std::to_string(rank) + " has the wrong parity for " +
                         std::string(group_name(g)));
}

double two_level_constant(SymmetryGroup g) { return optimal_value(g).optimal_value; }

}  // namespace

double reference_one_level(SymmetryGroup g, int support) {
  const double cot_quarter = std::cos(0.25) / std::sin(0.25);
  if (support == 2) {
    if (g == SymmetryGroup::SOEven) return (3.0 + cot_quarter) / 8.0;
    if (g == SymmetryGroup::SOOdd) return (5.0 + cot_quarter) / 8.0;
  } else if (support == 3) {
    // published decimals; no closed form is in print
    if (g == SymmetryGroup::SOEven) return 0.60363;
    if (g == SymmetryGroup::SOOdd) return 1.04304;
  }
  throw UnsupportedCombination("no stored one-level constant for " +
                               std::string(group_name(g)) + " at support " +
                               std::to_string(support));
}

std::int64_t central_point_coefficient(std::int64_t rank) {
  if (rank < 1) throw std::invalid_argument("central_point_coefficient: rank must be >= 1");
  if (rank % 2 == 0) {
    const std::int64_t m = rank / 2;
    return 4 * m * (m - 1);
  }
  const std::int64_t m = (rank - 1) / 2;
  return 4 * m * m;
}

BoundReport optimal_value(SymmetryGroup g) {
  const QuadraticKernel k = quadratic_coefficients(g);
  const TrigSolution sol = solve_quadratic(k);
  const double g_int = sol.integral();
  const double c = group_constant(g, 1.0);  // psi_hat(0)/psi(0) = 1 for the triangle
  return BoundReport{g, naive_value(g), c / g_int, g_int, c, Provenance::Analytic, 0};
}

BoundReport nystrom_value(SymmetryGroup g, int grid_n) {
  const double c = group_constant(g, 1.0);
  const GridFunction sol =
      nystrom_solve(sample_kernel(quadratic_coefficients(g), 2 * grid_n - 1), grid_n);
  const double g_int = integrate(sol);
  return BoundReport{g, naive_value(g), c / g_int, g_int, c, Provenance::Nystrom, 0};
}

BoundReport neumann_truncated_value(SymmetryGroup g, int grid_n, int terms) {
  const IteratedWeight iw = build_iterated_weight(g, grid_n);
  const NeumannResult res = neumann_iterate(iw.weight.kernel, terms);
  const double partial = res.partial_sums.back();
  return BoundReport{g,       naive_value(g),          iw.weight.c_const / partial,
                     partial, iw.weight.c_const,       Provenance::NeumannTruncated,
                     terms};
}

double naive_value(SymmetryGroup g) {
  // quotient at f = 1, using iint |x-y| = 1/3 and iint (x-y)^2 = 1/6 over
  // the centered unit square
  const QuadraticKernel k = quadratic_coefficients(g);
  return group_constant(g, 1.0) * (1.0 + k.a + k.b / 3.0 + k.c / 6.0);
}

double upper_bound_order(SymmetryGroup g, std::int64_t rank, Level level) {
  if (rank < 1) throw std::invalid_argument("upper_bound_order: rank must be >= 1");
  require_parity(g, rank);

  if (level == Level::OneLevelSupport2 || level == Level::OneLevelSupport3) {
    const int support = level == Level::OneLevelSupport2 ? 2 : 3;
    return reference_one_level(g, support) / static_cast<double>(rank);
  }

  std::int64_t coeff;
  if (rank_parity(g) == RankParity::Any) {
    // no forced parity: the smallest coefficient over orders >= rank,
    // restricted to orders >= 3 (the coefficient is increasing there)
    coeff = central_point_coefficient(std::max<std::int64_t>(rank, 3));
  } else {
    coeff = central_point_coefficient(rank);
    if (coeff == 0)
      throw ZeroCoefficient("the 2-level coefficient vanishes at rank " +
                            std::to_string(rank) +
                            "; it says nothing about this order");
  }
  return two_level_constant(g) / static_cast<double>(coeff);
}

double lower_bound_low_rank(SymmetryGroup g, int k, Level level) {
  switch (g) {
    case SymmetryGroup::SOEven: {
      if (k < 1) throw UnsupportedCombination("lower bound needs k >= 1");
      if (level == Level::TwoLevel)
        return 1.0 - two_level_constant(g) / (4.0 * k * (k + 1.0));
      const int support = level == Level::OneLevelSupport2 ? 2 : 3;
      return 1.0 - reference_one_level(g, support) / (2.0 * k + 2.0);
    }
    case SymmetryGroup::SOOdd: {
      if (k < 1) throw UnsupportedCombination("lower bound needs k >= 1");
      if (level == Level::TwoLevel)
        return 1.0 - two_level_constant(g) / (4.0 * (k + 1.0) * (k + 1.0));
      const int support = level == Level::OneLevelSupport2 ? 2 : 3;
      return 1.0 - reference_one_level(g, support) / (2.0 * k + 3.0);
    }
    default: {
      // orders >= 3 all carry coefficient >= 4, so 1 - B/4 bounds the
      // proportion of rank <= 2
      if (level != Level::TwoLevel)
        throw UnsupportedCombination("only the 2-level rank <= 2 bound is defined for " +
                                     std::string(group_name(g)));
      if (k != 2)
        throw UnsupportedCombination("for " + std::string(group_name(g)) +
                                     " the lower bound covers ranks <= 2 only");
      return 1.0 - two_level_constant(g) / 4.0;
    }
  }
}

std::vector<ComparisonRow> comparison_table(std::span<const std::int64_t> orders,
                                            SymmetryGroup g) {
  if (rank_parity(g) == RankParity::Any)
    throw UnsupportedCombination("comparison table requires a parity group");
  const double b1 = reference_one_level(g, 2);
  const double b2 = two_level_constant(g);
  std::vector<ComparisonRow> rows;
  rows.reserve(orders.size());
  for (std::int64_t order : orders) {
    require_parity(g, order);
    const std::int64_t coeff = central_point_coefficient(order);
    if (coeff == 0)
      throw ZeroCoefficient("the 2-level coefficient vanishes at rank " +
                            std::to_string(order));
    rows.push_back({order, b1 / static_cast<double>(order),
                    b2 / static_cast<double>(coeff)});
  }
  return rows;
}

}  // namespace lowzero
