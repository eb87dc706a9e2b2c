#include "lowzero/kernels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "lowzero/errors.hpp"

namespace lowzero {

RankParity rank_parity(SymmetryGroup g) {
  switch (g) {
    case SymmetryGroup::SOEven: return RankParity::Even;
    case SymmetryGroup::SOOdd: return RankParity::Odd;
    default: return RankParity::Any;
  }
}

std::string_view group_name(SymmetryGroup g) {
  switch (g) {
    case SymmetryGroup::SOEven: return "so-even";
    case SymmetryGroup::SOOdd: return "so-odd";
    case SymmetryGroup::O: return "o";
    case SymmetryGroup::U: return "u";
    case SymmetryGroup::Sp: return "sp";
  }
  return "?";
}

std::optional<SymmetryGroup> parse_group(std::string_view name) {
  for (SymmetryGroup g : kAllGroups)
    if (name == group_name(g)) return g;
  return std::nullopt;
}

double QuadraticKernel::operator()(double x) const {
  return a + b * std::abs(x) + c * x * x;
}

double group_constant(SymmetryGroup g, double psi_ratio) {
  if (!(psi_ratio > 0.0))
    throw std::invalid_argument("group_constant: psi_hat(0)/psi(0) must be positive");
  switch (g) {
    case SymmetryGroup::Sp: return psi_ratio - 0.5;
    case SymmetryGroup::U: return psi_ratio;
    default: return psi_ratio + 0.5;  // SO(even), SO(odd), O
  }
}

WeightDecomposition weight_kernel(SymmetryGroup g, const GridFunction& psi_hat, double psi0) {
  if (!(psi0 > 0.0)) throw std::invalid_argument("weight_kernel: psi(0) must be positive");
  const int n = psi_hat.size();
  const double ratio0 = psi_hat.value_at(0.0) / psi0;
  const GridFunction cum = cumulative(psi_hat);

  // symmetric integral (1/psi0) * int_{|x|-1}^{1-|x|} psi_hat(y) dy,
  // zero once the limits meet at |x| >= 1
  auto sym_integral = [&](double x) {
    const double t = 1.0 - std::abs(x);
    if (t <= 0.0) return 0.0;
    return (cum.value_at(t) - cum.value_at(-t)) / psi0;
  };

  std::vector<double> vals(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double x = psi_hat.node(i);
    const double r = psi_hat[i] / psi0;
    const double edge = r * (std::abs(x) - 1.0);
    double v = 0.0;
    switch (g) {
      case SymmetryGroup::SOEven:
        v = 0.5 * (ratio0 + 0.5) + 2.0 * edge - sym_integral(x);
        break;
      case SymmetryGroup::SOOdd:
        v = 0.5 * (ratio0 - 1.5) + 2.0 * edge + sym_integral(x);
        break;
      case SymmetryGroup::O:
        v = 0.5 * (ratio0 - 0.5) + 2.0 * edge;
        break;
      case SymmetryGroup::U:
        v = edge;  // the unitary weight carries no constant and no factor 2
        break;
      case SymmetryGroup::Sp:
        v = -0.5 * (ratio0 - 0.5) + 2.0 * edge + sym_integral(x);
        break;
    }
    vals[static_cast<std::size_t>(i)] = v;
  }
  return WeightDecomposition{g, group_constant(g, ratio0),
                             GridFunction(psi_hat.lo(), psi_hat.hi(), std::move(vals)),
                             false};
}

WeightDecomposition normalize(WeightDecomposition w) {
  if (w.normalized) throw std::invalid_argument("normalize: weight already normalized");
  if (!(w.c_const > 0.0))
    throw std::invalid_argument("normalize: Dirac coefficient must be positive, got " +
                                std::to_string(w.c_const));
  std::vector<double> vals = w.kernel.values();
  for (double& v : vals) v /= w.c_const;
  return WeightDecomposition{w.group, w.c_const,
                             GridFunction(w.kernel.lo(), w.kernel.hi(), std::move(vals)),
                             true};
}

QuadraticKernel quadratic_coefficients(SymmetryGroup g) {
  switch (g) {
    case SymmetryGroup::SOEven: return {-3.0 / 2.0, 8.0 / 3.0, -2.0 / 3.0};
    case SymmetryGroup::SOOdd: return {-5.0 / 6.0, 8.0 / 3.0, -2.0};
    // printed with a typographically garbled x^2 coefficient; rederived
    // from the O weight formula with the triangle psi_hat (see tests)
    case SymmetryGroup::O: return {-7.0 / 6.0, 8.0 / 3.0, -4.0 / 3.0};
    case SymmetryGroup::U: return {-1.0, 2.0, -1.0};
    case SymmetryGroup::Sp: return {-5.0 / 2.0, 8.0, -6.0};
  }
  throw std::invalid_argument("quadratic_coefficients: unknown group");
}

GridFunction triangle_psi_hat(int n) {
  return GridFunction::sample(-1.0, 1.0, n,
                              [](double x) { return 1.0 - std::abs(x); });
}

GridFunction sample_kernel(const QuadraticKernel& k, int n) {
  return GridFunction::sample(-1.0, 1.0, n, [&](double x) { return k(x); });
}

}  // namespace lowzero
