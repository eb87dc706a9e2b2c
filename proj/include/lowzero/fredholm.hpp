#pragma once

#include <Eigen/Dense>
#include <vector>

#include "lowzero/grid_function.hpp"
#include "lowzero/kernels.hpp"

namespace lowzero {

/// Even trigonometric solution g(x) = A cos(omega x) + C of the Fredholm
/// equation 1 = g(x) + int_{-1/2}^{1/2} (a + b|x-y| + c(x-y)^2) g(y) dy.
struct TrigSolution {
  double amplitude;  // A
  double frequency;  // omega = sqrt(2b)
  double offset;     // C

  double operator()(double x) const;
  /// int_{-1/2}^{1/2} g = A (2/omega) sin(omega/2) + C, in closed form.
  double integral() const;
};

/// Closed-form solution for a quadratic kernel with b > 0, b + c != 0.
/// Throws DegenerateKernel / SingularDenominator.
TrigSolution solve_quadratic(const QuadraticKernel& k);

/// Quadrature discretization of (K f)(x) = int_{-1/2}^{1/2} m(x - y) f(y) dy
/// on n uniform nodes of [-1/2, 1/2]. Row integrals split at y = x_i so the
/// |x - y| kink always sits on a node of each half. Kernel lookups are exact
/// node reads whenever the kernel grid has 2n - 1 nodes on [-1, 1] (the
/// aligned resolution every construction in this library uses).
class NystromOperator {
 public:
  NystromOperator(const GridFunction& kernel, int n);

  int size() const { return n_; }
  double node(int i) const { return -0.5 + i * spacing_; }
  double spacing() const { return spacing_; }

  Eigen::VectorXd apply(const Eigen::VectorXd& f) const;
  GridFunction apply(const GridFunction& f) const;

  /// Solves (I + K) g = 1. Verifies the discrete residual is <= 1e-8 and
  /// throws SingularSystem otherwise. Also records a reciprocal condition
  /// estimate of I + K, queryable afterwards.
  GridFunction solve_identity_plus();

  /// ||g + Kg - 1||_inf at the nodes.
  double residual_inf(const GridFunction& g) const;

  /// Reciprocal condition estimate from the last solve (0 before any solve).
  double rcond() const { return rcond_; }

 private:
  int n_;
  double spacing_;
  Eigen::MatrixXd k_;  // quadrature weights times kernel samples
  double rcond_ = 0.0;
};

/// Convenience wrapper: discretize and solve (I + K) g = 1.
GridFunction nystrom_solve(const GridFunction& kernel, int n);

/// iint over [-1/2,1/2]^2 of m(x - y)^2, reduced to the single integral
/// int_{-1}^{1} m(t)^2 (1 - |t|) dt. The kernel must live on [-1, 1].
double contraction_norm_sq(const GridFunction& kernel);

struct NeumannResult {
  /// partial_sums[k] = sum_{j<=k} (-1)^j <1, K^j(1)>.
  std::vector<double> partial_sums;
  /// Squared contraction bound iint m(x-y)^2; q = sqrt(norm_sq).
  double norm_sq;
  /// norm_sq < 1, i.e. the series converges with tail <= q^{n+1}/(1-q).
  bool certified;
  /// Every signed term (-1)^k K^k(1) nonnegative pointwise; when true each
  /// truncation of c / partial_sum is a valid upper bound for the minimum.
  bool terms_alternating_nonneg;
};

/// Truncated Neumann series for (I + K)^{-1} 1, driven by the same
/// quadrature matrix as the Nystrom solve.
NeumannResult neumann_iterate(const GridFunction& kernel, int n_max);

/// One round of iteration: the weight rebuilt from the correlation of the
/// group's closed-form solution.
struct IteratedWeight {
  GridFunction phi_hat;        // g * g~ on [-1, 1], 2 grid_n - 1 nodes
  double phi0;                 // phi(0) = integral of phi_hat
  WeightDecomposition weight;  // normalized
};

IteratedWeight build_iterated_weight(SymmetryGroup g, int grid_n);

struct OdeResidual {
  double second_order;  // sup |g'' + 2b g + 2c int g|
  double third_order;   // sup |g''' + 2b g'|
};

/// Central finite-difference residuals of the differential system satisfied
/// by the closed-form solution, evaluated at equispaced interior points.
/// The differences are accumulated in long double so cancellation does not
/// swamp the h^2 truncation term.
OdeResidual ode_residual_sup(const QuadraticKernel& k, const TrigSolution& g,
                             int npoints = 101, double step = 1e-4);

/// sup_x |g(x) + int m(x - y) g(y) dy - 1| for the closed-form solution,
/// by split composite quadrature at quad_n nodes. npoints - 1 should divide
/// quad_n - 1 so every test point is a quadrature node.
double fredholm_residual_sup(const QuadraticKernel& k, const TrigSolution& g,
                             int npoints = 101, int quad_n = 4001);

}  // namespace lowzero
