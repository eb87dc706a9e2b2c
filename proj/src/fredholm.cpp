#include "lowzero/fredholm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lowzero/errors.hpp"

namespace lowzero {

double TrigSolution::operator()(double x) const {
  return amplitude * std::cos(frequency * x) + offset;
}

double TrigSolution::integral() const {
  return amplitude * (2.0 / frequency) * std::sin(frequency / 2.0) + offset;
}

TrigSolution solve_quadratic(const QuadraticKernel& k) {
  const double a = k.a, b = k.b, c = k.c;
  if (!(b > 0.0)) throw DegenerateKernel("solve_quadratic: requires b > 0");
  if (b + c == 0.0) throw DegenerateKernel("solve_quadratic: requires b + c != 0");
  const double half = std::sqrt(b / 2.0);  // omega / 2
  const double s = std::sin(half);
  const double cosh_ = std::cos(half);
  const double denom =
      6.0 * std::sqrt(b) * (b + c) * (b + c) * cosh_ +
      std::sqrt(2.0) *
          (6.0 * a * b * b + 3.0 * b * b * b + 3.0 * b * b * c + b * c * (c - 12.0) -
           6.0 * c * c) *
          s;
  if (std::abs(denom) <= 1e-12)
    throw SingularDenominator("solve_quadratic: amplitude denominator vanishes, I + K singular");
  const double amplitude = 6.0 * b * std::sqrt(b) * (b + c) / denom;
  const double offset = -6.0 * std::sqrt(2.0) * b * c * s / denom;
  return TrigSolution{amplitude, std::sqrt(2.0 * b), offset};
}

NystromOperator::NystromOperator(const GridFunction& kernel, int n) : n_(n) {
  if (n < 41 || n % 2 == 0)
    throw std::invalid_argument("NystromOperator: node count must be odd and >= 41");
  spacing_ = 1.0 / (n - 1);
  k_.resize(n, n);
  for (int i = 0; i < n; ++i) {
    // split the row integral at y = x_i
    std::vector<double> w(static_cast<std::size_t>(n), 0.0);
    const std::vector<double> left = composite_weights(i + 1, spacing_);
    const std::vector<double> right = composite_weights(n - i, spacing_);
    for (int j = 0; j <= i; ++j) w[static_cast<std::size_t>(j)] += left[static_cast<std::size_t>(j)];
    for (int j = i; j < n; ++j) w[static_cast<std::size_t>(j)] += right[static_cast<std::size_t>(j - i)];
    for (int j = 0; j < n; ++j)
      k_(i, j) = w[static_cast<std::size_t>(j)] * kernel.value_at((i - j) * spacing_);
  }
}

Eigen::VectorXd NystromOperator::apply(const Eigen::VectorXd& f) const {
  return k_ * f;
}

GridFunction NystromOperator::apply(const GridFunction& f) const {
  if (f.size() != n_)
    throw std::invalid_argument("NystromOperator::apply: grid size mismatch");
  Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(f.values().data(), n_);
  Eigen::VectorXd out = k_ * v;
  return GridFunction(kSolutionDomain.lo, kSolutionDomain.hi,
                      std::vector<double>(out.data(), out.data() + n_));
}

GridFunction NystromOperator::solve_identity_plus() {
  Eigen::MatrixXd system = Eigen::MatrixXd::Identity(n_, n_) + k_;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(system);
  rcond_ = lu.rcond();
  const Eigen::VectorXd rhs = Eigen::VectorXd::Ones(n_);
  const Eigen::VectorXd g = lu.solve(rhs);
  const double resid = (system * g - rhs).lpNorm<Eigen::Infinity>();
  if (!g.allFinite() || resid > 1e-8)
    throw SingularSystem("nystrom solve residual " + std::to_string(resid) +
                         " exceeds 1e-8; -1 may be in the spectrum at this resolution");
  return GridFunction(kSolutionDomain.lo, kSolutionDomain.hi,
                      std::vector<double>(g.data(), g.data() + n_));
}

double NystromOperator::residual_inf(const GridFunction& g) const {
  if (g.size() != n_)
    throw std::invalid_argument("NystromOperator::residual_inf: grid size mismatch");
  Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(g.values().data(), n_);
  Eigen::VectorXd r = v + k_ * v - Eigen::VectorXd::Ones(n_);
  return r.lpNorm<Eigen::Infinity>();
}

GridFunction nystrom_solve(const GridFunction& kernel, int n) {
  NystromOperator op(kernel, n);
  return op.solve_identity_plus();
}

double contraction_norm_sq(const GridFunction& kernel) {
  const double tol = 1e-9;
  const Interval dom = kernel.domain();
  if (std::abs(dom.lo - kTransformSupport.lo) > tol ||
      std::abs(dom.hi - kTransformSupport.hi) > tol)
    throw std::invalid_argument("contraction_norm_sq: kernel must live on [-1, 1]");
  std::vector<double> vals(static_cast<std::size_t>(kernel.size()));
  for (int i = 0; i < kernel.size(); ++i) {
    const double t = kernel.node(i);
    vals[static_cast<std::size_t>(i)] = kernel[i] * kernel[i] * (1.0 - std::abs(t));
  }
  return integrate_samples(vals, kernel.spacing());
}

NeumannResult neumann_iterate(const GridFunction& kernel, int n_max) {
  if (n_max < 1) throw std::invalid_argument("neumann_iterate: n_max must be >= 1");
  // aligned kernels (2N-1 nodes) make every lookup a node read; other odd
  // sizes fall back to interpolation on the next odd grid
  int n = (kernel.size() + 1) / 2;
  if (n % 2 == 0) ++n;
  n = std::max(n, 41);
  NystromOperator op(kernel, n);

  NeumannResult res;
  res.norm_sq = contraction_norm_sq(kernel);
  res.certified = res.norm_sq < 1.0;
  res.terms_alternating_nonneg = true;
  res.partial_sums.reserve(static_cast<std::size_t>(n_max) + 1);

  Eigen::VectorXd term = Eigen::VectorXd::Ones(n);
  std::vector<double> buf(term.data(), term.data() + n);
  double sum = integrate_samples(buf, op.spacing());
  res.partial_sums.push_back(sum);
  for (int j = 1; j <= n_max; ++j) {
    term = op.apply(term);
    std::copy(term.data(), term.data() + n, buf.begin());
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    const double scale = term.lpNorm<Eigen::Infinity>();
    if ((sign * term).minCoeff() < -1e-10 * std::max(1.0, scale))
      res.terms_alternating_nonneg = false;
    sum += sign * integrate_samples(buf, op.spacing());
    res.partial_sums.push_back(sum);
  }
  return res;
}

IteratedWeight build_iterated_weight(SymmetryGroup g, int grid_n) {
  const TrigSolution sol = solve_quadratic(quadratic_coefficients(g));
  const GridFunction gs =
      GridFunction::sample(kSolutionDomain.lo, kSolutionDomain.hi, grid_n,
                           [&](double x) { return sol(x); });
  GridFunction phi_hat = self_correlate(gs);
  const double phi0 = value_at_zero_from_transform(phi_hat);
  WeightDecomposition w = normalize(weight_kernel(g, phi_hat, phi0));
  return IteratedWeight{std::move(phi_hat), phi0, std::move(w)};
}

namespace {

// long double evaluation keeps the h^-3 difference quotients clear of
// double-precision cancellation noise
long double eval_ld(const TrigSolution& g, long double x) {
  return static_cast<long double>(g.amplitude) *
             std::cos(static_cast<long double>(g.frequency) * x) +
         static_cast<long double>(g.offset);
}

}  // namespace

OdeResidual ode_residual_sup(const QuadraticKernel& k, const TrigSolution& g,
                             int npoints, double step) {
  const long double h = step;
  const long double two_b = 2.0L * static_cast<long double>(k.b);
  const long double forcing = 2.0L * static_cast<long double>(k.c) *
                              static_cast<long double>(g.integral());
  const double lo = -0.5 + 2.0 * step, hi = 0.5 - 2.0 * step;
  OdeResidual worst{0.0, 0.0};
  for (int i = 0; i < npoints; ++i) {
    const long double x = lo + (hi - lo) * i / (npoints - 1);
    const long double fm2 = eval_ld(g, x - 2.0L * h), fm1 = eval_ld(g, x - h);
    const long double f0 = eval_ld(g, x);
    const long double fp1 = eval_ld(g, x + h), fp2 = eval_ld(g, x + 2.0L * h);
    const long double d2 = (fp1 - 2.0L * f0 + fm1) / (h * h);
    const long double d3 = (fp2 - 2.0L * fp1 + 2.0L * fm1 - fm2) / (2.0L * h * h * h);
    const long double d1 = (fp1 - fm1) / (2.0L * h);
    const double r2 = static_cast<double>(std::abs(d2 + two_b * f0 + forcing));
    const double r3 = static_cast<double>(std::abs(d3 + two_b * d1));
    worst.second_order = std::max(worst.second_order, r2);
    worst.third_order = std::max(worst.third_order, r3);
  }
  return worst;
}

double fredholm_residual_sup(const QuadraticKernel& k, const TrigSolution& g,
                             int npoints, int quad_n) {
  const double h = 1.0 / (quad_n - 1);
  std::vector<double> samples(static_cast<std::size_t>(quad_n));
  for (int i = 0; i < quad_n; ++i) samples[static_cast<std::size_t>(i)] = g(-0.5 + i * h);

  const int stride = (quad_n - 1) / (npoints - 1);
  if (stride * (npoints - 1) != quad_n - 1)
    throw std::invalid_argument(
        "fredholm_residual_sup: npoints - 1 must divide quad_n - 1");

  std::vector<double> prod(static_cast<std::size_t>(quad_n));
  double worst = 0.0;
  for (int p = 0; p < npoints; ++p) {
    const int split = p * stride;  // node index of x
    const double x = -0.5 + split * h;
    for (int j = 0; j < quad_n; ++j)
      prod[static_cast<std::size_t>(j)] =
          k(x - (-0.5 + j * h)) * samples[static_cast<std::size_t>(j)];
    const double left = integrate_samples(
        std::span<const double>(prod.data(), static_cast<std::size_t>(split + 1)), h);
    const double right = integrate_samples(
        std::span<const double>(prod.data() + split,
                                static_cast<std::size_t>(quad_n - split)),
        h);
    worst = std::max(worst, std::abs(g(x) + left + right - 1.0));
  }
  return worst;
}

}  // namespace lowzero
