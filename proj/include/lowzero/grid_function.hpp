#pragma once

#include <span>
#include <utility>
#include <vector>

namespace lowzero {

struct Interval {
  double lo;
  double hi;
};

/// Support of the Fourier transforms the optimization works with.
inline constexpr Interval kTransformSupport{-1.0, 1.0};
/// Domain of the square-integrable functions the Fredholm equation lives on.
inline constexpr Interval kSolutionDomain{-0.5, 0.5};

/// Real-valued function sampled at N uniform nodes of a closed interval,
/// endpoints included. N is odd and >= 3, so symmetric intervals always
/// carry a node at the midpoint (where |x|-type kinks live).
class GridFunction {
 public:
  GridFunction(double lo, double hi, std::vector<double> values);

  template <class F>
  static GridFunction sample(double lo, double hi, int n, F&& f) {
    std::vector<double> vals(static_cast<std::size_t>(n));
    const double h = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) vals[static_cast<std::size_t>(i)] = f(lo + i * h);
    // endpoint exact, no accumulated rounding
    if (n > 1) vals[static_cast<std::size_t>(n - 1)] = f(hi);
    return GridFunction(lo, hi, std::move(vals));
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  Interval domain() const { return {lo_, hi_}; }
  double spacing() const { return spacing_; }
  int size() const { return static_cast<int>(values_.size()); }
  double node(int i) const { return i == size() - 1 ? hi_ : lo_ + i * spacing_; }
  double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& values() const { return values_; }

  /// Linear interpolation between nodes; exact at nodes. Arguments may
  /// overshoot the interval by a relative 1e-9 (clamped), anything farther
  /// throws.
  double value_at(double x) const;

 private:
  double lo_;
  double hi_;
  double spacing_;
  std::vector<double> values_;
};

/// Quadrature weights for `count` uniform samples with spacing h.
/// Odd count: composite Simpson. Even count: Simpson on the leading
/// sub-grid plus an O(h^4) three-point rule for the final panel.
std::vector<double> composite_weights(int count, double spacing);

/// Integral of uniformly spaced samples by the composite rule above.
double integrate_samples(std::span<const double> values, double spacing);

/// Composite-Simpson integral over the whole interval.
double integrate(const GridFunction& f);

/// Running integral F with F(lo) = 0, F(x_i) = \int_lo^{x_i} f; same panel
/// rules as integrate(), so F(hi) reproduces integrate(f).
GridFunction cumulative(const GridFunction& f);

/// Correlation (g * g~)(x) = \int g(y) g(y - x) dy of a real sampled
/// function, evaluated on 2N-1 nodes spanning [-(hi-lo), hi-lo]. Output
/// nodes align with the input spacing, so every overlap endpoint is a
/// sample; each value is one composite quadrature over the overlap.
/// Real input makes the result even; negative shifts reuse the positive
/// ones (identical sample products).
GridFunction self_correlate(const GridFunction& g);

/// For f with transform supported in the domain of `fhat`, f(0) equals the
/// integral of fhat.
double value_at_zero_from_transform(const GridFunction& fhat);

}  // namespace lowzero
