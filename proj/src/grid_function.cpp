#include "lowzero/grid_function.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace lowzero {

GridFunction::GridFunction(double lo, double hi, std::vector<double> values)
    : lo_(lo), hi_(hi), values_(std::move(values)) {
  const int n = static_cast<int>(values_.size());
  if (!(hi > lo)) throw std::invalid_argument("GridFunction: hi must exceed lo");
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("GridFunction: node count must be odd and >= 3, got " +
                                std::to_string(n));
  for (double v : values_)
    if (!std::isfinite(v)) throw std::invalid_argument("GridFunction: non-finite sample");
  spacing_ = (hi - lo) / (n - 1);
}

double GridFunction::value_at(double x) const {
  const double tol = 1e-9 * (hi_ - lo_);
  if (x < lo_ - tol || x > hi_ + tol)
    throw std::out_of_range("GridFunction::value_at: argument outside the interval");
  if (x <= lo_) return values_.front();
  if (x >= hi_) return values_.back();
  const double u = (x - lo_) / spacing_;
  auto i = static_cast<std::size_t>(u);
  if (i >= values_.size() - 1) i = values_.size() - 2;
  const double frac = u - static_cast<double>(i);
  return values_[i] + frac * (values_[i + 1] - values_[i]);
}

std::vector<double> composite_weights(int count, double spacing) {
  std::vector<double> w(static_cast<std::size_t>(count > 0 ? count : 0), 0.0);
  if (count < 2) return w;
  const double h = spacing;
  if (count == 2) {
    w[0] = w[1] = h / 2.0;
    return w;
  }
  const int simpson_count = (count % 2 == 1) ? count : count - 1;
  w[0] += h / 3.0;
  w[static_cast<std::size_t>(simpson_count - 1)] += h / 3.0;
  for (int i = 1; i < simpson_count - 1; ++i)
    w[static_cast<std::size_t>(i)] += (i % 2 == 1 ? 4.0 : 2.0) * h / 3.0;
  if (count % 2 == 0) {
    // final panel: integral of the quadratic through the last three samples
    w[static_cast<std::size_t>(count - 3)] += -h / 12.0;
    w[static_cast<std::size_t>(count - 2)] += 8.0 * h / 12.0;
    w[static_cast<std::size_t>(count - 1)] += 5.0 * h / 12.0;
  }
  return w;
}

double integrate_samples(std::span<const double> values, double spacing) {
  const int n = static_cast<int>(values.size());
  if (n < 2) return 0.0;
  const double h = spacing;
  if (n == 2) return h * (values[0] + values[1]) / 2.0;
  const int simpson_count = (n % 2 == 1) ? n : n - 1;
  double odd = 0.0, even = 0.0;
  for (int i = 1; i < simpson_count - 1; i += 2) odd += values[static_cast<std::size_t>(i)];
  for (int i = 2; i < simpson_count - 1; i += 2) even += values[static_cast<std::size_t>(i)];
  double total = h / 3.0 *
                 (values[0] + values[static_cast<std::size_t>(simpson_count - 1)] +
                  4.0 * odd + 2.0 * even);
  if (n % 2 == 0)
    total += h / 12.0 *
             (-values[static_cast<std::size_t>(n - 3)] +
              8.0 * values[static_cast<std::size_t>(n - 2)] +
              5.0 * values[static_cast<std::size_t>(n - 1)]);
  return total;
}

double integrate(const GridFunction& f) {
  return integrate_samples(f.values(), f.spacing());
}

GridFunction cumulative(const GridFunction& f) {
  const int n = f.size();
  const double h = f.spacing();
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  // Simpson panel [x_{2k}, x_{2k+2}], with the quadratic's half-panel
  // integral supplying the odd node in between.
  for (int k = 0; k + 2 < n; k += 2) {
    const double f0 = f[k], f1 = f[k + 1], f2 = f[k + 2];
    out[static_cast<std::size_t>(k + 1)] =
        out[static_cast<std::size_t>(k)] + h * (5.0 * f0 + 8.0 * f1 - f2) / 12.0;
    out[static_cast<std::size_t>(k + 2)] =
        out[static_cast<std::size_t>(k)] + h * (f0 + 4.0 * f1 + f2) / 3.0;
  }
  return GridFunction(f.lo(), f.hi(), std::move(out));
}

GridFunction self_correlate(const GridFunction& g) {
  const int n = g.size();
  const double h = g.spacing();
  const double width = g.hi() - g.lo();
  const int m = 2 * n - 1;
  std::vector<double> out(static_cast<std::size_t>(m), 0.0);
  std::vector<double> prod(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const int cnt = n - k;
    double val = 0.0;
    if (cnt >= 2) {
      for (int i = 0; i < cnt; ++i) prod[static_cast<std::size_t>(i)] = g[i + k] * g[i];
      val = integrate_samples(std::span<const double>(prod.data(),
                                                      static_cast<std::size_t>(cnt)),
                              h);
    }
    out[static_cast<std::size_t>(n - 1 + k)] = val;
    out[static_cast<std::size_t>(n - 1 - k)] = val;
  }
  return GridFunction(-width, width, std::move(out));
}

double value_at_zero_from_transform(const GridFunction& fhat) {
  return integrate(fhat);
}

}  // namespace lowzero
