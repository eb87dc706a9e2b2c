#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "lowzero/fredholm.hpp"
#include "lowzero/grid_function.hpp"

namespace lowzero::testing {

// Random even trig polynomial a0 + sum a_j cos(2 pi j x) with |a0| bounded
// away from zero so <f, 1> = a0 never vanishes.
struct TrigPoly {
  std::vector<double> coeffs;  // coeffs[0] = a0
  double operator()(double x) const {
    double v = coeffs[0];
    for (std::size_t j = 1; j < coeffs.size(); ++j)
      v += coeffs[j] * std::cos(2.0 * M_PI * static_cast<double>(j) * x);
    return v;
  }
};

inline TrigPoly random_trig_poly(std::mt19937& rng, int degree = 4) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> away(0.25, 1.0);
  TrigPoly p;
  p.coeffs.resize(static_cast<std::size_t>(degree) + 1);
  p.coeffs[0] = away(rng) * (unit(rng) < 0 ? -1.0 : 1.0);
  for (int j = 1; j <= degree; ++j) p.coeffs[static_cast<std::size_t>(j)] = unit(rng);
  return p;
}

// Rayleigh-type quotient <(I+K)f, f> / <f, 1>^2 on the operator's grid.
inline double quadratic_quotient(const NystromOperator& op, const TrigPoly& f) {
  const int n = op.size();
  std::vector<double> fv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) fv[static_cast<std::size_t>(i)] = f(op.node(i));
  GridFunction fg(-0.5, 0.5, fv);
  const GridFunction kf = op.apply(fg);
  std::vector<double> prod(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    prod[static_cast<std::size_t>(i)] = fg[i] * (fg[i] + kf[i]);
  const double num = integrate_samples(prod, op.spacing());
  const double lin = integrate(fg);
  return num / (lin * lin);
}

}  // namespace lowzero::testing
