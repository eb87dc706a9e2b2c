#pragma once

#include <stdexcept>
#include <string>

namespace lowzero {

// Kernel has b = 0 or b + c = 0; the closed-form solution does not apply.
struct DegenerateKernel : std::invalid_argument {
  explicit DegenerateKernel(const std::string& what) : std::invalid_argument(what) {}
};

// The closed-form amplitude denominator vanishes: I + K is singular for this kernel.
struct SingularDenominator : std::runtime_error {
  explicit SingularDenominator(const std::string& what) : std::runtime_error(what) {}
};

// The dense Nystrom system could not be solved to tolerance.
struct SingularSystem : std::runtime_error {
  explicit SingularSystem(const std::string& what) : std::runtime_error(what) {}
};

// Requested a vanishing bound at a rank whose central-point coefficient is zero.
struct ZeroCoefficient : std::invalid_argument {
  explicit ZeroCoefficient(const std::string& what) : std::invalid_argument(what) {}
};

// Rank parity incompatible with the symmetry group.
struct ParityMismatch : std::invalid_argument {
  explicit ParityMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Bound combination that is not defined (e.g. one-level reference for U).
struct UnsupportedCombination : std::invalid_argument {
  explicit UnsupportedCombination(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace lowzero
