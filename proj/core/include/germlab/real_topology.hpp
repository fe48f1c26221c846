#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "germlab/polynomial.hpp"

namespace germlab {

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

// Inertia of a symmetric rational matrix by symmetric Gaussian elimination.
Signature signature(std::vector<std::vector<Rational>> matrix);

// Number of distinct real roots; coefficients are listed from degree 0 up.
std::uint64_t count_real_roots(std::vector<Rational> coefficients);

// Real zero set of a polynomial system, when it can be determined exactly.
struct RealSpace {
  enum class Kind { Empty, Points, Sphere, Affine, Inconclusive };
  Kind kind = Kind::Inconclusive;
  int dim = 0;               // sphere or affine space dimension
  std::uint64_t points = 0;  // Points only
  Signature form;            // quadric case
  std::string detail;

  bool known() const { return kind != Kind::Inconclusive; }
  long long chi() const;  // Euler characteristic; requires known()
  std::vector<std::uint64_t> betti() const;  // requires known()
  std::string describe() const;
};

// Classifies the real solutions of `generators` after linear elimination:
// a single quadric (sphere, empty, point), a single univariate polynomial
// (Sturm count) or no equations at all (affine space).
RealSpace classify_real(const std::vector<Polynomial>& generators);

}  // namespace germlab
