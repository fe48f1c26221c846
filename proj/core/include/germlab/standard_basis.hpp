#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "germlab/polynomial.hpp"

namespace germlab {

enum class OrderKind {
  Local,   // negative degree reverse lexicographic; 1 is the largest monomial
  Global,  // degree reverse lexicographic
};

struct MonomialOrder {
  OrderKind kind = OrderKind::Local;
  std::size_t nvars = 0;

  // True when a is strictly larger than b.
  bool greater(const Monomial& a, const Monomial& b) const;
};

struct Ideal {
  VarListPtr ring;
  std::vector<Polynomial> generators;
  bool local = true;

  Ideal() = default;
  Ideal(VarListPtr r, std::vector<Polynomial> gens, bool is_local = true);
};

struct StandardBasis {
  VarListPtr ring;
  MonomialOrder order;
  std::vector<Polynomial> elements;  // leading monomials pairwise non-dividing
  std::vector<Monomial> leading;     // parallel to `elements`

  bool contains_unit() const;
  // dim of the quotient by the leading ideal; nullopt when infinite.
  std::optional<std::uint64_t> colength() const;
  // Krull dimension of the quotient by the leading ideal, -1 for the unit ideal.
  int dimension() const;
  // Top-reduction of p; zero iff p lies in the ideal (locally, in local mode).
  Polynomial reduce(const Polynomial& p) const;
};

// Mora's tangent cone algorithm in local mode, falling back to Lazard
// homogenization when no highest corner turns up; Buchberger in global mode.
// Generators must not involve parameter variables.
StandardBasis standard_basis(const Ideal& ideal);
StandardBasis standard_basis(const Ideal& ideal, OrderKind order);

}  // namespace germlab
