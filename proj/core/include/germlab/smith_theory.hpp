#pragma once

#include <cstdint>
#include <vector>

#include "germlab/alternating_homology.hpp"

namespace germlab {

struct InequalityLine {
  int N = 0;
  std::size_t lhs = 0;  // sum of ranks of X from degree N up
  std::size_t rhs = 0;  // same for the fixed set
  bool holds() const { return lhs >= rhs; }
};

struct InequalityLedger {
  std::uint32_t p = 0;
  std::vector<std::size_t> space;  // ranks for X
  std::vector<std::size_t> fixed;  // ranks for X^G
  std::vector<InequalityLine> lines;
  bool holds() const;
};

// Both use the cyclic action of prime order p stored in the complex and
// check the inequality for every N from 0 to dim X.
InequalityLedger verify_floyd(const SimplicialGComplex& x);
InequalityLedger verify_equivariant_smith(const SimplicialGComplex& x);

SimplicialGComplex fixed_subcomplex(const SimplicialGComplex& x);

struct SpecialDegree {
  int d = 0;
  std::size_t alt = 0;      // dim C^Alt_d(X)
  std::size_t fixed = 0;    // dim C^Alt_d(X^G)
  std::size_t rho = 0;      // dim C^{Alt,rho}_d
  std::size_t rho_bar = 0;  // dim C^{Alt,rho_bar}_d
  bool direct = false;      // rho_bar part meets the fixed part trivially
  bool kernel = false;      // rho kills rho_bar and fixed chains
  bool additive() const { return alt == fixed + rho + rho_bar; }
  bool exact() const { return direct && kernel && additive(); }
  std::size_t a = 0;        // dim AH^rho_d
  std::size_t a_bar = 0;    // dim AH^rho_bar_d
  std::size_t ah = 0;       // dim AH_d(X)
  std::size_t ah_fixed = 0; // dim AH_d(X^G)
  // dim AH_d(X^G) <= a_{d+1} - a_bar_d + dim AH_d(X) and the symmetric bound
  bool bounds = false;
};

struct SpecialRanks {
  std::uint32_t p = 0;
  unsigned i = 0;
  // Every G-stable sigma orbit of alternating cells is fixed simplexwise.
  bool orbit_hypothesis = true;
  std::vector<SpecialDegree> degrees;
  bool exact() const;
};

// Special chain complexes for rho = (1-g)^i and rho_bar = (1-g)^(p-i), 0 <= i <= p.
SpecialRanks smith_special_ranks(const SimplicialGComplex& x, unsigned i);

}  // namespace germlab
