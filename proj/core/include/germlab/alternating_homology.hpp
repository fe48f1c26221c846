#pragma once

#include <string>
#include <vector>

#include "germlab/simplicial_complex.hpp"

namespace germlab {

// Basis element of the alternating chains: the signed sum over one orbit of
// simplexes, normalized to coefficient +1 on its first simplex.
struct AltCell {
  std::vector<std::pair<std::size_t, int>> terms;  // (simplex index, sign)
  std::size_t representative() const { return terms.front().first; }
};

class AlternatingChainComplex {
 public:
  // Requires a simplicially good sigma action.
  explicit AlternatingChainComplex(const SimplicialGComplex& x);

  const SimplexIndex& index() const { return index_; }
  int dimension() const { return index_.dimension(); }
  std::size_t rank(int d) const { return d < 0 || d > dimension() ? 0 : cells_[static_cast<std::size_t>(d)].size(); }
  const std::vector<AltCell>& cells(int d) const { return cells_.at(static_cast<std::size_t>(d)); }
  std::vector<std::size_t> ranks() const;

  IntMatrix boundary(int d) const;
  // Matrix of a vertex permutation commuting with the sigma action.
  IntMatrix action_matrix(int d, const Permutation& g) const;
  // Cells supported on simplexes fixed pointwise by g.
  std::vector<std::size_t> fixed_cells(int d, const Permutation& g) const;

 private:
  struct Slot {
    long cell = -1;
    int sign = 0;
  };
  SimplexIndex index_;
  std::vector<std::vector<AltCell>> cells_;
  std::vector<std::vector<Slot>> slots_;  // per simplex
};

struct AltHomologyResult {
  std::vector<HomologyGroup> integral;  // AH_i with integer coefficients
  Coefficients field;
  std::vector<std::size_t> field_ranks;  // rank of AH_i over `field`
  std::vector<std::size_t> chain_ranks;  // rank of the alternating chain groups
  long long chi_top = 0;
  long long chi_alt = 0;
};

AltHomologyResult alternating_homology(const SimplicialGComplex& x,
                                       const Coefficients& field = Coefficients::rationals());
// Ranks of AH_i over a field only.
std::vector<std::size_t> alternating_betti(const SimplicialGComplex& x, const Coefficients& field);

struct FixedPointTerm {
  std::string cycle_type;  // e.g. "(2,1)"
  std::size_t elements = 0;
  long long signed_chi = 0;  // sum of sgn * chi_Top of the fixed sets
};

struct FixedPointFormula {
  std::vector<FixedPointTerm> terms;
  std::size_t group_order = 0;
  Integer value;
  std::string to_string() const;  // e.g. "(0+6+0)/6 = 1"
};

// (1/|G|) sum over G of sgn(sigma) chi_Top(X^sigma); throws NonIntegral if
// the average is not an integer. With `dimension` = d every term and the
// result are multiplied by (-1)^d, which gives the top alternating Betti
// number of a space whose alternating homology sits in degree d.
FixedPointFormula chi_alt_fixed_point_formula(const SimplicialGComplex& x, int dimension = 0);

}  // namespace germlab
