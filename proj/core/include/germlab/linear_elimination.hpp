#pragma once

#include <string>
#include <utility>
#include <vector>

#include "germlab/polynomial.hpp"

namespace germlab {

struct Elimination {
  VarListPtr ring;                     // input ring minus the eliminated variables
  std::vector<Polynomial> generators;  // over `ring`, zero generators dropped
  // Applied in order; each value is over the input ring and never mentions
  // its own variable.
  std::vector<std::pair<std::string, Polynomial>> substitutions;

  std::size_t eliminated() const { return substitutions.size(); }
  // Applies the substitutions to a polynomial over the input ring.
  Polynomial reduce(const Polynomial& p) const;
};

// Repeatedly picks a generator in which some unprotected, non-parameter
// variable v occurs only in a single term c*v with c a nonzero rational,
// solves for v and substitutes it everywhere. Among eligible variables the
// last one in ring order is chosen.
Elimination eliminate_linear(const std::vector<Polynomial>& generators,
                             const std::vector<std::string>& protect = {});

}  // namespace germlab
