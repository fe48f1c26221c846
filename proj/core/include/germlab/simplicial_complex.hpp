#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "germlab/integer_matrix.hpp"

namespace germlab {

using Simplex = std::vector<int>;       // strictly increasing vertex indices
using Permutation = std::vector<int>;   // image of 0..n-1

int permutation_sign(const Permutation& p);
Permutation compose(const Permutation& a, const Permutation& b);  // a after b
bool is_identity(const Permutation& p);

// A finite simplicial complex with a permutation action of a subgroup of
// Sigma_k and an optional commuting action of a cyclic group of prime order.
// Each sigma generator is a vertex permutation paired with the element of
// Sigma_k it represents; the pairing fixes the sign character.
struct SimplicialGComplex {
  std::vector<std::string> vertices;  // display labels
  std::vector<Simplex> facets;
  int k = 1;
  std::vector<Permutation> sigma_generators;  // on vertices
  std::vector<Permutation> sigma_elements;    // in Sigma_k
  std::optional<Permutation> g_action;
  std::uint32_t p = 0;

  std::size_t vertex_count() const { return vertices.size(); }
};

// Element of the group generated by the sigma action.
struct SigmaElement {
  Permutation vertices;
  Permutation sigma;
  int sign = 1;
};

// Image of an oriented simplex: sorted vertices and the orientation sign.
std::pair<Simplex, int> act(const Permutation& action, const Simplex& s);

// Face lattice of a complex, indexed by dimension.
class SimplexIndex {
 public:
  explicit SimplexIndex(const std::vector<Simplex>& facets);

  int dimension() const { return static_cast<int>(cells_.size()) - 1; }
  const std::vector<Simplex>& cells(int d) const { return cells_.at(static_cast<std::size_t>(d)); }
  std::size_t count(int d) const {
    return d < 0 || d > dimension() ? 0 : cells_[static_cast<std::size_t>(d)].size();
  }
  std::optional<std::size_t> find(const Simplex& s) const;
  bool contains(const Simplex& s) const { return find(s).has_value(); }

  // Boundary matrix C_d -> C_{d-1}; rows index (d-1)-cells.
  IntMatrix boundary(int d) const;

 private:
  std::vector<std::vector<Simplex>> cells_;
  std::vector<std::map<Simplex, std::size_t>> lookup_;
};

// Checks the input and enumerates the group generated by the sigma action.
// Throws InvalidAction when the generators do not define an action of a
// subgroup of Sigma_k on the complex.
std::vector<SigmaElement> sigma_group(const SimplicialGComplex& x);
// Powers g^0..g^{p-1} of the cyclic action; empty when there is none.
std::vector<Permutation> cyclic_group(const SimplicialGComplex& x);

void validate(const SimplicialGComplex& x);
// Every simplex mapped to itself by a group element is fixed pointwise.
bool is_simplicially_good(const SimplicialGComplex& x);
SimplicialGComplex barycentric_subdivision(const SimplicialGComplex& x);
// Subdivides (at most twice) until both actions are simplicially good.
SimplicialGComplex validate_or_subdivide(const SimplicialGComplex& x);

// Subcomplex of simplexes fixed by the vertex permutation.
std::vector<Simplex> fixed_simplices(const std::vector<Simplex>& facets, const Permutation& action);

struct Coefficients {
  enum class Kind { Integers, Rationals, Prime };
  Kind kind = Kind::Integers;
  std::uint32_t p = 0;

  static Coefficients integers() { return {}; }
  static Coefficients rationals() { return {Kind::Rationals, 0}; }
  static Coefficients prime(std::uint32_t p);
  std::string to_string() const;
};

struct HomologyGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, integral coefficients only
  std::string to_string() const;  // e.g. "Z^2 + Z/2"
};

std::size_t matrix_rank(const IntMatrix& m, const Coefficients& coeff);

// Homology of a chain complex given by its boundary matrices
// (boundaries[d] : C_d -> C_{d-1}, boundaries[0] may be empty).
std::vector<HomologyGroup> chain_homology(const std::vector<IntMatrix>& boundaries,
                                          const std::vector<std::size_t>& dims,
                                          const Coefficients& coeff);

std::vector<HomologyGroup> homology(const std::vector<Simplex>& facets, const Coefficients& coeff);
std::vector<HomologyGroup> homology(const SimplicialGComplex& x, const Coefficients& coeff);
long long euler_characteristic(const std::vector<Simplex>& facets);
std::vector<std::size_t> betti_numbers(const std::vector<HomologyGroup>& groups);

}  // namespace germlab
