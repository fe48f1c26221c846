#include "germlab/simplicial_complex.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "germlab/errors.hpp"

namespace germlab {

int permutation_sign(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[static_cast<std::size_t>(b[i])];
  return r;
}

bool is_identity(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

std::pair<Simplex, int> act(const Permutation& action, const Simplex& s) {
  Simplex image(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) image[i] = action[static_cast<std::size_t>(s[i])];
  int sign = 1;
  for (std::size_t i = 1; i < image.size(); ++i)
    for (std::size_t j = i; j > 0 && image[j - 1] > image[j]; --j) {
      std::swap(image[j - 1], image[j]);
      sign = -sign;
    }
  return {image, sign};
}

SimplexIndex::SimplexIndex(const std::vector<Simplex>& facets) {
  for (const auto& f : facets) {
    if (f.empty()) continue;
    const std::size_t n = f.size();
    if (cells_.size() < n) {
      cells_.resize(n);
      lookup_.resize(n);
    }
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) face.push_back(f[i]);
      auto& table = lookup_[face.size() - 1];
      if (table.count(face)) continue;
      table.emplace(face, 0);
    }
  }
  for (std::size_t d = 0; d < lookup_.size(); ++d) {
    std::size_t i = 0;
    for (auto& [face, idx] : lookup_[d]) {
      idx = i++;
      cells_[d].push_back(face);
    }
  }
}

std::optional<std::size_t> SimplexIndex::find(const Simplex& s) const {
  if (s.empty() || s.size() > lookup_.size()) return std::nullopt;
  const auto& table = lookup_[s.size() - 1];
  auto it = table.find(s);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

IntMatrix SimplexIndex::boundary(int d) const {
  IntMatrix m(count(d - 1), count(d));
  if (d <= 0) return m;
  const auto& cells = cells_[static_cast<std::size_t>(d)];
  for (std::size_t j = 0; j < cells.size(); ++j) {
    const Simplex& s = cells[j];
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      m(*find(face), j) = (i % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

namespace {

bool is_permutation_of(const Permutation& p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : p) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

void check_simplicial(const SimplexIndex& index, const std::vector<Simplex>& facets,
                      const Permutation& action, const std::string& what) {
  for (const auto& f : facets)
    if (!index.contains(act(action, f).first))
      throw Error(ErrorCode::InvalidAction, what + " does not map simplexes to simplexes");
}

std::vector<Permutation> all_elements(const SimplicialGComplex& x) {
  std::vector<Permutation> out;
  for (const auto& e : sigma_group(x)) out.push_back(e.vertices);
  for (const auto& g : cyclic_group(x)) out.push_back(g);
  return out;
}

}  // namespace

void validate(const SimplicialGComplex& x) {
  const std::size_t n = x.vertex_count();
  for (const auto& f : x.facets) {
    if (f.empty()) throw Error(ErrorCode::InvalidArgument, "empty facet");
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] < 0 || static_cast<std::size_t>(f[i]) >= n)
        throw Error(ErrorCode::InvalidArgument, "facet vertex " + std::to_string(f[i]) + " out of range");
      if (i > 0 && f[i - 1] >= f[i])
        throw Error(ErrorCode::InvalidArgument, "facet vertices must be distinct and increasing");
    }
  }
  if (x.k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  if (x.sigma_elements.size() != x.sigma_generators.size())
    throw Error(ErrorCode::InvalidArgument, "each sigma generator needs its element of Sigma_k");
  SimplexIndex index(x.facets);
  for (std::size_t i = 0; i < x.sigma_generators.size(); ++i) {
    if (!is_permutation_of(x.sigma_generators[i], n))
      throw Error(ErrorCode::InvalidAction, "sigma generator " + std::to_string(i) + " is not a vertex permutation");
    if (!is_permutation_of(x.sigma_elements[i], static_cast<std::size_t>(x.k)))
      throw Error(ErrorCode::InvalidAction, "sigma element " + std::to_string(i) + " is not a permutation of k letters");
    check_simplicial(index, x.facets, x.sigma_generators[i], "sigma generator " + std::to_string(i));
  }
  if (x.g_action) {
    const Permutation& g = *x.g_action;
    if (!is_prime(x.p)) throw Error(ErrorCode::InvalidArgument, "g_action needs a prime order p");
    if (!is_permutation_of(g, n)) throw Error(ErrorCode::InvalidAction, "g_action is not a vertex permutation");
    Permutation power = g;
    for (std::uint32_t i = 1; i < x.p; ++i) power = compose(g, power);
    if (!is_identity(power)) throw Error(ErrorCode::InvalidAction, "g_action^p is not the identity");
    check_simplicial(index, x.facets, g, "g_action");
    for (const auto& s : x.sigma_generators)
      if (compose(g, s) != compose(s, g))
        throw Error(ErrorCode::InvalidAction, "g_action does not commute with the sigma action");
  }
}

std::vector<SigmaElement> sigma_group(const SimplicialGComplex& x) {
  const std::size_t n = x.vertex_count();
  Permutation id_v(n), id_s(static_cast<std::size_t>(x.k));
  std::iota(id_v.begin(), id_v.end(), 0);
  std::iota(id_s.begin(), id_s.end(), 0);
  std::map<Permutation, std::size_t> seen;
  std::vector<SigmaElement> group{{id_v, id_s, 1}};
  seen.emplace(id_s, 0);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    SigmaElement cur = group[queue.front()];
    queue.pop_front();
    for (std::size_t i = 0; i < x.sigma_generators.size(); ++i) {
      SigmaElement next;
      next.vertices = compose(x.sigma_generators[i], cur.vertices);
      next.sigma = compose(x.sigma_elements[i], cur.sigma);
      next.sign = permutation_sign(next.sigma);
      auto it = seen.find(next.sigma);
      if (it != seen.end()) {
        if (group[it->second].vertices != next.vertices)
          throw Error(ErrorCode::InvalidAction, "sigma generators do not define a group action");
        continue;
      }
      seen.emplace(next.sigma, group.size());
      queue.push_back(group.size());
      group.push_back(std::move(next));
    }
  }
  return group;
}

std::vector<Permutation> cyclic_group(const SimplicialGComplex& x) {
  std::vector<Permutation> out;
  if (!x.g_action) return out;
  Permutation cur(x.vertex_count());
  std::iota(cur.begin(), cur.end(), 0);
  for (std::uint32_t i = 0; i < x.p; ++i) {
    out.push_back(cur);
    cur = compose(*x.g_action, cur);
  }
  return out;
}

bool is_simplicially_good(const SimplicialGComplex& x) {
  SimplexIndex index(x.facets);
  std::vector<Permutation> elements = all_elements(x);
  for (int d = 1; d <= index.dimension(); ++d)
    for (const auto& s : index.cells(d))
      for (const auto& g : elements) {
        if (act(g, s).first != s) continue;
        for (int v : s)
          if (g[static_cast<std::size_t>(v)] != v) return false;
      }
  return true;
}

SimplicialGComplex barycentric_subdivision(const SimplicialGComplex& x) {
  SimplexIndex index(x.facets);
  std::map<Simplex, int> vertex_of;
  SimplicialGComplex out;
  out.k = x.k;
  out.p = x.p;
  out.sigma_elements = x.sigma_elements;
  std::vector<Simplex> cells;
  for (int d = 0; d <= index.dimension(); ++d)
    for (const auto& s : index.cells(d)) {
      vertex_of.emplace(s, static_cast<int>(cells.size()));
      cells.push_back(s);
      std::string label;
      if (d == 0) {
        label = x.vertices[static_cast<std::size_t>(s[0])];
      } else {
        label = "b(";
        for (std::size_t i = 0; i < s.size(); ++i)
          label += (i ? "," : "") + x.vertices[static_cast<std::size_t>(s[i])];
        label += ")";
      }
      out.vertices.push_back(label);
    }
  std::set<Simplex> facets;
  for (const auto& f : x.facets) {
    Simplex order = f;
    do {
      Simplex chain;
      Simplex prefix;
      for (int v : order) {
        prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
        chain.push_back(vertex_of.at(prefix));
      }
      std::sort(chain.begin(), chain.end());
      facets.insert(chain);
    } while (std::next_permutation(order.begin(), order.end()));
  }
  out.facets.assign(facets.begin(), facets.end());
  auto lift = [&](const Permutation& g) {
    Permutation r(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) r[i] = vertex_of.at(act(g, cells[i]).first);
    return r;
  };
  for (const auto& g : x.sigma_generators) out.sigma_generators.push_back(lift(g));
  if (x.g_action) out.g_action = lift(*x.g_action);
  return out;
}

SimplicialGComplex validate_or_subdivide(const SimplicialGComplex& x) {
  validate(x);
  SimplicialGComplex current = x;
  for (int round = 0; round < 2; ++round) {
    if (is_simplicially_good(current)) return current;
    current = barycentric_subdivision(current);
  }
  if (!is_simplicially_good(current))
    throw Error(ErrorCode::InvalidAction, "action is not simplicially good after two subdivisions");
  return current;
}

std::vector<Simplex> fixed_simplices(const std::vector<Simplex>& facets, const Permutation& action) {
  SimplexIndex index(facets);
  std::vector<Simplex> out;
  for (int d = 0; d <= index.dimension(); ++d)
    for (const auto& s : index.cells(d)) {
      bool fixed = true;
      for (int v : s)
        if (action[static_cast<std::size_t>(v)] != v) fixed = false;
      if (fixed) out.push_back(s);
    }
  return out;
}

Coefficients Coefficients::prime(std::uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  return {Kind::Prime, p};
}

std::string Coefficients::to_string() const {
  switch (kind) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::Prime: return "F" + std::to_string(p);
  }
  return "?";
}

std::string HomologyGroup::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (rank > 0) {
    os << "Z";
    if (rank > 1) os << "^" << rank;
    first = false;
  }
  for (const auto& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t.get_str();
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::size_t matrix_rank(const IntMatrix& m, const Coefficients& coeff) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  switch (coeff.kind) {
    case Coefficients::Kind::Integers: return smith_normal_form(m).rank;
    case Coefficients::Kind::Rationals: return rank_rational(m);
    case Coefficients::Kind::Prime: return rank_mod_p(m, coeff.p);
  }
  return 0;
}

std::vector<HomologyGroup> chain_homology(const std::vector<IntMatrix>& boundaries,
                                          const std::vector<std::size_t>& dims,
                                          const Coefficients& coeff) {
  const std::size_t top = dims.size();
  std::vector<std::size_t> ranks(top + 1, 0);
  std::vector<std::vector<Integer>> torsion(top + 1);
  for (std::size_t d = 1; d < top; ++d) {
    const IntMatrix& m = boundaries[d];
    if (m.rows() == 0 || m.cols() == 0) continue;
    if (coeff.kind == Coefficients::Kind::Integers) {
      SmithForm snf = smith_normal_form(m);
      ranks[d] = snf.rank;
      for (const auto& f : snf.invariant_factors)
        if (f > 1) torsion[d - 1].push_back(f);
    } else {
      ranks[d] = matrix_rank(m, coeff);
    }
  }
  std::vector<HomologyGroup> out(top);
  for (std::size_t d = 0; d < top; ++d) {
    out[d].rank = dims[d] - ranks[d] - ranks[d + 1];
    out[d].torsion = std::move(torsion[d]);
  }
  return out;
}

std::vector<HomologyGroup> homology(const std::vector<Simplex>& facets, const Coefficients& coeff) {
  SimplexIndex index(facets);
  std::vector<IntMatrix> boundaries;
  std::vector<std::size_t> dims;
  for (int d = 0; d <= index.dimension(); ++d) {
    boundaries.push_back(index.boundary(d));
    dims.push_back(index.count(d));
  }
  return chain_homology(boundaries, dims, coeff);
}

std::vector<HomologyGroup> homology(const SimplicialGComplex& x, const Coefficients& coeff) {
  return homology(x.facets, coeff);
}

long long euler_characteristic(const std::vector<Simplex>& facets) {
  SimplexIndex index(facets);
  long long chi = 0;
  for (int d = 0; d <= index.dimension(); ++d)
    chi += (d % 2 ? -1 : 1) * static_cast<long long>(index.count(d));
  return chi;
}

std::vector<std::size_t> betti_numbers(const std::vector<HomologyGroup>& groups) {
  std::vector<std::size_t> out;
  for (const auto& g : groups) out.push_back(g.rank);
  return out;
}

}  // namespace germlab
