#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace germlab::oracle {

bool RowSpace::insert(Row row) {
  while (!row.empty()) {
    auto lead = row.begin();
    auto it = pivots_.find(lead->first);
    if (it == pivots_.end()) {
      Rational inv = 1 / lead->second;
      for (auto& [col, c] : row) c *= inv;
      pivots_.emplace(lead->first, std::move(row));
      return true;
    }
    Rational factor = lead->second;
    for (const auto& [col, c] : it->second) {
      Rational& slot = row[col];
      slot -= factor * c;
      if (slot == 0) row.erase(col);
    }
  }
  return false;
}

std::size_t rank(const std::vector<std::vector<Rational>>& matrix) {
  RowSpace space;
  for (const auto& r : matrix) {
    RowSpace::Row row;
    for (std::size_t j = 0; j < r.size(); ++j)
      if (r[j] != 0) row[j] = r[j];
    space.insert(std::move(row));
  }
  return space.rank();
}

namespace {

void monomials_below(std::size_t n, unsigned N, std::vector<Monomial>& out) {
  Monomial cur;
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur.exp[i] = static_cast<std::uint16_t>(e);
      rec(i + 1, left - e);
    }
    cur.exp[i] = 0;
  };
  if (N == 0) return;
  rec(0, N - 1);
}

}  // namespace

std::uint64_t truncated_colength(const std::vector<Polynomial>& generators, unsigned N) {
  if (generators.empty()) throw std::invalid_argument("no generators");
  const std::size_t n = generators.front().vars()->size();
  std::vector<Monomial> basis;
  monomials_below(n, N, basis);
  std::map<Monomial, std::size_t> column;
  std::stable_sort(basis.begin(), basis.end(),
                   [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  for (std::size_t i = 0; i < basis.size(); ++i) column[basis[i]] = i;

  RowSpace space;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    for (const auto& m : basis) {
      RowSpace::Row row;
      for (const auto& [t, c] : g.terms()) {
        Monomial prod = m * t;
        if (prod.degree() >= N) continue;
        row[column.at(prod)] += c;
      }
      for (auto it = row.begin(); it != row.end();) it = it->second == 0 ? row.erase(it) : std::next(it);
      if (!row.empty()) space.insert(std::move(row));
    }
  }
  return basis.size() - space.rank();
}

std::optional<std::uint64_t> nakayama_colength(const std::vector<Polynomial>& generators,
                                               unsigned max_degree) {
  std::uint64_t previous = truncated_colength(generators, 1);
  for (unsigned N = 2; N <= max_degree; ++N) {
    std::uint64_t next = truncated_colength(generators, N);
    if (next == previous) return previous;
    previous = next;
  }
  return std::nullopt;
}

Polynomial complete_homogeneous(const VarListPtr& ring, const std::vector<std::size_t>& vars, unsigned m) {
  Polynomial out(ring);
  Monomial cur;
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == vars.size()) {
      cur.exp[vars[i]] = static_cast<std::uint16_t>(left);
      out.add_term(cur, 1);
      cur.exp[vars[i]] = 0;
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur.exp[vars[i]] = static_cast<std::uint16_t>(e);
      rec(i + 1, left - e);
    }
    cur.exp[vars[i]] = 0;
  };
  if (vars.empty()) return m == 0 ? Polynomial::constant(ring, 1) : out;
  rec(0, m);
  return out;
}

Polynomial vandermonde(const VarListPtr& ring, const std::vector<std::size_t>& vars) {
  Polynomial v = Polynomial::constant(ring, 1);
  for (std::size_t a = 0; a < vars.size(); ++a)
    for (std::size_t b = a + 1; b < vars.size(); ++b)
      v = v * (Polynomial::variable(ring, vars[b]) - Polynomial::variable(ring, vars[a]));
  return v;
}

Polynomial vandermonde_numerator(const Polynomial& f, std::size_t var,
                                 const std::vector<std::size_t>& vars) {
  const VarListPtr& ring = f.vars();
  const std::size_t m = vars.size();
  Polynomial det(ring);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::size_t> rest;
    for (std::size_t j = 0; j < m; ++j)
      if (j != i) rest.push_back(vars[j]);
    Polynomial term = f.substitute(var, Polynomial::variable(ring, vars[i])) * vandermonde(ring, rest);
    if ((i + m - 1) % 2) term = -term;
    det += term;
  }
  return det;
}

std::uint64_t brieskorn_pham(const std::vector<unsigned>& exponents) {
  std::uint64_t mu = 1;
  for (auto a : exponents) mu *= a - 1;
  return mu;
}

std::uint64_t factorial(unsigned n) {
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

namespace {

int parity_sign(const Permutation& p) {
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

Permutation after(const Permutation& a, const Permutation& b) {
  Permutation r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[static_cast<std::size_t>(b[i])];
  return r;
}

Permutation identity(std::size_t n) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
  return p;
}

using Matrix = std::vector<std::vector<Rational>>;

Matrix zeros(std::size_t r, std::size_t c) { return Matrix(r, std::vector<Rational>(c, Rational(0))); }

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (auto& v : a[r]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Columns spanning the kernel of a (rows x cols).
std::vector<std::vector<Rational>> kernel(Matrix a, std::size_t cols) {
  std::vector<std::vector<Rational>> out;
  if (a.empty()) {
    for (std::size_t j = 0; j < cols; ++j) {
      std::vector<Rational> e(cols, Rational(0));
      e[j] = 1;
      out.push_back(std::move(e));
    }
    return out;
  }
  auto pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

// Independent columns of a spanning set of vectors.
std::vector<std::vector<Rational>> column_basis(const std::vector<std::vector<Rational>>& vectors) {
  std::vector<std::vector<Rational>> out;
  RowSpace space;
  for (const auto& v : vectors) {
    RowSpace::Row row;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) row[j] = v[j];
    if (space.insert(std::move(row))) out.push_back(v);
  }
  return out;
}

// Trace of a linear map restricted to the invariant span of `basis`.
Rational restricted_trace(const Matrix& map, const std::vector<std::vector<Rational>>& basis) {
  if (basis.empty()) return 0;
  const std::size_t n = map.size(), r = basis.size();
  // Solve basis * C = map * basis through an augmented elimination.
  Matrix aug = zeros(n, r + r);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < n; ++i) aug[i][j] = basis[j][i];
    for (std::size_t i = 0; i < n; ++i) {
      Rational s = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (map[i][k] != 0 && basis[j][k] != 0) s += map[i][k] * basis[j][k];
      aug[i][r + j] = s;
    }
  }
  auto pivots = rref(aug);
  if (pivots.size() != r || pivots.back() >= r) throw std::logic_error("span is not invariant");
  Rational t = 0;
  for (std::size_t j = 0; j < r; ++j) t += aug[j][r + j];
  return t;
}

struct Faces {
  std::vector<std::vector<Simplex>> cells;
  std::vector<std::map<Simplex, std::size_t>> index;
};

Faces faces_of(const std::vector<Simplex>& facets) {
  std::set<Simplex> all;
  for (const auto& f : facets) {
    const std::size_t n = f.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1u) s.push_back(f[i]);
      all.insert(s);
    }
  }
  Faces out;
  for (const auto& s : all) {
    std::size_t d = s.size() - 1;
    if (out.cells.size() <= d) {
      out.cells.resize(d + 1);
      out.index.resize(d + 1);
    }
    out.index[d][s] = out.cells[d].size();
    out.cells[d].push_back(s);
  }
  return out;
}

Matrix boundary_matrix(const Faces& f, std::size_t d) {
  Matrix m = zeros(d == 0 ? 0 : f.cells[d - 1].size(), f.cells[d].size());
  if (d == 0) return m;
  for (std::size_t j = 0; j < f.cells[d].size(); ++j) {
    const Simplex& s = f.cells[d][j];
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<long>(i));
      m[f.index[d - 1].at(face)][j] += (i % 2 ? -1 : 1);
    }
  }
  return m;
}

Matrix action_on_chains(const Faces& f, std::size_t d, const Permutation& g) {
  const std::size_t n = f.cells[d].size();
  Matrix m = zeros(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Simplex image;
    for (int v : f.cells[d][j]) image.push_back(g[static_cast<std::size_t>(v)]);
    int sign = 1;
    for (std::size_t a = 0; a < image.size(); ++a)
      for (std::size_t b = a + 1; b < image.size(); ++b)
        if (image[a] > image[b]) sign = -sign;
    std::sort(image.begin(), image.end());
    m[f.index[d].at(image)][j] += sign;
  }
  return m;
}

std::vector<std::vector<Rational>> columns_of(const Matrix& m) {
  std::vector<std::vector<Rational>> cols;
  if (m.empty()) return cols;
  for (std::size_t j = 0; j < m[0].size(); ++j) {
    std::vector<Rational> c(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) c[i] = m[i][j];
    cols.push_back(std::move(c));
  }
  return cols;
}

}  // namespace

std::vector<GroupElement> generated_group(const SimplicialGComplex& x) {
  const std::size_t nv = x.vertex_count();
  const std::size_t k = static_cast<std::size_t>(x.k);
  std::vector<Permutation> sigmas = x.sigma_elements;
  if (sigmas.empty())
    for (std::size_t i = 0; i < x.sigma_generators.size(); ++i) {
      Permutation t = identity(k);
      std::swap(t[i], t[i + 1]);
      sigmas.push_back(t);
    }
  std::map<Permutation, Permutation> seen;  // sigma -> vertex permutation
  std::deque<std::pair<Permutation, Permutation>> queue;
  seen[identity(k)] = identity(nv);
  queue.emplace_back(identity(nv), identity(k));
  while (!queue.empty()) {
    auto [v, s] = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < x.sigma_generators.size(); ++g) {
      Permutation nv2 = after(x.sigma_generators[g], v);
      Permutation ns = after(sigmas[g], s);
      if (seen.count(ns)) continue;
      seen[ns] = nv2;
      queue.emplace_back(nv2, ns);
    }
  }
  std::vector<GroupElement> out;
  for (const auto& [s, v] : seen) out.push_back({v, parity_sign(s)});
  return out;
}

std::vector<std::size_t> alternating_isotype_ranks(const SimplicialGComplex& x) {
  Faces f = faces_of(x.facets);
  const std::size_t top = f.cells.size();
  auto group = generated_group(x);
  std::vector<std::size_t> ranks;
  for (std::size_t d = 0; d < top; ++d) {
    auto cycles = kernel(boundary_matrix(f, d), f.cells[d].size());
    std::vector<std::vector<Rational>> boundaries;
    if (d + 1 < top) boundaries = column_basis(columns_of(boundary_matrix(f, d + 1)));
    Rational sum = 0;
    for (const auto& g : group) {
      Matrix a = action_on_chains(f, d, g.vertices);
      sum += g.sign * (restricted_trace(a, cycles) - restricted_trace(a, boundaries));
    }
    Rational r = sum / static_cast<long>(group.size());
    if (r.get_den() != 1 || r < 0) throw std::logic_error("isotype dimension is not a natural number");
    ranks.push_back(static_cast<std::size_t>(r.get_num().get_ui()));
  }
  return ranks;
}

std::vector<std::size_t> rational_betti(const std::vector<Simplex>& facets) {
  Faces f = faces_of(facets);
  const std::size_t top = f.cells.size();
  std::vector<std::size_t> boundary_rank(top + 1, 0);
  for (std::size_t d = 1; d < top; ++d) boundary_rank[d] = rank(boundary_matrix(f, d));
  std::vector<std::size_t> betti;
  for (std::size_t d = 0; d < top; ++d) betti.push_back(f.cells[d].size() - boundary_rank[d] - boundary_rank[d + 1]);
  return betti;
}

Polynomial random_polynomial(std::mt19937_64& rng, const VarListPtr& ring,
                             const std::vector<std::size_t>& vars, int terms, unsigned max_degree) {
  std::uniform_int_distribution<int> coeff(-5, 4);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
  Polynomial out(ring);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    unsigned d = deg(rng);
    for (unsigned i = 0; i < d; ++i) ++m.exp[vars[pick(rng)]];
    int c = coeff(rng);
    out.add_term(m, c >= 0 ? c + 1 : c);
  }
  return out;
}

SimplicialGComplex random_block_complex(std::mt19937_64& rng, int k, int m, std::uint32_t p,
                                        int facets, int max_dim) {
  const int nv = k * m;
  SimplicialGComplex x;
  for (int b = 0; b < k; ++b)
    for (int j = 0; j < m; ++j) x.vertices.push_back(std::to_string(b) + "." + std::to_string(j));
  x.k = k;
  for (int b = 0; b + 1 < k; ++b) {
    Permutation v = identity(static_cast<std::size_t>(nv));
    for (int j = 0; j < m; ++j) std::swap(v[static_cast<std::size_t>(b * m + j)], v[static_cast<std::size_t>((b + 1) * m + j)]);
    Permutation s = identity(static_cast<std::size_t>(k));
    std::swap(s[static_cast<std::size_t>(b)], s[static_cast<std::size_t>(b + 1)]);
    x.sigma_generators.push_back(v);
    x.sigma_elements.push_back(s);
  }
  std::vector<Permutation> moves = x.sigma_generators;
  if (p > 0) {
    if (static_cast<std::uint32_t>(m) < p) throw std::invalid_argument("block too small for the rotation");
    Permutation g = identity(static_cast<std::size_t>(nv));
    for (int b = 0; b < k; ++b)
      for (int j = 0; j < static_cast<int>(p); ++j) g[static_cast<std::size_t>(b * m + j)] = b * m + (j + 1) % static_cast<int>(p);
    x.g_action = g;
    x.p = p;
    moves.push_back(g);
  }

  std::uniform_int_distribution<int> dim_dist(0, max_dim);
  std::set<Simplex> closed;
  std::vector<int> pool(static_cast<std::size_t>(nv));
  for (int i = 0; i < nv; ++i) pool[static_cast<std::size_t>(i)] = i;
  for (int t = 0; t < facets; ++t) {
    int d = std::min(dim_dist(rng), nv - 1);
    std::shuffle(pool.begin(), pool.end(), rng);
    Simplex s(pool.begin(), pool.begin() + d + 1);
    std::sort(s.begin(), s.end());
    std::deque<Simplex> queue{s};
    while (!queue.empty()) {
      Simplex cur = queue.front();
      queue.pop_front();
      if (!closed.insert(cur).second) continue;
      for (const auto& mv : moves) {
        Simplex img;
        for (int v : cur) img.push_back(mv[static_cast<std::size_t>(v)]);
        std::sort(img.begin(), img.end());
        queue.push_back(img);
      }
    }
  }
  for (const auto& s : closed) {
    bool maximal = true;
    for (const auto& o : closed)
      if (o.size() > s.size() && std::includes(o.begin(), o.end(), s.begin(), s.end())) {
        maximal = false;
        break;
      }
    if (maximal) x.facets.push_back(s);
  }
  return x;
}

SimplicialGComplex random_good_complex(std::mt19937_64& rng, std::size_t max_simplices) {
  std::uniform_int_distribution<int> k_dist(1, 3), p_dist(2, 3), facet_dist(1, 4), extra_dist(0, 1);
  std::discrete_distribution<int> dim_dist({1, 3, 3});
  const int k = k_dist(rng);
  const auto p = static_cast<std::uint32_t>(p_dist(rng));
  const int m = static_cast<int>(p) + extra_dist(rng);
  int facets = facet_dist(rng);
  int dim = dim_dist(rng);
  // Shrink the facet count, then the dimension, until the subdivision fits.
  while (true) {
    SimplicialGComplex x = validate_or_subdivide(random_block_complex(rng, k, m, p, facets, dim));
    SimplexIndex index(x.facets);
    std::size_t total = 0;
    for (int d = 0; d <= index.dimension(); ++d) total += index.count(d);
    if (total <= max_simplices) return x;
    if (facets > 1) {
      --facets;
    } else if (dim > 0) {
      --dim;
    }
  }
}

}  // namespace germlab::oracle
