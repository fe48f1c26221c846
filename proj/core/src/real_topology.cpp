#include "germlab/real_topology.hpp"

#include <algorithm>

#include "germlab/errors.hpp"
#include "germlab/linear_elimination.hpp"

namespace germlab {

Signature signature(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Signature sig;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && a[i][i] != 0) {
        pivot = i;
        break;
      }
    if (pivot == n) {
      // No usable diagonal entry: add row/column j to i where a[i][j] != 0.
      bool fixed = false;
      for (std::size_t i = 0; i < n && !fixed; ++i) {
        if (done[i]) continue;
        for (std::size_t j = 0; j < n && !fixed; ++j) {
          if (done[j] || j == i || a[i][j] == 0) continue;
          for (std::size_t c = 0; c < n; ++c) a[i][c] += a[j][c];
          for (std::size_t r = 0; r < n; ++r) a[r][i] += a[r][j];
          pivot = i;
          fixed = true;
        }
      }
      if (!fixed) break;
    }
    const Rational p = a[pivot][pivot];
    if (p > 0)
      ++sig.positive;
    else
      ++sig.negative;
    done[pivot] = true;
    for (std::size_t r = 0; r < n; ++r) {
      if (done[r] || a[r][pivot] == 0) continue;
      Rational factor = a[r][pivot] / p;
      for (std::size_t c = 0; c < n; ++c) a[r][c] -= factor * a[pivot][c];
    }
    for (std::size_t c = 0; c < n; ++c)
      if (!done[c]) a[pivot][c] = 0;
    for (std::size_t r = 0; r < n; ++r)
      if (!done[r]) a[r][pivot] = 0;
  }
  sig.zero = static_cast<int>(n) - sig.positive - sig.negative;
  return sig;
}

namespace {

using Univariate = std::vector<Rational>;

void trim(Univariate& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Univariate remainder(Univariate a, const Univariate& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational factor = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    trim(a);
  }
  return a;
}

int sign_at_infinity(const Univariate& p, bool negative) {
  int s = sgn(p.back());
  if (negative && (p.size() - 1) % 2) s = -s;
  return s;
}

}  // namespace

std::uint64_t count_real_roots(std::vector<Rational> p) {
  trim(p);
  if (p.empty()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has infinitely many roots");
  if (p.size() == 1) return 0;
  std::vector<Univariate> seq{p};
  Univariate d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  seq.push_back(d);
  for (;;) {
    Univariate r = remainder(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(r);
  }
  auto changes = [&](bool negative) {
    int count = 0, last = 0;
    for (const auto& q : seq) {
      int s = sign_at_infinity(q, negative);
      if (s != 0 && last != 0 && s != last) ++count;
      if (s != 0) last = s;
    }
    return count;
  };
  return static_cast<std::uint64_t>(changes(true) - changes(false));
}

long long RealSpace::chi() const {
  switch (kind) {
    case Kind::Empty: return 0;
    case Kind::Points: return static_cast<long long>(points);
    case Kind::Sphere: return dim % 2 ? 0 : 2;
    case Kind::Affine: return 1;
    case Kind::Inconclusive: break;
  }
  throw Error(ErrorCode::Precondition, "Euler characteristic of an undetermined space");
}

std::vector<std::uint64_t> RealSpace::betti() const {
  switch (kind) {
    case Kind::Empty: return {};
    case Kind::Points: return {points};
    case Kind::Affine: return {1};
    case Kind::Sphere: {
      if (dim == 0) return {2};
      std::vector<std::uint64_t> b(static_cast<std::size_t>(dim) + 1, 0);
      b.front() = 1;
      b.back() = 1;
      return b;
    }
    case Kind::Inconclusive: break;
  }
  throw Error(ErrorCode::Precondition, "Betti numbers of an undetermined space");
}

std::string RealSpace::describe() const {
  switch (kind) {
    case Kind::Empty: return "empty";
    case Kind::Points: return std::to_string(points) + (points == 1 ? " point" : " points");
    case Kind::Sphere: return "S^" + std::to_string(dim);
    case Kind::Affine: return "R^" + std::to_string(dim);
    case Kind::Inconclusive: return "inconclusive" + (detail.empty() ? "" : " (" + detail + ")");
  }
  return "?";
}

namespace {

RealSpace inconclusive(std::string why) {
  RealSpace r;
  r.detail = std::move(why);
  return r;
}

RealSpace classify_quadric(const Polynomial& g) {
  const std::size_t n = g.vars()->size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, 0));
  std::vector<Rational> b(n, 0);
  Rational c = 0;
  for (const auto& [m, coeff] : g.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      for (unsigned e = 0; e < m.exp[i]; ++e) idx.push_back(i);
    if (idx.empty()) {
      c = coeff;
    } else if (idx.size() == 1) {
      b[idx[0]] = coeff;
    } else if (idx[0] == idx[1]) {
      a[idx[0]][idx[0]] = coeff;
    } else {
      a[idx[0]][idx[1]] = coeff / 2;
      a[idx[1]][idx[0]] = coeff / 2;
    }
  }
  RealSpace r;
  r.form = signature(a);
  bool definite = r.form.zero == 0 && (r.form.positive == 0 || r.form.negative == 0);
  if (!definite) return inconclusive("indefinite or degenerate quadric");
  if (r.form.negative > 0) {
    for (auto& row : a)
      for (auto& v : row) v = -v;
    for (auto& v : b) v = -v;
    c = -c;
  }
  // Solve A u = b / 2; then g = (x + u)^T A (x + u) + c - u^T A u.
  std::vector<std::vector<Rational>> aug = a;
  for (std::size_t i = 0; i < n; ++i) aug[i].push_back(b[i] / 2);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (aug[piv][col] == 0) ++piv;
    std::swap(aug[piv], aug[col]);
    for (std::size_t r2 = 0; r2 < n; ++r2) {
      if (r2 == col || aug[r2][col] == 0) continue;
      Rational f = aug[r2][col] / aug[col][col];
      for (std::size_t k = col; k <= n; ++k) aug[r2][k] -= f * aug[col][k];
    }
  }
  Rational level = -c;
  for (std::size_t i = 0; i < n; ++i) level += (aug[i][n] / aug[i][i]) * (b[i] / 2);
  if (level > 0) {
    r.kind = RealSpace::Kind::Sphere;
    r.dim = static_cast<int>(n) - 1;
  } else if (level < 0) {
    r.kind = RealSpace::Kind::Empty;
  } else {
    r.kind = RealSpace::Kind::Points;
    r.points = 1;
  }
  return r;
}

}  // namespace

RealSpace classify_real(const std::vector<Polynomial>& generators) {
  std::vector<Polynomial> gens;
  for (const auto& g : generators)
    if (!g.is_zero()) gens.push_back(g);
  if (gens.empty()) return inconclusive("no equations");
  for (std::size_t v = 0; v < gens.front().vars()->size(); ++v)
    if ((*gens.front().vars())[v].is_parameter)
      for (const auto& g : gens)
        if (g.uses(v)) throw Error(ErrorCode::UnsubstitutedParameter, "parameters must be substituted");
  Elimination elim = eliminate_linear(gens);
  std::vector<std::size_t> live;
  for (std::size_t v = 0; v < elim.ring->size(); ++v)
    if (!(*elim.ring)[v].is_parameter) live.push_back(v);
  for (const auto& g : elim.generators)
    if (g.is_constant()) {
      RealSpace r;
      r.kind = RealSpace::Kind::Empty;
      return r;
    }
  if (elim.generators.empty()) {
    RealSpace r;
    r.dim = static_cast<int>(live.size());
    if (r.dim == 0) {
      r.kind = RealSpace::Kind::Points;
      r.points = 1;
    } else {
      r.kind = RealSpace::Kind::Affine;
    }
    return r;
  }
  if (elim.generators.size() > 1) return inconclusive("more than one equation after elimination");
  const Polynomial& g = elim.generators.front();
  if (live.size() == 1) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(g.total_degree()) + 1, 0);
    for (const auto& [m, c] : g.terms()) coeffs[m.exp[live[0]]] = c;
    RealSpace r;
    r.kind = RealSpace::Kind::Points;
    r.points = count_real_roots(coeffs);
    if (r.points == 0) r.kind = RealSpace::Kind::Empty;
    return r;
  }
  if (g.total_degree() != 2) return inconclusive("equation of degree " + std::to_string(g.total_degree()));
  Polynomial h = g;
  if (elim.ring->has_parameters()) {
    std::vector<Variable> vars;
    for (auto v : live) vars.push_back((*elim.ring)[v]);
    h = g.in_ring(make_var_list(std::move(vars)));
  }
  return classify_quadric(h);
}

}  // namespace germlab
