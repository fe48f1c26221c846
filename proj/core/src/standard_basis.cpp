#include "germlab/standard_basis.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <optional>
#include <set>

#include "germlab/errors.hpp"

namespace germlab {

bool MonomialOrder::greater(const Monomial& a, const Monomial& b) const {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return kind == OrderKind::Local ? da < db : da > db;
  for (std::size_t i = nvars; i-- > 0;)
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i];
  return false;
}

Ideal::Ideal(VarListPtr r, std::vector<Polynomial> gens, bool is_local)
    : ring(std::move(r)), generators(std::move(gens)), local(is_local) {}

namespace {

struct Term {
  Monomial m;
  unsigned deg;
  Rational c;
};

using SPoly = std::vector<Term>;  // sorted, leading term first

struct BudgetExceeded {};

// Term operations Mora may spend before a highest corner is known.
constexpr std::uint64_t kMoraBudget = 500000;
constexpr std::uint64_t kStaircaseLimit = 200000;

class Engine {
 public:
  explicit Engine(MonomialOrder order) : ord_(order) {}

  // Global order on K[x, t] with t as the last variable: degree, then the
  // power of t, then reverse lexicographic on x.
  static Engine homogenized(std::size_t nvars) {
    Engine e(MonomialOrder{OrderKind::Global, nvars + 1});
    e.homogenized_ = true;
    return e;
  }

  // Normal forms throw BudgetExceeded once this much work is spent without a
  // highest corner.
  void set_budget(std::uint64_t work) { budget_ = work; }

  bool greater(const Term& a, const Term& b) const {
    if (a.deg != b.deg) return ord_.kind == OrderKind::Local ? a.deg < b.deg : a.deg > b.deg;
    std::size_t top = ord_.nvars;
    if (homogenized_) {
      --top;
      if (a.m.exp[top] != b.m.exp[top]) return a.m.exp[top] > b.m.exp[top];
    }
    for (std::size_t i = top; i-- > 0;)
      if (a.m.exp[i] != b.m.exp[i]) return a.m.exp[i] < b.m.exp[i];
    return false;
  }

  SPoly from(const Polynomial& p) const {
    SPoly s;
    for (const auto& [m, c] : p.terms()) s.push_back({m, m.degree(), c});
    std::sort(s.begin(), s.end(), [this](const Term& a, const Term& b) { return greater(a, b); });
    truncate(s);
    make_monic(s);
    return s;
  }

  Polynomial to(const SPoly& s, const VarListPtr& ring) const {
    Polynomial p(ring);
    for (const auto& t : s) p.add_term(t.m, t.c);
    return p;
  }

  static void make_monic(SPoly& s) {
    if (s.empty() || s.front().c == 1) return;
    Rational inv = 1 / s.front().c;
    for (auto& t : s) t.c *= inv;
  }

  unsigned ecart(const SPoly& s) const {
    if (ord_.kind == OrderKind::Global) return 0;
    unsigned top = 0;
    for (const auto& t : s) top = std::max(top, t.deg);
    return top - s.front().deg;
  }

  // Degree in the original variables; the cutoff applies to this degree.
  unsigned xdeg(const Term& t) const { return homogenized_ ? t.deg - t.m.exp[ord_.nvars - 1] : t.deg; }
  std::size_t xvars() const { return homogenized_ ? ord_.nvars - 1 : ord_.nvars; }

  void truncate(SPoly& s) const {
    if (cutoff_ == UINT_MAX) return;
    s.erase(std::remove_if(s.begin(), s.end(), [this](const Term& t) { return xdeg(t) >= cutoff_; }),
            s.end());
  }

  // Basis elements keep their leading term even past the cutoff.
  void truncate_tail(SPoly& s) const {
    if (cutoff_ == UINT_MAX || s.empty()) return;
    s.erase(std::remove_if(s.begin() + 1, s.end(), [this](const Term& t) { return xdeg(t) >= cutoff_; }),
            s.end());
  }

  // h - (lc(h)/lc(g)) * (LM(h)/LM(g)) * g, with g monic.
  SPoly reduce_by(const SPoly& h, const SPoly& g) const {
    Monomial shift = h.front().m / g.front().m;
    unsigned sdeg = shift.degree();
    Rational factor = h.front().c;
    SPoly out;
    out.reserve(h.size() + g.size());
    std::size_t i = 1, j = 1;
    while (i < h.size() || j < g.size()) {
      if (j < g.size()) {
        Term t{g[j].m * shift, g[j].deg + sdeg, 0};
        if (cutoff_ != UINT_MAX && xdeg(t) >= cutoff_) {
          ++j;
          continue;
        }
        if (i < h.size() && greater(h[i], t)) {
          out.push_back(h[i++]);
          continue;
        }
        t.c = -factor * g[j].c;
        ++j;
        if (i < h.size() && h[i].m == t.m) {
          t.c += h[i++].c;
          if (t.c == 0) continue;
        }
        out.push_back(std::move(t));
      } else {
        out.push_back(h[i++]);
      }
    }
    return out;
  }

  SPoly spoly(const SPoly& a, const SPoly& b) const {
    Monomial l = Monomial::lcm(a.front().m, b.front().m);
    SPoly sa = multiply(a, l / a.front().m);
    SPoly sb = multiply(b, l / b.front().m);
    return reduce_by(sa, sb);
  }

  SPoly multiply(const SPoly& a, const Monomial& m) const {
    SPoly out;
    unsigned d = m.degree();
    for (const auto& t : a) {
      Term product{t.m * m, t.deg + d, t.c};
      if (cutoff_ != UINT_MAX && xdeg(product) >= cutoff_) continue;
      out.push_back(std::move(product));
    }
    return out;
  }

  // Mora's normal form against `basis`; returns a polynomial whose leading
  // monomial is not divisible by any leading monomial of the basis, or zero.
  SPoly normal_form(SPoly h, const std::vector<SPoly>& basis) const {
    std::vector<SPoly> extra;
    while (!h.empty()) {
      const SPoly* best = nullptr;
      unsigned best_ecart = UINT_MAX;
      auto consider = [&](const SPoly& g) {
        if (g.empty() || !g.front().m.divides(h.front().m)) return;
        unsigned e = ecart(g);
        if (e < best_ecart) {
          best = &g;
          best_ecart = e;
        }
      };
      for (const auto& g : basis) consider(g);
      for (const auto& g : extra) consider(g);
      if (!best) break;
      SPoly next;
      if (ord_.kind == OrderKind::Local && best_ecart > ecart(h)) {
        extra.push_back(h);
        make_monic(extra.back());
        // `best` may point into `extra`, which just reallocated.
        best = nullptr;
        best_ecart = UINT_MAX;
        for (const auto& g : basis) consider(g);
        for (std::size_t k = 0; k + 1 < extra.size(); ++k) consider(extra[k]);
      }
      if (cutoff_ == UINT_MAX) {
        const Rational& f = h.front().c;
        std::size_t limbs = mpz_size(f.get_num_mpz_t()) + mpz_size(f.get_den_mpz_t());
        steps_ += (h.size() + best->size()) * limbs;
        if (steps_ > budget_) throw BudgetExceeded{};
      }
      next = reduce_by(h, *best);
      h = std::move(next);
    }
    make_monic(h);
    return h;
  }

  // Once every variable has a pure power among the leading monomials, all
  // monomials of degree >= cutoff lie in the ideal and may be discarded.
  bool update_cutoff(const std::vector<SPoly>& basis) {
    if (ord_.kind != OrderKind::Local && !homogenized_) return false;
    const std::size_t n = xvars();
    std::vector<unsigned> pure(n, UINT_MAX);
    for (const auto& g : basis) {
      if (g.empty()) continue;
      const Monomial& m = g.front().m;
      std::size_t support = 0, var = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (m.exp[i]) {
          ++support;
          var = i;
        }
      if (support == 1) pure[var] = std::min<unsigned>(pure[var], m.exp[var]);
      if (support == 0) {
        pure.assign(n, 0);
        break;
      }
    }
    unsigned bound = 1;
    for (auto a : pure) {
      if (a == UINT_MAX) return false;
      if (a > 0) bound += a - 1;
    }
    if (auto corner = staircase_top(basis, pure)) bound = std::min(bound, *corner + 1);
    if (bound >= cutoff_) return false;
    cutoff_ = bound;
    return true;
  }

  // Largest degree of a monomial outside the leading ideal; nullopt when the
  // staircase is too large to walk.
  std::optional<unsigned> staircase_top(const std::vector<SPoly>& basis,
                                        const std::vector<unsigned>& pure) const {
    const std::size_t n = xvars();
    std::vector<Monomial> leads;
    for (const auto& g : basis) {
      if (g.empty()) continue;
      leads.push_back(g.front().m);
      if (homogenized_) leads.back().exp[n] = 0;
    }
    std::uint64_t visited = 0;
    unsigned top = 0;
    bool aborted = false;
    Monomial cur;
    std::function<void(std::size_t, unsigned)> walk = [&](std::size_t i, unsigned deg) {
      if (aborted) return;
      if (i == n) {
        top = std::max(top, deg);
        return;
      }
      for (unsigned e = 0; e < pure[i]; ++e) {
        if (++visited > kStaircaseLimit) {
          aborted = true;
          break;
        }
        cur.exp[i] = static_cast<std::uint16_t>(e);
        bool inside = false;
        for (const Monomial& m : leads) {
          bool prefix_only = true;
          for (std::size_t k = i + 1; k < n; ++k)
            if (m.exp[k]) {
              prefix_only = false;
              break;
            }
          if (prefix_only && m.divides(cur)) {
            inside = true;
            break;
          }
        }
        if (inside) break;
        walk(i + 1, deg + e);
      }
      cur.exp[i] = 0;
    };
    walk(0, 0);
    if (aborted) return std::nullopt;
    return top;
  }

  std::vector<SPoly> compute(std::vector<SPoly> gens) {
    std::vector<SPoly> basis;
    struct Pair {
      std::size_t i, j;
      unsigned deg;
    };
    std::vector<Pair> pairs;
    std::set<std::pair<std::size_t, std::size_t>> pending;

    auto add = [&](SPoly g) {
      std::size_t idx = basis.size();
      for (std::size_t i = 0; i < idx; ++i) {
        if (basis[i].empty()) continue;
        Monomial l = Monomial::lcm(basis[i].front().m, g.front().m);
        if (ord_.kind == OrderKind::Global && Monomial::coprime(basis[i].front().m, g.front().m))
          continue;
        pairs.push_back({i, idx, l.degree()});
        pending.insert({i, idx});
      }
      basis.push_back(std::move(g));
      if (update_cutoff(basis)) {
        for (auto& b : basis) truncate_tail(b);
      }
    };

    std::sort(gens.begin(), gens.end(), [](const SPoly& a, const SPoly& b) {
      return a.empty() ? false : b.empty() ? true : a.front().deg < b.front().deg;
    });
    for (auto& g : gens) {
      truncate(g);
      SPoly h = normal_form(std::move(g), basis);
      if (!h.empty()) {
        bool unit = xdeg(h.front()) == 0;
        add(std::move(h));
        if (unit) return finish(basis);
      }
    }

    while (!pairs.empty()) {
      auto it = std::min_element(pairs.begin(), pairs.end(),
                                 [](const Pair& a, const Pair& b) { return a.deg < b.deg; });
      Pair pr = *it;
      pairs.erase(it);
      pending.erase({pr.i, pr.j});
      const SPoly& a = basis[pr.i];
      const SPoly& b = basis[pr.j];
      if (a.empty() || b.empty()) continue;
      Monomial l = Monomial::lcm(a.front().m, b.front().m);
      if (cutoff_ != UINT_MAX && xdeg({l, l.degree(), 0}) >= cutoff_) continue;
      if (chain_criterion(basis, pending, pr.i, pr.j, l)) continue;
      SPoly s = spoly(a, b);
      SPoly h = normal_form(std::move(s), basis);
      if (!h.empty()) {
        bool unit = xdeg(h.front()) == 0;
        add(std::move(h));
        if (unit) return finish(basis);
      }
    }
    return finish(basis);
  }

  std::vector<SPoly> finish(std::vector<SPoly>& basis) const {
    std::vector<SPoly> out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].empty()) continue;
      bool redundant = false;
      for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
        if (i == j || basis[j].empty()) continue;
        const Monomial& mi = basis[i].front().m;
        const Monomial& mj = basis[j].front().m;
        if (mj.divides(mi) && (mj != mi || j < i)) redundant = true;
      }
      if (!redundant) out.push_back(basis[i]);
    }
    return out;
  }

 private:
  static bool chain_criterion(const std::vector<SPoly>& basis,
                              const std::set<std::pair<std::size_t, std::size_t>>& pending,
                              std::size_t i, std::size_t j, const Monomial& l) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == i || k == j || basis[k].empty()) continue;
      if (!basis[k].front().m.divides(l)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (pending.count(key(i, k)) || pending.count(key(j, k))) continue;
      return true;
    }
    return false;
  }

  MonomialOrder ord_;
  unsigned cutoff_ = UINT_MAX;
  bool homogenized_ = false;
  mutable std::uint64_t steps_ = 0;
  std::uint64_t budget_ = UINT64_MAX;
};

void check_ring(const Ideal& ideal) {
  for (const auto& g : ideal.generators) {
    if (!(*g.vars() == *ideal.ring))
      throw Error(ErrorCode::InvalidArgument, "generator not over the ideal's ring");
    for (std::size_t v = 0; v < ideal.ring->size(); ++v)
      if ((*ideal.ring)[v].is_parameter && g.uses(v))
        throw Error(ErrorCode::UnsubstitutedParameter,
                    "parameter '" + (*ideal.ring)[v].name + "' must be substituted first");
  }
}

// Lazard: a standard basis for a local degree order is the dehomogenized
// Groebner basis of the homogenized ideal.
std::vector<Polynomial> homogenized_basis(const Ideal& ideal) {
  const std::size_t n = ideal.ring->size();
  if (n + 1 > kMaxVariables) throw Error(ErrorCode::InvalidArgument, "too many variables to homogenize");
  Engine engine = Engine::homogenized(n);
  std::vector<SPoly> gens;
  for (const auto& g : ideal.generators) {
    if (g.is_zero()) continue;
    unsigned top = static_cast<unsigned>(g.total_degree());
    SPoly s;
    for (const auto& [m, c] : g.terms()) {
      Monomial h = m;
      h.exp[n] = static_cast<std::uint16_t>(top - m.degree());
      s.push_back({h, top, c});
    }
    std::sort(s.begin(), s.end(), [&](const Term& a, const Term& b) { return engine.greater(a, b); });
    Engine::make_monic(s);
    gens.push_back(std::move(s));
  }
  std::vector<Polynomial> out;
  for (const auto& s : engine.compute(std::move(gens))) {
    Polynomial p(ideal.ring);
    for (const auto& t : s) {
      Monomial m = t.m;
      m.exp[n] = 0;
      p.add_term(m, t.c);
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

StandardBasis standard_basis(const Ideal& ideal) {
  return standard_basis(ideal, ideal.local ? OrderKind::Local : OrderKind::Global);
}

StandardBasis standard_basis(const Ideal& ideal, OrderKind kind) {
  check_ring(ideal);
  MonomialOrder order{kind, ideal.ring->size()};
  Engine engine(order);
  std::vector<SPoly> basis;
  std::vector<SPoly> gens;
  for (const auto& g : ideal.generators)
    if (!g.is_zero()) gens.push_back(engine.from(g));
  if (kind == OrderKind::Local) engine.set_budget(kMoraBudget);
  try {
    basis = engine.compute(std::move(gens));
  } catch (const BudgetExceeded&) {
    Engine plain(order);
    for (const auto& p : homogenized_basis(ideal)) basis.push_back(plain.from(p));
    basis = plain.finish(basis);
  }
  StandardBasis sb;
  sb.ring = ideal.ring;
  sb.order = order;
  for (const auto& b : basis) {
    sb.elements.push_back(engine.to(b, ideal.ring));
    sb.leading.push_back(b.front().m);
  }
  return sb;
}

bool StandardBasis::contains_unit() const {
  return std::any_of(leading.begin(), leading.end(), [](const Monomial& m) { return m.is_one(); });
}

std::optional<std::uint64_t> StandardBasis::colength() const {
  const std::size_t n = ring->size();
  if (contains_unit()) return 0;
  std::vector<unsigned> bound(n, 0);
  for (const auto& m : leading) {
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m.exp[i]) {
        ++support;
        var = i;
      }
    if (support == 1 && (bound[var] == 0 || m.exp[var] < bound[var])) bound[var] = m.exp[var];
  }
  for (auto b : bound)
    if (b == 0) return std::nullopt;
  std::uint64_t count = 0;
  Monomial cur;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == n) {
      ++count;
      return;
    }
    for (unsigned e = 0; e < bound[i]; ++e) {
      cur.exp[i] = static_cast<std::uint16_t>(e);
      bool divisible = false;
      for (const auto& m : leading) {
        bool prefix_only = true;
        for (std::size_t k = i + 1; k < n; ++k)
          if (m.exp[k]) {
            prefix_only = false;
            break;
          }
        if (prefix_only && m.divides(cur)) {
          divisible = true;
          break;
        }
      }
      // Exponents only grow from here, so a divisible prefix ends this branch.
      if (divisible) break;
      walk(i + 1);
    }
    cur.exp[i] = 0;
  };
  walk(0);
  return count;
}

int StandardBasis::dimension() const {
  const std::size_t n = ring->size();
  if (contains_unit()) return -1;
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& m : leading) {
      bool inside = true;
      for (std::size_t i = 0; i < n; ++i)
        if (m.exp[i] && !(mask >> i & 1u)) {
          inside = false;
          break;
        }
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

Polynomial StandardBasis::reduce(const Polynomial& p) const {
  Engine engine(order);
  std::vector<SPoly> basis;
  for (const auto& e : elements) basis.push_back(engine.from(e));
  SPoly h = engine.normal_form(engine.from(p.in_ring(ring)), basis);
  return engine.to(h, ring);
}

}  // namespace germlab
