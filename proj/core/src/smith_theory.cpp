#include "germlab/smith_theory.hpp"

#include <algorithm>

#include "germlab/errors.hpp"

namespace germlab {

bool InequalityLedger::holds() const {
  return std::all_of(lines.begin(), lines.end(), [](const InequalityLine& l) { return l.holds(); });
}

bool SpecialRanks::exact() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const SpecialDegree& d) { return d.exact(); });
}

namespace {

void require_cyclic(const SimplicialGComplex& x) {
  if (!x.g_action) throw Error(ErrorCode::InvalidArgument, "complex has no g_action");
  validate(x);
  if (!is_simplicially_good(x))
    throw Error(ErrorCode::InvalidAction, "actions are not simplicially good; subdivide first");
}

std::size_t tail_sum(const std::vector<std::size_t>& v, int from) {
  std::size_t s = 0;
  for (std::size_t i = static_cast<std::size_t>(from); i < v.size(); ++i) s += v[i];
  return s;
}

InequalityLedger make_ledger(std::uint32_t p, int top, std::vector<std::size_t> space,
                             std::vector<std::size_t> fixed) {
  InequalityLedger ledger;
  ledger.p = p;
  ledger.space = std::move(space);
  ledger.fixed = std::move(fixed);
  for (int n = 0; n <= std::max(top, 0); ++n)
    ledger.lines.push_back({n, tail_sum(ledger.space, n), tail_sum(ledger.fixed, n)});
  return ledger;
}

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix power(const IntMatrix& m, unsigned e) {
  IntMatrix r = identity(m.rows());
  for (unsigned i = 0; i < e; ++i) r = m * r;
  return r;
}

bool zero_mod(const IntMatrix& m, std::uint32_t p) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!mpz_divisible_ui_p(m(i, j).get_mpz_t(), p)) return false;
  return true;
}

}  // namespace

SimplicialGComplex fixed_subcomplex(const SimplicialGComplex& x) {
  SimplicialGComplex out = x;
  out.facets = x.g_action ? fixed_simplices(x.facets, *x.g_action) : x.facets;
  return out;
}

InequalityLedger verify_floyd(const SimplicialGComplex& x) {
  require_cyclic(x);
  const Coefficients field = Coefficients::prime(x.p);
  SimplexIndex index(x.facets);
  return make_ledger(x.p, index.dimension(), betti_numbers(homology(x.facets, field)),
                     betti_numbers(homology(fixed_simplices(x.facets, *x.g_action), field)));
}

InequalityLedger verify_equivariant_smith(const SimplicialGComplex& x) {
  require_cyclic(x);
  const Coefficients field = Coefficients::prime(x.p);
  SimplexIndex index(x.facets);
  return make_ledger(x.p, index.dimension(), alternating_betti(x, field),
                     alternating_betti(fixed_subcomplex(x), field));
}

SpecialRanks smith_special_ranks(const SimplicialGComplex& x, unsigned i) {
  require_cyclic(x);
  const std::uint32_t p = x.p;
  if (i > p) throw Error(ErrorCode::InvalidArgument, "i must lie in 0..p");
  const Permutation& g = *x.g_action;
  AlternatingChainComplex c(x);
  const int top = c.dimension();
  const Coefficients field = Coefficients::prime(p);

  SpecialRanks out;
  out.p = p;
  out.i = i;
  std::vector<IntMatrix> rho(static_cast<std::size_t>(top + 2)), rho_bar(static_cast<std::size_t>(top + 2));
  for (int d = 0; d <= top; ++d) {
    const std::size_t n = c.rank(d);
    IntMatrix gm = c.action_matrix(d, g);
    IntMatrix eta = identity(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) eta(r, s) -= gm(r, s);
    rho[static_cast<std::size_t>(d)] = power(eta, i);
    rho_bar[static_cast<std::size_t>(d)] = power(eta, p - i);
    std::vector<std::size_t> fixed = c.fixed_cells(d, g);
    for (std::size_t j = 0; j < n; ++j)
      if (gm(j, j) != 0 && std::find(fixed.begin(), fixed.end(), j) == fixed.end())
        out.orbit_hypothesis = false;

    SpecialDegree deg;
    deg.d = d;
    deg.alt = n;
    deg.fixed = fixed.size();
    const IntMatrix& r = rho[static_cast<std::size_t>(d)];
    const IntMatrix& rb = rho_bar[static_cast<std::size_t>(d)];
    deg.rho = rank_mod_p(r, p);
    deg.rho_bar = rank_mod_p(rb, p);
    IntMatrix f(n, fixed.size());
    for (std::size_t j = 0; j < fixed.size(); ++j) f(fixed[j], j) = 1;
    deg.direct = rank_mod_p(rb.concat_columns(f), p) == deg.rho_bar + deg.fixed;
    deg.kernel = zero_mod(r * rb, p) && zero_mod(r * f, p);
    out.degrees.push_back(deg);
  }
  rho[static_cast<std::size_t>(top + 1)] = IntMatrix(0, 0);
  rho_bar[static_cast<std::size_t>(top + 1)] = IntMatrix(0, 0);

  auto special_rank = [&](const std::vector<IntMatrix>& map, int d) -> std::size_t {
    std::size_t dim = rank_mod_p(map[static_cast<std::size_t>(d)], p);
    std::size_t out_rank = d > 0 ? rank_mod_p(c.boundary(d) * map[static_cast<std::size_t>(d)], p) : 0;
    std::size_t in_rank =
        d < top ? rank_mod_p(c.boundary(d + 1) * map[static_cast<std::size_t>(d + 1)], p) : 0;
    return dim - out_rank - in_rank;
  };
  std::vector<std::size_t> ah = alternating_betti(x, field);
  std::vector<std::size_t> ah_fixed = alternating_betti(fixed_subcomplex(x), field);
  for (auto& deg : out.degrees) {
    deg.a = special_rank(rho, deg.d);
    deg.a_bar = special_rank(rho_bar, deg.d);
    const auto idx = static_cast<std::size_t>(deg.d);
    deg.ah = idx < ah.size() ? ah[idx] : 0;
    deg.ah_fixed = idx < ah_fixed.size() ? ah_fixed[idx] : 0;
  }
  for (auto& deg : out.degrees) {
    const auto next = static_cast<std::size_t>(deg.d + 1);
    const long long a_next = next < out.degrees.size() ? static_cast<long long>(out.degrees[next].a) : 0;
    const long long ab_next = next < out.degrees.size() ? static_cast<long long>(out.degrees[next].a_bar) : 0;
    const long long fixed = static_cast<long long>(deg.ah_fixed), whole = static_cast<long long>(deg.ah);
    deg.bounds = fixed <= a_next - static_cast<long long>(deg.a_bar) + whole &&
                 fixed <= ab_next - static_cast<long long>(deg.a) + whole;
  }
  return out;
}

}  // namespace germlab
