#include "germlab/alternating_homology.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "germlab/errors.hpp"

namespace germlab {

AlternatingChainComplex::AlternatingChainComplex(const SimplicialGComplex& x) : index_(x.facets) {
  if (!is_simplicially_good(x))
    throw Error(ErrorCode::InvalidAction, "sigma action is not simplicially good; subdivide first");
  const std::vector<SigmaElement> group = sigma_group(x);
  const int top = index_.dimension();
  cells_.resize(static_cast<std::size_t>(top + 1));
  slots_.resize(static_cast<std::size_t>(top + 1));
  for (int d = 0; d <= top; ++d) {
    const auto& simplices = index_.cells(d);
    auto& slots = slots_[static_cast<std::size_t>(d)];
    slots.assign(simplices.size(), Slot{});
    std::vector<bool> done(simplices.size(), false);
    for (std::size_t s = 0; s < simplices.size(); ++s) {
      if (done[s]) continue;
      std::map<std::size_t, int> orbit;
      bool killed = false;
      for (const auto& h : group) {
        auto [image, eps] = act(h.vertices, simplices[s]);
        std::size_t t = *index_.find(image);
        int c = h.sign * eps;
        auto [it, inserted] = orbit.emplace(t, c);
        if (!inserted && it->second != c) killed = true;
      }
      for (const auto& [t, c] : orbit) done[t] = true;
      if (killed) continue;
      AltCell cell;
      cell.terms.emplace_back(s, 1);
      for (const auto& [t, c] : orbit)
        if (t != s) cell.terms.emplace_back(t, c);
      const long id = static_cast<long>(cells_[static_cast<std::size_t>(d)].size());
      for (const auto& [t, c] : cell.terms) slots[t] = Slot{id, c};
      cells_[static_cast<std::size_t>(d)].push_back(std::move(cell));
    }
  }
}

std::vector<std::size_t> AlternatingChainComplex::ranks() const {
  std::vector<std::size_t> out;
  for (const auto& c : cells_) out.push_back(c.size());
  return out;
}

IntMatrix AlternatingChainComplex::boundary(int d) const {
  IntMatrix m(rank(d - 1), rank(d));
  if (d <= 0) return m;
  const auto& simplices = index_.cells(d);
  const auto& lower = cells_[static_cast<std::size_t>(d - 1)];
  const auto& cells = cells_[static_cast<std::size_t>(d)];
  for (std::size_t j = 0; j < cells.size(); ++j) {
    std::map<std::size_t, long> chain;
    for (const auto& [t, c] : cells[j].terms) {
      const Simplex& s = simplices[t];
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        chain[*index_.find(face)] += (i % 2 == 0 ? c : -c);
      }
    }
    for (std::size_t i = 0; i < lower.size(); ++i) {
      auto it = chain.find(lower[i].representative());
      if (it != chain.end() && it->second != 0) m(i, j) = it->second;
    }
  }
  return m;
}

IntMatrix AlternatingChainComplex::action_matrix(int d, const Permutation& g) const {
  IntMatrix m(rank(d), rank(d));
  const auto& simplices = index_.cells(d);
  const auto& slots = slots_[static_cast<std::size_t>(d)];
  const auto& cells = cells_[static_cast<std::size_t>(d)];
  for (std::size_t j = 0; j < cells.size(); ++j) {
    auto [image, eps] = act(g, simplices[cells[j].representative()]);
    const Slot& slot = slots[*index_.find(image)];
    if (slot.cell < 0)
      throw Error(ErrorCode::InvalidAction, "action does not preserve the alternating chains");
    m(static_cast<std::size_t>(slot.cell), j) = eps * slot.sign;
  }
  return m;
}

std::vector<std::size_t> AlternatingChainComplex::fixed_cells(int d, const Permutation& g) const {
  std::vector<std::size_t> out;
  const auto& simplices = index_.cells(d);
  const auto& cells = cells_[static_cast<std::size_t>(d)];
  for (std::size_t j = 0; j < cells.size(); ++j) {
    bool fixed = true;
    for (const auto& [t, c] : cells[j].terms)
      for (int v : simplices[t])
        if (g[static_cast<std::size_t>(v)] != v) fixed = false;
    if (fixed) out.push_back(j);
  }
  return out;
}

namespace {

std::vector<HomologyGroup> alt_homology(const AlternatingChainComplex& c, const Coefficients& coeff) {
  std::vector<IntMatrix> boundaries;
  std::vector<std::size_t> dims;
  for (int d = 0; d <= c.dimension(); ++d) {
    boundaries.push_back(c.boundary(d));
    dims.push_back(c.rank(d));
  }
  return chain_homology(boundaries, dims, coeff);
}

std::string cycle_type(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  std::string out = "(";
  for (std::size_t i = 0; i < lengths.size(); ++i) out += (i ? "," : "") + std::to_string(lengths[i]);
  return out + ")";
}

}  // namespace

AltHomologyResult alternating_homology(const SimplicialGComplex& x, const Coefficients& field) {
  AlternatingChainComplex c(x);
  AltHomologyResult r;
  r.integral = alt_homology(c, Coefficients::integers());
  r.field = field;
  r.field_ranks = field.kind == Coefficients::Kind::Integers ? betti_numbers(r.integral)
                                                             : betti_numbers(alt_homology(c, field));
  r.chain_ranks = c.ranks();
  r.chi_top = euler_characteristic(x.facets);
  for (std::size_t d = 0; d < r.chain_ranks.size(); ++d)
    r.chi_alt += (d % 2 ? -1 : 1) * static_cast<long long>(r.chain_ranks[d]);
  return r;
}

std::vector<std::size_t> alternating_betti(const SimplicialGComplex& x, const Coefficients& field) {
  return betti_numbers(alt_homology(AlternatingChainComplex(x), field));
}

std::string FixedPointFormula::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < terms.size(); ++i)
    os << (i && terms[i].signed_chi >= 0 ? "+" : "") << terms[i].signed_chi;
  os << ")/" << group_order << " = " << value.get_str();
  return os.str();
}

FixedPointFormula chi_alt_fixed_point_formula(const SimplicialGComplex& x, int dimension) {
  if (!is_simplicially_good(x))
    throw Error(ErrorCode::InvalidAction, "sigma action is not simplicially good; subdivide first");
  const std::vector<SigmaElement> group = sigma_group(x);
  FixedPointFormula f;
  f.group_order = group.size();
  std::map<std::string, std::size_t> position;
  std::vector<std::pair<std::size_t, std::string>> keys;
  long long total = 0;
  for (const auto& h : group) {
    std::string type = cycle_type(h.sigma);
    long long chi = (dimension % 2 ? -1 : 1) * h.sign *
                    euler_characteristic(fixed_simplices(x.facets, h.vertices));
    total += chi;
    auto it = position.find(type);
    if (it == position.end()) {
      it = position.emplace(type, f.terms.size()).first;
      f.terms.push_back({type, 0, 0});
    }
    f.terms[it->second].elements += 1;
    f.terms[it->second].signed_chi += chi;
  }
  auto cycles = [](const std::string& t) { return std::count(t.begin(), t.end(), ',') + 1; };
  std::stable_sort(f.terms.begin(), f.terms.end(), [&](const auto& a, const auto& b) {
    if (cycles(a.cycle_type) != cycles(b.cycle_type)) return cycles(a.cycle_type) > cycles(b.cycle_type);
    return a.cycle_type > b.cycle_type;
  });
  const long long order = static_cast<long long>(group.size());
  if (total % order != 0)
    throw Error(ErrorCode::NonIntegral, "fixed point formula gives " + std::to_string(total) + "/" +
                                            std::to_string(order));
  f.value = Integer(static_cast<long>(total / order));
  return f;
}

}  // namespace germlab
