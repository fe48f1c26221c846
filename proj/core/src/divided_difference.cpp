#include "germlab/divided_difference.hpp"

#include "germlab/errors.hpp"

namespace germlab {

VarListPtr split_variable(const VarListPtr& vars, std::string_view var,
                          const std::vector<std::string>& fresh) {
  auto idx = vars->index_of(var);
  if (!idx) throw Error(ErrorCode::UnknownIdentifier, "unknown identifier '" + std::string(var) + "'");
  if ((*vars)[*idx].is_parameter)
    throw Error(ErrorCode::InvalidArgument, "cannot split parameter '" + std::string(var) + "'");
  std::vector<Variable> out;
  for (std::size_t i = 0; i < vars->size(); ++i) {
    if (i != *idx) {
      out.push_back((*vars)[i]);
      continue;
    }
    for (const auto& name : fresh) {
      if (vars->index_of(name) && name != var)
        throw Error(ErrorCode::InvalidArgument, "fresh name '" + name + "' already in use");
      out.push_back({name, false});
    }
  }
  return make_var_list(std::move(out));
}

namespace {

void add_compositions(Polynomial& r, const std::vector<std::size_t>& indices, std::size_t at,
                      unsigned left, Monomial& mono) {
  if (at + 1 == indices.size()) {
    mono.exp[indices[at]] = static_cast<std::uint16_t>(left);
    r.add_term(mono, 1);
    mono.exp[indices[at]] = 0;
    return;
  }
  for (unsigned e = 0; e <= left; ++e) {
    mono.exp[indices[at]] = static_cast<std::uint16_t>(e);
    add_compositions(r, indices, at + 1, left - e, mono);
  }
  mono.exp[indices[at]] = 0;
}

}  // namespace

Polynomial complete_homogeneous(const VarListPtr& vars, const std::vector<std::size_t>& indices,
                                unsigned m) {
  Polynomial r(vars);
  if (indices.empty()) {
    if (m == 0) r.add_term(Monomial{}, 1);
    return r;
  }
  Monomial mono;
  add_compositions(r, indices, 0, m, mono);
  return r;
}

namespace {

// Divided difference of f (over `ring`) with respect to ring variable u into (u, w).
Polynomial dd_in_ring(const Polynomial& f, std::size_t u, std::size_t w) {
  const VarListPtr& ring = f.vars();
  Polynomial r(ring);
  std::vector<Polynomial> h;
  for (const auto& [m, c] : f.terms()) {
    unsigned e = m.exp[u];
    if (e == 0) continue;
    while (h.size() < e) h.push_back(complete_homogeneous(ring, {u, w}, h.size()));
    Monomial rest = m;
    rest.exp[u] = 0;
    r += h[e - 1].times_monomial(rest, c);
  }
  return r;
}

}  // namespace

Polynomial divided_difference(const Polynomial& f, std::string_view var,
                              const std::pair<std::string, std::string>& fresh) {
  return iterated_divided_difference(f, var, {fresh.first, fresh.second}).front();
}

std::vector<Polynomial> iterated_divided_difference(const Polynomial& f, std::string_view var,
                                                    const std::vector<std::string>& fresh) {
  if (fresh.size() < 2) throw Error(ErrorCode::InvalidArgument, "need at least two fresh names");
  VarListPtr ring = split_variable(f.vars(), var, fresh);
  std::size_t base = *ring->index_of(fresh.front());
  // f with var renamed to the first fresh variable.
  Polynomial q(ring);
  std::size_t old = *f.vars()->index_of(var);
  for (const auto& [m, c] : f.terms()) {
    Monomial t;
    for (std::size_t i = 0; i < f.vars()->size(); ++i) {
      if (!m.exp[i]) continue;
      std::size_t j = i < old ? i : (i == old ? base : i + fresh.size() - 1);
      t.exp[j] = m.exp[i];
    }
    q.add_term(t, c);
  }
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j + 1 < fresh.size(); ++j) {
    q = dd_in_ring(q, base + j, base + j + 1);
    out.push_back(q);
  }
  return out;
}

}  // namespace germlab
