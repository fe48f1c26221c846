#include "germlab/linear_elimination.hpp"

#include <algorithm>

#include "germlab/errors.hpp"

namespace germlab {

namespace {

// Index of the variable solvable from g, if any.
std::optional<std::size_t> solvable_variable(const Polynomial& g, const std::vector<bool>& allowed) {
  std::optional<std::size_t> best;
  for (std::size_t v = 0; v < g.vars()->size(); ++v) {
    if (!allowed[v]) continue;
    int occurrences = 0;
    bool pure = true;
    for (const auto& [m, c] : g.terms()) {
      if (!m.exp[v]) continue;
      ++occurrences;
      if (m != Monomial::variable(v)) pure = false;
    }
    if (occurrences == 1 && pure) best = v;
  }
  return best;
}

}  // namespace

Polynomial Elimination::reduce(const Polynomial& p) const {
  Polynomial q = p;
  for (const auto& [name, value] : substitutions) q = q.substitute(*q.vars()->index_of(name), value);
  return q.in_ring(ring);
}

Elimination eliminate_linear(const std::vector<Polynomial>& generators,
                             const std::vector<std::string>& protect) {
  Elimination out;
  if (generators.empty()) {
    out.ring = make_vars({});
    return out;
  }
  const VarListPtr& vars = generators.front().vars();
  std::vector<bool> allowed(vars->size(), true);
  for (std::size_t v = 0; v < vars->size(); ++v)
    if ((*vars)[v].is_parameter ||
        std::find(protect.begin(), protect.end(), (*vars)[v].name) != protect.end())
      allowed[v] = false;

  std::vector<Polynomial> gens;
  for (const auto& g : generators) {
    if (!(*g.vars() == *vars))
      throw Error(ErrorCode::InvalidArgument, "generators over different variable lists");
    if (!g.is_zero()) gens.push_back(g);
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      auto v = solvable_variable(gens[i], allowed);
      if (!v) continue;
      Rational c = gens[i].coefficient(Monomial::variable(*v));
      // v = -(g - c v) / c
      Polynomial value = gens[i] - Polynomial::monomial(vars, Monomial::variable(*v), c);
      value *= Rational(-1) / c;
      std::vector<Polynomial> next;
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (j == i) continue;
        Polynomial r = gens[j].substitute(*v, value);
        if (!r.is_zero()) next.push_back(std::move(r));
      }
      gens = std::move(next);
      out.substitutions.emplace_back((*vars)[*v].name, value);
      allowed[*v] = false;
      changed = true;
      break;
    }
  }

  std::vector<Variable> kept;
  for (std::size_t v = 0; v < vars->size(); ++v) {
    bool gone = std::any_of(out.substitutions.begin(), out.substitutions.end(),
                            [&](const auto& s) { return s.first == (*vars)[v].name; });
    if (!gone) kept.push_back((*vars)[v]);
  }
  out.ring = make_var_list(std::move(kept));
  for (auto& g : gens) out.generators.push_back(g.in_ring(out.ring));
  return out;
}

}  // namespace germlab
