#include "germlab/local_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "germlab/errors.hpp"
#include "germlab/linear_elimination.hpp"

namespace germlab {

std::string count_to_string(const Count& c) { return c ? std::to_string(*c) : "inf"; }

Ideal strip_parameters(const Ideal& ideal) {
  if (!ideal.ring->has_parameters()) return ideal;
  std::vector<Variable> kept;
  for (std::size_t v = 0; v < ideal.ring->size(); ++v) {
    const Variable& var = (*ideal.ring)[v];
    if (!var.is_parameter) {
      kept.push_back(var);
      continue;
    }
    for (const auto& g : ideal.generators)
      if (g.uses(v))
        throw Error(ErrorCode::UnsubstitutedParameter,
                    "parameter '" + var.name + "' must be substituted first");
  }
  Ideal out;
  out.ring = make_var_list(std::move(kept));
  out.local = ideal.local;
  for (const auto& g : ideal.generators) out.generators.push_back(g.in_ring(out.ring));
  return out;
}

namespace {

// Solving linear equations is a coordinate change fixing the origin as long as
// no generator has a constant term, so the local algebra is unchanged.
Ideal reduced_germ(const Ideal& ideal) {
  Ideal local = strip_parameters(ideal);
  local.local = true;
  for (const auto& g : local.generators)
    if (g.constant_term() != 0) return local;
  if (local.generators.empty()) return local;
  Elimination elim = eliminate_linear(local.generators);
  return Ideal(elim.ring, std::move(elim.generators), true);
}

}  // namespace

Count colength(const Ideal& ideal) {
  if (!ideal.local) return standard_basis(strip_parameters(ideal)).colength();
  return standard_basis(reduced_germ(ideal)).colength();
}

// A local ideal is proper iff every generator vanishes at the origin.
bool germ_is_empty(const Ideal& ideal) {
  Ideal local = strip_parameters(ideal);
  for (const auto& g : local.generators)
    if (g.constant_term() != 0) return true;
  return false;
}

int local_dimension(const Ideal& ideal) {
  StandardBasis sb = standard_basis(reduced_germ(ideal));
  if (sb.contains_unit()) throw Error(ErrorCode::Precondition, "empty germ has no dimension");
  return sb.dimension();
}

Polynomial determinant(std::vector<std::vector<Polynomial>> matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "empty matrix");
  if (n == 1) return matrix[0][0];
  const VarListPtr& ring = matrix[0][0].vars();
  Polynomial det(ring);
  for (std::size_t col = 0; col < n; ++col) {
    if (matrix[0][col].is_zero()) continue;
    std::vector<std::vector<Polynomial>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(matrix[r][c]);
      sub.push_back(std::move(row));
    }
    Polynomial term = matrix[0][col] * determinant(std::move(sub));
    if (col % 2)
      det -= term;
    else
      det += term;
  }
  return det;
}

namespace {

void combinations(std::size_t n, std::size_t r, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  if (r > n) return;
  for (;;) {
    out.push_back(idx);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Polynomial> jacobian_minors(const std::vector<Polynomial>& gens, std::size_t r) {
  if (gens.empty()) return {};
  const VarListPtr& ring = gens.front().vars();
  std::vector<std::size_t> vars;
  for (std::size_t v = 0; v < ring->size(); ++v)
    if (!(*ring)[v].is_parameter) vars.push_back(v);
  std::vector<Polynomial> out;
  if (r == 0) return {Polynomial::constant(ring, 1)};
  std::vector<std::vector<Polynomial>> jac;
  for (const auto& g : gens) {
    std::vector<Polynomial> row;
    for (auto v : vars) row.push_back(g.derivative(v));
    jac.push_back(std::move(row));
  }
  std::vector<std::vector<std::size_t>> rows, cols;
  combinations(gens.size(), r, rows);
  combinations(vars.size(), r, cols);
  for (const auto& rs : rows)
    for (const auto& cs : cols) {
      std::vector<std::vector<Polynomial>> m;
      for (auto i : rs) {
        std::vector<Polynomial> row;
        for (auto j : cs) row.push_back(jac[i][j]);
        m.push_back(std::move(row));
      }
      Polynomial d = determinant(std::move(m));
      if (!d.is_zero()) out.push_back(std::move(d));
    }
  return out;
}

namespace {

Count colength_of(const VarListPtr& ring, std::vector<Polynomial> gens) {
  return standard_basis(Ideal(ring, std::move(gens), true)).colength();
}

int dimension_of(const VarListPtr& ring, std::vector<Polynomial> gens) {
  StandardBasis sb = standard_basis(Ideal(ring, std::move(gens), true));
  return sb.dimension();
}

// Le-Greuel: mu(X_j) + mu(X_{j-1}) = colength(g_1..g_{j-1}, j x j minors of
// the Jacobian of g_1..g_j). nullopt when some step is not an isolated
// complete intersection.
std::optional<std::uint64_t> chain_milnor(const VarListPtr& ring, const std::vector<Polynomial>& gens) {
  const int n = static_cast<int>(ring->size());
  std::int64_t previous = 0;
  for (std::size_t j = 1; j <= gens.size(); ++j) {
    std::vector<Polynomial> prefix(gens.begin(), gens.begin() + j);
    if (j < gens.size() && dimension_of(ring, prefix) != n - static_cast<int>(j)) return std::nullopt;
    std::vector<Polynomial> ideal(gens.begin(), gens.begin() + j - 1);
    for (auto& m : jacobian_minors(prefix, j)) ideal.push_back(std::move(m));
    Count c = colength_of(ring, std::move(ideal));
    if (!c) return std::nullopt;
    std::int64_t mu = static_cast<std::int64_t>(*c) - previous;
    if (mu < 0) return std::nullopt;
    previous = mu;
  }
  return static_cast<std::uint64_t>(previous);
}

std::uint64_t chain_with_retries(const VarListPtr& ring, std::vector<Polynomial> gens,
                                 const MilnorOptions& options) {
  std::vector<std::size_t> perm(gens.size());
  std::iota(perm.begin(), perm.end(), 0);
  int attempts = 0;
  do {
    std::vector<Polynomial> ordered;
    for (auto i : perm) ordered.push_back(gens[i]);
    if (auto mu = chain_milnor(ring, ordered)) return *mu;
    ++attempts;
  } while (attempts < options.max_retries && std::next_permutation(perm.begin(), perm.end()));

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> coeff(-4, 4);
  const std::size_t m = gens.size();
  for (int retry = 0; retry < options.max_retries; ++retry) {
    // Unit upper-triangular combinations keep the ideal but change every prefix.
    std::vector<Polynomial> mixed;
    for (std::size_t i = 0; i < m; ++i) {
      Polynomial g = gens[i];
      for (std::size_t k = i + 1; k < m; ++k) g += gens[k] * Rational(coeff(rng));
      mixed.push_back(std::move(g));
    }
    if (auto mu = chain_milnor(ring, mixed)) return *mu;
  }
  throw Error(ErrorCode::NonIsolated,
              "no ordering of the generators gives an isolated complete intersection chain");
}

}  // namespace

IcisReport milnor_icis(const Ideal& input, int expected_dim, const MilnorOptions& options) {
  Ideal ideal = strip_parameters(input);
  ideal.local = true;
  StandardBasis sb = standard_basis(reduced_germ(ideal));
  if (sb.contains_unit()) throw Error(ErrorCode::Precondition, "empty germ");
  IcisReport report;
  report.dim = sb.dimension();
  if (report.dim != expected_dim)
    throw Error(ErrorCode::NonIcis, "germ has dimension " + std::to_string(report.dim) +
                                        ", expected " + std::to_string(expected_dim));

  if (options.route == MilnorRoute::Chain) {
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators)
      if (!g.is_zero()) gens.push_back(g);
    if (static_cast<int>(ideal.ring->size()) - static_cast<int>(gens.size()) != expected_dim)
      throw Error(ErrorCode::NonIcis, "generator count does not match the codimension");
    report.milnor = chain_with_retries(ideal.ring, std::move(gens), options);
    report.route = "chain";
  } else {
    Elimination elim = eliminate_linear(ideal.generators);
    const int n = static_cast<int>(elim.ring->size());
    const int m = static_cast<int>(elim.generators.size());
    if (n - m != expected_dim)
      throw Error(ErrorCode::NonIcis, "after elimination " + std::to_string(m) +
                                          " equations remain in " + std::to_string(n) +
                                          " variables, expected dimension " +
                                          std::to_string(expected_dim));
    if (m == 0) {
      report.milnor = 0;
      report.route = "smooth";
    } else if (expected_dim == 0 && options.route == MilnorRoute::Auto) {
      // A zero-dimensional complete intersection of multiplicity d has a
      // Milnor fibre of d points.
      Count d = sb.colength();
      if (!d) throw Error(ErrorCode::NonIsolated, "zero-dimensional germ with infinite colength");
      report.milnor = *d - 1;
      report.route = "points";
    } else if (m == 1) {
      const Polynomial& g = elim.generators.front();
      std::vector<Polynomial> jac;
      for (std::size_t v = 0; v < elim.ring->size(); ++v) jac.push_back(g.derivative(v));
      report.milnor = colength_of(elim.ring, jac);
      jac.push_back(g);
      report.tjurina = colength_of(elim.ring, jac);
      report.route = "hypersurface";
      if (!report.milnor)
        throw Error(ErrorCode::NonIsolated, "hypersurface singularity is not isolated");
    } else {
      if (options.route == MilnorRoute::Hypersurface)
        throw Error(ErrorCode::Precondition, "germ does not reduce to a hypersurface");
      report.milnor = chain_with_retries(elim.ring, elim.generators, options);
      report.route = "chain";
    }
  }
  report.is_smooth = report.milnor && *report.milnor == 0;
  report.is_A1 = expected_dim > 0 && report.milnor && *report.milnor == 1;
  return report;
}

bool affine_is_smooth(const Ideal& input, int expected_dim) {
  Ideal ideal = strip_parameters(input);
  Elimination elim = eliminate_linear(ideal.generators);
  VarListPtr ring = ideal.generators.empty() ? ideal.ring : elim.ring;
  std::vector<Polynomial> gens = elim.generators;
  Ideal unit_test(ring, gens, false);
  if (gens.empty()) return static_cast<int>(ring->size()) == expected_dim;
  if (standard_basis(unit_test).contains_unit()) return true;
  int codim = static_cast<int>(ring->size()) - expected_dim;
  if (codim <= 0 || codim > static_cast<int>(gens.size())) return false;
  for (auto& m : jacobian_minors(elim.generators, static_cast<std::size_t>(codim)))
    gens.push_back(std::move(m));
  return standard_basis(Ideal(ring, std::move(gens), false)).contains_unit();
}

}  // namespace germlab
