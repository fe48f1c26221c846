#include "germlab/multiple_points.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "germlab/divided_difference.hpp"
#include "germlab/errors.hpp"

namespace germlab {

int Partition::k() const {
  int s = 0;
  for (int r : parts) s += r;
  return s;
}

bool Partition::is_identity() const {
  return std::all_of(parts.begin(), parts.end(), [](int r) { return r == 1; });
}

int Partition::sign() const { return (k() - cycles()) % 2 ? -1 : 1; }

std::uint64_t Partition::class_size() const {
  std::uint64_t result = 1;
  for (int i = 2; i <= k(); ++i) result *= static_cast<std::uint64_t>(i);
  std::map<int, int> mult;
  for (int r : parts) ++mult[r];
  for (const auto& [r, m] : mult) {
    for (int i = 0; i < m; ++i) result /= static_cast<std::uint64_t>(r);
    for (int i = 2; i <= m; ++i) result /= static_cast<std::uint64_t>(i);
  }
  return result;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

Partition Partition::identity(int k) { return Partition{std::vector<int>(static_cast<std::size_t>(k), 1)}; }

std::vector<Partition> partitions(int k) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.push_back(Partition{cur});
      return;
    }
    for (int r = std::min(left, max_part); r >= 1; --r) {
      cur.push_back(r);
      rec(left - r, r);
      cur.pop_back();
    }
  };
  if (k >= 1) rec(k, k);
  std::stable_sort(out.begin(), out.end(),
                   [](const Partition& a, const Partition& b) { return a.cycles() > b.cycles(); });
  return out;
}

std::vector<int> canonical_permutation(const Partition& partition) {
  std::vector<int> image;
  int start = 0;
  for (int r : partition.parts) {
    for (int s = 0; s < r; ++s) image.push_back(start + (s + 1) % r);
    start += r;
  }
  return image;
}

ExpectedDims expected_dims(int n, int p, int k, const Partition& partition) {
  if (n >= p) throw Error(ErrorCode::InvalidArgument, "expected n < p");
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "expected k >= 1");
  if (partition.k() != k) throw Error(ErrorCode::InvalidArgument, "partition is not of k");
  int d_k = p - k * (p - n);
  return {d_k, d_k - k + partition.cycles(), partition.cycles()};
}

bool GermCorank1::has_parameters() const {
  for (const auto& g : components)
    for (std::size_t v = 0; v < ring->size(); ++v)
      if ((*ring)[v].is_parameter && g.uses(v)) return true;
  return false;
}

void GermCorank1::validate() const {
  if (n < 1 || n >= p) throw Error(ErrorCode::InvalidArgument, name + ": expected 1 <= n < p");
  if (static_cast<int>(components.size()) != p - n + 1)
    throw Error(ErrorCode::InvalidArgument,
                name + ": expected " + std::to_string(p - n + 1) + " nonlinear components, got " +
                    std::to_string(components.size()));
  if (static_cast<int>(x_names.size()) != n - 1)
    throw Error(ErrorCode::InvalidArgument, name + ": expected " + std::to_string(n - 1) +
                                                " linear source variables");
  GermCorank1 zero = at_origin();
  for (std::size_t i = 0; i < zero.components.size(); ++i)
    if (zero.components[i].constant_term() != 0)
      throw Error(ErrorCode::InvalidArgument,
                  name + ": component " + std::to_string(i + 1) + " does not vanish at 0");
}

GermCorank1 GermCorank1::substitute(const std::map<std::string, Rational>& values) const {
  std::vector<Variable> kept;
  for (const auto& v : ring->variables())
    if (!(v.is_parameter && values.count(v.name))) kept.push_back(v);
  for (const auto& [param, value] : values) {
    auto idx = ring->index_of(param);
    if (!idx || !(*ring)[*idx].is_parameter)
      throw Error(ErrorCode::UnknownIdentifier, name + ": unknown parameter '" + param + "'");
  }
  GermCorank1 out = *this;
  out.ring = make_var_list(std::move(kept));
  out.components.clear();
  for (const auto& g : components) {
    Polynomial h = g;
    for (const auto& [param, value] : values) h = h.substitute(param, value);
    out.components.push_back(h.in_ring(out.ring));
  }
  return out;
}

GermCorank1 GermCorank1::at_origin() const {
  std::map<std::string, Rational> zeros;
  for (const auto& param : parameter_names()) zeros[param] = 0;
  return substitute(zeros);
}

std::string GermCorank1::to_string() const {
  std::ostringstream os;
  os << "(";
  for (const auto& x : x_names) os << x << ", ";
  for (std::size_t i = 0; i < components.size(); ++i) os << (i ? ", " : "") << components[i];
  os << ")";
  return os.str();
}

GermCorank1 make_germ(std::string name, int n, int p, const std::vector<std::string>& x_names,
                      const std::string& z_name, const std::vector<std::string>& components,
                      const std::vector<std::string>& params) {
  GermCorank1 f;
  f.name = std::move(name);
  f.n = n;
  f.p = p;
  f.x_names = x_names;
  f.z_name = z_name;
  std::vector<std::string> vars = x_names;
  vars.push_back(z_name);
  f.ring = make_vars(vars, params);
  for (const auto& c : components) f.components.push_back(parse_polynomial(c, f.ring));
  f.validate();
  return f;
}

MultiplePointSpace build_Dk(const GermCorank1& f, int k, const Partition& partition) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "D^k needs k >= 2");
  ExpectedDims dims = expected_dims(f.n, f.p, k, partition);
  std::vector<std::string> fresh;
  for (int i = 1; i <= k; ++i) fresh.push_back(f.z_name + std::to_string(i));
  VarListPtr ring = split_variable(f.ring, f.z_name, fresh);

  std::vector<std::vector<Polynomial>> dd;
  for (const auto& g : f.components) {
    std::vector<Polynomial> level;
    for (auto& q : iterated_divided_difference(g, f.z_name, fresh)) level.push_back(q.in_ring(ring));
    dd.push_back(std::move(level));
  }
  std::vector<Polynomial> gens;
  for (int j = 0; j + 1 < k; ++j)
    for (const auto& level : dd) gens.push_back(level[static_cast<std::size_t>(j)]);

  std::size_t z1 = *ring->index_of(fresh.front());
  std::size_t start = 0;
  for (int r : partition.parts) {
    for (int s = 0; s + 1 < r; ++s)
      gens.push_back(Polynomial::variable(ring, z1 + start + static_cast<std::size_t>(s)) -
                     Polynomial::variable(ring, z1 + start + static_cast<std::size_t>(s) + 1));
    start += static_cast<std::size_t>(r);
  }

  MultiplePointSpace space;
  space.k = k;
  space.partition = partition;
  space.ideal = Ideal(ring, std::move(gens), true);
  space.d_k = dims.d_k;
  space.expected_dim = dims.d_k_sigma;
  space.sigma_sharp = dims.sigma_sharp;
  return space;
}

const char* to_string(SpaceStatus status) {
  switch (status) {
    case SpaceStatus::Empty: return "EMPTY";
    case SpaceStatus::Icis: return "ICIS";
    case SpaceStatus::Point: return "POINT";
    case SpaceStatus::Violation: return "VIOLATION";
  }
  return "UNKNOWN";
}

const SpaceCheck* MararMondResult::find(int k, const Partition& partition) const {
  for (const auto& e : entries)
    if (e.k == k && e.partition == partition) return &e;
  return nullptr;
}

int max_supported_k(const GermCorank1& f) {
  return static_cast<int>(kMaxVariables) - static_cast<int>(f.ring->size()) + 1;
}

namespace {

SpaceCheck check_space(const GermCorank1& f, int k, const Partition& partition,
                       const MilnorOptions& milnor) {
  MultiplePointSpace space = build_Dk(f, k, partition);
  SpaceCheck check;
  check.k = k;
  check.partition = partition;
  check.d_k = space.d_k;
  check.d_k_sigma = space.expected_dim;
  if (germ_is_empty(space.ideal)) {
    check.status = SpaceStatus::Empty;
    return check;
  }
  check.actual_dim = local_dimension(space.ideal);
  if (space.expected_dim < 0) {
    check.colength = colength(space.ideal);
    if (check.colength) {
      check.status = SpaceStatus::Point;
    } else {
      check.status = SpaceStatus::Violation;
      check.detail = "expected at most the origin, found dimension " + std::to_string(check.actual_dim);
    }
    return check;
  }
  try {
    check.icis = milnor_icis(space.ideal, space.expected_dim, milnor);
    check.status = SpaceStatus::Icis;
    if (space.expected_dim == 0) check.colength = colength(space.ideal);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NonIcis && e.code() != ErrorCode::NonIsolated) throw;
    check.status = SpaceStatus::Violation;
    check.detail = std::string(germlab::to_string(e.code())) + ": " + e.what();
  }
  return check;
}

}  // namespace

MararMondResult marar_mond_check(const GermCorank1& germ, const MararMondOptions& options) {
  GermCorank1 f = germ.has_parameters() ? germ.at_origin() : germ;
  MararMondResult result;
  int cap = max_supported_k(f);
  if (options.max_k > 0) cap = std::min(cap, options.max_k);
  for (int k = 2; k <= cap; ++k) {
    bool empty = false;
    for (const auto& partition : partitions(k)) {
      if (empty) {
        SpaceCheck check;
        check.k = k;
        check.partition = partition;
        ExpectedDims dims = expected_dims(f.n, f.p, k, partition);
        check.d_k = dims.d_k;
        check.d_k_sigma = dims.d_k_sigma;
        result.entries.push_back(check);
        continue;
      }
      SpaceCheck check = check_space(f, k, partition, options.milnor);
      if (partition.is_identity() && check.status == SpaceStatus::Empty) empty = true;
      if (check.status == SpaceStatus::Violation) result.finite = false;
      result.entries.push_back(std::move(check));
    }
    if (empty) {
      result.first_empty_k = k;
      break;
    }
  }
  return result;
}

}  // namespace germlab
