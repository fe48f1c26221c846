#include "germlab/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "germlab/errors.hpp"

namespace germlab {

VarList::VarList(std::vector<Variable> vars) : vars_(std::move(vars)) {
  if (vars_.size() > kMaxVariables)
    throw Error(ErrorCode::InvalidArgument,
                "too many variables (" + std::to_string(vars_.size()) + " > " +
                    std::to_string(kMaxVariables) + ")");
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i].name == vars_[j].name)
        throw Error(ErrorCode::InvalidArgument, "duplicate variable '" + vars_[i].name + "'");
}

std::optional<std::size_t> VarList::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

std::vector<std::string> VarList::names() const {
  std::vector<std::string> out;
  for (const auto& v : vars_) out.push_back(v.name);
  return out;
}

std::vector<std::string> VarList::parameter_names() const {
  std::vector<std::string> out;
  for (const auto& v : vars_)
    if (v.is_parameter) out.push_back(v.name);
  return out;
}

bool VarList::has_parameters() const {
  return std::any_of(vars_.begin(), vars_.end(), [](const Variable& v) { return v.is_parameter; });
}

VarListPtr make_vars(const std::vector<std::string>& variables,
                     const std::vector<std::string>& parameters) {
  std::vector<Variable> vars;
  for (const auto& v : variables) vars.push_back({v, false});
  for (const auto& p : parameters) vars.push_back({p, true});
  return std::make_shared<const VarList>(std::move(vars));
}

VarListPtr make_var_list(std::vector<Variable> vars) {
  return std::make_shared<const VarList>(std::move(vars));
}

Polynomial::Polynomial() : vars_(std::make_shared<const VarList>()) {}

Polynomial::Polynomial(VarListPtr vars) : vars_(std::move(vars)) {}

Polynomial Polynomial::constant(VarListPtr vars, const Rational& value) {
  Polynomial p(std::move(vars));
  p.add_term(Monomial{}, value);
  return p;
}

Polynomial Polynomial::variable(VarListPtr vars, std::string_view name) {
  auto idx = vars->index_of(name);
  if (!idx) throw Error(ErrorCode::UnknownIdentifier, "unknown identifier '" + std::string(name) + "'");
  return variable(std::move(vars), *idx);
}

Polynomial Polynomial::variable(VarListPtr vars, std::size_t index) {
  Polynomial p(std::move(vars));
  p.add_term(Monomial::variable(index), 1);
  return p;
}

Polynomial Polynomial::monomial(VarListPtr vars, const Monomial& m, const Rational& c) {
  Polynomial p(std::move(vars));
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const { return coefficient(Monomial{}); }

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

int Polynomial::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.exp[var]));
  return d;
}

std::vector<std::size_t> Polynomial::used_variables() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vars_->size(); ++i)
    if (uses(i)) out.push_back(i);
  return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void Polynomial::require_same_ring(const Polynomial& other) const {
  if (vars_ == other.vars_ || *vars_ == *other.vars_) return;
  throw Error(ErrorCode::InvalidArgument, "polynomials over different variable lists");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_ring(b);
  Polynomial r(a.vars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(vars_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
  Polynomial r(vars_);
  if (c == 0) return r;
  for (const auto& [mt, ct] : terms_) r.terms_.emplace_hint(r.terms_.end(), mt * m, ct * c);
  return r;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return *vars_ == *other.vars_ && terms_ == other.terms_;
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
  require_same_ring(value);
  Polynomial r(vars_);
  std::vector<Polynomial> powers{constant(vars_, 1)};
  for (const auto& [m, c] : terms_) {
    unsigned e = m.exp[var];
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    Monomial rest = m;
    rest.exp[var] = 0;
    r += powers[e].times_monomial(rest, c);
  }
  return r;
}

Polynomial Polynomial::substitute(std::string_view name, const Rational& value) const {
  auto idx = vars_->index_of(name);
  if (!idx) throw Error(ErrorCode::UnknownIdentifier, "unknown identifier '" + std::string(name) + "'");
  return substitute(*idx, constant(vars_, value));
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(vars_);
  for (const auto& [m, c] : terms_) {
    if (m.exp[var] == 0) continue;
    Monomial d = m;
    --d.exp[var];
    r.add_term(d, c * m.exp[var]);
  }
  return r;
}

Polynomial Polynomial::in_ring(const VarListPtr& target) const {
  if (vars_ == target || *vars_ == *target) {
    Polynomial r(*this);
    r.vars_ = target;
    return r;
  }
  std::vector<std::size_t> map(vars_->size(), kMaxVariables);
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    if (!uses(i)) continue;
    auto j = target->index_of((*vars_)[i].name);
    if (!j)
      throw Error(ErrorCode::InvalidArgument,
                  "variable '" + (*vars_)[i].name + "' missing from target ring");
    map[i] = *j;
  }
  Polynomial r(target);
  for (const auto& [m, c] : terms_) {
    Monomial t;
    for (std::size_t i = 0; i < vars_->size(); ++i)
      if (m.exp[i]) t.exp[map[i]] = m.exp[i];
    r.add_term(t, c);
  }
  return r;
}

namespace {

// Descending graded reverse lexicographic order, used for display only.
bool display_before(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  for (std::size_t i = kMaxVariables; i-- > 0;)
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i];
  return false;
}

}  // namespace

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const Terms::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](auto* a, auto* b) { return display_before(a->first, b->first); });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    const Monomial& m = t->first;
    Rational c = t->second;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Rational a = abs(c);
    bool need_star = false;
    if (m.is_one() || a != 1) {
      os << rational_to_string(a);
      need_star = true;
    }
    for (std::size_t i = 0; i < vars_->size(); ++i) {
      if (!m.exp[i]) continue;
      if (need_star) os << "*";
      os << (*vars_)[i].name;
      if (m.exp[i] > 1) os << "^" << m.exp[i];
      need_star = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace germlab
