#pragma once

// Exact multivariate polynomials over Q.
//
// A polynomial lives over a VarList: an ordered list of named symbols, some of
// which may be flagged as parameters (transcendental scalars that are carried
// symbolically until a witness substitutes rational values for them).
// Exponent vectors are dense over the VarList.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace germlab {

using Rational = mpq_class;
using Integer = mpz_class;

inline constexpr std::size_t kMaxVariables = 16;

struct Monomial {
  std::array<std::uint16_t, kMaxVariables> exp{};

  unsigned degree() const {
    unsigned d = 0;
    for (auto e : exp) d += e;
    return d;
  }
  bool is_one() const { return degree() == 0; }
  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (exp[i] > other.exp[i]) return false;
    return true;
  }
  Monomial operator*(const Monomial& other) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      r.exp[i] = static_cast<std::uint16_t>(exp[i] + other.exp[i]);
    return r;
  }
  // Requires other.divides(*this).
  Monomial operator/(const Monomial& other) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      r.exp[i] = static_cast<std::uint16_t>(exp[i] - other.exp[i]);
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      r.exp[i] = std::max(a.exp[i], b.exp[i]);
    return r;
  }
  static bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (a.exp[i] != 0 && b.exp[i] != 0) return false;
    return true;
  }
  static Monomial variable(std::size_t index, std::uint16_t power = 1) {
    Monomial m;
    m.exp[index] = power;
    return m;
  }

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

struct Variable {
  std::string name;
  bool is_parameter = false;
  bool operator==(const Variable&) const = default;
};

class VarList {
 public:
  VarList() = default;
  explicit VarList(std::vector<Variable> vars);

  std::size_t size() const { return vars_.size(); }
  const Variable& operator[](std::size_t i) const { return vars_[i]; }
  const std::vector<Variable>& variables() const { return vars_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::vector<std::string> names() const;
  std::vector<std::string> parameter_names() const;
  bool has_parameters() const;

  bool operator==(const VarList& other) const { return vars_ == other.vars_; }

 private:
  std::vector<Variable> vars_;
};

using VarListPtr = std::shared_ptr<const VarList>;

VarListPtr make_vars(const std::vector<std::string>& variables,
                     const std::vector<std::string>& parameters = {});
VarListPtr make_var_list(std::vector<Variable> vars);

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial();
  explicit Polynomial(VarListPtr vars);

  static Polynomial constant(VarListPtr vars, const Rational& value);
  static Polynomial variable(VarListPtr vars, std::string_view name);
  static Polynomial variable(VarListPtr vars, std::size_t index);
  static Polynomial monomial(VarListPtr vars, const Monomial& m, const Rational& c);

  const VarListPtr& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(std::size_t var) const;
  bool uses(std::size_t var) const { return degree_in(var) > 0; }
  std::vector<std::size_t> used_variables() const;

  // Adds c*m in place, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial pow(unsigned e) const;
  Polynomial times_monomial(const Monomial& m, const Rational& c) const;

  bool operator==(const Polynomial& other) const;

  // Replaces variable `var` by `value` (a polynomial over the same VarList).
  Polynomial substitute(std::size_t var, const Polynomial& value) const;
  Polynomial substitute(std::string_view name, const Rational& value) const;
  Polynomial derivative(std::size_t var) const;

  // Re-expresses the polynomial over `target`, matching variables by name.
  // Throws if a variable in use is missing from `target`.
  Polynomial in_ring(const VarListPtr& target) const;

  // Human-readable form using the grammar accepted by parse_polynomial.
  std::string to_string() const;

 private:
  void require_same_ring(const Polynomial& other) const;

  VarListPtr vars_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

// Parses the germ expression grammar: integers, rationals `a/b`, identifiers,
// + - * ^ and parentheses.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars,
                            const std::vector<std::string>& params = {});
Polynomial parse_polynomial(std::string_view text, const VarListPtr& vars);

Rational parse_rational(std::string_view text);
std::string rational_to_string(const Rational& q);

}  // namespace germlab
