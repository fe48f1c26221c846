#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "germlab/multiple_points.hpp"

namespace germlab {

// Germ definition file:
//
//   germ Q2 {
//     n=3 p=4;
//     vars x y z;
//     params s=1;
//     components: x*z + y*z^2, z^3 + y^2*z;
//     perturbation: x*z + y*z^2, z^3 + y^2*z - s*z;
//   }
//
// The last variable is the corank-one direction. Components list either the
// p-n+1 nonlinear entries or all p entries starting with the identity on the
// first n-1 variables. `#` starts a comment.
struct GermFile {
  std::string name;
  int n = 0;
  int p = 0;
  std::vector<std::string> vars;
  std::vector<std::pair<std::string, Rational>> params;  // defaults
  std::vector<std::string> components;                   // nonlinear entries
  std::vector<std::string> perturbation;

  std::map<std::string, Rational> parameter_values(
      const std::map<std::string, Rational>& overrides = {}) const;
  // Components with every parameter replaced by its value.
  GermCorank1 germ(const std::map<std::string, Rational>& overrides = {}) const;
  // Components with parameters kept symbolic.
  GermCorank1 symbolic_germ() const;
  bool has_perturbation() const { return !perturbation.empty(); }
  GermCorank1 perturbation_germ() const;
  std::string to_string() const;
};

GermFile parse_germ_file(std::string_view text);
GermFile load_germ_file(const std::string& path);

}  // namespace germlab
