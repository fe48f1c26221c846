#pragma once

#include <string>
#include <utility>
#include <vector>

#include "germlab/polynomial.hpp"

namespace germlab {

// Variable list obtained from `vars` by replacing `var` in place with `fresh`.
VarListPtr split_variable(const VarListPtr& vars, std::string_view var,
                          const std::vector<std::string>& fresh);

// Complete homogeneous symmetric polynomial of degree m in the given variables.
Polynomial complete_homogeneous(const VarListPtr& vars, const std::vector<std::size_t>& indices,
                                unsigned m);

// q with f(var=u) - f(var=w) = (u - w) q. The result lives over
// split_variable(f.vars(), var, {u, w}).
Polynomial divided_difference(const Polynomial& f, std::string_view var,
                              const std::pair<std::string, std::string>& fresh);

// The j-th entry (1-based) is the j-th divided difference of f in fresh[0..j].
// All entries live over split_variable(f.vars(), var, fresh).
std::vector<Polynomial> iterated_divided_difference(const Polynomial& f, std::string_view var,
                                                    const std::vector<std::string>& fresh);

}  // namespace germlab
