#pragma once

#include <string>

#include "germlab/simplicial_complex.hpp"

namespace germlab {

// JSON complex format:
//   {"vertices": [...], "facets": [[i, j, ...], ...],
//    "k": 3, "sigma_generators": [[perm], ...], "sigma_elements": [[perm], ...],
//    "g_action": [perm], "p": 2}
// Vertices may be any JSON values and are kept as display labels. Without
// "sigma_elements", generator i stands for the transposition (i i+1) of
// Sigma_k and k defaults to the number of generators plus one.
SimplicialGComplex complex_from_json(const std::string& text);
SimplicialGComplex load_complex(const std::string& path);
std::string complex_to_json(const SimplicialGComplex& x);

}  // namespace germlab
