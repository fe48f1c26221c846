#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "germlab/standard_basis.hpp"

namespace germlab {

// nullopt encodes an infinite value.
using Count = std::optional<std::uint64_t>;

std::string count_to_string(const Count& c);

// Removes parameter variables from the ring; they must not occur in any generator.
Ideal strip_parameters(const Ideal& ideal);

Count colength(const Ideal& ideal);
bool germ_is_empty(const Ideal& ideal);
// Krull dimension of the local ring; throws Precondition on an empty germ.
int local_dimension(const Ideal& ideal);

Polynomial determinant(std::vector<std::vector<Polynomial>> matrix);
// All r x r minors of the Jacobian matrix of `gens` with respect to the
// non-parameter variables of their ring.
std::vector<Polynomial> jacobian_minors(const std::vector<Polynomial>& gens, std::size_t r);

enum class MilnorRoute {
  Auto,         // linear elimination first, hypersurface formula when possible
  Hypersurface, // requires elimination down to a single equation
  Chain,        // Le-Greuel recursion on the generators as given
};

struct MilnorOptions {
  MilnorRoute route = MilnorRoute::Auto;
  std::uint64_t seed = 1;
  int max_retries = 12;
};

struct IcisReport {
  int dim = -1;  // -1 for an empty germ
  Count milnor;
  Count tjurina;  // only set when the germ reduces to a hypersurface
  bool is_smooth = false;
  bool is_A1 = false;
  std::string route;  // "smooth", "points", "hypersurface" or "chain"
};

// Milnor number of an isolated complete intersection germ at the origin.
// Throws NonIcis on a dimension mismatch, NonIsolated on an infinite colength.
IcisReport milnor_icis(const Ideal& ideal, int expected_dim, const MilnorOptions& options = {});

// True iff the affine variety is smooth of the given dimension (or empty):
// 1 lies in the ideal plus the maximal minors of its Jacobian.
bool affine_is_smooth(const Ideal& ideal, int expected_dim);

}  // namespace germlab
