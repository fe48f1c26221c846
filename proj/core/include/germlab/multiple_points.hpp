#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "germlab/local_algebra.hpp"

namespace germlab {

// Cycle type of a permutation in S_k, parts weakly decreasing.
struct Partition {
  std::vector<int> parts;

  int k() const;
  int cycles() const { return static_cast<int>(parts.size()); }  // sigma^#
  bool is_identity() const;
  int sign() const;  // (-1)^(k - cycles)
  std::uint64_t class_size() const;
  std::string to_string() const;  // e.g. "(2,1)"

  static Partition identity(int k);
  bool operator==(const Partition&) const = default;
};

// All partitions of k, identity (1,..,1) first.
std::vector<Partition> partitions(int k);

// Images (0-based) of the canonical permutation: cycles in decreasing length on
// consecutive blocks, each cycle a -> a+1 -> ... -> a.
std::vector<int> canonical_permutation(const Partition& partition);

struct ExpectedDims {
  int d_k;
  int d_k_sigma;
  int sigma_sharp;
};

ExpectedDims expected_dims(int n, int p, int k, const Partition& partition);

// Corank-one germ f(x, z) = (x, g_1, .., g_{p-n+1}).
struct GermCorank1 {
  std::string name;
  int n = 0;
  int p = 0;
  VarListPtr ring;                    // x_1..x_{n-1}, z, parameters
  std::vector<std::string> x_names;
  std::string z_name;
  std::vector<Polynomial> components;  // g_1..g_{p-n+1}

  std::vector<std::string> parameter_names() const { return ring->parameter_names(); }
  bool has_parameters() const;

  // Checks component count and vanishing at 0 with parameters set to zero.
  // A component linear in z makes f an immersion; every D^k is then empty.
  void validate() const;
  // Substitutes the given parameters and drops them from the ring.
  GermCorank1 substitute(const std::map<std::string, Rational>& values) const;
  // All parameters set to zero.
  GermCorank1 at_origin() const;
  std::string to_string() const;
};

GermCorank1 make_germ(std::string name, int n, int p, const std::vector<std::string>& x_names,
                      const std::string& z_name, const std::vector<std::string>& components,
                      const std::vector<std::string>& params = {});

struct MultiplePointSpace {
  int k = 0;
  Partition partition;
  Ideal ideal;  // over x_1..x_{n-1}, z_1..z_k (and any parameters)
  int d_k = 0;
  int expected_dim = 0;  // d_k^sigma
  int sigma_sharp = 0;
};

MultiplePointSpace build_Dk(const GermCorank1& f, int k, const Partition& partition);

enum class SpaceStatus {
  Empty,      // germ at the origin is empty
  Icis,       // ICIS of the expected dimension, milnor set
  Point,      // expected dimension < 0 and the germ is the origin
  Violation,  // wrong dimension or non-isolated
};

const char* to_string(SpaceStatus status);

struct SpaceCheck {
  int k = 0;
  Partition partition;
  int d_k = 0;
  int d_k_sigma = 0;
  SpaceStatus status = SpaceStatus::Empty;
  std::optional<IcisReport> icis;
  Count colength;          // for Point and zero-dimensional spaces
  int actual_dim = -1;
  std::string detail;      // reason for a violation
};

struct MararMondOptions {
  int max_k = 0;  // 0: run to the first empty D^k
  MilnorOptions milnor;
};

struct MararMondResult {
  std::vector<SpaceCheck> entries;
  int first_empty_k = 0;   // 0 when the cap was hit first
  bool finite = true;      // no violations

  const SpaceCheck* find(int k, const Partition& partition) const;
};

// Hard limit on k regardless of options, to keep rings within kMaxVariables.
int max_supported_k(const GermCorank1& f);

MararMondResult marar_mond_check(const GermCorank1& f, const MararMondOptions& options = {});

}  // namespace germlab
