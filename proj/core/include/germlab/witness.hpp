#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "germlab/analyzer.hpp"
#include "germlab/real_topology.hpp"

namespace germlab {

enum class WitnessVerdict { Confirmed, Refuted, Inconclusive };

const char* to_string(WitnessVerdict verdict);

struct WitnessClass {
  Partition partition;
  int d_k_sigma = 0;
  std::uint64_t class_size = 0;
  bool complex_smooth = false;
  long long complex_chi = 0;
  RealSpace real;
  std::optional<long long> real_chi;
  // (-1)^{d_k^sigma} chi_Top of the real space, per element of the class.
  std::optional<long long> summand;
  std::optional<bool> chi_matches;
  std::optional<bool> parity_ok;
};

struct WitnessRow {
  int k = 0;
  int d_k = 0;
  std::vector<WitnessClass> classes;
  Integer complex_alt_betti = 0;      // mu_Alt(D^k) of the germ
  std::optional<Rational> real_alt_betti;
  std::optional<bool> alt_matches;
  std::optional<bool> orbits_ok;      // single odd orbit of components
  std::string summary() const;        // e.g. "(0+6+0)/6 = 1"
};

struct WitnessReport {
  std::string germ;
  std::map<std::string, Rational> parameters;
  std::vector<WitnessRow> rows;
  std::vector<std::string> failures;
  WitnessVerdict verdict = WitnessVerdict::Inconclusive;
  GrpReport analysis;
};

// Checks a real perturbation of a CANDIDATE germ. `perturbation` must agree
// with `f` when every parameter is zero; `values` must assign all parameters.
WitnessReport witness_check(const GermCorank1& f, const GermCorank1& perturbation,
                            const std::map<std::string, Rational>& values,
                            const AnalyzeOptions& options = {});

}  // namespace germlab
