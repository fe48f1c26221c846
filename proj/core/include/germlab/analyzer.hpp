#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "germlab/multiple_points.hpp"

namespace germlab {

enum class Verdict { Fails, Candidate };

const char* to_string(Verdict verdict);

struct PartitionRow {
  Partition partition;
  int sigma_sharp = 0;
  int d_k_sigma = 0;
  std::uint64_t class_size = 0;
  SpaceStatus status = SpaceStatus::Empty;
  Count milnor;     // Icis only
  Count colength;   // Point and zero-dimensional spaces
  bool nonempty() const { return status != SpaceStatus::Empty; }
};

struct KRow {
  int k = 0;
  int d_k = 0;
  bool empty = true;
  Count milnor;  // of D^k itself, when nonempty of nonnegative dimension
  std::vector<PartitionRow> partitions;
  Integer mu_alt = 0;

  bool singular() const { return !empty && d_k >= 0 && milnor && *milnor > 0; }
};

struct RuleViolation {
  std::string rule;  // "R1".."R4"
  int k = 0;
  std::optional<Partition> partition;
  std::string observed;
};

struct ZeroDimCount {
  int k = 0;
  Partition partition;
  std::uint64_t count = 0;
};

struct GrpReport {
  std::string germ;
  int n = 0;
  int p = 0;
  std::vector<KRow> rows;
  std::vector<RuleViolation> violations;
  Verdict verdict = Verdict::Candidate;
  std::map<int, Integer> image_betti;  // reduced homology of the image, nonzero ranks
  std::optional<Integer> mu_I;         // p = n + 1 only
  std::vector<ZeroDimCount> zero_dim_counts;
  bool complete = true;                // false when capped before an empty D^k

  const KRow* row(int k) const;
};

struct AnalyzeOptions {
  int max_k = 0;
  MilnorOptions milnor;
};

// Alternating Milnor number of D^k from the per-class data of a finite germ.
Integer mu_alt(const MararMondResult& checks, int k);
Integer mu_alt(const GermCorank1& f, int k, const AnalyzeOptions& options = {});

// Applies the necessary conditions R1-R4 to the rows.
std::vector<RuleViolation> apply_rules(const std::vector<KRow>& rows);

std::map<int, Integer> image_betti(const std::vector<KRow>& rows);
std::vector<ZeroDimCount> zero_dim_stable_counts(const MararMondResult& checks);

// Throws NotAFinite when some multiple point space fails the Marar-Mond test.
GrpReport analyze(const GermCorank1& f, const AnalyzeOptions& options = {});

// Reads GERMLAB_MAX_K; 0 when unset.
int max_k_from_environment();

}  // namespace germlab
