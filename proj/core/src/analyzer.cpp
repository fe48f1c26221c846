#include "germlab/analyzer.hpp"

#include <cstdlib>

#include "germlab/errors.hpp"

namespace germlab {

const char* to_string(Verdict verdict) {
  return verdict == Verdict::Candidate ? "CANDIDATE" : "FAILS";
}

const KRow* GrpReport::row(int k) const {
  for (const auto& r : rows)
    if (r.k == k) return &r;
  return nullptr;
}

Integer mu_alt(const MararMondResult& checks, int k) {
  Integer numerator = 0;
  Integer factorial = 1;
  for (int i = 2; i <= k; ++i) factorial *= i;
  bool any = false;
  for (const auto& e : checks.entries) {
    if (e.k != k) continue;
    any = true;
    if (e.status == SpaceStatus::Violation)
      throw Error(ErrorCode::NotAFinite, "D^" + std::to_string(k) + " fails the Marar-Mond test at " +
                                             e.partition.to_string());
    if (e.status == SpaceStatus::Empty) continue;
    Integer size = static_cast<unsigned long>(e.partition.class_size());
    if (e.d_k_sigma >= 0) {
      numerator += size * static_cast<unsigned long>(*e.icis->milnor);
    } else {
      // beta_0 of a nonempty germ is 1.
      numerator -= (e.d_k_sigma % 2 ? -1 : 1) * size;
    }
  }
  if (!any) throw Error(ErrorCode::Precondition, "no data for k = " + std::to_string(k));
  if (numerator % factorial != 0)
    throw Error(ErrorCode::NonIntegral, "alternating Milnor number of D^" + std::to_string(k) + " is " +
                                            numerator.get_str() + "/" + factorial.get_str());
  return numerator / factorial;
}

Integer mu_alt(const GermCorank1& f, int k, const AnalyzeOptions& options) {
  MararMondOptions mm{options.max_k, options.milnor};
  MararMondResult checks = marar_mond_check(f, mm);
  if (!checks.finite) throw Error(ErrorCode::NotAFinite, f.name + " is not finitely determined");
  for (const auto& e : checks.entries)
    if (e.k == k) return mu_alt(checks, k);
  return 0;
}

std::vector<RuleViolation> apply_rules(const std::vector<KRow>& rows) {
  std::vector<RuleViolation> out;
  bool some_singular = false;
  for (const auto& row : rows) {
    if (row.d_k > 0 && row.singular()) some_singular = true;
  }
  for (const auto& row : rows) {
    if (!(row.d_k > 0 && row.singular())) continue;
    if (*row.milnor != 1)
      out.push_back({"R1", row.k, std::nullopt, "mu(D^" + std::to_string(row.k) + ")=" +
                                                    std::to_string(*row.milnor)});
    for (const auto& part : row.partitions) {
      if (part.partition.is_identity()) continue;
      if (part.d_k_sigma >= 0) {
        bool ok = part.status == SpaceStatus::Icis && part.milnor && *part.milnor == 1;
        if (!ok) {
          std::string observed = part.status == SpaceStatus::Icis
                                     ? "mu=" + count_to_string(part.milnor)
                                     : std::string(to_string(part.status));
          out.push_back({"R2", row.k, part.partition, observed});
        }
      } else if (part.d_k_sigma < -1) {
        out.push_back({"R3", row.k, part.partition, "d_k^sigma=" + std::to_string(part.d_k_sigma)});
      }
    }
  }
  if (some_singular) {
    for (const auto& row : rows)
      if (row.d_k < row.k - 2 && !row.empty)
        out.push_back({"R4", row.k, std::nullopt,
                       "D^" + std::to_string(row.k) + " nonempty with d_k=" + std::to_string(row.d_k)});
  }
  return out;
}

std::map<int, Integer> image_betti(const std::vector<KRow>& rows) {
  std::map<int, Integer> out;
  for (const auto& row : rows) {
    if (row.empty || row.mu_alt == 0) continue;
    out[row.d_k + row.k - 1] += row.mu_alt;
  }
  return out;
}

std::vector<ZeroDimCount> zero_dim_stable_counts(const MararMondResult& checks) {
  std::vector<ZeroDimCount> out;
  for (const auto& e : checks.entries) {
    if (e.d_k_sigma != 0) continue;
    std::uint64_t count = 0;
    if (e.status != SpaceStatus::Empty) {
      if (!e.colength)
        throw Error(ErrorCode::NotAFinite, "zero-dimensional space with infinite colength at k=" +
                                               std::to_string(e.k) + " " + e.partition.to_string());
      count = *e.colength;
    }
    out.push_back({e.k, e.partition, count});
  }
  return out;
}

GrpReport analyze(const GermCorank1& germ, const AnalyzeOptions& options) {
  GermCorank1 f = germ.has_parameters() ? germ.at_origin() : germ;
  MararMondResult checks = marar_mond_check(f, {options.max_k, options.milnor});
  if (!checks.finite) {
    std::string where;
    for (const auto& e : checks.entries)
      if (e.status == SpaceStatus::Violation) {
        where = "k=" + std::to_string(e.k) + " " + e.partition.to_string() + ": " + e.detail;
        break;
      }
    throw Error(ErrorCode::NotAFinite, f.name + " fails the Marar-Mond criterion (" + where + ")");
  }

  GrpReport report;
  report.germ = f.name;
  report.n = f.n;
  report.p = f.p;
  report.complete = checks.first_empty_k != 0;
  for (const auto& e : checks.entries) {
    if (report.rows.empty() || report.rows.back().k != e.k) {
      KRow row;
      row.k = e.k;
      row.d_k = e.d_k;
      report.rows.push_back(row);
    }
    KRow& row = report.rows.back();
    PartitionRow part;
    part.partition = e.partition;
    part.sigma_sharp = e.partition.cycles();
    part.d_k_sigma = e.d_k_sigma;
    part.class_size = e.partition.class_size();
    part.status = e.status;
    if (e.icis) part.milnor = e.icis->milnor;
    part.colength = e.colength;
    if (e.partition.is_identity()) {
      row.empty = e.status == SpaceStatus::Empty;
      row.milnor = part.milnor;
    }
    row.partitions.push_back(part);
  }
  for (auto& row : report.rows)
    if (!row.empty) row.mu_alt = mu_alt(checks, row.k);

  report.violations = apply_rules(report.rows);
  report.verdict = report.violations.empty() ? Verdict::Candidate : Verdict::Fails;
  report.image_betti = image_betti(report.rows);
  if (f.p == f.n + 1) {
    Integer total = 0;
    for (const auto& row : report.rows) total += row.mu_alt;
    report.mu_I = total;
  }
  report.zero_dim_counts = zero_dim_stable_counts(checks);
  return report;
}

int max_k_from_environment() {
  const char* value = std::getenv("GERMLAB_MAX_K");
  if (!value || !*value) return 0;
  char* end = nullptr;
  long k = std::strtol(value, &end, 10);
  if (*end != '\0' || k < 0 || k > 64)
    throw Error(ErrorCode::InvalidArgument, std::string("GERMLAB_MAX_K must be a small integer, got '") +
                                                value + "'");
  return static_cast<int>(k);
}

}  // namespace germlab
