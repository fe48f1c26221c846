#include "germlab/witness.hpp"

#include <sstream>

#include "germlab/errors.hpp"

namespace germlab {

const char* to_string(WitnessVerdict verdict) {
  switch (verdict) {
    case WitnessVerdict::Confirmed: return "CONFIRMED";
    case WitnessVerdict::Refuted: return "REFUTED";
    case WitnessVerdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "UNKNOWN";
}

std::string WitnessRow::summary() const {
  std::ostringstream os;
  os << "(";
  bool first = true;
  std::uint64_t factorial = 1;
  for (int i = 2; i <= k; ++i) factorial *= static_cast<std::uint64_t>(i);
  for (const auto& c : classes) {
    if (!first) os << "+";
    first = false;
    if (c.summand)
      os << *c.summand * static_cast<long long>(c.class_size);
    else
      os << "?";
  }
  os << ")/" << factorial << " = ";
  if (real_alt_betti)
    os << real_alt_betti->get_str();
  else
    os << "?";
  return os.str();
}

namespace {

void check_complexification(const GermCorank1& f, const GermCorank1& perturbation) {
  GermCorank1 base = f.has_parameters() ? f.at_origin() : f;
  GermCorank1 zero = perturbation.at_origin();
  auto mismatch = [&](const std::string& why) {
    throw Error(ErrorCode::InvalidArgument,
                "perturbation " + perturbation.name + " does not reduce to " + f.name + ": " + why);
  };
  if (zero.n != base.n || zero.p != base.p) mismatch("dimensions differ");
  if (zero.x_names != base.x_names || zero.z_name != base.z_name) mismatch("variable names differ");
  for (std::size_t i = 0; i < base.components.size(); ++i) {
    Polynomial lhs = zero.components[i].in_ring(base.ring);
    if (!(lhs == base.components[i]))
      mismatch("component " + std::to_string(i + 1) + " is " + lhs.to_string() + " instead of " +
               base.components[i].to_string());
  }
}

const PartitionRow* find_class(const GrpReport& report, int k, const Partition& partition) {
  const KRow* row = report.row(k);
  if (!row) return nullptr;
  for (const auto& p : row->partitions)
    if (p.partition == partition) return &p;
  return nullptr;
}

bool parity_pattern_holds(const RealSpace& real, int d) {
  if (real.kind == RealSpace::Kind::Empty) return true;
  std::vector<std::uint64_t> b = real.betti();
  for (std::size_t i = 1; i < b.size(); ++i)
    if ((static_cast<int>(i) - d) % 2 != 0 && b[i] != 0) return false;
  if (d % 2 != 0 && (b.empty() || b[0] != 1)) return false;
  return true;
}

}  // namespace

WitnessReport witness_check(const GermCorank1& f, const GermCorank1& perturbation,
                            const std::map<std::string, Rational>& values,
                            const AnalyzeOptions& options) {
  WitnessReport report;
  report.germ = f.name;
  report.parameters = values;
  report.analysis = analyze(f, options);
  if (report.analysis.verdict != Verdict::Candidate)
    throw Error(ErrorCode::Precondition,
                f.name + " fails the necessary conditions, so it has no good real perturbation");
  check_complexification(f, perturbation);
  for (const auto& name : perturbation.parameter_names())
    if (!values.count(name))
      throw Error(ErrorCode::UnsubstitutedParameter, "parameter '" + name + "' has no value");
  GermCorank1 fs = perturbation.substitute(values);

  for (int k = 2; k <= max_supported_k(fs); ++k) {
    WitnessRow row;
    row.k = k;
    row.d_k = fs.p - k * (fs.p - fs.n);
    if (row.d_k < 0) break;
    if (const KRow* krow = report.analysis.row(k)) row.complex_alt_betti = krow->mu_alt;

    Rational alt_sum = 0;
    bool all_known = true;
    for (const auto& partition : partitions(k)) {
      MultiplePointSpace space = build_Dk(fs, k, partition);
      space.ideal.local = false;
      WitnessClass cls;
      cls.partition = partition;
      cls.d_k_sigma = space.expected_dim;
      cls.class_size = partition.class_size();
      const int d = cls.d_k_sigma;
      const std::string where = "D^" + std::to_string(k) + " " + partition.to_string();

      bool complex_empty = standard_basis(strip_parameters(space.ideal)).contains_unit();
      if (d < 0)
        cls.complex_smooth = complex_empty;
      else
        cls.complex_smooth = affine_is_smooth(space.ideal, d);
      if (!cls.complex_smooth)
        report.failures.push_back(where + ": complex perturbed space is not smooth of dimension " +
                                  std::to_string(d));

      const PartitionRow* germ_class = find_class(report.analysis, k, partition);
      if (germ_class && germ_class->nonempty() && d >= 0)
        cls.complex_chi = 1 + (d % 2 ? -1 : 1) * static_cast<long long>(*germ_class->milnor);

      if (complex_empty) {
        cls.real.kind = RealSpace::Kind::Empty;
      } else if (d >= 0) {
        cls.real = classify_real(strip_parameters(space.ideal).generators);
      } else {
        cls.real.detail = "complex space not empty";
      }
      if (cls.real.known()) {
        cls.real_chi = cls.real.chi();
        cls.summand = (d % 2 ? -1 : 1) * *cls.real_chi;
        cls.chi_matches = *cls.real_chi == cls.complex_chi;
        if (!*cls.chi_matches)
          report.failures.push_back(where + ": chi_Top real " + std::to_string(*cls.real_chi) +
                                    " != complex " + std::to_string(cls.complex_chi));
        if (d >= 0) {
          cls.parity_ok = parity_pattern_holds(cls.real, d);
          if (!*cls.parity_ok)
            report.failures.push_back(where + ": Betti parity pattern violated by " +
                                      cls.real.describe());
        }
        alt_sum += Rational(static_cast<long>(cls.class_size)) * Rational(static_cast<long>(*cls.summand));
      } else {
        all_known = false;
      }
      row.classes.push_back(std::move(cls));
    }

    if (all_known) {
      Integer factorial = 1;
      for (int i = 2; i <= k; ++i) factorial *= i;
      row.real_alt_betti = alt_sum / Rational(factorial);
      row.alt_matches = *row.real_alt_betti == Rational(row.complex_alt_betti);
      if (!*row.alt_matches)
        report.failures.push_back("D^" + std::to_string(k) + ": alternating Betti number real " +
                                  row.real_alt_betti->get_str() + " != complex " +
                                  row.complex_alt_betti.get_str());
    }
    const WitnessClass& identity = row.classes.front();
    if (row.complex_alt_betti > 0 && row.d_k > 0 && identity.real.known()) {
      std::vector<std::uint64_t> b = identity.real.betti();
      std::uint64_t components = b.empty() ? 0 : b[0];
      row.orbits_ok = components % 2 == 1 && (row.d_k % 2 == 0 || components == 1);
      if (!*row.orbits_ok)
        report.failures.push_back("D^" + std::to_string(k) + ": real space has " +
                                  std::to_string(components) + " components");
    }
    report.rows.push_back(std::move(row));
  }

  bool inconclusive = false;
  for (const auto& row : report.rows) {
    if (!row.alt_matches) inconclusive = true;
    for (const auto& c : row.classes)
      if (!c.real.known()) inconclusive = true;
  }
  if (!report.failures.empty())
    report.verdict = WitnessVerdict::Refuted;
  else if (inconclusive)
    report.verdict = WitnessVerdict::Inconclusive;
  else
    report.verdict = WitnessVerdict::Confirmed;
  return report;
}

}  // namespace germlab
