#include "render.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

namespace germlab::cli {

namespace {

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

std::string optional_value(const std::optional<TableValue>& v) { return v ? v->to_string() : "?"; }

std::string ranks(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

}  // namespace

void render(std::ostream& os, const GermCorank1& f, const GrpReport& report, bool rules_only) {
  os << f.to_string() << "   n=" << report.n << " p=" << report.p << "\n";
  if (!rules_only) {
    for (const auto& row : report.rows) {
      os << "k=" << row.k << "  d_k=" << row.d_k;
      if (row.empty) {
        os << "  D^" << row.k << " empty\n";
        continue;
      }
      os << "  mu(D^" << row.k << ")=" << count_to_string(row.milnor) << "  mu_Alt=" << row.mu_alt.get_str()
         << "\n";
      for (const auto& p : row.partitions) {
        os << "    " << pad(p.partition.to_string(), 12) << "d=" << pad(std::to_string(p.d_k_sigma), 4)
           << pad(to_string(p.status), 7);
        if (p.milnor) os << " mu=" << count_to_string(p.milnor);
        if (p.colength) os << " colength=" << count_to_string(p.colength);
        os << "\n";
      }
    }
    if (!report.complete) os << "stopped at the k cap before an empty D^k\n";
    os << "image Betti:";
    if (report.image_betti.empty()) os << " none";
    for (const auto& [deg, rank] : report.image_betti) os << " b_" << deg << "=" << rank.get_str();
    os << "\n";
    if (report.mu_I) os << "mu_I = " << report.mu_I->get_str() << "\n";
    if (!report.zero_dim_counts.empty()) {
      os << "zero-dimensional stable types:";
      for (const auto& z : report.zero_dim_counts)
        os << " D^" << z.k << z.partition.to_string() << "=" << z.count;
      os << "\n";
    }
  }
  for (const auto& v : report.violations) {
    os << "violation " << v.rule << " at k=" << v.k;
    if (v.partition) os << " " << v.partition->to_string();
    os << ": " << v.observed << "\n";
  }
  os << "verdict: " << to_string(report.verdict) << "\n";
}

void render(std::ostream& os, const WitnessReport& report) {
  os << "witness for " << report.germ << " at";
  for (const auto& [name, value] : report.parameters) os << " " << name << "=" << rational_to_string(value);
  os << "\n";
  for (const auto& row : report.rows) {
    os << "k=" << row.k << "  d_k=" << row.d_k << "  complex Abeta=" << row.complex_alt_betti.get_str()
       << "  real Abeta=" << row.summary() << "\n";
    for (const auto& c : row.classes) {
      os << "    " << pad(c.partition.to_string(), 12) << "d=" << pad(std::to_string(c.d_k_sigma), 4)
         << (c.complex_smooth ? "smooth  " : "SINGULAR") << "  chi_C=" << pad(std::to_string(c.complex_chi), 4)
         << " real " << pad(c.real.describe(), 12);
      if (c.real.form.positive + c.real.form.negative + c.real.form.zero > 0)
        os << " signature (" << c.real.form.positive << "," << c.real.form.negative << "," << c.real.form.zero
           << ")";
      if (c.real_chi) os << " chi_R=" << *c.real_chi;
      os << "\n";
    }
  }
  for (const auto& f : report.failures) os << "failure: " << f << "\n";
  os << "verdict: " << to_string(report.verdict) << "\n";
}

void render(std::ostream& os, const std::vector<TableRow>& rows) {
  os << pad("Name", 9) << pad("f(x,y,z)", 40) << pad("mu(D2)", 9) << pad("mu(D3)", 9) << pad("codim", 6)
     << pad("mu_I", 9) << pad("verdict", 10) << "check\n";
  for (const auto& r : rows) {
    const CatalogEntry& e = r.entry;
    std::string formula = e.formula();
    if (!e.parameters.empty()) {
      formula += " [";
      bool first = true;
      for (const auto& [name, value] : e.parameters) {
        formula += (first ? "" : " ") + name + "=" + rational_to_string(value);
        first = false;
      }
      formula += "]";
    }
    auto both = [](const std::string& expected, const std::string& got) {
      return expected == got ? got : expected + "/" + got;
    };
    std::string mu_i_expected = e.mu_image ? std::to_string(*e.mu_image) + (e.merged_columns ? "*" : "") : "";
    std::string mu_i_got = r.mu_image ? r.mu_image->get_str() : "?";
    os << pad(e.name, 9) << pad(formula, 40) << pad(both(optional_value(e.mu_d2), optional_value(r.mu_d2)), 9)
       << pad(both(optional_value(e.mu_d3), optional_value(r.mu_d3)), 9)
       << pad(e.ae_codim ? std::to_string(*e.ae_codim) : "", 6)
       << pad(e.mu_image && mu_i_got == std::to_string(*e.mu_image) ? mu_i_got : mu_i_expected + "/" + mu_i_got, 9)
       << pad(r.report ? to_string(r.report->verdict) : "ERROR", 10);
    if (!r.error.empty())
      os << "error: " << r.error;
    else if (r.mismatches.empty())
      os << "ok";
    else
      for (std::size_t i = 0; i < r.mismatches.size(); ++i) os << (i ? "; " : "") << r.mismatches[i];
    os << "\n";
  }
  bool merged = false;
  for (const auto& r : rows) merged = merged || r.entry.merged_columns;
  if (merged) os << "* codimension and mu_I are listed as one merged column\n";
  os << "entries expected/computed are shown where they differ\n";
  std::size_t candidates = 0;
  os << "CANDIDATE:";
  for (const auto& r : rows)
    if (r.report && r.report->verdict == Verdict::Candidate) {
      os << " " << r.entry.name;
      ++candidates;
    }
  if (candidates == 0) os << " none";
  os << "\n";
}

void render(std::ostream& os, const std::vector<HomologyGroup>& groups, const Coefficients& coeff) {
  if (groups.empty()) os << "empty complex\n";
  for (std::size_t d = 0; d < groups.size(); ++d) {
    os << "H_" << d << " = ";
    if (coeff.kind == Coefficients::Kind::Integers)
      os << groups[d].to_string();
    else
      os << coeff.to_string() << "^" << groups[d].rank;
    os << "\n";
  }
}

void render(std::ostream& os, const AltHomologyResult& r) {
  for (std::size_t d = 0; d < r.integral.size(); ++d)
    os << "AH_" << d << " = " << r.integral[d].to_string() << "   rank over " << r.field.to_string() << ": "
       << r.field_ranks[d] << "   alternating cells: " << r.chain_ranks[d] << "\n";
  os << "chi_Top = " << r.chi_top << "  chi_Alt = " << r.chi_alt << "\n";
}

void render(std::ostream& os, const FixedPointFormula& f) {
  for (const auto& t : f.terms)
    os << "  " << pad(t.cycle_type, 12) << t.elements << " elements, signed chi sum " << t.signed_chi << "\n";
  os << "chi_Alt = " << f.to_string() << "\n";
}

void render(std::ostream& os, const char* title, const InequalityLedger& ledger) {
  os << title << " over F" << ledger.p << ": X " << ranks(ledger.space) << ", X^G " << ranks(ledger.fixed)
     << "\n";
  for (const auto& l : ledger.lines)
    os << "  N=" << l.N << ": " << l.lhs << " >= " << l.rhs << (l.holds() ? "" : "   FAILS") << "\n";
  os << (ledger.holds() ? "holds" : "FAILS") << "\n";
}

void render(std::ostream& os, const SpecialRanks& r) {
  os << "rho = (1-g)^" << r.i << ", rho_bar = (1-g)^" << (r.p - r.i) << " over F" << r.p << "\n";
  os << "  d  alt = fixed + rho_bar + rho   a  a_bar  AH(X)  AH(X^G)  exact\n";
  for (const auto& d : r.degrees)
    os << "  " << d.d << "  " << d.alt << " = " << d.fixed << " + " << d.rho_bar << " + " << d.rho << "   "
       << d.a << "  " << d.a_bar << "  " << d.ah << "  " << d.ah_fixed << "  " << (d.exact() ? "yes" : "NO")
       << (d.bounds ? "" : " (bound fails)") << "\n";
  if (!r.orbit_hypothesis) os << "some G-stable sigma orbit is not fixed simplexwise\n";
  os << (r.exact() ? "rank check exact" : "rank check FAILS") << "\n";
}

}  // namespace germlab::cli
