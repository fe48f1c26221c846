#pragma once

#include <iosfwd>
#include <vector>

#include "germlab/catalog.hpp"
#include "germlab/smith_theory.hpp"
#include "germlab/witness.hpp"

namespace germlab::cli {

void render(std::ostream& os, const GermCorank1& f, const GrpReport& report, bool rules_only);
void render(std::ostream& os, const WitnessReport& report);
void render(std::ostream& os, const std::vector<TableRow>& rows);
void render(std::ostream& os, const std::vector<HomologyGroup>& groups, const Coefficients& coeff);
void render(std::ostream& os, const AltHomologyResult& result);
void render(std::ostream& os, const FixedPointFormula& formula);
void render(std::ostream& os, const char* title, const InequalityLedger& ledger);
void render(std::ostream& os, const SpecialRanks& ranks);

}  // namespace germlab::cli
