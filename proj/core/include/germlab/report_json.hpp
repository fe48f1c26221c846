#pragma once

#include <string>
#include <vector>

#include "germlab/catalog.hpp"
#include "germlab/smith_theory.hpp"
#include "germlab/witness.hpp"

namespace germlab {

// Machine-readable reports; field names follow the C++ members.
std::string to_json(const GrpReport& report);
std::string to_json(const WitnessReport& report);
std::string to_json(const std::vector<TableRow>& rows);
std::string to_json(const std::vector<HomologyGroup>& groups, const Coefficients& coeff);
std::string to_json(const AltHomologyResult& result);
std::string to_json(const FixedPointFormula& formula);
std::string to_json(const InequalityLedger& ledger);
std::string to_json(const SpecialRanks& ranks);

}  // namespace germlab
