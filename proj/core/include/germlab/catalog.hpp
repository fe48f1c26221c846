#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "germlab/analyzer.hpp"

namespace germlab {

// A Milnor number column entry; `empty` stands for the dash of an empty germ.
struct TableValue {
  bool empty = false;
  std::uint64_t value = 0;

  static TableValue dash() { return {true, 0}; }
  static TableValue of(std::uint64_t v) { return {false, v}; }
  std::string to_string() const;
  bool operator==(const TableValue&) const = default;
};

// A row of the classification tables of corank-one germs (C^3,0) -> (C^4,0).
struct CatalogEntry {
  std::string table;   // "simple" or "nonsimple"
  std::string family;  // "A", "P3", "S", "V", ...
  std::string name;    // "A_2", "P_3^2", "S_{1,2}", "V"
  std::vector<int> indices;
  std::map<std::string, Rational> parameters;
  std::vector<std::string> components;  // the two nonlinear entries
  std::optional<TableValue> mu_d2;
  std::optional<TableValue> mu_d3;
  std::optional<std::uint64_t> ae_codim;
  std::optional<std::uint64_t> mu_image;
  bool merged_columns = false;  // codimension and mu_I share a cell
  std::string condition;

  GermCorank1 germ() const;
  std::string formula() const;  // "(x,y,z^2,z*(z^2+x^2+y^2))"
};

std::vector<std::string> simple_families();
std::vector<std::string> nonsimple_rows();

// Throws InvalidArgument when the indices violate the family's condition.
CatalogEntry simple_entry(const std::string& family, int k, int j = 0);
// Parameters missing from `values` take the sample values of the row.
CatalogEntry nonsimple_entry(const std::string& row, const std::map<std::string, Rational>& values = {});

std::vector<CatalogEntry> default_simple_catalog();
std::vector<CatalogEntry> default_nonsimple_catalog();

struct TableRow {
  CatalogEntry entry;
  std::optional<GrpReport> report;
  std::string error;
  std::optional<TableValue> mu_d2;
  std::optional<TableValue> mu_d3;
  std::optional<Integer> mu_image;
  std::vector<std::string> mismatches;

  bool matches() const { return error.empty() && mismatches.empty(); }
};

TableRow compute_row(const CatalogEntry& entry, const AnalyzeOptions& options = {});
// Rows are computed concurrently and returned in input order.
std::vector<TableRow> compute_table(const std::vector<CatalogEntry>& entries,
                                    const AnalyzeOptions& options = {});

}  // namespace germlab
