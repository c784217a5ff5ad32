#pragma once

#include <string>

#include <json.hpp>

#include "binsum/identities.hpp"

namespace binsum {

/// JSON shape:
///   {"identity": str, "grid": object, "checked": int, "passed": int,
///    "counterexamples": [{"params": object, "lhs": str, "rhs": str}, ...],
///    "elapsed_ms": int}
/// Two-form identities additionally carry "form", "corrected_form_passes"
/// and "printed_form_passes". All ring values are exact strings: integers
/// as decimal, rationals as "p/q", quadratic elements as "a+b*sqrt(d)".
nlohmann::ordered_json report_json(const IdentityReport& report);

/// Row listing as JSON: {"identity": str, "grid": object, "rows": [...]}.
nlohmann::ordered_json table_json(const std::string& identity,
                                  const std::vector<std::pair<std::string, std::string>>& grid,
                                  std::span<const TableRow> rows);

/// Deterministic CSV with header "params...,lhs,rhs,equal"; no timing data.
std::string table_csv(std::span<const TableRow> rows);

}  // namespace binsum
