#pragma once

#include "nilgrade/grading.hpp"
#include "nilgrade/lie_algebra.hpp"
#include "nilgrade/search.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace nilgrade {

using Json = nlohmann::ordered_json;

/// {"name": ..., "dim": n, "brackets": [{"i","j","k","c"}]} with c as a rational string.
Json to_json(const LieAlgebra& algebra);
/// Accepts c as a rational string or an integer. Structural problems throw ParseError,
/// malformed entries throw InputError. The Jacobi identity is not checked here.
LieAlgebra algebra_from_json(const Json& doc);

/// Reads a JSON algebra document, then requires the Jacobi identity (ValidationError)
/// and nilpotency (NotNilpotent).
LieAlgebra load_algebra_file(const std::string& path);

/// n×n matrix of rational strings or integers; row a holds the coordinates of the new
/// basis vector Y_a in the old basis.
RationalMatrix matrix_from_json(const Json& doc);
RationalMatrix load_matrix_file(const std::string& path);

Json to_json(const WeightAssignment& w);
WeightAssignment weights_from_json(const Json& doc);
Json to_json(const GradedBettiProfile& profile);
Json to_json(const ConditionReport& report);
Json to_json(const LemmaReport& report);
/// {"mode": "wh"|"w", "bound": D, "found": [[...]], "exhausted": bool, "alarms": [...]}
Json to_json(const SearchOutcome& outcome);
SearchOutcome outcome_from_json(const Json& doc);

Json parse_json_text(std::string_view text, const std::string& what);

} // namespace nilgrade
