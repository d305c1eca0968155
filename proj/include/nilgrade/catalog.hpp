#pragma once

#include "nilgrade/grading.hpp"
#include "nilgrade/lie_algebra.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nilgrade {

enum class Expect { yes, no, unknown };
const char* to_string(Expect value);

/// Verdicts and grading as tabulated for an algebra of dimension <= 6.
struct Expected {
    Expect w = Expect::unknown;
    Expect wh = Expect::unknown;
    std::optional<WeightAssignment> grading;
};

struct CatalogEntry {
    std::string name;
    LieAlgebra algebra;
    Expected expected;
};

/// Every classified algebra of dimension 1..6 in table order. Each entry is checked for the
/// Jacobi identity and nilpotency when the table is first built.
const std::vector<CatalogEntry>& catalog();

/// Throws LookupError (mentioning near matches) for unknown names.
const CatalogEntry& get(std::string_view name);
std::vector<std::string> list_names();
std::vector<const CatalogEntry*> entries_of_dim(int dim);

std::optional<WeightAssignment> expected_grading(std::string_view name);
std::pair<Expect, Expect> expected_verdicts(std::string_view name);

/// Parametric family member, written "family:p1,p2" (e.g. "nmq:5,2", "Ln:4").
struct FamilySpec {
    std::string family;
    std::vector<int> params;
    std::string canonical() const;
};

/// Throws LookupError for an unknown family, ParseError for malformed parameters.
FamilySpec parse_family(std::string_view text);

/// Builds and Jacobi-validates the family member. Throws InputError when parameters are out
/// of range.
///
///   nmq:m,q      m >= 5, 2 <= q <= (m-1)/2; basis X0,X1,X2,Y1..Y_{m-3}
///   nm_odd:m,q   m >= 5, 1 <= q < (m-2)/2;  basis X0..X3,Y1..Y_{m-4}
///   nm_even:m,q  m >= 6, 1 <= q < (m-3)/2
///   nm_top:m     m >= 5
///   Ln:n         n >= 3
///   Rm:m         m >= 5
///   Q2m:m        m >= 3 (dimension 2m)
///   heis:k       k >= 1 (dimension 2k+1)
///   abelian:n    n >= 1
LieAlgebra family(const FamilySpec& spec);

/// Generators X0, X1 and the paired Y's at -1, the rest at -2. Only defined for nmq.
std::optional<WeightAssignment> family_grading(const FamilySpec& spec);

/// Catalog name or family spec.
LieAlgebra resolve(std::string_view name);

} // namespace nilgrade
