#pragma once

#include "nilgrade/catalog.hpp"
#include "nilgrade/io.hpp"
#include "nilgrade/search.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nilgrade {

enum class Agreement { match, mismatch, paper_unknown };
const char* to_string(Agreement value);

struct TableRow {
    std::string name;
    std::optional<int> p_filiform;
    SearchOutcome w;  ///< first (W) grading within the bound
    SearchOutcome wh; ///< first (W)+(H) grading within the bound
    Expected expected;
    /// check_conditions on the tabulated grading, when one is listed.
    std::optional<ConditionReport> expected_check;
    Agreement w_agreement = Agreement::paper_unknown;
    Agreement wh_agreement = Agreement::paper_unknown;
    Agreement agreement = Agreement::paper_unknown;
    bool hard_failure = false;
    std::vector<std::string> notes;
};

struct TableReport {
    int dim = 0;
    int bound = 0;
    std::vector<TableRow> rows;
    bool ok() const;
};

/// Runs both searches on every catalog entry of dimension `dim` and compares with the
/// tabulated verdicts. bound defaults to 2·dim. Output order is catalog order.
TableReport reproduce_table(int dim, std::optional<int> bound = std::nullopt, int jobs = 1);

Json to_json(const TableReport& report);
std::string to_text(const TableReport& report);

} // namespace nilgrade
