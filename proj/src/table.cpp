#include "nilgrade/table.hpp"

#include "nilgrade/errors.hpp"

#include <iomanip>
#include <sstream>

namespace nilgrade {

const char* to_string(Agreement value) {
    switch (value) {
    case Agreement::match: return "match";
    case Agreement::mismatch: return "mismatch";
    case Agreement::paper_unknown: return "paper-unknown";
    }
    return "?";
}

bool TableReport::ok() const {
    for (const auto& row : rows)
        if (row.hard_failure) return false;
    return true;
}

namespace {

Agreement compare(Expect paper, bool found) {
    if (paper == Expect::unknown) return Agreement::paper_unknown;
    return (paper == Expect::yes) == found ? Agreement::match : Agreement::mismatch;
}

std::string cell(const SearchOutcome& outcome) {
    if (!outcome.found.empty()) return outcome.found.front().to_csv();
    return "none found (bound " + std::to_string(outcome.bound) + ")";
}

} // namespace

TableReport reproduce_table(int dim, std::optional<int> bound, int jobs) {
    if (dim < 1 || dim > 6) throw InputError("table dimension must be in 1..6, got " + std::to_string(dim));
    TableReport report;
    report.dim = dim;
    report.bound = bound.value_or(2 * dim);
    for (const CatalogEntry* entry : entries_of_dim(dim)) {
        TableRow row;
        row.name = entry->name;
        row.expected = entry->expected;
        row.p_filiform = p_filiform_degree(entry->algebra);
        row.w = find_grading(entry->algebra, report.bound, Mode::w, jobs);
        row.wh = find_grading(entry->algebra, report.bound, Mode::wh, jobs);

        row.w_agreement = compare(row.expected.w, !row.w.found.empty());
        row.wh_agreement = compare(row.expected.wh, !row.wh.found.empty());
        if (row.w_agreement == Agreement::mismatch) {
            row.hard_failure = true;
            row.notes.push_back("(W) verdict disagrees with the table");
        }
        if (row.wh_agreement == Agreement::mismatch) {
            row.hard_failure = true;
            row.notes.push_back("(W)+(H) verdict disagrees with the table");
        }
        if (row.expected.w == Expect::unknown)
            row.notes.push_back(std::string("(W) unresolved in paper; basis-diagonal search: ") + cell(row.w));

        if (row.expected.grading) {
            row.expected_check = check_conditions(entry->algebra, *row.expected.grading);
            const auto& check = *row.expected_check;
            const bool w_ok = check.homogeneous && check.w == Verdict::pass;
            const bool h_ok = check.h == (row.expected.wh == Expect::yes ? Verdict::pass : Verdict::fail);
            if (!w_ok || !h_ok) {
                row.hard_failure = true;
                row.notes.push_back("tabulated grading " + row.expected.grading->to_csv() +
                                    " does not verify with the tabulated verdicts");
            }
        }
        for (const auto* outcome : {&row.w, &row.wh})
            for (const auto& alarm : outcome->alarms) {
                row.hard_failure = true;
                row.notes.push_back(alarm);
            }

        if (row.w_agreement == Agreement::mismatch || row.wh_agreement == Agreement::mismatch)
            row.agreement = Agreement::mismatch;
        else if (row.w_agreement == Agreement::paper_unknown || row.wh_agreement == Agreement::paper_unknown)
            row.agreement = Agreement::paper_unknown;
        else
            row.agreement = Agreement::match;
        report.rows.push_back(std::move(row));
    }
    return report;
}

Json to_json(const TableReport& report) {
    Json rows = Json::array();
    for (const auto& row : report.rows) {
        Json expected = {{"W", to_string(row.expected.w)}, {"WH", to_string(row.expected.wh)}};
        expected["grading"] = row.expected.grading ? to_json(*row.expected.grading) : Json();
        Json r = {{"name", row.name},
                  {"p_filiform", row.p_filiform ? Json(*row.p_filiform) : Json()},
                  {"W", to_json(row.w)},
                  {"WH", to_json(row.wh)},
                  {"expected", expected},
                  {"W_agreement", to_string(row.w_agreement)},
                  {"WH_agreement", to_string(row.wh_agreement)},
                  {"agreement", to_string(row.agreement)},
                  {"hard_failure", row.hard_failure},
                  {"notes", row.notes}};
        if (row.expected_check) r["expected_check"] = to_json(*row.expected_check);
        rows.push_back(std::move(r));
    }
    return {{"dim", report.dim},
            {"bound", report.bound},
            {"basis_diagonal", true},
            {"ok", report.ok()},
            {"rows", rows}};
}

std::string to_text(const TableReport& report) {
    std::ostringstream out;
    out << "dimension " << report.dim << ", bound " << report.bound
        << " (negative results are basis-diagonal only)\n";
    out << std::left << std::setw(11) << "name" << std::setw(4) << "p" << std::setw(26) << "W" << std::setw(26)
        << "WH" << std::setw(14) << "expected"
        << "agreement\n";
    for (const auto& row : report.rows) {
        const std::string paper = std::string(to_string(row.expected.w)) + "/" + to_string(row.expected.wh);
        out << std::setw(11) << row.name << std::setw(4) << (row.p_filiform ? std::to_string(*row.p_filiform) : "-")
            << std::setw(26) << cell(row.w) << std::setw(26) << cell(row.wh) << std::setw(14) << paper
            << to_string(row.agreement) << (row.hard_failure ? "  FAILURE" : "") << "\n";
        for (const auto& note : row.notes) out << "    " << note << "\n";
    }
    out << (report.ok() ? "table agrees with the reference verdicts\n" : "table disagrees with the reference verdicts\n");
    return out.str();
}

} // namespace nilgrade
