#include "nilgrade/io.hpp"

#include "nilgrade/errors.hpp"

#include <fstream>
#include <sstream>

namespace nilgrade {

namespace {

Scalar scalar_from_json(const Json& value, const std::string& where) {
    if (value.is_string()) return parse_scalar(value.get<std::string>());
    if (value.is_number_integer()) return Scalar(std::to_string(value.get<long long>()));
    throw ParseError(where + ": expected a rational string or an integer");
}

int int_field(const Json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
    const Json& v = obj.at(key);
    if (!v.is_number_integer()) throw ParseError(where + ": field '" + key + "' must be an integer");
    return v.get<int>();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

Json parse_json_text(std::string_view text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(what + ": " + e.what());
    }
}

Json to_json(const LieAlgebra& algebra) {
    Json brackets = Json::array();
    for (const auto& e : algebra.brackets())
        brackets.push_back({{"i", e.i}, {"j", e.j}, {"k", e.k}, {"c", to_string(e.c)}});
    return {{"name", algebra.name()}, {"dim", algebra.dim()}, {"brackets", brackets}};
}

LieAlgebra algebra_from_json(const Json& doc) {
    if (!doc.is_object()) throw ParseError("algebra document must be a JSON object");
    std::string name = "unnamed";
    if (doc.contains("name")) {
        if (!doc.at("name").is_string()) throw ParseError("field 'name' must be a string");
        name = doc.at("name").get<std::string>();
    }
    const int dim = int_field(doc, "dim", "algebra document");
    std::vector<BracketEntry> entries;
    if (doc.contains("brackets")) {
        const Json& list = doc.at("brackets");
        if (!list.is_array()) throw ParseError("field 'brackets' must be an array");
        for (std::size_t t = 0; t < list.size(); ++t) {
            const std::string where = "bracket #" + std::to_string(t + 1);
            const Json& b = list[t];
            if (!b.is_object()) throw ParseError(where + ": expected an object");
            if (!b.contains("c")) throw ParseError(where + ": missing field 'c'");
            entries.push_back({int_field(b, "i", where), int_field(b, "j", where), int_field(b, "k", where),
                               scalar_from_json(b.at("c"), where)});
        }
    }
    return LieAlgebra(std::move(name), dim, std::move(entries));
}

LieAlgebra load_algebra_file(const std::string& path) {
    LieAlgebra algebra = algebra_from_json(parse_json_text(read_file(path), path));
    const auto report = validate(algebra);
    if (!report.ok) {
        const auto& v = report.violations.front();
        throw ValidationError("'" + algebra.name() + "' violates the Jacobi identity at (" + std::to_string(v.i) +
                              "," + std::to_string(v.j) + "," + std::to_string(v.k) + ")");
    }
    lower_central_series(algebra);
    return algebra;
}

RationalMatrix matrix_from_json(const Json& doc) {
    if (!doc.is_array() || doc.empty()) throw ParseError("basis change must be a non-empty array of rows");
    const std::size_t n = doc.size();
    RationalMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        const Json& row = doc[r];
        if (!row.is_array() || row.size() != n)
            throw ParseError("basis change row " + std::to_string(r + 1) + " must have " + std::to_string(n) +
                             " entries");
        for (std::size_t c = 0; c < n; ++c)
            m(r, c) = scalar_from_json(row[c], "basis change entry (" + std::to_string(r + 1) + "," +
                                                    std::to_string(c + 1) + ")");
    }
    return m;
}

RationalMatrix load_matrix_file(const std::string& path) {
    return matrix_from_json(parse_json_text(read_file(path), path));
}

Json to_json(const WeightAssignment& w) { return Json(w.weights()); }

WeightAssignment weights_from_json(const Json& doc) {
    if (!doc.is_array()) throw ParseError("weights must be a JSON array");
    std::vector<int> out;
    for (const auto& v : doc) {
        if (!v.is_number_integer()) throw ParseError("weights must be integers");
        out.push_back(v.get<int>());
    }
    return WeightAssignment(std::move(out));
}

Json to_json(const GradedBettiProfile& profile) {
    Json by_degree = Json::object();
    for (const auto& [k, dim] : profile.by_degree) by_degree[std::to_string(k)] = dim;
    return {{"j", profile.j}, {"by_degree", by_degree}, {"total", profile.total()}};
}

Json to_json(const ConditionReport& report) {
    Json violations = Json::array();
    for (const auto& v : report.violations) violations.push_back({v.i, v.j, v.k});
    Json w_off = Json::array();
    for (const auto& o : report.w_offenses) w_off.push_back({{"j", o.j}, {"k", o.k}, {"dim", o.dim}});
    Json h_off = Json::array();
    for (const auto& o : report.h_offenses) h_off.push_back({{"part", o.part}, {"k", o.k}, {"dim", o.dim}});
    Json components = Json::object();
    for (auto it = report.component_dims.rbegin(); it != report.component_dims.rend(); ++it)
        components[std::to_string(it->first)] = it->second;
    Json out = {{"homogeneous", report.homogeneous},
                {"violations", violations},
                {"W", to_string(report.w)},
                {"H", to_string(report.h)},
                {"W_offenses", w_off},
                {"H_offenses", h_off},
                {"component_dims", components}};
    if (report.h1) out["H1"] = to_json(*report.h1);
    if (report.h2) out["H2"] = to_json(*report.h2);
    return out;
}

Json to_json(const LemmaReport& report) {
    return {{"grading_length", report.grading_length},
            {"nilpotency_class", report.nilpotency_class},
            {"length_ok", report.length_ok},
            {"failed_inclusions", report.failed_inclusions},
            {"ok", report.ok()}};
}

Json to_json(const SearchOutcome& outcome) {
    Json found = Json::array();
    for (const auto& w : outcome.found) found.push_back(to_json(w));
    return {{"mode", to_string(outcome.mode)},
            {"bound", outcome.bound},
            {"found", found},
            {"exhausted", outcome.exhausted},
            {"alarms", outcome.alarms}};
}

SearchOutcome outcome_from_json(const Json& doc) {
    try {
        SearchOutcome out;
        out.mode = parse_mode(doc.at("mode").get<std::string>());
        out.bound = doc.at("bound").get<int>();
        for (const auto& w : doc.at("found")) out.found.push_back(weights_from_json(w));
        out.exhausted = doc.at("exhausted").get<bool>();
        out.alarms = doc.at("alarms").get<std::vector<std::string>>();
        return out;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("search outcome: ") + e.what());
    }
}

} // namespace nilgrade
