#include "nilgrade/catalog.hpp"

#include "nilgrade/errors.hpp"

#include <algorithm>
#include <array>
#include <charconv>

namespace nilgrade {

const char* to_string(Expect value) {
    switch (value) {
    case Expect::yes: return "yes";
    case Expect::no: return "no";
    case Expect::unknown: return "unknown";
    }
    return "?";
}

namespace {

using Triple = std::array<int, 3>; // [X_a, X_b] = X_k, either order of a, b

struct Row {
    const char* name;
    int dim;
    std::vector<Triple> brackets;
    Expect w;
    Expect wh;
    std::vector<int> grading;
};

constexpr Expect Y = Expect::yes;
constexpr Expect N = Expect::no;
constexpr Expect U = Expect::unknown;

// Brackets as tabulated, including the order of each pair. Normalizations:
//   L6_15: [X2,X5]=X6 replaced by [X1,X5]=X6 (the printed law violates the Jacobi identity).
//   L6_19(-1): the printed degree -1 block repeats X3; it is read as <X1,X2,X4>.
const std::vector<Row>& rows() {
    static const std::vector<Row> table = {
        {"L1_1", 1, {}, Y, Y, {-2}},
        {"L2_1", 2, {}, Y, Y, {-1, -1}},
        {"L3_1", 3, {}, Y, Y, {-1, -1, -2}},
        {"L3_2", 3, {{1, 2, 3}}, Y, Y, {-1, -1, -2}},
        {"L4_1", 4, {}, Y, Y, {-1, -1, -1, -1}},
        {"L4_2", 4, {{1, 2, 3}}, Y, Y, {-1, -1, -2, -2}},
        {"L4_3", 4, {{1, 2, 3}, {1, 3, 4}}, Y, N, {-1, -1, -2, -3}},
        {"L5_1", 5, {}, Y, Y, {-1, -1, -1, -1, -2}},
        {"L5_2", 5, {{1, 2, 3}}, Y, Y, {-1, -1, -2, -2, -2}},
        {"L5_3", 5, {{1, 2, 3}, {1, 3, 4}}, Y, N, {-1, -1, -2, -3, -2}},
        {"L5_4", 5, {{4, 1, 5}, {2, 3, 5}}, Y, Y, {-1, -1, -1, -1, -2}},
        {"L5_5", 5, {{1, 3, 4}, {1, 4, 5}, {3, 2, 5}}, Y, N, {-1, -2, -1, -2, -3}},
        {"L5_6", 5, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {2, 3, 5}}, U, N, {}},
        {"L5_7", 5, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}}, U, N, {}},
        {"L5_8", 5, {{1, 2, 3}, {1, 4, 5}}, Y, N, {-1, -1, -2, -1, -2}},
        {"L5_9", 5, {{1, 2, 3}, {2, 3, 4}, {1, 3, 5}}, Y, Y, {-1, -1, -2, -3, -3}},
        {"L6_1", 6, {}, Y, Y, {-1, -1, -1, -1, -2, -2}},
        {"L6_2", 6, {{1, 2, 3}}, Y, Y, {-1, -1, -2, -2, -2, -2}},
        {"L6_3", 6, {{1, 2, 3}, {1, 3, 4}}, Y, N, {-1, -1, -2, -3, -2, -2}},
        {"L6_4", 6, {{4, 1, 5}, {2, 3, 5}}, Y, Y, {-1, -1, -1, -1, -2, -2}},
        {"L6_5", 6, {{1, 3, 4}, {1, 4, 5}, {3, 2, 5}}, Y, N, {-1, -2, -1, -2, -3, -2}},
        {"L6_6", 6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {2, 3, 5}}, U, N, {}},
        {"L6_7", 6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}}, U, N, {}},
        {"L6_8", 6, {{1, 2, 3}, {1, 4, 5}}, Y, N, {-1, -1, -2, -1, -2, -2}},
        {"L6_9", 6, {{1, 2, 3}, {2, 3, 4}, {1, 3, 5}}, Y, Y, {-1, -1, -2, -3, -3, -2}},
        {"L6_10", 6, {{2, 3, 4}, {5, 1, 6}, {2, 4, 6}}, Y, N, {-1, -1, -1, -2, -2, -3}},
        {"L6_11", 6, {{1, 2, 3}, {1, 3, 5}, {1, 5, 6}, {2, 3, 6}, {2, 4, 6}}, U, N, {}},
        {"L6_12", 6, {{2, 3, 4}, {2, 4, 5}, {3, 1, 6}, {2, 5, 6}}, U, N, {}},
        {"L6_13", 6, {{1, 3, 4}, {1, 4, 5}, {3, 2, 5}, {1, 5, 6}, {4, 2, 6}}, U, N, {}},
        {"L6_14", 6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {2, 3, 5}, {2, 5, 6}, {4, 3, 6}}, U, N, {}},
        {"L6_15", 6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {2, 3, 5}, {1, 5, 6}, {2, 4, 6}}, U, N, {}},
        {"L6_16", 6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {2, 5, 6}, {4, 3, 6}}, U, N, {}},
        {"L6_17", 6, {{2, 1, 3}, {2, 3, 4}, {2, 4, 5}, {1, 3, 6}, {2, 5, 6}}, U, N, {}},
        {"L6_18", 6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}}, U, N, {}},
        {"L6_19(-1)", 6, {{1, 2, 3}, {1, 4, 5}, {2, 5, 6}, {4, 3, 6}}, Y, N, {-1, -1, -2, -1, -2, -3}},
        {"L6_20", 6, {{1, 2, 3}, {1, 4, 5}, {1, 5, 6}, {2, 3, 6}}, Y, N, {-1, -1, -2, -1, -2, -3}},
        {"L6_21(-1)", 6, {{1, 2, 3}, {2, 3, 4}, {1, 3, 5}, {1, 4, 6}, {2, 5, 6}}, Y, Y, {-1, -1, -2, -3, -3, -4}},
        {"L6_22(0)", 6, {{2, 4, 5}, {4, 1, 6}, {2, 3, 6}}, Y, Y, {-1, -1, -1, -1, -2, -2}},
        {"L6_22(1)", 6, {{1, 2, 3}, {4, 5, 6}}, Y, Y, {-1, -1, -2, -1, -1, -2}},
        {"L6_23", 6, {{1, 2, 3}, {1, 4, 5}, {1, 5, 6}, {4, 2, 6}}, U, N, {}},
        {"L6_24(0)", 6, {{1, 3, 4}, {3, 4, 5}, {1, 4, 6}, {3, 2, 6}}, Y, Y, {-1, -2, -1, -2, -3, -3}},
        {"L6_24(1)", 6, {{1, 2, 3}, {2, 3, 5}, {2, 4, 5}, {1, 3, 6}}, Y, Y, {-1, -1, -2, -2, -3, -3}},
        {"L6_25", 6, {{1, 2, 3}, {1, 3, 4}, {1, 5, 6}}, Y, N, {-1, -1, -2, -3, -1, -2}},
        {"L6_26", 6, {{1, 2, 3}, {2, 4, 5}, {1, 4, 6}}, Y, N, {-1, -1, -2, -1, -2, -2}},
        {"L6_27", 6, {{1, 2, 3}, {1, 3, 4}, {2, 5, 6}}, Y, N, {-1, -1, -2, -3, -1, -2}},
        {"L6_28", 6, {{1, 2, 3}, {2, 3, 4}, {1, 3, 5}, {1, 5, 6}}, U, N, {}},
    };
    return table;
}

LieAlgebra checked(LieAlgebra algebra) {
    const auto report = validate(algebra);
    if (!report.ok) {
        const auto& v = report.violations.front();
        throw ValidationError("'" + algebra.name() + "' violates the Jacobi identity at (" + std::to_string(v.i) +
                              "," + std::to_string(v.j) + "," + std::to_string(v.k) + ")");
    }
    lower_central_series(algebra);
    return algebra;
}

LieAlgebra from_triples(std::string name, int dim, const std::vector<Triple>& triples) {
    std::vector<BracketEntry> entries;
    for (const auto& [a, b, k] : triples) entries.push_back(oriented_entry(a, b, k));
    return LieAlgebra(std::move(name), dim, std::move(entries));
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const bool same = std::tolower(static_cast<unsigned char>(a[i - 1])) ==
                              std::tolower(static_cast<unsigned char>(b[j - 1]));
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (same ? 0 : 1)});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

const std::vector<std::string> kFamilies = {"nmq", "nm_odd", "nm_even", "nm_top", "Ln", "Rm", "Q2m", "heis", "abelian"};

void require(bool condition, const FamilySpec& spec, const std::string& range) {
    if (!condition) throw InputError("family " + spec.canonical() + " out of range: requires " + range);
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> out;
        for (const auto& row : rows()) {
            Expected expected{row.w, row.wh, std::nullopt};
            if (!row.grading.empty()) expected.grading = WeightAssignment(row.grading);
            out.push_back({row.name, checked(from_triples(row.name, row.dim, row.brackets)), expected});
        }
        return out;
    }();
    return entries;
}

const CatalogEntry& get(std::string_view name) {
    for (const auto& entry : catalog())
        if (entry.name == name) return entry;
    std::vector<std::string> near;
    for (const auto& entry : catalog()) {
        const std::string_view candidate = entry.name;
        const bool prefix = !name.empty() && candidate.substr(0, name.size()) == name;
        if (prefix || edit_distance(name, candidate) <= 2) near.push_back(entry.name);
    }
    std::string message = "unknown algebra '" + std::string(name) + "'";
    if (!near.empty()) {
        message += "; did you mean";
        for (std::size_t i = 0; i < near.size() && i < 6; ++i) message += (i ? ", " : " ") + near[i];
        message += "?";
    }
    throw LookupError(message);
}

std::vector<std::string> list_names() {
    std::vector<std::string> out;
    for (const auto& entry : catalog()) out.push_back(entry.name);
    return out;
}

std::vector<const CatalogEntry*> entries_of_dim(int dim) {
    std::vector<const CatalogEntry*> out;
    for (const auto& entry : catalog())
        if (entry.algebra.dim() == dim) out.push_back(&entry);
    return out;
}

std::optional<WeightAssignment> expected_grading(std::string_view name) { return get(name).expected.grading; }

std::pair<Expect, Expect> expected_verdicts(std::string_view name) {
    const auto& e = get(name).expected;
    return {e.w, e.wh};
}

std::string FamilySpec::canonical() const {
    std::string out = family + ":";
    for (std::size_t i = 0; i < params.size(); ++i) out += (i ? "," : "") + std::to_string(params[i]);
    return out;
}

FamilySpec parse_family(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError("family spec '" + std::string(text) + "' lacks ':'");
    FamilySpec spec;
    spec.family = std::string(text.substr(0, colon));
    if (std::find(kFamilies.begin(), kFamilies.end(), spec.family) == kFamilies.end()) {
        std::string known;
        for (const auto& f : kFamilies) known += (known.empty() ? "" : ", ") + f;
        throw LookupError("unknown family '" + spec.family + "' (known: " + known + ")");
    }
    std::string_view rest = text.substr(colon + 1);
    while (true) {
        const auto comma = rest.find(',');
        const std::string_view field = rest.substr(0, comma);
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
            throw ParseError("invalid parameter '" + std::string(field) + "' in '" + std::string(text) + "'");
        spec.params.push_back(value);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    const std::size_t arity = spec.family == "nmq" || spec.family == "nm_odd" || spec.family == "nm_even" ? 2 : 1;
    if (spec.params.size() != arity)
        throw ParseError("family " + spec.family + " takes " + std::to_string(arity) + " parameter(s)");
    return spec;
}

LieAlgebra family(const FamilySpec& spec) {
    const auto& f = spec.family;
    const auto& p = spec.params;
    const std::size_t arity = f == "nmq" || f == "nm_odd" || f == "nm_even" ? 2 : 1;
    if (std::find(kFamilies.begin(), kFamilies.end(), f) == kFamilies.end())
        throw LookupError("unknown family '" + f + "'");
    if (p.size() != arity) throw InputError("family " + f + " takes " + std::to_string(arity) + " parameter(s)");

    std::vector<Triple> t;
    int dim = 0;
    if (f == "nmq") {
        // X0, X1, X2 = 1, 2, 3; Y_s = 3 + s.
        const int m = p[0], q = p[1];
        require(m >= 5 && q >= 2 && 2 * q <= m - 1, spec, "m >= 5 and 2 <= q <= (m-1)/2");
        dim = m;
        t.push_back({1, 2, 3});
        for (int k = 1; k <= q - 1; ++k) t.push_back({3 + 2 * k - 1, 3 + 2 * k, 3});
    } else if (f == "nm_odd" || f == "nm_even" || f == "nm_top") {
        // X0..X3 = 1..4; Y_s = 4 + s.
        const int m = p[0];
        dim = m;
        t.push_back({1, 2, 3});
        t.push_back({1, 3, 4});
        if (f == "nm_top") {
            require(m >= 5, spec, "m >= 5");
            t.push_back({2, 3, m});
        } else {
            const int q = p[1];
            if (f == "nm_odd")
                require(m >= 5 && q >= 1 && 2 * q < m - 2, spec, "m >= 5 and 1 <= q < (m-2)/2");
            else
                require(m >= 6 && q >= 1 && 2 * q < m - 3, spec, "m >= 6 and 1 <= q < (m-3)/2");
            if (f == "nm_even") t.push_back({2, m, 4});
            for (int k = 1; k <= q - 1; ++k) t.push_back({4 + 2 * k - 1, 4 + 2 * k, 4});
        }
    } else if (f == "Ln") {
        const int n = p[0];
        require(n >= 3, spec, "n >= 3");
        dim = n;
        for (int i = 2; i <= n - 1; ++i) t.push_back({1, i, i + 1});
    } else if (f == "Rm") {
        const int m = p[0];
        require(m >= 5, spec, "m >= 5");
        dim = m;
        for (int i = 2; i <= m - 1; ++i) t.push_back({1, i, i + 1});
        for (int j = 3; j <= m - 2; ++j) t.push_back({2, j, j + 2});
    } else if (f == "Q2m") {
        const int m = p[0];
        require(m >= 3, spec, "m >= 3");
        dim = 2 * m;
        std::vector<BracketEntry> entries;
        for (int i = 2; i <= 2 * m - 2; ++i) entries.push_back(oriented_entry(1, i, i + 1));
        for (int j = 2; j <= m; ++j) entries.push_back(oriented_entry(j, 2 * m + 1 - j, 2 * m, j % 2 == 0 ? -1 : 1));
        return checked(LieAlgebra(spec.canonical(), dim, std::move(entries)));
    } else if (f == "heis") {
        const int k = p[0];
        require(k >= 1, spec, "k >= 1");
        dim = 2 * k + 1;
        for (int i = 1; i <= k; ++i) t.push_back({2 * i - 1, 2 * i, dim});
    } else {
        const int n = p[0];
        require(n >= 1, spec, "n >= 1");
        dim = n;
    }
    return checked(from_triples(spec.canonical(), dim, t));
}

std::optional<WeightAssignment> family_grading(const FamilySpec& spec) {
    if (spec.family != "nmq") return std::nullopt;
    family(spec); // range check
    const int m = spec.params[0], q = spec.params[1];
    std::vector<int> w(m, -2);
    w[0] = w[1] = -1;
    for (int s = 1; s <= 2 * q - 2; ++s) w[3 + s - 1] = -1;
    return WeightAssignment(std::move(w));
}

LieAlgebra resolve(std::string_view name) {
    for (const auto& entry : catalog())
        if (entry.name == name) return entry.algebra;
    if (name.find(':') != std::string_view::npos) return family(parse_family(name));
    return get(name).algebra; // throws LookupError with suggestions
}

} // namespace nilgrade
