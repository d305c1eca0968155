#include "nilgrade/cli.hpp"

#include "nilgrade/catalog.hpp"
#include "nilgrade/cochain.hpp"
#include "nilgrade/errors.hpp"
#include "nilgrade/io.hpp"
#include "nilgrade/table.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

namespace nilgrade::cli {

namespace {

struct Source {
    std::string algebra;
    std::string file;
    std::string basis_change;
};

struct Options {
    Source source;
    bool json = false;
    int jobs = 1;
    std::string weights;
    std::string mode = "wh";
    int max_weight = 0;
    int degree = -1;
    int max_degree = -1;
    bool all = false;
    int dim = 0;
    std::string catalog_action;
    std::string catalog_name;
};

void add_source(CLI::App* cmd, Source& source) {
    auto* name = cmd->add_option("--algebra", source.algebra, "catalog name or family spec (e.g. L5_8, nmq:5,2)");
    auto* file = cmd->add_option("--file", source.file, "JSON algebra document");
    name->excludes(file);
    cmd->add_option("--basis-change", source.basis_change, "JSON n x n rational matrix; rows are the new basis");
}

LieAlgebra load(const Source& source) {
    if (source.algebra.empty() && source.file.empty()) throw InputError("one of --algebra or --file is required");
    LieAlgebra algebra = source.file.empty() ? resolve(source.algebra) : load_algebra_file(source.file);
    if (!source.basis_change.empty()) algebra = change_basis(algebra, load_matrix_file(source.basis_change));
    return algebra;
}

std::string join(const std::vector<int>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
    return out + "]";
}

std::string profile_text(const std::optional<GradedBettiProfile>& profile) {
    if (!profile) return "-";
    std::string out;
    for (const auto& [k, dim] : profile->by_degree) out += (out.empty() ? "" : " ") + std::to_string(k) + ":" + std::to_string(dim);
    return out.empty() ? "0" : out;
}

int cmd_info(const Options& o, std::ostream& out) {
    const LieAlgebra algebra = load(o.source);
    const SeriesReport series = lower_central_series(algebra);
    const auto p = p_filiform_degree(series);
    const auto betti = betti_vector(algebra, algebra.dim());
    if (o.json) {
        Json doc = to_json(algebra);
        doc["lower_central_series"] = series.dims;
        doc["nilpotency_class"] = series.nilpotency_class;
        doc["p_filiform"] = p ? Json(*p) : Json();
        doc["betti"] = betti;
        out << doc.dump(2) << "\n";
        return kOk;
    }
    out << "name: " << algebra.name() << "\n"
        << "dim: " << algebra.dim() << "\n"
        << "brackets:";
    if (algebra.brackets().empty()) out << " none (abelian)";
    for (const auto& e : algebra.brackets()) {
        out << " [X" << e.i << ",X" << e.j << "]=";
        if (e.c != 1) out << to_string(e.c) << "*";
        out << "X" << e.k;
    }
    out << "\n"
        << "lower central series: " << join(series.dims) << "\n"
        << "nilpotency class: " << series.nilpotency_class << "\n"
        << "p-filiform: " << (p ? std::to_string(*p) : "no") << "\n"
        << "betti: " << join(betti) << "\n";
    return kOk;
}

int cmd_cohomology(const Options& o, std::ostream& out) {
    const LieAlgebra algebra = load(o.source);
    if (o.degree >= 0) {
        const int b = betti(algebra, o.degree);
        if (o.json)
            out << Json{{"algebra", algebra.name()}, {"degree", o.degree}, {"betti", b}}.dump(2) << "\n";
        else
            out << "b_" << o.degree << " = " << b << "\n";
        return kOk;
    }
    const int top = o.max_degree >= 0 ? o.max_degree : algebra.dim();
    const auto betti = betti_vector(algebra, top);
    if (o.json)
        out << Json{{"algebra", algebra.name()}, {"betti", betti}}.dump(2) << "\n";
    else
        out << join(betti) << "\n";
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const LieAlgebra algebra = load(o.source);
    const WeightAssignment w = WeightAssignment::parse_csv(o.weights);
    const Mode mode = parse_mode(o.mode);
    const ConditionReport report = check_conditions(algebra, w);
    std::optional<LemmaReport> lemmas;
    if (report.homogeneous) lemmas = structural_lemma_checks(algebra, w);
    const bool ok = report.passes(mode);
    if (o.json) {
        Json doc = {{"algebra", algebra.name()}, {"weights", to_json(w)}, {"mode", to_string(mode)}};
        doc["report"] = to_json(report);
        if (lemmas) doc["lemmas"] = to_json(*lemmas);
        doc["verified"] = ok;
        out << doc.dump(2) << "\n";
        return ok ? kOk : kFailed;
    }
    if (!report.homogeneous) {
        out << "not homogeneous; violated brackets:";
        for (const auto& v : report.violations) out << " (" << v.i << "," << v.j << "," << v.k << ")";
        out << "\n";
        return kFailed;
    }
    out << "homogeneous; W: " << to_string(report.w) << "; H: " << to_string(report.h) << "\n";
    out << "H^1 by degree: " << profile_text(report.h1) << "\n";
    out << "H^2 by degree: " << profile_text(report.h2) << "\n";
    for (const auto& off : report.w_offenses)
        out << "W offense: H^" << off.j << "_" << off.k << " has dimension " << off.dim << "\n";
    for (const auto& off : report.h_offenses)
        out << "H offense: " << off.part << " in degree " << off.k << " has odd dimension " << off.dim << "\n";
    if (lemmas && !lemmas->ok()) out << "structural lemma check failed\n";
    return ok ? kOk : kFailed;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
    const LieAlgebra algebra = load(o.source);
    const Mode mode = parse_mode(o.mode);
    const int bound = o.max_weight > 0 ? o.max_weight : 2 * algebra.dim();
    const SearchOutcome outcome = find_grading(algebra, bound, mode, o.jobs, o.all);
    for (const auto& alarm : outcome.alarms) err << "alarm: " << alarm << "\n";
    if (o.json) {
        out << to_json(outcome).dump(2) << "\n";
    } else if (outcome.found.empty()) {
        out << "no grading found (exhausted, basis-diagonal, bound " << bound << ")\n";
    } else {
        for (const auto& w : outcome.found) out << "grading found: " << w.to_csv() << "\n";
    }
    return outcome.found.empty() ? kFailed : kOk;
}

int cmd_table(const Options& o, std::ostream& out) {
    std::vector<int> dims;
    if (o.dim > 0) dims.push_back(o.dim);
    else
        for (int d = 1; d <= 6; ++d) dims.push_back(d);
    const std::optional<int> bound = o.max_weight > 0 ? std::optional<int>(o.max_weight) : std::nullopt;
    bool ok = true;
    Json reports = Json::array();
    for (int d : dims) {
        const TableReport report = reproduce_table(d, bound, o.jobs);
        ok = ok && report.ok();
        if (o.json) reports.push_back(to_json(report));
        else out << to_text(report);
    }
    if (o.json) out << (reports.size() == 1 ? reports[0] : reports).dump(2) << "\n";
    return ok ? kOk : kFailed;
}

int cmd_catalog(const Options& o, std::ostream& out) {
    if (o.catalog_action == "list") {
        for (const auto& name : list_names()) out << name << "\n";
        return kOk;
    }
    if (o.catalog_name.empty()) throw InputError("catalog dump needs a name");
    out << to_json(resolve(o.catalog_name)).dump(2) << "\n";
    return kOk;
}

const char* error_kind(const Error& e) {
    if (dynamic_cast<const ParseError*>(&e)) return "parse error";
    if (dynamic_cast<const ValidationError*>(&e)) return "validation error";
    if (dynamic_cast<const NotNilpotent*>(&e)) return "not nilpotent";
    if (dynamic_cast<const LookupError*>(&e)) return "lookup error";
    if (dynamic_cast<const PreconditionError*>(&e)) return "precondition error";
    return "input error";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact checks of negative gradings on nilpotent Lie algebras", "nilgrade"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", o.json, "machine-readable output");
    };
    auto add_jobs = [&](CLI::App* cmd) {
        cmd->add_option("--jobs", o.jobs, "worker threads")->envname("NILGRADE_JOBS")->check(CLI::PositiveNumber);
    };

    auto* info = app.add_subcommand("info", "structure constants and invariants");
    add_source(info, o.source);
    add_common(info);

    auto* cohomology = app.add_subcommand("cohomology", "Betti numbers");
    add_source(cohomology, o.source);
    add_common(cohomology);
    auto* deg = cohomology->add_option("--degree", o.degree, "single degree k")->check(CLI::NonNegativeNumber);
    cohomology->add_option("--max-degree", o.max_degree, "Betti numbers b_0..b_k")
        ->check(CLI::NonNegativeNumber)
        ->excludes(deg);

    auto* verify = app.add_subcommand("verify", "check a weight assignment against (W) and (H)");
    add_source(verify, o.source);
    add_common(verify);
    verify->add_option("--weights", o.weights, "comma-separated negative integers")->required();
    verify->add_option("--mode", o.mode, "wh or w")->check(CLI::IsMember({"wh", "w"}));

    auto* search = app.add_subcommand("search", "search for a basis-diagonal grading");
    add_source(search, o.source);
    add_common(search);
    add_jobs(search);
    search->add_option("--max-weight", o.max_weight, "weight bound D (default 2*dim)")->check(CLI::PositiveNumber);
    search->add_option("--mode", o.mode, "wh or w")->check(CLI::IsMember({"wh", "w"}));
    search->add_flag("--all", o.all, "report every passing assignment");

    auto* table = app.add_subcommand("table", "recompute the verdict table");
    add_common(table);
    add_jobs(table);
    table->add_option("--dim", o.dim, "dimension 1..6 (default: all)")->check(CLI::Range(1, 6));
    table->add_option("--max-weight", o.max_weight, "weight bound D (default 2*dim)")->check(CLI::PositiveNumber);

    auto* cat = app.add_subcommand("catalog", "list or dump catalog algebras");
    cat->add_option("action", o.catalog_action, "list or dump")->required()->check(CLI::IsMember({"list", "dump"}));
    cat->add_option("name", o.catalog_name, "algebra to dump");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*info) return cmd_info(o, out);
        if (*cohomology) return cmd_cohomology(o, out);
        if (*verify) return cmd_verify(o, out);
        if (*search) return cmd_search(o, out, err);
        if (*table) return cmd_table(o, out);
        if (*cat) return cmd_catalog(o, out);
    } catch (const Error& e) {
        err << "nilgrade: " << error_kind(e) << ": " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

} // namespace nilgrade::cli
