#include <bredon/davis.hpp>
#include <bredon/error.hpp>
#include <bredon/report.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace bredon {

using nlohmann::json;

namespace {

json integer_to_json(const Integer& v) {
    if (v.fits_slong_p()) {
        return v.get_si();
    }
    return v.get_str();
}

Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) {
        return Integer(std::to_string(j.get<long long>()));
    }
    if (j.is_string()) {
        return Integer(j.get<std::string>());
    }
    throw InputError("expected an integer, got " + j.dump());
}

json subset_to_json(GeneratorSubset t) { return t.members(); }

std::string join_counts(const std::vector<std::size_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? ", " : "") + std::to_string(v[i]);
    }
    return out;
}

std::size_t report_max_degree(const CoxeterMatrix& w, const RunOptions& options) {
    return options.max_degree.value_or(w.rank());
}

}  // namespace

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

CoxeterMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("m")) {
        throw InputError("input must be an object with key \"m\"");
    }
    std::vector<std::vector<long long>> raw;
    try {
        raw = j.at("m").get<std::vector<std::vector<long long>>>();
    } catch (const json::exception& e) {
        throw InputError(std::string("\"m\" must be a matrix of integers: ") + e.what());
    }
    if (j.contains("rank")) {
        if (!j.at("rank").is_number_integer() || j.at("rank").get<long long>() != static_cast<long long>(raw.size())) {
            throw InputError("\"rank\" does not match the number of rows of \"m\"");
        }
    }
    return CoxeterMatrix::parse(raw);
}

CoxeterMatrix matrix_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open input file " + path);
    }
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
    return matrix_from_json(j);
}

json matrix_to_json(const CoxeterMatrix& w) { return {{"rank", w.rank()}, {"m", w.to_raw()}}; }

json fgab_to_json(const FgAbGroup& g) {
    json torsion = json::array();
    for (const auto& t : g.torsion()) {
        torsion.push_back(integer_to_json(t));
    }
    return {{"free_rank", g.free_rank()}, {"torsion", torsion}};
}

FgAbGroup fgab_from_json(const json& j) {
    if (!j.is_object() || !j.contains("free_rank")) {
        throw InputError("homology group must be an object with \"free_rank\"");
    }
    std::vector<Integer> torsion;
    if (j.contains("torsion")) {
        for (const auto& t : j.at("torsion")) {
            torsion.push_back(integer_from_json(t));
        }
    }
    return FgAbGroup(j.at("free_rank").get<std::size_t>(), std::move(torsion));
}

json profile_to_json(const HomologyProfile& p, std::size_t max_degree) {
    json groups = json::object();
    for (std::size_t d = 0; d <= max_degree; ++d) {
        groups[std::to_string(d)] = fgab_to_json(p.at(d));
    }
    return groups;
}

// ---------------------------------------------------------------------------

json classify_report(const CoxeterMatrix& w) {
    const SphericalPoset poset = enumerate_spherical(w);
    const FiniteTypeLabel whole = classify(w, w.all());
    json comps = json::array();
    for (const auto& c : whole.components) {
        comps.push_back({{"generators", subset_to_json(c.generators)}, {"type", c.type.name()}});
    }
    std::vector<std::size_t> counts;
    for (std::size_t n = 0; n <= poset.max_rank(); ++n) {
        counts.push_back(poset.count(n));
    }
    json subsets = json::array();
    for (GeneratorSubset t : poset.all()) {
        const FiniteTypeLabel& label = poset.label_of(t);
        subsets.push_back({{"subset", subset_to_json(t)},
                           {"rank", t.size()},
                           {"type", label.name()},
                           {"reducible", label.components.size() > 1},
                           {"order", integer_to_json(poset.order_of(t))}});
    }
    json report = {{"input", matrix_to_json(w)},
                   {"components", comps},
                   {"finite", whole.finite()},
                   {"type", whole.name()},
                   {"spherical_counts", counts},
                   {"spherical_total", poset.total()},
                   {"spherical", subsets}};
    if (whole.finite()) {
        report["order"] = integer_to_json(whole.order());
    }
    return report;
}

std::string classify_text(const json& report) {
    std::ostringstream os;
    os << "Coxeter system of rank " << report["input"]["rank"].get<std::size_t>() << "\n";
    for (const auto& c : report["components"]) {
        os << "  component " << c["generators"].dump() << ": " << c["type"].get<std::string>() << "\n";
    }
    if (report["finite"].get<bool>()) {
        os << "finite group of order " << report["order"].dump() << " (" << report["type"].get<std::string>() << ")\n";
    } else {
        os << "infinite group\n";
    }
    os << "spherical subsets: s = (" << join_counts(report["spherical_counts"].get<std::vector<std::size_t>>())
       << "), total " << report["spherical_total"].get<std::size_t>() << "\n";
    std::size_t current = static_cast<std::size_t>(-1);
    for (const auto& s : report["spherical"]) {
        const auto rank = s["rank"].get<std::size_t>();
        if (rank != current) {
            os << "  rank " << rank << ":\n";
            current = rank;
        }
        os << "    " << GeneratorSubset::from_members(s["subset"].get<std::vector<int>>()).to_string() << "  "
           << s["type"].get<std::string>() << (s["reducible"].get<bool>() ? " (reducible)" : "") << ", order "
           << s["order"].dump() << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

json cells_json(const BredonChainComplex& cx, const SubgroupTables& tables) {
    json dims = json::array();
    json diffs = json::array();
    for (std::size_t d = 0; d < cx.degree_count(); ++d) {
        const auto& deg = cx.degree(d);
        json cells = json::array();
        for (std::size_t i = 0; i < deg.cells.size(); ++i) {
            json chain = json::array();
            for (auto t : deg.cells[i].chain) {
                chain.push_back(subset_to_json(t));
            }
            cells.push_back({{"chain", chain},
                             {"stabilizer", tables.subgroup(deg.cells[i].stabilizer()).label().name()},
                             {"offset", deg.offset[i]},
                             {"coordinates", deg.block_size[i]}});
        }
        dims.push_back({{"dimension", d}, {"rank", deg.rank}, {"cells", cells}});
        if (d == 0) {
            continue;
        }
        json blocks = json::array();
        for (const auto& b : deg.blocks) {
            blocks.push_back({{"cell", b.cell},
                              {"face", b.face},
                              {"sign", b.sign},
                              {"deleted", b.deleted},
                              {"map", b.deleted == 1 ? "induction" : "identity"}});
        }
        json entries = json::array();
        for (std::size_t r = 0; r < deg.differential.rows(); ++r) {
            for (const auto& [c, v] : deg.differential.row(r)) {
                entries.push_back({r, c, integer_to_json(v)});
            }
        }
        diffs.push_back({{"degree", d},
                         {"rows", deg.differential.rows()},
                         {"cols", deg.differential.cols()},
                         {"blocks", blocks},
                         {"entries", entries}});
    }
    return {{"dimensions", dims}, {"differentials", diffs}};
}

json value_to_json(const Complex& v) {
    auto clean = [](double x) {
        const double r = std::round(x * 1e10) / 1e10;
        return r == 0.0 ? 0.0 : r;
    };
    if (std::abs(v.imag()) < 1e-10) {
        return clean(v.real());
    }
    return json::array({clean(v.real()), clean(v.imag())});
}

json tables_json(const SubgroupTables& tables) {
    json out = json::array();
    for (GeneratorSubset t : tables.subsets()) {
        const auto& g = tables.subgroup(t);
        const auto& tab = g.table();
        json classes = json::array();
        for (const auto& c : tab.classes) {
            classes.push_back({{"representative", word_to_string(c.representative)}, {"size", c.size}});
        }
        json chars = json::array();
        for (std::size_t i = 0; i < tab.character_count(); ++i) {
            json values = json::array();
            for (std::size_t c = 0; c < tab.class_count(); ++c) {
                values.push_back(value_to_json(tab(i, c)));
            }
            chars.push_back({{"name", tab.names[i]}, {"degree", tab.degrees[i]}, {"values", values}});
        }
        out.push_back({{"subset", subset_to_json(t)},
                       {"type", g.label().name()},
                       {"order", tab.group_order},
                       {"classes", classes},
                       {"characters", chars}});
    }
    return out;
}

struct ChainArtifacts {
    SphericalPoset poset;
    SubgroupTables tables;
    BredonChainComplex complex;
};

ChainArtifacts build_chain(const CoxeterMatrix& w, const Integer& cap) {
    SphericalPoset poset = enumerate_spherical(w);
    SubgroupTables tables(w, poset, cap);
    BredonChainComplex cx = assemble_differentials(build_cells(poset), tables);
    return {std::move(poset), std::move(tables), std::move(cx)};
}

}  // namespace

json cells_report(const CoxeterMatrix& w, const RunOptions& options) {
    const ChainArtifacts a = build_chain(w, options.order_cap);
    json report = cells_json(a.complex, a.tables);
    report["input"] = matrix_to_json(w);
    return report;
}

std::string cells_text(const json& report) {
    std::ostringstream os;
    for (const auto& dim : report["dimensions"]) {
        os << "dimension " << dim["dimension"].get<std::size_t>() << ": " << dim["cells"].size() << " cells, rank "
           << dim["rank"].get<std::size_t>() << "\n";
        for (const auto& c : dim["cells"]) {
            os << "  (";
            bool first = true;
            for (const auto& t : c["chain"]) {
                os << (first ? "" : " < ") << GeneratorSubset::from_members(t.get<std::vector<int>>()).to_string();
                first = false;
            }
            os << ")  stabilizer " << c["stabilizer"].get<std::string>() << ", "
               << c["coordinates"].get<std::size_t>() << " coordinates\n";
        }
    }
    for (const auto& d : report["differentials"]) {
        os << "differential d_" << d["degree"].get<std::size_t>() << ": " << d["rows"].get<std::size_t>() << " x "
           << d["cols"].get<std::size_t>() << ", " << d["blocks"].size() << " blocks, " << d["entries"].size()
           << " nonzero entries\n";
    }
    return os.str();
}

json tables_report(const CoxeterMatrix& w, const RunOptions& options) {
    const SphericalPoset poset = enumerate_spherical(w);
    const SubgroupTables tables(w, poset, options.order_cap);
    return {{"input", matrix_to_json(w)}, {"tables", tables_json(tables)}};
}

std::string tables_text(const json& report) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(4);
    for (const auto& t : report["tables"]) {
        os << "W_T for T = " << GeneratorSubset::from_members(t["subset"].get<std::vector<int>>()).to_string() << ": "
           << t["type"].get<std::string>() << ", order " << t["order"].get<std::size_t>() << ", "
           << t["classes"].size() << " classes\n";
        os << "  classes:";
        for (const auto& c : t["classes"]) {
            os << "  " << c["representative"].get<std::string>() << "[" << c["size"].get<std::size_t>() << "]";
        }
        os << "\n";
        for (const auto& ch : t["characters"]) {
            os << "  " << std::setw(12) << std::left << ch["name"].get<std::string>() << std::right;
            for (const auto& v : ch["values"]) {
                if (v.is_array()) {
                    os << " " << std::setw(8) << v[0].get<double>() << (v[1].get<double>() < 0 ? "-" : "+")
                       << std::abs(v[1].get<double>()) << "i";
                } else {
                    os << " " << std::setw(8) << v.get<double>();
                }
            }
            os << "\n";
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

std::string describe_profile(const HomologyProfile& p, std::size_t max_degree) {
    std::string out;
    for (std::size_t d = 0; d <= max_degree; ++d) {
        out += (d ? ", " : "") + std::string("H_") + std::to_string(d) + " = " + p.at(d).to_string();
    }
    return out;
}

bool agree_up_to(const HomologyProfile& a, const HomologyProfile& b, std::size_t max_degree) {
    for (std::size_t d = 0; d <= max_degree; ++d) {
        if (a.at(d) != b.at(d)) {
            return false;
        }
    }
    return true;
}

json k_json(const KHomology& k, const HomologyProfile& source, std::size_t max_degree) {
    if (k.decided) {
        return {{"decided", true},
                {"K0", fgab_to_json(k.k0)},
                {"K1", fgab_to_json(k.k1)},
                {"identification", kBaumConnesNote}};
    }
    return {{"decided", false}, {"reason", k.reason}, {"e2_page", profile_to_json(source, max_degree)}};
}

}  // namespace

RunReport homology_report(const CoxeterMatrix& w, const RunOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t max_degree = report_max_degree(w, options);
    RunReport run;
    json notes = json::array();
    std::vector<HomologyProfile> profiles;
    bool complete = true;
    bool capped = false;
    std::optional<ChainArtifacts> chain;

    const bool want_chain = options.method != MethodChoice::Closed;
    const bool want_closed = options.method != MethodChoice::Chain;

    if (want_chain) {
        try {
            chain.emplace(build_chain(w, options.order_cap));
            HomologyProfile p;
            p.method = Method::Chain;
            p.rule = "Davis complex chain path";
            for (const auto& [d, g] : chain->complex.homology()) {
                if (d <= max_degree) {
                    p.groups[d] = g;
                }
            }
            if (max_degree + 1 < chain->complex.degree_count()) {
                complete = false;
                notes.push_back("chain complex has cells up to dimension " +
                                std::to_string(chain->complex.degree_count() - 1) +
                                "; degrees above --max-degree were not computed");
            }
            profiles.push_back(std::move(p));
        } catch (const ResourceError& e) {
            capped = true;
            notes.push_back(std::string("chain path skipped: ") + e.what());
        }
    }
    if (want_closed) {
        try {
            if (auto p = closed_form_homology(w, options.order_cap)) {
                profiles.push_back(std::move(*p));
            } else if (options.method == MethodChoice::Closed && !kunneth_homology(w, options.order_cap)) {
                throw PreconditionError(
                    "no closed form applies: W is not finite, right-angled, even, of rank <= 3, or a product of "
                    "such factors; use --method chain");
            }
            if (auto p = kunneth_homology(w, options.order_cap)) {
                profiles.push_back(std::move(*p));
            }
        } catch (const ResourceError& e) {
            capped = true;
            notes.push_back(std::string("closed form skipped: ") + e.what());
        }
    }

    json methods = json::array();
    for (const auto& p : profiles) {
        methods.push_back({{"method", method_name(p.method)}, {"rule", p.rule}, {"homology", profile_to_json(p, max_degree)}});
    }
    json discrepancies = json::array();
    for (std::size_t i = 1; i < profiles.size(); ++i) {
        if (!agree_up_to(profiles[0], profiles[i], max_degree)) {
            discrepancies.push_back(method_name(profiles[i].method) + " (" + describe_profile(profiles[i], max_degree) +
                                    ") disagrees with " + method_name(profiles[0].method) + " (" +
                                    describe_profile(profiles[0], max_degree) + ")");
        }
    }

    const FiniteTypeLabel whole = classify(w, w.all());
    const SphericalPoset poset = chain ? chain->poset : enumerate_spherical(w);
    std::vector<std::size_t> counts;
    for (std::size_t n = 0; n <= poset.max_rank(); ++n) {
        counts.push_back(poset.count(n));
    }
    json report = {{"input", matrix_to_json(w)},
                   {"classification",
                    {{"finite", whole.finite()},
                     {"type", whole.name()},
                     {"spherical_counts", counts},
                     {"spherical_total", poset.total()}}},
                   {"max_degree", max_degree},
                   {"methods", methods},
                   {"discrepancies", discrepancies},
                   {"notes", notes}};

    if (!profiles.empty()) {
        // Closed forms describe every degree, so only a truncated chain-only
        // run leaves the verdict open.
        const bool chain_only = profiles.size() == 1 && profiles[0].method == Method::Chain;
        run.k = k_homology(profiles[0], complete || !chain_only);
        report["k_theory"] = k_json(run.k, profiles[0], max_degree);
        run.primary = profiles[0];
    } else {
        report["k_theory"] = {{"decided", false}, {"reason", "no method completed"}};
    }

    if (options.cells && chain) {
        report["cells"] = cells_json(chain->complex, chain->tables);
    }
    if (options.dump_tables && chain) {
        report["tables"] = tables_json(chain->tables);
    }

    if (!discrepancies.empty()) {
        run.status = RunStatus::Discrepancy;
    } else if (capped) {
        run.status = RunStatus::ResourceCap;
    }
    report["status"] = run.status == RunStatus::Ok            ? "ok"
                       : run.status == RunStatus::Discrepancy ? "discrepancy"
                                                              : "resource-cap";
    run.json = std::move(report);
    run.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return run;
}

std::string homology_text(const RunReport& run) {
    const json& r = run.json;
    std::ostringstream os;
    os << "Coxeter system of rank " << r["input"]["rank"].get<std::size_t>() << ": ";
    if (r["classification"]["finite"].get<bool>()) {
        os << "finite, " << r["classification"]["type"].get<std::string>() << "\n";
    } else {
        os << "infinite\n";
    }
    os << "spherical subsets: s = ("
       << join_counts(r["classification"]["spherical_counts"].get<std::vector<std::size_t>>()) << "), total "
       << r["classification"]["spherical_total"].get<std::size_t>() << "\n";
    for (const auto& m : r["methods"]) {
        os << "[" << m["method"].get<std::string>() << "] " << m["rule"].get<std::string>() << "\n";
        for (const auto& [deg, g] : m["homology"].items()) {
            os << "  H_" << deg << " = " << fgab_from_json(g).to_string() << "\n";
        }
    }
    const json& k = r["k_theory"];
    if (k["decided"].get<bool>()) {
        os << "K_0 = " << fgab_from_json(k["K0"]).to_string() << ", K_1 = " << fgab_from_json(k["K1"]).to_string()
           << "  (" << k["identification"].get<std::string>() << ")\n";
    } else {
        os << "K-homology undecided: " << k["reason"].get<std::string>() << "\n";
    }
    for (const auto& n : r["notes"]) {
        os << "note: " << n.get<std::string>() << "\n";
    }
    if (r["discrepancies"].empty()) {
        os << (r["methods"].size() > 1 ? "all methods agree\n" : "");
    } else {
        for (const auto& d : r["discrepancies"]) {
            os << "DISCREPANCY: " << d.get<std::string>() << "\n";
        }
    }
    if (r.contains("cells")) {
        os << "\n" << cells_text(r["cells"]);
    }
    if (r.contains("tables")) {
        os << "\n" << tables_text(r);
    }
    os << std::fixed << std::setprecision(1) << "time: " << run.elapsed_ms << " ms\n";
    return os.str();
}

// ---------------------------------------------------------------------------

RunReport validate_corpus(const std::string& directory, const RunOptions& options) {
    namespace fs = std::filesystem;
    const auto start = std::chrono::steady_clock::now();
    if (!fs::is_directory(directory)) {
        throw InputError("corpus directory " + directory + " does not exist");
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(directory)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    if (files.empty()) {
        throw InputError("no inputs in " + directory);
    }
    std::sort(files.begin(), files.end());

    RunReport run;
    json entries = json::array();
    std::size_t failures = 0;
    std::size_t capped = 0;
    for (const auto& path : files) {
        json entry = {{"file", path.filename().string()}};
        try {
            std::ifstream in(path);
            json j;
            in >> j;
            entry["name"] = j.value("name", path.stem().string());
            const CoxeterMatrix w = matrix_from_json(j);
            if (!j.contains("expected")) {
                throw InputError("corpus entry has no \"expected\" profile");
            }
            HomologyProfile expected;
            std::size_t max_degree = w.rank();
            for (const auto& [deg, g] : j.at("expected").items()) {
                const std::size_t d = std::stoul(deg);
                expected.groups[d] = fgab_from_json(g);
                max_degree = std::max(max_degree, d);
            }
            RunOptions opts = options;
            opts.max_degree = max_degree;
            opts.cells = opts.dump_tables = false;
            const RunReport r = homology_report(w, opts);
            json problems = r.json["discrepancies"];
            json methods = json::array();
            for (const auto& m : r.json["methods"]) {
                methods.push_back(m["method"]);
                HomologyProfile got;
                for (const auto& [deg, g] : m["homology"].items()) {
                    got.groups[std::stoul(deg)] = fgab_from_json(g);
                }
                if (!agree_up_to(got, expected, max_degree)) {
                    problems.push_back(m["method"].get<std::string>() + " gives " + describe_profile(got, max_degree) +
                                       ", expected " + describe_profile(expected, max_degree));
                }
            }
            entry["methods"] = methods;
            entry["discrepancies"] = problems;
            if (!problems.empty()) {
                entry["status"] = "discrepancy";
                ++failures;
            } else if (methods.empty()) {
                entry["status"] = "resource-cap";
                ++capped;
            } else {
                entry["status"] = r.status == RunStatus::ResourceCap ? "partial" : "ok";
            }
        } catch (const std::exception& e) {
            entry["status"] = "error";
            entry["discrepancies"] = json::array({e.what()});
            ++failures;
        }
        entries.push_back(std::move(entry));
    }
    run.json = {{"directory", fs::path(directory).filename().string()},
                {"total", files.size()},
                {"failures", failures},
                {"capped", capped},
                {"entries", entries}};
    run.status = failures > 0 ? RunStatus::Discrepancy : capped > 0 ? RunStatus::ResourceCap : RunStatus::Ok;
    run.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return run;
}

std::string validate_text(const RunReport& run) {
    std::ostringstream os;
    for (const auto& e : run.json["entries"]) {
        os << std::setw(14) << std::left << e["status"].get<std::string>() << std::right << " " << e["file"].get<std::string>();
        if (e.contains("name")) {
            os << "  (" << e["name"].get<std::string>() << ")";
        }
        os << "\n";
        for (const auto& d : e["discrepancies"]) {
            os << "    " << d.get<std::string>() << "\n";
        }
    }
    os << run.json["total"].get<std::size_t>() << " inputs, " << run.json["failures"].get<std::size_t>()
       << " failures\n";
    os << std::fixed << std::setprecision(1) << "time: " << run.elapsed_ms << " ms\n";
    return os.str();
}

}  // namespace bredon
