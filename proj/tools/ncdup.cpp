// ncdup: colorations, duplicate construction, classification, homology tables
// and the acceptance suite from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 mathematical precondition violated.

#include "ncdup/acceptance.hpp"
#include "ncdup/io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <string>

using namespace ncdup;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kInputError = 2, kPrecondition = 3 };

struct Config {
    std::string setmap_path, coloration_path, out_path, quiver_out_path;
    std::size_t max_degree = 3;
    bool oracle = false;
    std::size_t resource_bound = OracleOptions{}.resource_bound;
    std::string format = "tsv";
    unsigned jobs = 1;
    std::uint64_t seed = 1;
    std::size_t classify_n = 0;
    std::size_t verify_size = 4;
    bool inject_fault = false;
};

DuplicatePair load_pair(const Config& cfg) {
    const SetMap m = setmap_from_json(read_json_file(cfg.setmap_path));
    const DeterminingElement a = coloration_from_json(read_json_file(cfg.coloration_path), m.size());
    if (!is_normalized(m, a)) std::cerr << "warning: coloration is non-zero at a loop vertex; normalizing to 0\n";
    DuplicatePair p = make_duplicate_pair(m, a);
    for (const auto& c : setmap_components(m)) {
        const Rational& t = p.coloration.values[c.vertices[0]];
        if (c.round_trip && !t.is_zero() && t != Rational(-1))
            std::cerr << "warning: round trip {" << c.vertices[0] << "," << c.vertices[1] << "} with a_u = " << t
                      << " gives a semisimple component, not the 2-crown; the formulas assume a_u in {0,-1}\n";
    }
    return p;
}

void emit(const Config& cfg, const json& j, const std::string& tsv) {
    std::string text = cfg.format == "json" ? j.dump(2) + "\n" : tsv;
    if (cfg.out_path.empty() || cfg.out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.out_path);
    if (!out) throw InputError("cannot write '" + cfg.out_path + "'");
    out << text;
}

int cmd_colorations(const Config& cfg) {
    const SetMap m = setmap_from_json(read_json_file(cfg.setmap_path));
    const ColorationSet cs = enumerate_colorations(m);
    std::string tsv;
    for (const auto& a : cs.discrete) {
        for (std::size_t x = 0; x < a.values.size(); ++x) tsv += (x ? "\t" : "") + a.values[x].to_string();
        tsv += "\n";
    }
    for (const auto& c : cs.parametric) tsv += "param\t" + std::to_string(c[0]) + "\t" + std::to_string(c[1]) + "\n";
    emit(cfg, colorations_to_json(cs), tsv);
    return kOk;
}

int cmd_build(const Config& cfg) {
    const DuplicatePair p = load_pair(cfg);
    const Algebra A = twisted_product(p);
    const RelatedQuiver r = related_quiver(p);
    std::string quiver_path = cfg.quiver_out_path;
    if (quiver_path.empty() && !cfg.out_path.empty() && cfg.out_path != "-") {
        std::filesystem::path path(cfg.out_path);
        quiver_path = (path.parent_path() / (path.stem().string() + ".quiver.json")).string();
    }
    if (cfg.out_path.empty() || cfg.out_path == "-")
        std::cout << algebra_to_json(A).dump(2) << "\n";
    else
        write_json_file(cfg.out_path, algebra_to_json(A));
    if (!quiver_path.empty()) write_json_file(quiver_path, quiver_to_json(r.quiver));
    return kOk;
}

int cmd_classify(const Config& cfg) {
    if (cfg.classify_n < 1 || cfg.classify_n > 6) throw InputError("classify: n must be between 1 and 6");
    const auto catalog = classify(cfg.classify_n, cfg.jobs);
    std::string tsv = "class\tmultiplicity\tvertices\tarrows\tcomponents\tsample_phi\n";
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        const auto& e = catalog[i];
        std::string comps, phi;
        for (const auto& c : e.components) comps += (comps.empty() ? "" : ",") + c.type + ":" + std::to_string(c.size);
        for (auto v : e.sample_phi.values()) phi += (phi.empty() ? "" : ",") + std::to_string(v);
        tsv += std::to_string(i) + "\t" + std::to_string(e.multiplicity) + "\t" + std::to_string(e.canonical_quiver.vertex_count()) +
               "\t" + std::to_string(e.canonical_quiver.arrow_count()) + "\t" + comps + "\t" + phi + "\n";
    }
    Config c = cfg;
    if (!cfg.out_path.empty() && cfg.out_path != "-" && cfg.format == "tsv") {
        // A catalog file is always JSON; the TSV summary goes to stdout.
        write_json_file(cfg.out_path, catalog_to_json(catalog));
        std::cout << tsv;
        return kOk;
    }
    emit(c, catalog_to_json(catalog), tsv);
    return kOk;
}

int cmd_homology(const Config& cfg) {
    const DuplicatePair p = load_pair(cfg);
    struct Row {
        const char* name;
        DimTable formula;
        std::optional<DimTable> oracle;
    };
    std::vector<Row> rows{{"HH^", duplicate_hh_summary(p, cfg.max_degree), std::nullopt},
                          {"HC_", hc_dims_duplicate(p, cfg.max_degree), std::nullopt},
                          {"HH_", hh_homology_dims_duplicate(p, cfg.max_degree), std::nullopt}};
    if (cfg.oracle) {
        const Algebra A = twisted_product(p);
        OracleOptions opt;
        opt.resource_bound = cfg.resource_bound;
        rows[0].oracle = hochschild_cohomology_oracle(A, cfg.max_degree, opt);
        rows[1].oracle = cyclic_homology_oracle(A, cfg.max_degree, opt);
        rows[2].oracle = hochschild_homology_oracle(A, cfg.max_degree, opt);
    }
    bool mismatch = false;
    std::string tsv = cfg.oracle ? "table\tdegree\tformula\toracle\tverdict\n" : "table\tdegree\tformula\n";
    json tables = json::object();
    for (const auto& row : rows) {
        json jt{{"formula", dimtable_to_json(row.formula)}};
        json verdicts = json::array();
        for (std::size_t n = 0; n <= cfg.max_degree; ++n) {
            tsv += std::string(row.name) + "\t" + std::to_string(n) + "\t" + to_string(row.formula.at(n));
            if (row.oracle) {
                const DimCell& f = row.formula.at(n);
                const DimCell& o = row.oracle->at(n);
                std::string verdict = !f.has_value() || !o.has_value() ? "n/a" : f == o ? "match" : "mismatch";
                mismatch = mismatch || verdict == "mismatch";
                tsv += "\t" + to_string(o) + "\t" + verdict;
                verdicts.push_back(verdict);
            }
            tsv += "\n";
        }
        tsv += std::string(row.name) + "\ttotal\t" + to_string(row.formula.total) + "\n";
        if (row.oracle) {
            jt["oracle"] = dimtable_to_json(*row.oracle);
            jt["verdict"] = verdicts;
        }
        tables[row.name] = jt;
    }
    emit(cfg, json{{"tables", tables}}, tsv);
    return mismatch ? kVerifyFailed : kOk;
}

int cmd_verify(const Config& cfg) {
    AcceptanceConfig ac = AcceptanceConfig::for_size(cfg.verify_size);
    ac.inject_fault = cfg.inject_fault;
    ac.oracle.resource_bound = cfg.resource_bound;
    bool all = true;
    json report = json::array();
    std::string tsv;
    auto record = [&](const CriterionResult& r) {
        all = all && r.passed;
        char line[256];
        std::snprintf(line, sizeof line, "%-4s criterion %2d  %-66s checks=%llu failures=%llu %.2fs\n", r.passed ? "PASS" : "FAIL",
                      r.id, r.title.c_str(), static_cast<unsigned long long>(r.checks),
                      static_cast<unsigned long long>(r.failure_count), r.seconds);
        tsv += line;
        for (const auto& f : r.failures) tsv += "      " + f + "\n";
        report.push_back({{"criterion", r.id}, {"title", r.title}, {"passed", r.passed}, {"checks", r.checks},
                          {"failures", r.failure_count}, {"examples", r.failures}, {"seconds", r.seconds}});
    };
    for (const auto& spec : acceptance_criteria()) record(run_criterion(spec, ac));
    record(basis_independence_check(cfg.seed, 10, ac));
    emit(cfg, json{{"passed", all}, {"criteria", report}}, tsv);
    return all ? kOk : kVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Non-commutative duplicates of finite sets: colorations, algebras, classification, homology"};
    app.require_subcommand(1);
    Config cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"tsv", "json"}));
        sub->add_option("-o,--out", cfg.out_path, "output file (default stdout)");
    };

    auto* col = app.add_subcommand("colorations", "list all colorations of a set map");
    col->add_option("setmap", cfg.setmap_path, "set map JSON")->required();
    add_common(col);

    auto* build = app.add_subcommand("build", "write the twisted product algebra and its related quiver");
    build->add_option("setmap", cfg.setmap_path, "set map JSON")->required();
    build->add_option("coloration", cfg.coloration_path, "coloration JSON")->required();
    build->add_option("-o,--out", cfg.out_path, "algebra JSON output (default stdout)");
    build->add_option("--quiver-out", cfg.quiver_out_path, "related quiver JSON output (default <out>.quiver.json)");

    auto* cls = app.add_subcommand("classify", "catalog of duplicates of an n-element set up to isomorphism");
    cls->add_option("n", cfg.classify_n, "set size, 1..6")->required();
    cls->add_option("--jobs", cfg.jobs, "worker threads (0 = all cores)");
    add_common(cls);

    auto* hom = app.add_subcommand("homology", "HH^*, HC_* and HH_* tables of a duplicate");
    hom->add_option("setmap", cfg.setmap_path, "set map JSON")->required();
    hom->add_option("coloration", cfg.coloration_path, "coloration JSON")->required();
    hom->add_option("--max-degree", cfg.max_degree, "highest degree");
    hom->add_flag("--oracle", cfg.oracle, "also compute the brute-force complexes and compare");
    hom->add_option("--resource-bound", cfg.resource_bound, "max nonzeros per oracle differential");
    add_common(hom);

    auto* ver = app.add_subcommand("verify", "run the acceptance suite");
    ver->add_option("--size", cfg.verify_size, "largest |E| for the exhaustive checks")->check(CLI::Range(1, 4));
    ver->add_option("--seed", cfg.seed, "seed for the randomized basis-change check");
    ver->add_option("--resource-bound", cfg.resource_bound, "max nonzeros per oracle differential");
    ver->add_flag("--inject-fault", cfg.inject_fault, "corrupt one structure constant of every built duplicate");
    add_common(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*col) return cmd_colorations(cfg);
        if (*build) return cmd_build(cfg);
        if (*cls) return cmd_classify(cfg);
        if (*hom) return cmd_homology(cfg);
        if (*ver) return cmd_verify(cfg);
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        for (const auto& v : e.violations()) std::cerr << "  violated: " << v << "\n";
        return kPrecondition;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kVerifyFailed;
    }
    return kOk;
}
