// Command-line frontend: builds the triangular algebras, counts invariants
// by generic rank, emits the bundled invariant catalog, verifies candidate
// invariants against an algebra, and runs the whole certification battery.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "triag/json_io.hpp"
#include "triag/suite.hpp"

using namespace triag;

namespace {

struct GlobalOpts {
    std::uint64_t seed = 0;
    std::uint32_t trials = 5;
    std::string format = "text";
    std::string out;
    bool parallel = false;
};

void write_output(const GlobalOpts& g, const std::string& payload) {
    if (g.out.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw Error("cannot open output file '" + g.out + "'");
    f << payload;
    if (!payload.empty() && payload.back() != '\n') f << "\n";
}

Params parse_params(const std::vector<std::string>& kvs) {
    Params p;
    for (const std::string& kv : kvs) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw Error("parameter '" + kv + "' is not of the form name=p/q");
        p[kv.substr(0, eq)] = rat_from_string(kv.substr(eq + 1));
    }
    return p;
}

std::vector<Rat> parse_diag(const std::string& csv) {
    std::vector<Rat> diag;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) diag.push_back(rat_from_string(item));
    return diag;
}

Json load_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot open '" + path + "'");
    try {
        return Json::parse(f);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error("malformed JSON in '" + path + "' at byte " + std::to_string(e.byte) + ": " +
                    e.what());
    }
}

// target grammar: T M | L M f specfile.json | full-rank M | L41/L42/L43 with -p params
LieAlgebra build_target(const std::vector<std::string>& target, const Params& params,
                        std::optional<CatalogEntry>* entry_out = nullptr) {
    if (target.empty()) throw Error("missing algebra target");
    const std::string& kind = target[0];
    auto need = [&](std::size_t n, const char* usage) {
        if (target.size() != n) throw Error(std::string("target usage: ") + usage);
    };
    if (kind == "T") {
        need(2, "T M");
        return build_T(static_cast<std::uint32_t>(std::stoul(target[1])));
    }
    if (kind == "full-rank") {
        need(2, "full-rank M");
        return build_L_full_rank(static_cast<std::uint32_t>(std::stoul(target[1])));
    }
    if (kind == "L") {
        need(4, "L M f specfile.json");
        const auto M = static_cast<std::uint32_t>(std::stoul(target[1]));
        const auto f = static_cast<std::uint32_t>(std::stoul(target[2]));
        Json j = load_json_file(target[3]);
        LieAlgebra alg = algebra_from_json(j, target[3]);
        if (alg.M() != M || alg.f() != f)
            throw Error("spec file describes L(" + std::to_string(alg.M()) + "," +
                        std::to_string(alg.f()) + "), not the requested L(" + target[1] + "," +
                        target[2] + ")");
        return alg;
    }
    if (kind == "L41" || kind == "L42" || kind == "L43") {
        need(1, "L41|L42|L43 [-p name=value ...]");
        Family fam = Family::Lemma1Case1;
        if (kind == "L41") {
            // pick by conditions: lam2 != 0 -> case 3; a14 = a23 = 0 -> case 1
            const Rat a12 = params.count("a12") ? params.at("a12") : Rat(1);
            const Rat a23 = params.count("a23") ? params.at("a23") : Rat(0);
            const Rat a34 = params.count("a34") ? params.at("a34") : -a12;
            const Rat lam2 = params.count("lam2") ? params.at("lam2") : Rat(0);
            Params full = params;
            full.emplace("a12", a12);
            full.emplace("a23", a23);
            full.emplace("a34", a34);
            if (lam2 != 0)
                fam = Family::Lemma1Case3;
            else if (a12 + a23 + a34 == 0 && a23 == 0)
                fam = Family::Lemma1Case1;
            else
                fam = Family::Lemma1Case2;
            CatalogEntry entry = lemma_invariants(fam, full);
            if (entry_out) *entry_out = entry;
            return entry.algebra;
        }
        if (kind == "L42") {
            if (params.count("sigma12"))
                fam = Family::Lemma2Case3;
            else if (params.count("lam2"))
                fam = Family::Lemma2Case1;
            else if (params.count("b34") && !params.count("b23"))
                fam = Family::Lemma2Case2b;
            else
                fam = Family::Lemma2Case2a;
            CatalogEntry entry = lemma_invariants(fam, params);
            if (entry_out) *entry_out = entry;
            return entry.algebra;
        }
        CatalogEntry entry = lemma_invariants(Family::Lemma3, params);
        if (entry_out) *entry_out = entry;
        return entry.algebra;
    }
    throw Error("unknown target '" + kind + "' (expected T, L, full-rank, L41, L42 or L43)");
}

int cmd_gen(const GlobalOpts& g, const std::vector<std::string>& target, const Params& params) {
    LieAlgebra alg = build_target(target, params);
    write_output(g, algebra_to_json(alg).dump(2));
    return 0;
}

int cmd_count(const GlobalOpts& g, const std::vector<std::string>& target, const Params& params) {
    LieAlgebra alg = build_target(target, params);
    RankOptions ro;
    ro.trials = g.trials;
    ro.seed = g.seed;
    ro.exec = g.parallel ? ExecMode::OpenMP : ExecMode::Serial;
    const std::uint32_t rank = generic_rank(alg, ro);
    const std::uint32_t n = alg.dim() - rank;
    if (g.format == "json") {
        Json j;
        j["algebra"] = alg.name();
        j["dim"] = alg.dim();
        j["rank"] = rank;
        j["n_I"] = n;
        write_output(g, j.dump(2));
    } else {
        write_output(g, "n_I = " + std::to_string(n) + " (dim " + std::to_string(alg.dim()) +
                            ", rank " + std::to_string(rank) + ")");
    }
    return 0;
}

int cmd_invariants(const GlobalOpts& g, const std::string& family, std::uint32_t M,
                   const std::string& diag_csv, const Params& params) {
    auto fam = family_from_name(family);
    if (!fam) throw Error("unknown family '" + family + "'");
    CatalogEntry entry = [&]() {
        switch (*fam) {
            case Family::Theorem1: {
                CatalogEntry e{Family::Theorem1, M, 0, {}, build_T(M), theorem1_basis(M),
                               M / 2, "T(" + std::to_string(M) + ")"};
                return e;
            }
            case Family::Prop1:
                return prop1_invariants(M);
            case Family::Prop2Case1:
            case Family::Prop2Case2: {
                if (diag_csv.empty()) throw Error("prop2 needs --diag a12,a23,...");
                CatalogEntry e = prop2_invariants(M, parse_diag(diag_csv));
                if (e.family != *fam)
                    throw Error("the supplied diagonal belongs to " + family_name(e.family));
                return e;
            }
            default:
                return lemma_invariants(*fam, params);
        }
    }();
    if (g.format == "json") {
        write_output(g, catalog_entry_to_json(entry).dump(2));
    } else {
        std::string out = entry.label + " (" + family_name(entry.family) + "), expected count " +
                          std::to_string(entry.expected_count) + "\n";
        for (const auto& inv : entry.invariants) out += "  " + to_text(inv) + "\n";
        write_output(g, out);
    }
    return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& algebra_file,
               const std::string& invariant_text, const std::string& invariant_file) {
    Json j = load_json_file(algebra_file);
    LieAlgebra alg = algebra_from_json(j, algebra_file);
    std::string text = invariant_text;
    if (!invariant_file.empty()) {
        std::ifstream f(invariant_file);
        if (!f) throw Error("cannot open '" + invariant_file + "'");
        std::getline(f, text);
    }
    if (text.empty()) throw Error("verify needs --invariant or --invariant-file");
    const InvariantExpr expr = parse_invariant(text, alg.universe());
    if (expr.has_shared_log_factors())
        std::cerr << "warning: two log arguments share a factor; the component-wise zero test "
                     "assumes multiplicatively independent arguments\n";
    const Certificate cert =
        verify_invariant(alg, expr, g.parallel ? ExecMode::OpenMP : ExecMode::Serial);
    write_output(g, g.format == "json" ? certificate_to_json(cert).dump(2) : certificate_text(cert));
    return cert.pass ? 0 : 1;
}

int cmd_certify_all(const GlobalOpts& g, bool slow) {
    SuiteOptions opts;
    opts.seed = g.seed;
    opts.trials = g.trials;
    opts.exec = g.parallel ? ExecMode::OpenMP : ExecMode::Serial;
    opts.include_slow = slow;
    std::ostringstream progress;
    opts.progress = g.format == "text" && g.out.empty() ? &std::cout : &progress;
    const auto results = run_acceptance(opts);
    if (g.format == "json") {
        Json j = Json::array();
        for (const auto& r : results)
            j.push_back(Json{{"criterion", r.id}, {"name", r.name}, {"pass", r.pass},
                             {"detail", r.detail}});
        write_output(g, j.dump(2));
    } else if (!(g.out.empty())) {
        write_output(g, progress.str());
    }
    const bool pass = all_passed(results);
    if (g.format == "text" && g.out.empty())
        std::cout << (pass ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << std::endl;
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of triangular nilpotent and solvable Lie algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--seed", g.seed, "seed for all randomized sampling (default 0)");
    app.add_option("--trials", g.trials, "rank/jacobian sampling trials (default 5)");
    app.add_option("--format", g.format, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", g.out, "write output to this file instead of stdout");
    app.add_flag("--parallel", g.parallel, "run independent work items with OpenMP");

    std::vector<std::string> target;
    std::vector<std::string> param_kvs;
    std::string family, diag_csv, algebra_file, invariant_text, invariant_file;
    std::uint32_t M = 4;
    bool slow = false;

    // member parameters can be given as -p name=p/q or as direct flags
    std::map<std::string, std::string> flag_params;
    auto add_member_flags = [&](CLI::App* sub) {
        for (const char* name : {"a12", "a23", "a34", "b12", "b23", "b34", "lam1", "lam2", "lam3",
                                 "sigma12"})
            sub->add_option_function<std::string>(
                "--" + std::string(name),
                [&flag_params, name](const std::string& v) { flag_params[name] = v; },
                "member parameter " + std::string(name) + " (p/q)");
    };

    auto* gen = app.add_subcommand("gen", "write an algebra as JSON");
    gen->add_option("target", target, "T M | L M f spec.json | full-rank M | L41|L42|L43")
        ->expected(-1);
    gen->add_option("-p,--param", param_kvs, "family parameter name=p/q (repeatable)");
    add_member_flags(gen);

    auto* count = app.add_subcommand("count", "print the invariant count by generic rank");
    count->add_option("target", target, "T M | L M f spec.json | full-rank M | L41|L42|L43")
        ->expected(-1);
    count->add_option("-p,--param", param_kvs, "family parameter name=p/q (repeatable)");
    add_member_flags(count);

    auto* invs = app.add_subcommand("invariants", "emit a catalog family");
    invs->add_option("family", family,
                     "theorem1 | lemma1-case1|2|3 | lemma2-case1|2a|2b|3 | lemma3 | prop1 | "
                     "prop2-case1|2")
        ->required();
    invs->add_option("-M,--size", M, "matrix size M");
    invs->add_option("--diag", diag_csv, "prop2 superdiagonal a12,a23,... (comma separated)");
    invs->add_option("-p,--param", param_kvs, "family parameter name=p/q (repeatable)");
    add_member_flags(invs);

    auto* verify = app.add_subcommand("verify", "check a candidate invariant against an algebra");
    verify->add_option("--algebra", algebra_file, "algebra JSON file")->required();
    verify->add_option("--invariant", invariant_text, "candidate in canonical text form");
    verify->add_option("--invariant-file", invariant_file, "read the candidate's first line");

    auto* certify = app.add_subcommand("certify-all", "run the full certification battery");
    certify->add_flag("--slow", slow, "include the count-only large-size runs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        Params params = parse_params(param_kvs);
        for (const auto& [k, v] : flag_params) params[k] = rat_from_string(v);
        if (gen->parsed()) return cmd_gen(g, target, params);
        if (count->parsed()) return cmd_count(g, target, params);
        if (invs->parsed()) return cmd_invariants(g, family, M, diag_csv, params);
        if (verify->parsed()) return cmd_verify(g, algebra_file, invariant_text, invariant_file);
        if (certify->parsed()) return cmd_certify_all(g, slow);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << std::endl;
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }
    return 2;
}
