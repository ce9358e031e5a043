#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewcc/duality.hpp"
#include "skewcc/pipeline.hpp"
#include "skewcc/textio.hpp"

using namespace skewcc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitSpecError = 2;

std::string default_corpus_dir() {
    if (const char* env = std::getenv("SKEWCC_CORPUS")) return env;
    return "data/corpus";
}

struct CommonOpts {
    std::uint64_t budget = (1ull << 26);
    int workers = 1;
    bool json = false;
    std::string csv_path;

    EnumOptions enum_opts() const { return EnumOptions{budget, workers, (1ull << 16), 0x5eedcc01ull}; }
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--budget", c.budget, "max enumerated words before degrading to bounds");
    cmd->add_option("--workers,-j", c.workers, "worker threads (never changes results)");
    cmd->add_flag("--json", c.json, "machine-readable output");
    cmd->add_option("--csv", c.csv_path, "also write a CSV summary to this path");
}

void write_csv(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

CodeSpecFile load_one(const std::string& path, int row) {
    auto specs = load_spec_collection(path);
    if (specs.empty()) throw std::invalid_argument("no specs in " + path);
    if (row < 0 || row >= static_cast<int>(specs.size()))
        throw std::invalid_argument("row index out of range (file has " + std::to_string(specs.size()) +
                                    " specs)");
    return specs[row];
}

int cmd_verify(const std::string& path, int row, const CommonOpts& c) {
    const CodeSpecFile sf = load_one(path, row);
    const VerifyResult r = run_verify(sf, c.enum_opts());
    if (c.json)
        std::cout << render_verify_json(r).dump(2) << "\n";
    else
        std::cout << render_verify_text(r);
    if (!c.csv_path.empty()) write_csv(c.csv_path, "id,n,k,d,exact,q\n" + verify_csv_row(r) + "\n");
    return verify_exit_code(r);
}

int cmd_reproduce(const std::string& table, const std::string& corpus, const CommonOpts& c) {
    const ReproduceReport rep = run_reproduce(table, corpus, c.enum_opts());
    if (c.json)
        std::cout << render_reproduce_json(rep).dump(2) << "\n";
    else
        std::cout << render_reproduce_text(rep, c.enum_opts());
    if (!c.csv_path.empty()) write_csv(c.csv_path, reproduce_csv(rep));
    return rep.mismatched == 0 ? kExitOk : kExitMismatch;
}

int cmd_mindist(const std::string& path, const std::string& method, bool cross_check, const CommonOpts& c) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    nlohmann::json j;
    in >> j;

    LinearCode code = [&] {
        if (j.contains("generators")) {
            CodeSpecFile sf = parse_spec_json(j);
            return gray_image(build_r_code(sf.r_spec()), sf.gray);
        }
        const FieldSpecPtr field = parse_field_json(j.at("field"));
        return LinearCode::from_generator(parse_matrix_json(j.at("matrix"), field));
    }();

    const EnumOptions opt = c.enum_opts();
    DistanceResult dist;
    if (method == "direct") {
        dist = min_distance(code, opt);
        if (!dist.exact) throw std::runtime_error("direct method exceeds budget; refuse to report a bound as exact");
    } else if (method == "macwilliams") {
        dist = macwilliams_min_distance(code, opt);
    } else {
        dist = min_distance_auto(code, opt);
        if (cross_check) {
            DistanceResult direct{0, false}, mw{0, false};
            bool have_direct = false, have_mw = false;
            try {
                direct = min_distance(code, opt);
                have_direct = direct.exact;
            } catch (const std::exception&) {
            }
            try {
                mw = macwilliams_min_distance(code, opt);
                have_mw = true;
            } catch (const std::exception&) {
            }
            if (have_direct && have_mw && direct.d != mw.d)
                throw std::logic_error("oracle violation: direct and MacWilliams distances disagree");
        }
    }

    if (c.json) {
        nlohmann::json out{{"schema", "skewcc.mindist/1"}, {"n", code.n()}, {"k", code.k()},
                           {"d", dist.d},                  {"exact", dist.exact}, {"q", code.spec()->q()}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "[" << code.n() << "," << code.k() << "]_" << code.spec()->q() << "  d "
                  << (dist.exact ? "= " : "<= ") << dist.d << "\n";
    }
    return kExitOk;
}

int cmd_dual_check(const std::string& path, int row, const CommonOpts& c) {
    const CodeSpecFile sf = load_one(path, row);
    const RCodeSpec rspec = sf.r_spec();
    rspec.validate();
    nlohmann::json out;
    out["schema"] = "skewcc.dualcheck/1";
    out["id"] = sf.id;
    nlohmann::json comps = nlohmann::json::array();
    for (int i = 0; i < rspec.rctx.spec.l; ++i) {
        const auto comp = rspec.component(i);
        nlohmann::json cj;
        cj["component"] = i + 1;
        cj["alpha"] = format_element(comp.alpha);
        cj["g"] = format_poly(comp.g.coeffs());
        const bool annihilator = sf.claims.construction == "annihilator";
        const DualityReport rep = annihilator ? analyze_annihilator(comp) : analyze_euclidean(comp);
        cj["kind"] = rep.kind;
        cj["hypotheses_met"] = annihilator ? rep.hypotheses.delta_zero : rep.hypotheses.met();
        if (rep.cofactor) cj["h"] = format_poly(rep.cofactor->coeffs());
        if (rep.dual_generator) cj["h_dagger"] = format_poly(rep.dual_generator->coeffs());
        cj["dual_containing"] = rep.dual_containing;
        comps.push_back(cj);
    }
    out["components"] = comps;
    if (c.json) {
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& cj : out["components"]) {
            std::cout << "component " << cj["component"] << " (" << cj["kind"].get<std::string>()
                      << "): g = " << cj["g"].get<std::string>();
            if (cj.contains("h")) std::cout << ", h = " << cj["h"].get<std::string>();
            if (cj.contains("h_dagger")) std::cout << ", h+ = " << cj["h_dagger"].get<std::string>();
            std::cout << ", dual-containing = " << (cj["dual_containing"].get<bool>() ? "yes" : "no") << "\n";
        }
    }
    return kExitOk;
}

int cmd_quantum(const std::string& path, int row, const CommonOpts& c) {
    const CodeSpecFile sf = load_one(path, row);
    const VerifyResult r = run_verify(sf, c.enum_opts());
    if (r.status == RowStatus::kMismatch && !r.divisors_ok) {
        std::cerr << "error: " << (r.diagnostics.empty() ? "structural failure" : r.diagnostics.front()) << "\n";
        return kExitMismatch;
    }
    if (!r.quantum) {
        std::cerr << "no quantum code derivable (not dual-containing or hypotheses unmet)\n";
        return kExitMismatch;
    }
    const auto& qp = *r.quantum;
    nlohmann::json out{{"schema", "skewcc.quantum/1"},
                       {"n", qp.n},
                       {"k", qp.k},
                       {"d", qp.d},
                       {"d_exact", qp.d_kind == DistKind::kExact},
                       {"d_is_lower_bound", qp.d_kind == DistKind::kLowerBound},
                       {"q", qp.q},
                       {"class", to_string(qp.cls)}};
    if (c.json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "[[" << qp.n << "," << qp.k << ","
                  << (qp.d_kind == DistKind::kLowerBound ? ">=" : "") << qp.d << "]]_" << qp.q << "  "
                  << to_string(qp.cls) << (qp.cls_provisional ? " (provisional)" : "") << "\n";
    }
    return kExitOk;
}

int cmd_search(FieldSpecPtr field, int theta_exp, const std::string& s_str, int n, const std::string& alpha_str,
               int degree, bool dual_containing, int top, const CommonOpts& c) {
    SearchOptions so{SkewRingCtx::make(field, theta_exp, parse_element(s_str, field)),
                     n,
                     parse_element(alpha_str, field),
                     degree,
                     dual_containing,
                     top,
                     c.enum_opts()};
    const auto hits = run_search(so);
    if (c.json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& h : hits)
            rows.push_back({{"g", format_poly(h.g.coeffs())},
                            {"n", so.n},
                            {"k", h.k},
                            {"d", h.dist.d},
                            {"exact", h.dist.exact}});
        std::cout << nlohmann::json{{"schema", "skewcc.search/1"}, {"hits", rows}}.dump(2) << "\n";
    } else {
        std::cout << render_search_text(so, hits);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "skewcc: skew constacyclic codes over F_q^l, Gray images, dual containment and CSS quantum codes"};
    app.require_subcommand(1);

    CommonOpts copt;

    // verify
    auto* verify = app.add_subcommand("verify", "run the full pipeline on a spec file and check its claims");
    std::string verify_path;
    int verify_row = 0;
    verify->add_option("path", verify_path, "spec JSON file")->required();
    verify->add_option("--row", verify_row, "row index when the file holds a spec collection");
    add_common(verify, copt);

    // reproduce
    auto* reproduce = app.add_subcommand("reproduce", "re-derive the bundled corpus rows");
    std::string table = "examples";
    std::string corpus = default_corpus_dir();
    reproduce->add_option("--table", table, "1 | 2 | 3 | examples")->required();
    reproduce->add_option("--corpus", corpus, "corpus directory (default data/corpus)");
    add_common(reproduce, copt);

    // mindist
    auto* mindist = app.add_subcommand("mindist", "minimum distance of a spec's Gray image or a raw matrix");
    std::string mindist_path, method = "auto";
    bool cross_check = false;
    mindist->add_option("path", mindist_path, "spec JSON or {field, matrix} JSON")->required();
    mindist->add_option("--method", method, "auto | direct | macwilliams")
        ->check(CLI::IsMember({"auto", "direct", "macwilliams"}));
    mindist->add_flag("--cross-check", cross_check, "run both methods when feasible and fail on disagreement");
    add_common(mindist, copt);

    // dual-check
    auto* dual = app.add_subcommand("dual-check", "duality analysis per component");
    std::string dual_path;
    int dual_row = 0;
    dual->add_option("path", dual_path, "spec JSON file")->required();
    dual->add_option("--row", dual_row, "row index in a collection");
    add_common(dual, copt);

    // quantum
    auto* quantum = app.add_subcommand("quantum", "derive CSS quantum parameters from a spec file");
    std::string quantum_path;
    int quantum_row = 0;
    quantum->add_option("path", quantum_path, "spec JSON file")->required();
    quantum->add_option("--row", quantum_row, "row index in a collection");
    add_common(quantum, copt);

    // search
    auto* search = app.add_subcommand("search", "enumerate right divisors of x^n - alpha and rank the codes");
    int q = 0, theta_exp = 0, n = 0, degree = 0, top = 10;
    int field_p = 0, field_m = 0;
    std::vector<int> field_modulus;
    std::string s_str = "0", alpha_str = "1";
    bool dual_only = false;
    search->add_option("--q", q, "field order with a default modulus (4, 8, 9, 16 or prime)");
    search->add_option("--p", field_p, "characteristic (with --m/--modulus for custom fields)");
    search->add_option("--m", field_m, "extension degree");
    search->add_option("--modulus", field_modulus, "modulus coefficients, constant first");
    search->add_option("--theta-exp", theta_exp, "Frobenius exponent of theta");
    search->add_option("--s", s_str, "inner-derivation parameter (0 for delta = 0)");
    search->add_option("--n", n, "code length")->required();
    search->add_option("--alpha", alpha_str, "constacyclic constant");
    search->add_option("--degree,-r", degree, "divisor degree")->required();
    search->add_flag("--dual-containing", dual_only, "keep only Euclidean dual-containing codes");
    search->add_option("--top", top, "entries to print");
    add_common(search, copt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(verify_path, verify_row, copt);
        if (reproduce->parsed()) return cmd_reproduce(table, corpus, copt);
        if (mindist->parsed()) return cmd_mindist(mindist_path, method, cross_check, copt);
        if (dual->parsed()) return cmd_dual_check(dual_path, dual_row, copt);
        if (quantum->parsed()) return cmd_quantum(quantum_path, quantum_row, copt);
        if (search->parsed()) {
            FieldSpecPtr field;
            if (q > 0)
                field = FieldSpec::gf(q);
            else if (field_p > 0 && !field_modulus.empty())
                field = FieldSpec::make(field_p, field_modulus);
            else
                throw std::invalid_argument("search needs --q or --p/--modulus");
            return cmd_search(field, theta_exp, s_str, n, alpha_str, degree, dual_only, top, copt);
        }
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSpecError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSpecError;
    }
    return kExitOk;
}
