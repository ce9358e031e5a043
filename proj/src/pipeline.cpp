#include "skewcc/pipeline.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "skewcc/duality.hpp"
#include "skewcc/textio.hpp"

namespace skewcc {

namespace {

using Outcome = ClaimCheck::Outcome;

std::string linear_triple(int n, int k, int d, int q, bool exact) {
    std::ostringstream os;
    os << "[" << n << "," << k << "," << d << (exact ? "" : "?") << "]_" << q;
    return os.str();
}

std::string quantum_triple(int n, int k, int d, int q, DistKind kind) {
    std::ostringstream os;
    os << "[[" << n << "," << k << ",";
    if (kind == DistKind::kLowerBound)
        os << ">=" << d;
    else if (kind == DistKind::kUpperBound)
        os << d << "?";
    else
        os << d;
    os << "]]_" << q;
    return os.str();
}

std::string claim_quantum_triple(const QuantumClaim& qc, int q) {
    std::ostringstream os;
    os << "[[" << qc.n << "," << qc.k << "," << (qc.d_is_lower_bound ? ">=" : "") << qc.d << "]]_" << q;
    return os.str();
}

void push_check(VerifyResult& r, std::string what, std::string claimed, std::string computed, Outcome o) {
    r.checks.push_back({std::move(what), std::move(claimed), std::move(computed), o});
}

void compare_linear_claim(VerifyResult& r, const LinearClaim& claim) {
    const std::string claimed = linear_triple(claim.n, claim.k, claim.d, r.q, true);
    const std::string computed = linear_triple(r.nl, r.k, r.linear_dist.d, r.q, r.linear_dist.exact);
    Outcome o = Outcome::kOk;
    if (claim.n != r.nl || claim.k != r.k) {
        o = Outcome::kFailed;
    } else if (r.linear_dist.exact) {
        o = claim.d == r.linear_dist.d ? Outcome::kOk : Outcome::kFailed;
    } else {
        // computed value is an upper bound: it can refute a larger claim but
        // never confirm one
        o = r.linear_dist.d < claim.d ? Outcome::kFailed : Outcome::kUnconfirmed;
    }
    push_check(r, "linear", claimed, computed, o);
}

void compare_quantum_claim(VerifyResult& r, const QuantumClaim& claim) {
    if (!r.quantum) {
        push_check(r, "quantum", claim_quantum_triple(claim, r.q), "unavailable", Outcome::kFailed);
        return;
    }
    const QuantumParams& qp = *r.quantum;
    const std::string claimed = claim_quantum_triple(claim, r.q);
    const std::string computed = quantum_triple(qp.n, qp.k, qp.d, qp.q, qp.d_kind);
    Outcome o = Outcome::kOk;
    if (claim.n != qp.n || claim.k != qp.k) {
        o = Outcome::kFailed;
    } else if (qp.d_kind == DistKind::kExact) {
        o = (claim.d_is_lower_bound ? qp.d >= claim.d : qp.d == claim.d) ? Outcome::kOk : Outcome::kFailed;
    } else if (qp.d_kind == DistKind::kLowerBound) {
        if (claim.d_is_lower_bound) {
            o = qp.d >= claim.d ? Outcome::kOk : Outcome::kUnconfirmed;
        } else {
            o = qp.d > claim.d ? Outcome::kFailed : Outcome::kUnconfirmed;
        }
    } else {
        o = Outcome::kUnconfirmed;
    }
    push_check(r, "quantum", claimed, computed, o);

    if (claim.marker) {
        const bool provisional = qp.d_kind != DistKind::kExact;
        // With an exact d' the classification is authoritative; otherwise
        // check the marker against the claimed triple for consistency.
        const SingletonClass cls =
            provisional ? classify_singleton(claim.n, claim.k, claim.d) : qp.cls;
        const Outcome mo = cls == *claim.marker ? Outcome::kOk : Outcome::kFailed;
        push_check(r, provisional ? "class (provisional)" : "class", to_string(*claim.marker), to_string(cls), mo);
    }
}

void finalize_status(VerifyResult& r) {
    bool failed = false, unconfirmed = false;
    for (const auto& c : r.checks) {
        failed |= c.outcome == Outcome::kFailed;
        unconfirmed |= c.outcome == Outcome::kUnconfirmed;
    }
    if (failed)
        r.status = RowStatus::kMismatch;
    else if (unconfirmed)
        r.status = RowStatus::kBoundOnly;
    else
        r.status = RowStatus::kReproduced;
}

}  // namespace

std::string to_string(RowStatus s) {
    switch (s) {
        case RowStatus::kReproduced:
            return "REPRODUCED";
        case RowStatus::kBoundOnly:
            return "BOUND-ONLY";
        case RowStatus::kMismatch:
            return "MISMATCH";
        default:
            return "SPEC-ERROR";
    }
}

VerifyResult run_verify(const CodeSpecFile& sf, const EnumOptions& opt) {
    VerifyResult r;
    r.id = sf.id;
    r.q = sf.rctx.spec.field->q();
    r.l = sf.rctx.spec.l;
    r.n = sf.n;
    r.nl = sf.n * r.l;
    r.construction = sf.claims.construction;

    for (int i = 0; i < r.l; ++i)
        if (sf.gens_rescaled[i])
            r.notes.push_back("g" + std::to_string(i + 1) + " monic-normalized from \"" + sf.gens_as_given[i] +
                              "\" to " + format_poly(sf.gens[i].coeffs()) + " (same code)");

    // structural check: every generator must right-divide x^n - a_i
    const RCodeSpec rspec = sf.r_spec();
    for (int i = 0; i < r.l; ++i) {
        const auto comp = rspec.component(i);
        const SkewPoly modulus = SkewPoly::x_pow_minus(comp.ctx, comp.n, comp.alpha);
        if (!right_divides(comp.g, modulus)) {
            r.diagnostics.push_back("g" + std::to_string(i + 1) + " is not a right divisor of x^" +
                                    std::to_string(sf.n) + "-" + format_element(comp.alpha));
            r.status = RowStatus::kMismatch;
            return r;
        }
    }
    r.divisors_ok = true;

    const RCode code = build_r_code(rspec);
    r.k = code.dim;
    for (const auto& c : code.comps) r.comp_dims.push_back(c.k());

    r.closure_ok = closure_check(rspec);
    if (!r.closure_ok) {
        r.diagnostics.push_back("row space is not closed under the pseudo-linear transform");
        r.status = RowStatus::kMismatch;
        return r;
    }

    const LinearCode image = gray_image(code, sf.gray);
    r.linear_dist = min_distance_auto(image, opt);

    if (sf.claims.linear) compare_linear_claim(r, *sf.claims.linear);

    const bool want_annihilator = sf.claims.construction == "annihilator";
    const bool try_euclidean = !want_annihilator && sf.rctx.delta_is_zero();

    if (want_annihilator) {
        const FqCyclicSpec comp0 = rspec.component(0);
        r.dual_containing = is_annihilator_dual_containing(comp0.n, comp0.alpha, comp0.g);
        if (*r.dual_containing)
            r.quantum = css_with_excluded(image, annihilator_dual(comp0), r.linear_dist, opt);
    } else if (try_euclidean) {
        bool hypotheses_ok = true;
        for (int i = 0; i < r.l && hypotheses_ok; ++i) {
            const auto comp = rspec.component(i);
            hypotheses_ok = euclidean_hypotheses(comp.n, comp.alpha, comp.ctx).met();
        }
        if (hypotheses_ok) {
            r.dual_containing = is_euclidean_dual_containing_R(rspec);
            const auto orth = check_orthogonality_matrix(sf.gray);
            if (*r.dual_containing && orth.ok) {
                r.quantum = css_single(image, r.linear_dist, opt);
                // the CSS theorem applied with C_1 = C_2 = Phi(C) gives
                // dimension 2K - nl; the literal K - nl reading is recorded
                // alongside wherever the two diverge
                if (r.quantum->k != r.k - r.nl)
                    r.notes.push_back("quantum dimension 2K-nl = " + std::to_string(r.quantum->k) +
                                      " (literal K-nl would give " + std::to_string(r.k - r.nl) + ")");
            } else if (*r.dual_containing && !orth.ok) {
                r.diagnostics.push_back("Gray map does not satisfy M M^T = lambda I; quantum route unavailable");
            }
        } else {
            r.diagnostics.push_back("Euclidean dual hypotheses unmet (theta(alpha) != alpha or ord(theta) does not divide n)");
        }
    }

    if (sf.claims.dual_containing) {
        const std::string claimed = *sf.claims.dual_containing ? "yes" : "no";
        const std::string computed = r.dual_containing ? (*r.dual_containing ? "yes" : "no") : "unavailable";
        push_check(r, "dual-containing", claimed, computed,
                   r.dual_containing && *r.dual_containing == *sf.claims.dual_containing ? Outcome::kOk
                                                                                         : Outcome::kFailed);
    }
    if (sf.claims.quantum) compare_quantum_claim(r, *sf.claims.quantum);

    finalize_status(r);
    return r;
}

std::string render_verify_text(const VerifyResult& r) {
    std::ostringstream os;
    os << "spec " << r.id << " (q=" << r.q << ", l=" << r.l << ", n=" << r.n << ")\n";
    for (const auto& n : r.notes) os << "  note: " << n << "\n";
    if (!r.divisors_ok || !r.closure_ok) {
        for (const auto& d : r.diagnostics) os << "  error: " << d << "\n";
        os << "  status: " << to_string(r.status) << "\n";
        return os.str();
    }
    os << "  component dims:";
    for (std::size_t i = 0; i < r.comp_dims.size(); ++i) os << " k" << (i + 1) << "=" << r.comp_dims[i];
    os << " -> K=" << r.k << "\n";
    os << "  closure check: ok\n";
    os << "  Gray image: " << linear_triple(r.nl, r.k, r.linear_dist.d, r.q, true)
       << (r.linear_dist.exact ? " (exact)" : " (upper bound)") << "\n";
    if (r.dual_containing)
        os << "  dual-containing (" << (r.construction.empty() ? "euclidean" : r.construction)
           << "): " << (*r.dual_containing ? "yes" : "no") << "\n";
    if (r.quantum) {
        const auto& qp = *r.quantum;
        os << "  quantum: " << quantum_triple(qp.n, qp.k, qp.d, qp.q, qp.d_kind) << ", " << to_string(qp.cls)
           << (qp.cls_provisional ? " (provisional)" : "") << "\n";
    }
    for (const auto& d : r.diagnostics) os << "  note: " << d << "\n";
    if (!r.checks.empty()) {
        os << "  claims:\n";
        for (const auto& c : r.checks) {
            os << "    " << c.what << ": claimed " << c.claimed << ", computed " << c.computed << " -> ";
            switch (c.outcome) {
                case Outcome::kOk:
                    os << "ok";
                    break;
                case Outcome::kUnconfirmed:
                    os << "unconfirmed (budget)";
                    break;
                default:
                    os << "MISMATCH";
            }
            os << "\n";
        }
    }
    os << "  status: " << to_string(r.status) << "\n";
    return os.str();
}

nlohmann::json render_verify_json(const VerifyResult& r) {
    nlohmann::json j;
    j["schema"] = "skewcc.verify/1";
    j["id"] = r.id;
    j["status"] = to_string(r.status);
    j["q"] = r.q;
    j["l"] = r.l;
    j["n"] = r.n;
    j["divisors_ok"] = r.divisors_ok;
    j["closure_ok"] = r.closure_ok;
    j["component_dims"] = r.comp_dims;
    j["gray_image"] = {{"n", r.nl}, {"k", r.k}, {"d", r.linear_dist.d}, {"d_exact", r.linear_dist.exact}};
    if (r.dual_containing) j["dual_containing"] = *r.dual_containing;
    if (!r.construction.empty()) j["construction"] = r.construction;
    if (r.quantum) {
        const auto& qp = *r.quantum;
        j["quantum"] = {{"n", qp.n},
                        {"k", qp.k},
                        {"d", qp.d},
                        {"d_exact", qp.d_kind == DistKind::kExact},
                        {"d_is_lower_bound", qp.d_kind == DistKind::kLowerBound},
                        {"class", to_string(qp.cls)},
                        {"class_provisional", qp.cls_provisional}};
    }
    j["notes"] = r.notes;
    j["diagnostics"] = r.diagnostics;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
        const char* o = c.outcome == Outcome::kOk ? "ok" : (c.outcome == Outcome::kUnconfirmed ? "unconfirmed" : "mismatch");
        checks.push_back({{"what", c.what}, {"claimed", c.claimed}, {"computed", c.computed}, {"outcome", o}});
    }
    j["checks"] = checks;
    return j;
}

std::string verify_csv_row(const VerifyResult& r) {
    std::ostringstream os;
    os << r.id << "," << r.nl << "," << r.k << "," << r.linear_dist.d << ","
       << (r.linear_dist.exact ? "exact" : "bound") << "," << r.q;
    return os.str();
}

int verify_exit_code(const VerifyResult& r) {
    if (r.status == RowStatus::kMismatch || r.status == RowStatus::kSpecError) return 1;
    return 0;
}

std::vector<std::string> corpus_files(const std::string& table, const std::string& corpus_dir) {
    const std::string base = corpus_dir.empty() ? std::string(".") : corpus_dir;
    if (table == "1") return {base + "/table1.json"};
    if (table == "2") return {base + "/table2.json"};
    if (table == "3") return {base + "/table3.json"};
    if (table == "examples")
        return {base + "/ex1_f4.json", base + "/ex2_f8.json", base + "/ex3_f9.json", base + "/ex4_f17.json"};
    throw std::invalid_argument("unknown table selector \"" + table + "\" (use 1, 2, 3 or examples)");
}

ReproduceReport run_reproduce(const std::string& table, const std::string& corpus_dir,
                              const EnumOptions& opt) {
    ReproduceReport rep;
    rep.table = table;
    for (const auto& path : corpus_files(table, corpus_dir))
        for (const auto& sf : load_spec_collection(path)) rep.rows.push_back(run_verify(sf, opt));
    for (const auto& r : rep.rows) {
        if (r.status == RowStatus::kReproduced)
            ++rep.reproduced;
        else if (r.status == RowStatus::kBoundOnly)
            ++rep.bound_only;
        else
            ++rep.mismatched;
    }
    return rep;
}

std::string render_reproduce_text(const ReproduceReport& rep, const EnumOptions& opt) {
    std::ostringstream os;
    os << "reproduce " << (rep.table == "examples" ? "examples" : "table " + rep.table)
       << " (budget=" << opt.budget << ")\n";
    for (const auto& r : rep.rows) {
        bool printed = false;
        for (const auto& n : r.notes)
            if (n.rfind("quantum dimension", 0) == 0) {
                os << "note (" << r.id << "): " << n << "\n";
                printed = true;
                break;
            }
        if (printed) break;  // record the formula divergence once, at its first occurrence
    }
    std::size_t idw = 3;
    for (const auto& r : rep.rows) idw = std::max(idw, r.id.size());
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        const auto& r = rep.rows[i];
        os << std::setw(3) << (i + 1) << "  " << std::left << std::setw(static_cast<int>(idw)) << r.id
           << std::right << "  q=" << std::left << std::setw(2) << r.q << " l=" << r.l << " n=" << std::setw(2)
           << r.n << std::right << "  ";
        if (!r.divisors_ok) {
            os << "structural failure: " << (r.diagnostics.empty() ? "?" : r.diagnostics.front());
        } else {
            os << linear_triple(r.nl, r.k, r.linear_dist.d, r.q, true)
               << (r.linear_dist.exact ? "" : " (bound)");
            if (r.dual_containing) os << "  dual=" << (*r.dual_containing ? "yes" : "no");
            if (r.quantum)
                os << "  Q=" << quantum_triple(r.quantum->n, r.quantum->k, r.quantum->d, r.quantum->q,
                                               r.quantum->d_kind)
                   << " " << to_string(r.quantum->cls);
        }
        os << "  " << to_string(r.status);
        for (const auto& c : r.checks)
            if (c.outcome == Outcome::kFailed)
                os << "  [" << c.what << ": claimed " << c.claimed << " vs computed " << c.computed << "]";
        os << "\n";
    }
    os << "summary: " << rep.reproduced << " reproduced, " << rep.bound_only << " bound-only, "
       << rep.mismatched << " mismatch\n";
    return os.str();
}

nlohmann::json render_reproduce_json(const ReproduceReport& rep) {
    nlohmann::json j;
    j["schema"] = "skewcc.reproduce/1";
    j["table"] = rep.table;
    j["summary"] = {{"reproduced", rep.reproduced}, {"bound_only", rep.bound_only}, {"mismatch", rep.mismatched}};
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : rep.rows) rows.push_back(render_verify_json(r));
    j["rows"] = rows;
    return j;
}

std::string reproduce_csv(const ReproduceReport& rep) {
    std::ostringstream os;
    os << "id,n,k,d,exact,q\n";
    for (const auto& r : rep.rows) os << verify_csv_row(r) << "\n";
    return os.str();
}

std::vector<SearchHit> run_search(const SearchOptions& opt) {
    const auto divisors = enumerate_monic_right_divisors(opt.n, opt.alpha, opt.degree, opt.ctx, opt.enumopt.budget);
    std::vector<SearchHit> hits;
    for (const auto& g : divisors) {
        if (opt.dual_containing_only) {
            if (!euclidean_hypotheses(opt.n, opt.alpha, opt.ctx).met()) continue;
            if (!is_euclidean_dual_containing_fq(opt.n, opt.alpha, g)) continue;
        }
        const int k = opt.n - g.degree();
        DistanceResult dist{0, true};
        if (k > 0) {
            const FqCyclicSpec spec{opt.n, opt.ctx, opt.alpha, g};
            dist = min_distance_auto(generator_matrix_fq(spec), opt.enumopt);
        }
        hits.push_back(SearchHit{g, k, dist, opt.dual_containing_only});
    }
    std::sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) {
        if (a.dist.exact != b.dist.exact) return a.dist.exact;
        if (a.dist.d != b.dist.d) return a.dist.d > b.dist.d;
        if (a.k != b.k) return a.k > b.k;
        return format_poly(a.g.coeffs()) < format_poly(b.g.coeffs());
    });
    if (static_cast<int>(hits.size()) > opt.top) hits.erase(hits.begin() + opt.top, hits.end());
    return hits;
}

std::string render_search_text(const SearchOptions& opt, const std::vector<SearchHit>& hits) {
    std::ostringstream os;
    os << "search: q=" << opt.ctx.field->q() << " theta=sigma^" << opt.ctx.theta.exp
       << " s=" << format_element(opt.ctx.s) << " n=" << opt.n << " alpha=" << format_element(opt.alpha)
       << " degree=" << opt.degree << (opt.dual_containing_only ? " dual-containing" : "") << "\n";
    for (std::size_t i = 0; i < hits.size(); ++i) {
        const auto& h = hits[i];
        os << std::setw(3) << (i + 1) << "  [" << opt.n << "," << h.k << "," << h.dist.d
           << (h.dist.exact ? "" : "?") << "]_" << opt.ctx.field->q() << "  g = "
           << format_poly(h.g.coeffs()) << "\n";
    }
    if (hits.empty()) os << "  (no divisors found)\n";
    return os.str();
}

}  // namespace skewcc
