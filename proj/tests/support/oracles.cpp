#include "support/oracles.hpp"

#include <cstdlib>
#include <sstream>

#include "skewcc/duality.hpp"
#include "skewcc/linalg.hpp"
#include "skewcc/textio.hpp"

namespace oracles {

namespace {

std::string fail(const std::string& what) { return what; }

}  // namespace

SkewPoly Rng::poly(const SkewRingCtx& ctx, int max_deg, bool force_nonzero) {
    const int deg = static_cast<int>(below(max_deg + 1));
    std::vector<FieldElement> coeffs;
    for (int i = 0; i <= deg; ++i) coeffs.push_back(element(ctx.field));
    auto p = SkewPoly::from_coeffs(ctx, coeffs);
    if (force_nonzero && p.is_zero()) return SkewPoly::constant(ctx, nonzero(ctx.field));
    return p;
}

std::vector<SkewRingCtx> example_contexts() {
    const auto f4 = FieldSpec::gf(4);
    const auto f8 = FieldSpec::gf(8);
    const auto f9 = FieldSpec::gf(9);
    return {
        SkewRingCtx::make(f4, 1, f4->generator()),  // F_4, sigma_2, delta_{sigma_2,w}
        SkewRingCtx::make(f4, 1, f4->zero()),       // F_4, sigma_2, 0
        SkewRingCtx::make(f8, 1, f8->zero()),       // F_8, sigma_2, 0
        SkewRingCtx::make(f8, 2, f8->zero()),       // F_8, sigma_2^2, 0
        SkewRingCtx::make(f9, 1, f9->generator()),  // F_9, sigma_3, delta_{sigma_3,w}
        SkewRingCtx::make(f9, 1, f9->zero()),       // F_9, sigma_3, 0
    };
}

std::string corpus_dir() {
    if (const char* env = std::getenv("SKEWCC_CORPUS")) return env;
    return "data/corpus";
}

std::vector<CodeSpecFile> load_corpus_table(const std::string& table) {
    std::vector<CodeSpecFile> out;
    const std::string base = corpus_dir();
    std::vector<std::string> files;
    if (table == "examples")
        files = {base + "/ex1_f4.json", base + "/ex2_f8.json", base + "/ex3_f9.json", base + "/ex4_f17.json"};
    else
        files = {base + "/table" + table + ".json"};
    for (const auto& f : files)
        for (auto& s : load_spec_collection(f)) out.push_back(std::move(s));
    return out;
}

std::vector<CodeSpecFile> load_whole_corpus() {
    std::vector<CodeSpecFile> out;
    for (const std::string table : {"examples", "1", "2", "3"})
        for (auto& s : load_corpus_table(table)) out.push_back(std::move(s));
    return out;
}

std::string check_field_axioms(const FieldSpecPtr& spec, bool exhaustive, int trials, std::uint64_t seed) {
    const auto q = static_cast<std::uint32_t>(spec->q());
    auto triple_ok = [&](std::uint32_t ia, std::uint32_t ib, std::uint32_t ic) -> bool {
        const auto a = spec->from_index(ia), b = spec->from_index(ib), c = spec->from_index(ic);
        if ((a + b) + c != a + (b + c)) return false;
        if ((a * b) * c != a * (b * c)) return false;
        if (a * (b + c) != a * b + a * c) return false;
        if (a + b != b + a || a * b != b * a) return false;
        return true;
    };
    if (exhaustive) {
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b)
                for (std::uint32_t c = 0; c < q; ++c)
                    if (!triple_ok(a, b, c)) return fail("field axiom failed on exhaustive triple");
        // a^q = a for every element
        for (std::uint32_t a = 0; a < q; ++a)
            if (spec->pow_idx(a, q) != a) return fail("a^q != a");
        // every nonzero element has a working inverse
        for (std::uint32_t a = 1; a < q; ++a)
            if (spec->mul_idx(a, spec->inv_idx(a)) != 1) return fail("a * a^-1 != 1");
    } else {
        Rng rng(seed);
        for (int t = 0; t < trials; ++t)
            if (!triple_ok(rng.below(q), rng.below(q), rng.below(q)))
                return fail("field axiom failed on random triple");
        // a^q = a stays exhaustive regardless; it is only q multiplications
        for (std::uint32_t a = 0; a < q; ++a)
            if (spec->pow_idx(a, q) != a) return fail("a^q != a");
    }
    return {};
}

std::string check_frobenius_homomorphism(const FieldSpecPtr& spec, int trials, std::uint64_t seed) {
    Rng rng(seed);
    for (int e = 0; e < spec->m(); ++e) {
        const FieldAut theta{e};
        for (int t = 0; t < trials; ++t) {
            const auto a = rng.element(spec), b = rng.element(spec);
            if (apply_aut(theta, a + b) != apply_aut(theta, a) + apply_aut(theta, b))
                return fail("theta not additive");
            if (apply_aut(theta, a * b) != apply_aut(theta, a) * apply_aut(theta, b))
                return fail("theta not multiplicative");
        }
        // sigma_p^m = Id
        for (int t = 0; t < 8; ++t) {
            const auto a = rng.element(spec);
            auto im = a;
            for (int i = 0; i < spec->m(); ++i) im = apply_aut(FieldAut{1}, im);
            if (im != a) return fail("sigma_p^m != Id");
        }
    }
    return {};
}

std::string check_aut_group(const FieldSpecPtr& spec) {
    // distinct actions on w: exactly m of them
    std::vector<std::uint32_t> images;
    const auto w = spec->generator();
    for (int e = 0; e < spec->m(); ++e) {
        const auto im = apply_aut(FieldAut{e}, w).index();
        for (auto seen : images)
            if (seen == im) return fail("two Frobenius powers coincide on w");
        images.push_back(im);
    }
    return {};
}

std::string check_leibniz(const SkewRingCtx& ctx, int trials, std::uint64_t seed) {
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        const auto a = rng.element(ctx.field), b = rng.element(ctx.field);
        const auto lhs = ctx.delta(a * b);
        const auto rhs = ctx.delta(a) * b + ctx.apply_theta(a) * ctx.delta(b);
        if (lhs != rhs) return fail("Leibniz rule failed");
    }
    return {};
}

std::string check_skew_ring_axioms(const SkewRingCtx& ctx, int triples, std::uint64_t seed) {
    Rng rng(seed);
    for (int t = 0; t < triples; ++t) {
        const auto f = rng.poly(ctx, 5), g = rng.poly(ctx, 5), h = rng.poly(ctx, 5);
        if (skew_mul(skew_mul(f, g), h) != skew_mul(f, skew_mul(g, h)))
            return fail("skew_mul not associative");
        if (skew_mul(f, g + h) != skew_mul(f, g) + skew_mul(f, h))
            return fail("skew_mul not left-distributive");
        if (skew_mul(f + g, h) != skew_mul(f, h) + skew_mul(g, h))
            return fail("skew_mul not right-distributive");
        if (!f.is_zero() && !g.is_zero() && skew_mul(f, g).degree() != deg_add(f.degree(), g.degree()))
            return fail("deg(f*g) != deg f + deg g");
    }
    return {};
}

std::string check_divmod(const SkewRingCtx& ctx, int trials, std::uint64_t seed) {
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        const auto f = rng.poly(ctx, 8);
        const auto g = rng.poly(ctx, 4, true);
        const auto [quot, rem] = right_divmod(f, g);
        if (skew_mul(quot, g) + rem != f) return fail("recomposition q*g + r != f");
        if (!rem.is_zero() && rem.degree() >= g.degree()) return fail("remainder degree too large");
        // uniqueness: any other (q', r') with the degree bound must coincide
        if (!quot.is_zero()) {
            const auto q2 = quot + SkewPoly::one(ctx);
            const auto r2 = f - skew_mul(q2, g);
            if (r2.is_zero() || r2.degree() < g.degree())
                if (g.degree() > 0) return fail("divmod pair not unique");
        }
    }
    return {};
}

std::string check_eta_identity_fq(const SkewRingCtx& ctx, const FieldElement& alpha, int n, int trials,
                                  std::uint64_t seed) {
    Rng rng(seed);
    const SkewPoly modulus = SkewPoly::x_pow_minus(ctx, n, alpha);
    for (int t = 0; t < trials; ++t) {
        std::vector<FieldElement> c;
        for (int i = 0; i < n; ++i) c.push_back(rng.element(ctx.field));
        const auto shifted = pseudo_linear_apply(ctx, alpha, c);
        // same thing through the module: x * c(x) mod (x^n - alpha)
        const auto cx = SkewPoly::from_coeffs(ctx, c);
        const auto xc = SkewPoly::monomial(ctx, ctx.field->one(), 1);
        const auto prod = skew_mul(xc, cx);
        const auto rem = right_divmod(prod, modulus).second;
        for (int i = 0; i < n; ++i)
            if (rem.coeff(i) != shifted[i]) return fail("pseudo-linear map disagrees with x*c(x) reduction");
    }
    return {};
}

std::string check_eta_identity_r(const RingCtx& rctx, const RingElement& a, int n, int trials,
                                 std::uint64_t seed) {
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        std::vector<RingElement> c;
        for (int i = 0; i < n; ++i) {
            std::vector<FieldElement> comps;
            for (int j = 0; j < rctx.spec.l; ++j) comps.push_back(rng.element(rctx.spec.field));
            c.emplace_back(std::move(comps));
        }
        const auto global = pseudo_linear_apply_r(rctx, a, c);
        // componentwise route
        for (int j = 0; j < rctx.spec.l; ++j) {
            std::vector<FieldElement> cj;
            for (const auto& r : c) cj.push_back(r.comp(j));
            const auto compwise = pseudo_linear_apply(rctx.component_ctx(j), a.comp(j), cj);
            for (int i = 0; i < n; ++i)
                if (global[i].comp(j) != compwise[i])
                    return fail("componentwise decomposition of T over R failed");
        }
    }
    return {};
}

namespace {

// raw component generator rows (T-iterates of the padded generator), with no
// divisibility requirement -- lets us feed corrupted generators through the
// closure machinery
Matrix raw_rows(const SkewRingCtx& ctx, const FieldElement& alpha, const SkewPoly& g, int n) {
    const int k = n - g.degree();
    std::vector<std::vector<FieldElement>> rows;
    std::vector<FieldElement> row(n, ctx.field->zero());
    for (int j = 0; j <= g.degree(); ++j) row[j] = g.coeff(j);
    for (int i = 0; i < k; ++i) {
        rows.push_back(row);
        row = pseudo_linear_apply(ctx, alpha, row);
    }
    return Matrix::from_rows(ctx.field, rows);
}

}  // namespace

std::string check_closure_equivalence(int specs, std::uint64_t seed) {
    Rng rng(seed);
    const auto f4 = FieldSpec::gf(4);
    const auto f9 = FieldSpec::gf(9);
    int built = 0;
    while (built < specs) {
        const bool use_f9 = rng.below(2) == 1;
        const auto field = use_f9 ? f9 : f4;
        const int l = 2;
        const int n = use_f9 ? 4 : 6;
        std::vector<int> exps = {1, static_cast<int>(rng.below(field->m()))};
        const auto s_elem = rng.below(2) == 0 ? field->zero() : field->generator();
        RingCtx rctx = RingCtx::make(field, l, exps, RingElement({s_elem, s_elem}));
        RingElement a = RingElement({field->one(), field->one()});

        std::vector<SkewPoly> gens;
        bool ok = true;
        for (int i = 0; i < l && ok; ++i) {
            const auto ctx = rctx.component_ctx(i);
            const int r = 1 + static_cast<int>(rng.below(n - 1));
            auto divisors = enumerate_monic_right_divisors(n, a.comp(i), r, ctx);
            if (divisors.empty()) {
                ok = false;
                break;
            }
            gens.push_back(divisors[rng.below(static_cast<std::uint32_t>(divisors.size()))]);
        }
        if (!ok) continue;
        ++built;

        RCodeSpec spec{n, rctx, a, gens};
        bool component_and = true;
        for (int i = 0; i < l; ++i) {
            const auto ctx = rctx.component_ctx(i);
            component_and =
                component_and && t_closed_fq(raw_rows(ctx, a.comp(i), gens[i], n), ctx, a.comp(i));
        }
        if (closure_check(spec) != component_and) return fail("closure over R != AND of component closures");
        if (!closure_check(spec)) return fail("valid divisor spec failed closure");

        // corrupt one coefficient of g_2 and re-test the equivalence
        auto bad = gens;
        auto coeffs = bad[1].coeffs();
        coeffs[0] = coeffs[0] + field->one();
        bad[1] = SkewPoly::from_coeffs(rctx.component_ctx(1), coeffs);
        if (bad[1].is_zero() || bad[1].degree() != gens[1].degree()) continue;
        RCodeSpec corrupted{n, rctx, a, bad};
        bool corrupted_and = true;
        for (int i = 0; i < l; ++i) {
            const auto ctx = rctx.component_ctx(i);
            corrupted_and =
                corrupted_and && t_closed_fq(raw_rows(ctx, a.comp(i), bad[i], n), ctx, a.comp(i));
        }
        if (closure_check(corrupted) != corrupted_and)
            return fail("closure equivalence failed on corrupted spec");
    }
    return {};
}

std::string check_hdagger_matches_nullspace_dual(const FqCyclicSpec& spec) {
    const auto hyp = euclidean_hypotheses(spec.n, spec.alpha, spec.ctx);
    if (!hyp.met()) return fail("hypotheses unmet; test misconfigured");
    // centrality makes the factorization two-sided: h*g = x^n - alpha = g*h
    const auto modulus = SkewPoly::x_pow_minus(spec.ctx, spec.n, spec.alpha);
    const auto h = cofactor_h(spec.n, spec.alpha, spec.g);
    if (skew_mul(h, spec.g) != modulus) return fail("h*g != x^n - alpha");
    if (is_central(spec.n, spec.alpha, spec.ctx) && skew_mul(spec.g, h) != modulus)
        return fail("g*h != x^n - alpha under the centrality guard");
    const auto dual_gen = euclidean_dual_generator(spec.n, spec.alpha, spec.g);
    // theorem side: <h_dagger> as a (theta, 0, alpha^-1)-cyclic code
    const FqCyclicSpec dual_spec{spec.n, spec.ctx, spec.alpha.inverse(), dual_gen.monic_scaled()};
    const auto dual_code = generator_matrix_fq(dual_spec);
    // oracle side: null space of the generator matrix
    const auto primal = generator_matrix_fq(spec);
    const auto null_dual = null_space(primal.generators());
    if (!row_space_equal(dual_code.generators(), null_dual))
        return fail("<h_dagger> != null-space dual for " + format_poly(spec.g.coeffs()));
    // and the dual row space is closed under T with alpha^-1
    if (!t_closed_fq(null_dual, spec.ctx, spec.alpha.inverse()))
        return fail("dual is not (theta, 0, alpha^-1)-cyclic");
    return {};
}

std::string check_euclidean_criterion_vs_inclusion(const FqCyclicSpec& spec) {
    const bool criterion = is_euclidean_dual_containing_fq(spec.n, spec.alpha, spec.g);
    const auto code = generator_matrix_fq(spec);
    const bool inclusion = row_space_contains_all(code.generators(), null_space(code.generators()));
    if (criterion != inclusion) return fail("divisibility criterion disagrees with row-space inclusion");
    return {};
}

std::string check_annihilator_criterion_vs_inclusion(const FqCyclicSpec& spec) {
    const bool criterion = is_annihilator_dual_containing(spec.n, spec.alpha, spec.g);
    const auto code = generator_matrix_fq(spec);
    const auto ann = annihilator_dual(spec);
    const bool inclusion = row_space_contains_all(code.generators(), ann.generators());
    if (criterion != inclusion)
        return fail("annihilator criterion disagrees with row-space inclusion");
    return {};
}

std::string check_criterion_vs_inclusion_random(int specs, std::uint64_t seed) {
    Rng rng(seed);
    const std::vector<FieldSpecPtr> fields = {FieldSpec::gf(4), FieldSpec::gf(8), FieldSpec::gf(9)};
    int built = 0;
    while (built < specs) {
        const auto& field = fields[rng.below(static_cast<std::uint32_t>(fields.size()))];
        const bool identity = rng.below(2) == 0;
        const int exp = identity ? 0 : 1;
        const auto ctx = SkewRingCtx::make(field, exp, field->zero());
        const int n = ctx.theta_order() * (1 + static_cast<int>(rng.below(3)));
        if (n < 2 || n > 8) continue;
        // alpha fixed by theta: pick from the prime subfield
        const auto alpha = field->from_scalar(1 + rng.below(field->p() - 1));
        const int r = 1 + static_cast<int>(rng.below(n - 1));
        const auto divisors = enumerate_monic_right_divisors(n, alpha, r, ctx);
        if (divisors.empty()) continue;
        const auto& g = divisors[rng.below(static_cast<std::uint32_t>(divisors.size()))];
        const FqCyclicSpec spec{n, ctx, alpha, g};
        if (auto m = check_euclidean_criterion_vs_inclusion(spec); !m.empty()) return m;
        if (identity)
            if (auto m = check_annihilator_criterion_vs_inclusion(spec); !m.empty()) return m;
        ++built;
    }
    return {};
}

std::string check_gram_vs_polynomial_form(const FieldSpecPtr& spec, int n, const FieldElement& alpha,
                                          int trials, std::uint64_t seed) {
    Rng rng(seed);
    const auto ctx = SkewRingCtx::commutative(spec);
    const auto gram = gram_matrix(n, alpha, spec);
    for (int t = 0; t < trials; ++t) {
        const auto f = rng.poly(ctx, n - 1);
        const auto g = rng.poly(ctx, n - 1);
        const auto via_poly = annihilator_form(f, g, n, alpha);
        // Gram path: f A g^T on coefficient vectors
        std::vector<FieldElement> fv(n, spec->zero()), gv(n, spec->zero());
        for (int i = 0; i < n; ++i) {
            fv[i] = f.coeff(i);
            gv[i] = g.coeff(i);
        }
        const auto fA = vec_mat(fv, gram);
        FieldElement via_gram = spec->zero();
        for (int i = 0; i < n; ++i) via_gram = via_gram + fA[i] * gv[i];
        if (via_poly != via_gram) return fail("polynomial path != Gram path for the annihilator form");
    }
    return {};
}

std::string check_phi_orthogonality_transport(const CodeSpecFile& sf) {
    const RCodeSpec rspec = sf.r_spec();
    if (!sf.rctx.delta_is_zero()) return fail("transport test needs delta = 0");
    if (!check_orthogonality_matrix(sf.gray).ok) return fail("Gray map not orthogonality-preserving");

    const RCode code = build_r_code(rspec);
    // dual over R componentwise: C_perp = (+) e_i C_i_perp
    RCode dual_code;
    dual_code.spec = rspec;
    dual_code.dim = 0;
    for (int i = 0; i < rspec.rctx.spec.l; ++i) {
        auto d = euclidean_dual(code.comps[i]);
        dual_code.dim += d.k();
        dual_code.comps.push_back(std::move(d));
    }
    const LinearCode phiC = gray_image(code, sf.gray);
    const LinearCode phiDual = gray_image(dual_code, sf.gray);
    // oracle side: the dual of the image by null space
    const auto image_dual = null_space(phiC.generators());
    if (!row_space_equal(phiDual.generators(), image_dual))
        return fail("Phi(C_perp) != Phi(C)_perp on " + sf.id);
    return {};
}

std::string check_dual_is_inverse_constacyclic(const FqCyclicSpec& spec) {
    const auto code = generator_matrix_fq(spec);
    const auto dual_rows = null_space(code.generators());
    const auto inv_alpha = spec.alpha.inverse();
    if (!t_closed_fq(dual_rows, spec.ctx, inv_alpha))
        return fail("dual is not (theta, 0, alpha^-1)-cyclic");
    return {};
}

std::vector<std::vector<RingElement>> span_r_code(const RCode& code, std::uint64_t limit) {
    const auto& field = code.spec.rctx.spec.field;
    const auto basis = r_code_basis(code);
    const std::uint64_t q = field->q();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        total *= q;
        if (total > limit) throw std::runtime_error("span enumeration exceeds limit");
    }
    std::vector<std::vector<RingElement>> out;
    out.reserve(total);
    const RingSpec& rs = code.spec.rctx.spec;
    for (std::uint64_t t = 0; t < total; ++t) {
        std::vector<RingElement> word(code.spec.n, RingElement::zero(rs));
        std::uint64_t v = t;
        for (const auto& b : basis) {
            const auto c = field->from_index(static_cast<std::uint32_t>(v % q));
            v /= q;
            if (c.is_zero()) continue;
            for (int pos = 0; pos < code.spec.n; ++pos)
                word[pos] = word[pos] + RingElement::splat(rs, c) * b[pos];
        }
        out.push_back(std::move(word));
    }
    return out;
}

}  // namespace oracles
