#include "skewcc/duality.hpp"

#include <stdexcept>

namespace skewcc {

DualityHypotheses euclidean_hypotheses(int n, const FieldElement& alpha, const SkewRingCtx& ctx) {
    DualityHypotheses h;
    h.delta_zero = ctx.delta_is_zero();
    h.alpha_fixed = !alpha.is_zero() && ctx.apply_theta(alpha) == alpha;
    h.order_divides = n % ctx.theta_order() == 0;
    return h;
}

SkewPoly cofactor_h(int n, const FieldElement& alpha, const SkewPoly& g) {
    const SkewPoly modulus = SkewPoly::x_pow_minus(g.ctx(), n, alpha);
    auto [quot, rem] = right_divmod(modulus, g);
    if (!rem.is_zero()) throw std::invalid_argument("g is not a right divisor of x^n - alpha");
    return quot;
}

SkewPoly euclidean_dual_generator(int n, const FieldElement& alpha, const SkewPoly& g) {
    const auto hyp = euclidean_hypotheses(n, alpha, g.ctx());
    if (!hyp.met())
        throw std::domain_error(
            "Euclidean dual theory unavailable: requires delta = 0, theta(alpha) = alpha and ord(theta) | n");
    return h_dagger(cofactor_h(n, alpha, g), n);
}

bool is_euclidean_dual_containing_fq(int n, const FieldElement& alpha, const SkewPoly& g) {
    return right_divides(g, euclidean_dual_generator(n, alpha, g));
}

bool is_euclidean_dual_containing_R(const RCodeSpec& spec) {
    if (!spec.rctx.delta_is_zero())
        throw std::domain_error("Euclidean dual containment over R requires Delta = 0");
    for (int i = 0; i < spec.rctx.spec.l; ++i) {
        const auto comp = spec.component(i);
        if (!is_euclidean_dual_containing_fq(comp.n, comp.alpha, comp.g)) return false;
    }
    return true;
}

Matrix gram_matrix(int n, const FieldElement& alpha, const FieldSpecPtr& spec) {
    Matrix a(spec, n, n);
    a.set(0, 0, spec->one());
    for (int i = 1; i < n; ++i) a.set(i, n - i, alpha);
    return a;
}

FieldElement annihilator_form(const SkewPoly& f, const SkewPoly& g, int n, const FieldElement& alpha) {
    const SkewPoly modulus = SkewPoly::x_pow_minus(f.ctx(), n, alpha);
    const SkewPoly prod = skew_mul(f, g);
    auto [quot, rem] = right_divmod(prod, modulus);
    (void)quot;
    return rem.coeff(0);
}

LinearCode annihilator_dual(const FqCyclicSpec& spec) {
    if (!spec.ctx.theta.is_identity() || !spec.ctx.delta_is_zero())
        throw std::domain_error("annihilator duality requires theta = Id and delta = 0");
    spec.validate();
    const LinearCode code = generator_matrix_fq(spec);
    const Matrix ga = mat_mul(code.generators(), gram_matrix(spec.n, spec.alpha, spec.ctx.field));
    return LinearCode::from_generator(null_space(ga));
}

bool is_annihilator_dual_containing(int n, const FieldElement& alpha, const SkewPoly& g) {
    if (!g.ctx().theta.is_identity() || !g.ctx().delta_is_zero())
        throw std::domain_error("annihilator dual containment requires theta = Id and delta = 0");
    const SkewPoly h = cofactor_h(n, alpha, g);
    return right_divides(g, h);
}

DualityReport analyze_euclidean(const FqCyclicSpec& spec) {
    DualityReport rep;
    rep.kind = "euclidean";
    rep.hypotheses = euclidean_hypotheses(spec.n, spec.alpha, spec.ctx);
    if (!rep.hypotheses.met()) return rep;
    rep.cofactor = cofactor_h(spec.n, spec.alpha, spec.g);
    rep.dual_generator = h_dagger(*rep.cofactor, spec.n);
    rep.dual_containing = right_divides(spec.g, *rep.dual_generator);
    return rep;
}

DualityReport analyze_annihilator(const FqCyclicSpec& spec) {
    DualityReport rep;
    rep.kind = "annihilator";
    rep.hypotheses = euclidean_hypotheses(spec.n, spec.alpha, spec.ctx);
    rep.hypotheses.delta_zero = spec.ctx.delta_is_zero() && spec.ctx.theta.is_identity();
    if (!rep.hypotheses.delta_zero) return rep;
    rep.cofactor = cofactor_h(spec.n, spec.alpha, spec.g);
    rep.dual_containing = right_divides(spec.g, *rep.cofactor);
    return rep;
}

}  // namespace skewcc
