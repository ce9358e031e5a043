#include "skewcc/quantum.hpp"

#include <stdexcept>

namespace skewcc {

std::string to_string(SingletonClass c) {
    switch (c) {
        case SingletonClass::kMds:
            return "MDS";
        case SingletonClass::kAlmostMds:
            return "almost-MDS";
        default:
            return "neither";
    }
}

SingletonClass classify_singleton(int n, int k, int d) {
    if (2 * d == n - k + 2) return SingletonClass::kMds;
    if (2 * d >= n - k) return SingletonClass::kAlmostMds;
    return SingletonClass::kNeither;
}

QuantumParams css_with_excluded(const LinearCode& code, const LinearCode& excluded,
                                const DistanceResult& dist, const EnumOptions& opt) {
    QuantumParams out;
    out.n = code.n();
    out.k = 2 * code.k() - code.n();
    out.q = code.spec()->q();

    if (out.k == 0) {
        // C equals its dual: the sweep set is empty and the distance is the
        // minimum weight of C itself.
        out.d = dist.d;
        out.d_kind = dist.exact ? DistKind::kExact : DistKind::kUpperBound;
    } else {
        const auto sweep = min_weight_outside(code, excluded, opt);
        if (sweep.feasible && sweep.any) {
            out.d = sweep.d;
            out.d_kind = DistKind::kExact;
        } else if (sweep.feasible && !sweep.any) {
            throw std::domain_error("sweep set is empty although 2k - n != 0");
        } else {
            out.d = dist.d;
            out.d_kind = dist.exact ? DistKind::kLowerBound : DistKind::kUpperBound;
            // Singleton squeeze: d' >= d and 2d' <= n - k + 2, so equality
            // at the bound pins the distance exactly.
            if (out.d_kind == DistKind::kLowerBound && out.k >= 1 && 2 * out.d == out.n - out.k + 2)
                out.d_kind = DistKind::kExact;
        }
    }

    if (out.d_kind == DistKind::kExact && out.k >= 1 && 2 * out.d > out.n - out.k + 2)
        throw std::logic_error("derived parameters violate the quantum Singleton bound");
    out.cls = classify_singleton(out.n, out.k, out.d);
    out.cls_provisional = out.d_kind != DistKind::kExact;
    return out;
}

QuantumParams css_single(const LinearCode& code, const DistanceResult& dist, const EnumOptions& opt) {
    return css_with_excluded(code, euclidean_dual(code), dist, opt);
}

QuantumParams css_from_r_code(const RCode& code, const GrayMapSpec& gray, const EnumOptions& opt) {
    if (!code.spec.rctx.delta_is_zero())
        throw std::domain_error("quantum construction requires Delta = 0");
    if (!is_euclidean_dual_containing_R(code.spec))
        throw std::domain_error("code is not Euclidean dual-containing");
    if (!check_orthogonality_matrix(gray).ok)
        throw std::domain_error("Gray map does not preserve orthogonality (M M^T != lambda I)");
    const LinearCode image = gray_image(code, gray);
    const DistanceResult dist = min_distance_auto(image, opt);
    return css_single(image, dist, opt);
}

QuantumParams css_annihilator(const FqCyclicSpec& spec, const EnumOptions& opt) {
    if (!is_annihilator_dual_containing(spec.n, spec.alpha, spec.g))
        throw std::domain_error("code is not annihilator dual-containing");
    const LinearCode code = generator_matrix_fq(spec);
    const DistanceResult dist = min_distance_auto(code, opt);
    // wt(CA) = wt(C), so the A-twisted half of the CSS sweep adds nothing;
    // the distance is the minimum weight over C \ C_ann.
    return css_with_excluded(code, annihilator_dual(spec), dist, opt);
}

}  // namespace skewcc
