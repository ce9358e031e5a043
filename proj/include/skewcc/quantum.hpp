#pragma once

#include <string>

#include "skewcc/codes.hpp"
#include "skewcc/duality.hpp"
#include "skewcc/gray.hpp"

namespace skewcc {

enum class SingletonClass { kMds, kAlmostMds, kNeither };

std::string to_string(SingletonClass c);

/// How much the reported quantum distance is worth.
///   kExact      - the minimum weight over C \ C_perp was computed (or pinned
///                 by the Singleton bound).
///   kLowerBound - the classical distance is exact; the sweep was infeasible.
///   kUpperBound - even the classical distance is only a sampled bound; the
///                 value carries no lower-bound guarantee.
enum class DistKind { kExact, kLowerBound, kUpperBound };

struct QuantumParams {
    int n = 0;
    int k = 0;
    int d = 0;
    DistKind d_kind = DistKind::kLowerBound;
    int q = 0;
    SingletonClass cls = SingletonClass::kNeither;
    bool cls_provisional = false;  // classification taken at a bound, not an exact d

    bool d_exact() const { return d_kind == DistKind::kExact; }
};

/// MDS iff 2d = n - k + 2; almost MDS iff 2d >= n - k.
SingletonClass classify_singleton(int n, int k, int d);

/// CSS with C_1 = C_2 = C: parameters [[n, 2k - n, d']] where d' is the
/// minimum weight over C \ C_perp.  Caller must have verified C_perp <= C.
/// `dist` is the classical distance of C (exact or sampled bound); when the
/// sweep is infeasible d' falls back to it as a lower bound, and for k >= 1
/// the quantum Singleton bound pins d' exactly whenever 2*d = n - k_q + 2.
QuantumParams css_single(const LinearCode& code, const DistanceResult& dist, const EnumOptions& opt);

/// Same derivation with an arbitrary excluded subcode (the annihilator dual
/// for the annihilator CSS route).
QuantumParams css_with_excluded(const LinearCode& code, const LinearCode& excluded,
                                const DistanceResult& dist, const EnumOptions& opt);

/// Whole pipeline over R: requires Delta = 0, componentwise Euclidean dual
/// containment and an orthogonality-preserving Gray map; then applies
/// css_single to the Gray image.  Throws std::domain_error when a
/// precondition fails.
QuantumParams css_from_r_code(const RCode& code, const GrayMapSpec& gray, const EnumOptions& opt);

/// Annihilator CSS for (Id, 0, alpha)-cyclic codes: requires g | h; yields
/// [[n, 2k - n, d']] with d' the minimum weight over C \ C_ann.
QuantumParams css_annihilator(const FqCyclicSpec& spec, const EnumOptions& opt);

}  // namespace skewcc
