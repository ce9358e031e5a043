#pragma once

#include <optional>
#include <string>

#include "skewcc/codes.hpp"
#include "skewcc/linalg.hpp"
#include "skewcc/skewpoly.hpp"

namespace skewcc {

/// Preconditions of the Euclidean dual theorems for (theta, 0, alpha)-cyclic
/// codes: theta fixes alpha, ord(theta) | n (x^n - alpha is then central).
struct DualityHypotheses {
    bool delta_zero = false;
    bool alpha_fixed = false;
    bool order_divides = false;

    bool met() const { return delta_zero && alpha_fixed && order_divides; }
};

DualityHypotheses euclidean_hypotheses(int n, const FieldElement& alpha, const SkewRingCtx& ctx);

/// The cofactor h with x^n - alpha = h * g (right quotient).  Under the
/// centrality guard g * h = x^n - alpha holds as well.
SkewPoly cofactor_h(int n, const FieldElement& alpha, const SkewPoly& g);

/// h_dagger of the cofactor: the generator of the Euclidean dual C_perp,
/// itself a (theta, 0, alpha^-1)-cyclic code.  Throws when the theorem
/// hypotheses fail.
SkewPoly euclidean_dual_generator(int n, const FieldElement& alpha, const SkewPoly& g);

/// C_perp subseteq C iff g right-divides h_dagger.
bool is_euclidean_dual_containing_fq(int n, const FieldElement& alpha, const SkewPoly& g);

/// Componentwise over R: the conjunction of the component criteria.
bool is_euclidean_dual_containing_R(const RCodeSpec& spec);

/// Gram matrix A of the annihilator form: A[0][0] = 1, A[i][j] = alpha when
/// i + j = n (i, j >= 1), zero elsewhere.
Matrix gram_matrix(int n, const FieldElement& alpha, const FieldSpecPtr& spec);

/// <f | g> = constant term of f*g reduced mod x^n - alpha.  Computable in
/// any context; the dual theory below needs theta = Id, delta = 0.
FieldElement annihilator_form(const SkewPoly& f, const SkewPoly& g, int n, const FieldElement& alpha);

/// C_deg = null space of G*A; dim = n - k.  Requires theta = Id, delta = 0.
LinearCode annihilator_dual(const FqCyclicSpec& spec);

/// With x^n - alpha = h*g in F_q[x]: the annihilator dual is contained in C
/// iff g divides h.  Requires theta = Id, delta = 0.
bool is_annihilator_dual_containing(int n, const FieldElement& alpha, const SkewPoly& g);

/// Summary of a dual analysis for reports.
struct DualityReport {
    DualityHypotheses hypotheses;
    std::optional<SkewPoly> cofactor;
    std::optional<SkewPoly> dual_generator;
    bool dual_containing = false;
    std::string kind;  // "euclidean" or "annihilator"
};

DualityReport analyze_euclidean(const FqCyclicSpec& spec);
DualityReport analyze_annihilator(const FqCyclicSpec& spec);

}  // namespace skewcc
