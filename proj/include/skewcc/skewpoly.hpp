#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "skewcc/gf.hpp"

namespace skewcc {

/// Context of the skew polynomial ring F_q[x; theta, delta] with the inner
/// derivation delta = delta_{theta,s} = s*(theta - Id).  Every
/// theta-derivation of F_q is of this form, so storing s captures all of
/// them; s = 0 means delta = 0.
struct SkewRingCtx {
    FieldSpecPtr field;
    FieldAut theta;
    FieldElement s;

    static SkewRingCtx make(FieldSpecPtr f, int theta_exp, FieldElement s_param);
    static SkewRingCtx commutative(FieldSpecPtr f);

    FieldElement apply_theta(const FieldElement& r) const { return apply_aut(theta, r); }
    FieldElement delta(const FieldElement& r) const { return s * (apply_theta(r) - r); }
    bool delta_is_zero() const { return s.is_zero(); }
    int theta_order() const { return aut_order(theta, field->m()); }
    bool same(const SkewRingCtx& o) const;
};

/// Polynomial in F_q[x; theta, delta], coefficient vector constant term
/// first, canonical (no trailing zeros).  The zero polynomial has an empty
/// vector and degree kNegInfDegree.
class SkewPoly {
  public:
    // Degree sentinel for the zero polynomial; kept far from -1 so that
    // degree arithmetic stays total via deg_add below.
    static constexpr int kNegInfDegree = std::numeric_limits<int>::min() / 2;

    static SkewPoly zero(const SkewRingCtx& ctx) { return SkewPoly(ctx, {}); }
    static SkewPoly constant(const SkewRingCtx& ctx, const FieldElement& c);
    static SkewPoly one(const SkewRingCtx& ctx) { return constant(ctx, ctx.field->one()); }
    static SkewPoly monomial(const SkewRingCtx& ctx, const FieldElement& c, int k);
    static SkewPoly from_coeffs(const SkewRingCtx& ctx, std::vector<FieldElement> coeffs);
    /// x^n - alpha, the modulus of the ambient quotient module.
    static SkewPoly x_pow_minus(const SkewRingCtx& ctx, int n, const FieldElement& alpha);

    const SkewRingCtx& ctx() const { return ctx_; }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    int degree() const { return coeffs_.empty() ? kNegInfDegree : static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    FieldElement coeff(int i) const;
    FieldElement lead() const;
    bool is_monic() const { return !is_zero() && lead().is_one(); }

    SkewPoly operator+(const SkewPoly& o) const;
    SkewPoly operator-(const SkewPoly& o) const;
    SkewPoly operator-() const;
    bool operator==(const SkewPoly& o) const;
    bool operator!=(const SkewPoly& o) const { return !(*this == o); }

    /// Left multiplication by a scalar: c * f multiplies every coefficient
    /// from the left.  Over a field this is just coefficient scaling.
    SkewPoly scale_left(const FieldElement& c) const;
    /// Monic normalisation by the inverse of the leading coefficient.
    /// <u*g> = <g> for a unit u, so the generated code is unchanged.
    SkewPoly monic_scaled() const;

    /// x * f, one application of the commutation rule xr = theta(r)x + delta(r).
    SkewPoly times_x() const;

  private:
    SkewPoly(SkewRingCtx ctx, std::vector<FieldElement> coeffs)
        : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {}

    SkewRingCtx ctx_;
    std::vector<FieldElement> coeffs_;
};

/// deg(f*g) arithmetic kept total in the presence of the -inf sentinel.
inline int deg_add(int a, int b) {
    if (a == SkewPoly::kNegInfDegree || b == SkewPoly::kNegInfDegree) return SkewPoly::kNegInfDegree;
    return a + b;
}

/// Product in F_q[x; theta, delta], schoolbook O(deg f * deg g): expand
/// f*g = sum_i f_i * (x^i * g) with x^i*g built by iterating times_x.
SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g);

/// Right division: f = q*g + r with r = 0 or deg r < deg g; the pair is
/// unique.  Requires g nonzero (its leading coefficient is then a unit).
std::pair<SkewPoly, SkewPoly> right_divmod(const SkewPoly& f, const SkewPoly& g);

/// True iff the remainder of f on right division by g vanishes.
bool right_divides(const SkewPoly& g, const SkewPoly& f);

/// h^dagger for the dual-code theorem: coefficient i of the output is
/// theta^i(h_{d-i}) where d = deg h.  Requires delta = 0.
SkewPoly h_dagger(const SkewPoly& h, int n);

/// Guard under which x^n - alpha is central in F_q[x; theta, 0] and
/// factorizations commute: theta fixes alpha and ord(theta) divides n.
bool is_central(int n, const FieldElement& alpha, const SkewRingCtx& ctx);

/// All monic degree-r right divisors of x^n - alpha, in deterministic
/// order (lexicographic over the coefficient indices).  The candidate scan
/// costs q^r divisions; refuses (throws) if that exceeds the budget.
std::vector<SkewPoly> enumerate_monic_right_divisors(int n, const FieldElement& alpha, int r,
                                                     const SkewRingCtx& ctx,
                                                     std::uint64_t budget = (1ull << 26));

}  // namespace skewcc
