#pragma once

#include <vector>

#include "skewcc/gf.hpp"
#include "skewcc/skewpoly.hpp"

namespace skewcc {

/// The product ring R = F_q^l with componentwise operations.
struct RingSpec {
    FieldSpecPtr field;
    int l = 1;

    bool same(const RingSpec& o) const { return l == o.l && field->same(*o.field); }
};

class RingElement {
  public:
    RingElement() = default;
    explicit RingElement(std::vector<FieldElement> comps) : comps_(std::move(comps)) {}

    static RingElement zero(const RingSpec& spec);
    static RingElement one(const RingSpec& spec);
    static RingElement splat(const RingSpec& spec, const FieldElement& a);

    int l() const { return static_cast<int>(comps_.size()); }
    const FieldElement& comp(int i) const { return comps_[i]; }
    const std::vector<FieldElement>& comps() const { return comps_; }

    bool is_zero() const;
    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    bool operator==(const RingElement& o) const;
    bool operator!=(const RingElement& o) const { return !(*this == o); }

  private:
    std::vector<FieldElement> comps_;
};

/// Automorphism of R in the class A: componentwise Frobenius powers
/// theta_1 x ... x theta_l.  Coordinate permutations are deliberately not
/// representable.
struct ProductAut {
    std::vector<int> exps;
};

/// Ambient data for R[x; Theta, Delta_{Theta,s}]: the ring, the automorphism
/// and the inner-derivation parameter s (componentwise delta_{theta_i,s_i}).
struct RingCtx {
    RingSpec spec;
    ProductAut Theta;
    RingElement s;

    static RingCtx make(FieldSpecPtr field, int l, std::vector<int> theta_exps, RingElement s_param);

    SkewRingCtx component_ctx(int i) const;
    bool delta_is_zero() const { return s.is_zero(); }
    bool same(const RingCtx& o) const;
};

RingElement apply_Theta(const ProductAut& Theta, const RingElement& r);
/// Delta_{Theta,s}(r) = s*(Theta(r) - r); componentwise this equals the
/// inner derivations delta_{theta_i,s_i}(r_i).
RingElement apply_Delta(const RingCtx& ctx, const RingElement& r);
/// Standard idempotent e_i (0-based slot): 1 in slot i, 0 elsewhere.
RingElement idempotent(int i, const RingSpec& spec);
bool is_unit(const RingElement& r);

/// Skew polynomial over R, stored CRT-split as l parallel component
/// polynomials; the joined coefficient view exists for serialization.
class RSkewPoly {
  public:
    static RSkewPoly from_components(const RingCtx& ctx, std::vector<SkewPoly> comps);
    static RSkewPoly from_joined(const RingCtx& ctx, const std::vector<RingElement>& coeffs);

    const RingCtx& ctx() const { return ctx_; }
    const std::vector<SkewPoly>& components() const { return comps_; }
    const SkewPoly& component(int i) const { return comps_[i]; }

    /// Joined coefficient vector over R, constant term first; length is the
    /// max component length (at least min_len).
    std::vector<RingElement> joined_coeffs(int min_len = 0) const;

    RSkewPoly operator*(const RSkewPoly& o) const;
    RSkewPoly operator+(const RSkewPoly& o) const;
    bool operator==(const RSkewPoly& o) const;

  private:
    RSkewPoly(RingCtx ctx, std::vector<SkewPoly> comps) : ctx_(std::move(ctx)), comps_(std::move(comps)) {}

    RingCtx ctx_;
    std::vector<SkewPoly> comps_;
};

/// Component polynomials of a joined coefficient vector (crt_split) and its
/// inverse (crt_join); exact round trip.
std::vector<SkewPoly> crt_split(const RingCtx& ctx, const std::vector<RingElement>& joined);
std::vector<RingElement> crt_join(const RingCtx& ctx, const std::vector<SkewPoly>& comps, int min_len = 0);

}  // namespace skewcc
