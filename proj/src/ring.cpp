#include "skewcc/ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewcc {

namespace {

void require_same_l(const RingElement& a, const RingElement& b) {
    if (a.l() != b.l()) throw std::invalid_argument("ring element arity mismatch");
}

}  // namespace

RingElement RingElement::zero(const RingSpec& spec) {
    return RingElement(std::vector<FieldElement>(spec.l, spec.field->zero()));
}

RingElement RingElement::one(const RingSpec& spec) {
    return RingElement(std::vector<FieldElement>(spec.l, spec.field->one()));
}

RingElement RingElement::splat(const RingSpec& spec, const FieldElement& a) {
    return RingElement(std::vector<FieldElement>(spec.l, a));
}

bool RingElement::is_zero() const {
    return std::all_of(comps_.begin(), comps_.end(), [](const FieldElement& c) { return c.is_zero(); });
}

RingElement RingElement::operator+(const RingElement& o) const {
    require_same_l(*this, o);
    std::vector<FieldElement> out;
    out.reserve(comps_.size());
    for (std::size_t i = 0; i < comps_.size(); ++i) out.push_back(comps_[i] + o.comps_[i]);
    return RingElement(std::move(out));
}

RingElement RingElement::operator-(const RingElement& o) const {
    require_same_l(*this, o);
    std::vector<FieldElement> out;
    out.reserve(comps_.size());
    for (std::size_t i = 0; i < comps_.size(); ++i) out.push_back(comps_[i] - o.comps_[i]);
    return RingElement(std::move(out));
}

RingElement RingElement::operator*(const RingElement& o) const {
    require_same_l(*this, o);
    std::vector<FieldElement> out;
    out.reserve(comps_.size());
    for (std::size_t i = 0; i < comps_.size(); ++i) out.push_back(comps_[i] * o.comps_[i]);
    return RingElement(std::move(out));
}

bool RingElement::operator==(const RingElement& o) const { return comps_ == o.comps_; }

RingCtx RingCtx::make(FieldSpecPtr field, int l, std::vector<int> theta_exps, RingElement s_param) {
    if (l < 1) throw std::invalid_argument("ring arity must be >= 1");
    if (static_cast<int>(theta_exps.size()) != l) throw std::invalid_argument("need one theta exponent per component");
    if (s_param.l() != l) throw std::invalid_argument("derivation parameter arity mismatch");
    const int m = field->m();
    for (auto& e : theta_exps) e = ((e % m) + m) % m;
    return RingCtx{RingSpec{std::move(field), l}, ProductAut{std::move(theta_exps)}, std::move(s_param)};
}

SkewRingCtx RingCtx::component_ctx(int i) const {
    return SkewRingCtx::make(spec.field, Theta.exps[i], s.comp(i));
}

bool RingCtx::same(const RingCtx& o) const {
    return spec.same(o.spec) && Theta.exps == o.Theta.exps && s == o.s;
}

RingElement apply_Theta(const ProductAut& Theta, const RingElement& r) {
    if (static_cast<int>(Theta.exps.size()) != r.l()) throw std::invalid_argument("automorphism arity mismatch");
    std::vector<FieldElement> out;
    out.reserve(r.l());
    for (int i = 0; i < r.l(); ++i) out.push_back(apply_aut(FieldAut{Theta.exps[i]}, r.comp(i)));
    return RingElement(std::move(out));
}

RingElement apply_Delta(const RingCtx& ctx, const RingElement& r) {
    return ctx.s * (apply_Theta(ctx.Theta, r) - r);
}

RingElement idempotent(int i, const RingSpec& spec) {
    if (i < 0 || i >= spec.l) throw std::invalid_argument("idempotent slot out of range");
    std::vector<FieldElement> out(spec.l, spec.field->zero());
    out[i] = spec.field->one();
    return RingElement(std::move(out));
}

bool is_unit(const RingElement& r) {
    for (int i = 0; i < r.l(); ++i)
        if (r.comp(i).is_zero()) return false;
    return r.l() > 0;
}

RSkewPoly RSkewPoly::from_components(const RingCtx& ctx, std::vector<SkewPoly> comps) {
    if (static_cast<int>(comps.size()) != ctx.spec.l) throw std::invalid_argument("need one component per slot");
    for (int i = 0; i < ctx.spec.l; ++i)
        if (!comps[i].ctx().same(ctx.component_ctx(i))) throw std::invalid_argument("component ring context mismatch");
    return RSkewPoly(ctx, std::move(comps));
}

RSkewPoly RSkewPoly::from_joined(const RingCtx& ctx, const std::vector<RingElement>& coeffs) {
    return from_components(ctx, crt_split(ctx, coeffs));
}

std::vector<RingElement> RSkewPoly::joined_coeffs(int min_len) const {
    return crt_join(ctx_, comps_, min_len);
}

RSkewPoly RSkewPoly::operator*(const RSkewPoly& o) const {
    if (!ctx_.same(o.ctx_)) throw std::invalid_argument("ring context mismatch");
    std::vector<SkewPoly> out;
    out.reserve(comps_.size());
    for (std::size_t i = 0; i < comps_.size(); ++i) out.push_back(skew_mul(comps_[i], o.comps_[i]));
    return RSkewPoly(ctx_, std::move(out));
}

RSkewPoly RSkewPoly::operator+(const RSkewPoly& o) const {
    if (!ctx_.same(o.ctx_)) throw std::invalid_argument("ring context mismatch");
    std::vector<SkewPoly> out;
    out.reserve(comps_.size());
    for (std::size_t i = 0; i < comps_.size(); ++i) out.push_back(comps_[i] + o.comps_[i]);
    return RSkewPoly(ctx_, std::move(out));
}

bool RSkewPoly::operator==(const RSkewPoly& o) const {
    return ctx_.same(o.ctx_) && comps_ == o.comps_;
}

std::vector<SkewPoly> crt_split(const RingCtx& ctx, const std::vector<RingElement>& joined) {
    std::vector<SkewPoly> out;
    out.reserve(ctx.spec.l);
    for (int i = 0; i < ctx.spec.l; ++i) {
        std::vector<FieldElement> c;
        c.reserve(joined.size());
        for (const auto& r : joined) {
            if (r.l() != ctx.spec.l) throw std::invalid_argument("joined coefficient arity mismatch");
            c.push_back(r.comp(i));
        }
        out.push_back(SkewPoly::from_coeffs(ctx.component_ctx(i), std::move(c)));
    }
    return out;
}

std::vector<RingElement> crt_join(const RingCtx& ctx, const std::vector<SkewPoly>& comps, int min_len) {
    (void)ctx;
    int len = min_len;
    for (const auto& c : comps) len = std::max(len, c.degree() + 1);
    std::vector<RingElement> out;
    out.reserve(len);
    for (int j = 0; j < len; ++j) {
        std::vector<FieldElement> slot;
        slot.reserve(comps.size());
        for (const auto& c : comps) slot.push_back(c.coeff(j));
        out.emplace_back(std::move(slot));
    }
    return out;
}

}  // namespace skewcc
