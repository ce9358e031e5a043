#include "skewcc/skewpoly.hpp"

#include <stdexcept>

namespace skewcc {

SkewRingCtx SkewRingCtx::make(FieldSpecPtr f, int theta_exp, FieldElement s_param) {
    if (!f) throw std::invalid_argument("null field spec");
    const int m = f->m();
    if (theta_exp < 0 || theta_exp >= m) theta_exp = ((theta_exp % m) + m) % m;
    if (!s_param.spec() || !s_param.spec()->same(*f)) throw std::invalid_argument("derivation parameter from wrong field");
    return SkewRingCtx{std::move(f), FieldAut{theta_exp}, std::move(s_param)};
}

SkewRingCtx SkewRingCtx::commutative(FieldSpecPtr f) {
    auto zero = f->zero();
    return SkewRingCtx{std::move(f), FieldAut{0}, std::move(zero)};
}

bool SkewRingCtx::same(const SkewRingCtx& o) const {
    return field->same(*o.field) && theta.exp == o.theta.exp && s == o.s;
}

namespace {

std::vector<FieldElement> trim(std::vector<FieldElement> c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    return c;
}

void require_same_ctx(const SkewPoly& a, const SkewPoly& b) {
    if (!a.ctx().same(b.ctx())) throw std::invalid_argument("skew ring context mismatch");
}

}  // namespace

SkewPoly SkewPoly::constant(const SkewRingCtx& ctx, const FieldElement& c) {
    if (c.is_zero()) return zero(ctx);
    return from_coeffs(ctx, {c});
}

SkewPoly SkewPoly::monomial(const SkewRingCtx& ctx, const FieldElement& c, int k) {
    if (c.is_zero()) return zero(ctx);
    std::vector<FieldElement> coeffs(static_cast<std::size_t>(k) + 1, ctx.field->zero());
    coeffs[k] = c;
    return from_coeffs(ctx, std::move(coeffs));
}

SkewPoly SkewPoly::from_coeffs(const SkewRingCtx& ctx, std::vector<FieldElement> coeffs) {
    for (const auto& c : coeffs)
        if (!c.spec() || !c.spec()->same(*ctx.field)) throw std::invalid_argument("coefficient from wrong field");
    return SkewPoly(ctx, trim(std::move(coeffs)));
}

SkewPoly SkewPoly::x_pow_minus(const SkewRingCtx& ctx, int n, const FieldElement& alpha) {
    std::vector<FieldElement> c(static_cast<std::size_t>(n) + 1, ctx.field->zero());
    c[0] = -alpha;
    c[n] = ctx.field->one();
    return from_coeffs(ctx, std::move(c));
}

FieldElement SkewPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return ctx_.field->zero();
    return coeffs_[i];
}

FieldElement SkewPoly::lead() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

SkewPoly SkewPoly::operator+(const SkewPoly& o) const {
    require_same_ctx(*this, o);
    std::vector<FieldElement> out = coeffs_;
    if (out.size() < o.coeffs_.size()) out.resize(o.coeffs_.size(), ctx_.field->zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] = out[i] + o.coeffs_[i];
    return SkewPoly(ctx_, trim(std::move(out)));
}

SkewPoly SkewPoly::operator-(const SkewPoly& o) const { return *this + (-o); }

SkewPoly SkewPoly::operator-() const {
    std::vector<FieldElement> out = coeffs_;
    for (auto& c : out) c = -c;
    return SkewPoly(ctx_, std::move(out));
}

bool SkewPoly::operator==(const SkewPoly& o) const {
    if (!ctx_.same(o.ctx_)) return false;
    if (coeffs_.size() != o.coeffs_.size()) return false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != o.coeffs_[i]) return false;
    return true;
}

SkewPoly SkewPoly::scale_left(const FieldElement& c) const {
    if (c.is_zero()) return zero(ctx_);
    std::vector<FieldElement> out = coeffs_;
    for (auto& x : out) x = c * x;
    return SkewPoly(ctx_, std::move(out));
}

SkewPoly SkewPoly::monic_scaled() const {
    if (is_zero()) throw std::domain_error("cannot normalise the zero polynomial");
    if (is_monic()) return *this;
    return scale_left(lead().inverse());
}

SkewPoly SkewPoly::times_x() const {
    // x * (c x^j) = theta(c) x^{j+1} + delta(c) x^j
    if (is_zero()) return *this;
    std::vector<FieldElement> out(coeffs_.size() + 1, ctx_.field->zero());
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        out[j + 1] = out[j + 1] + ctx_.apply_theta(coeffs_[j]);
        out[j] = out[j] + ctx_.delta(coeffs_[j]);
    }
    return SkewPoly(ctx_, trim(std::move(out)));
}

SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g) {
    require_same_ctx(f, g);
    SkewPoly acc = SkewPoly::zero(f.ctx());
    SkewPoly xi_g = g;  // x^i * g
    for (int i = 0; i <= f.degree(); ++i) {
        if (!f.coeff(i).is_zero()) acc = acc + xi_g.scale_left(f.coeff(i));
        if (i < f.degree()) xi_g = xi_g.times_x();
    }
    return acc;
}

std::pair<SkewPoly, SkewPoly> right_divmod(const SkewPoly& f, const SkewPoly& g) {
    require_same_ctx(f, g);
    if (g.is_zero()) throw std::domain_error("right division by the zero polynomial");
    const auto& ctx = f.ctx();
    const auto& field = *ctx.field;
    const int dg = g.degree();

    SkewPoly rem = f;
    std::vector<FieldElement> quot;
    if (f.degree() >= dg) quot.assign(static_cast<std::size_t>(f.degree() - dg) + 1, ctx.field->zero());

    // x^j * g for j = 0 .. deg f - deg g
    std::vector<SkewPoly> shifted{g};
    for (int j = 1; j <= f.degree() - dg; ++j) shifted.push_back(shifted.back().times_x());

    while (!rem.is_zero() && rem.degree() >= dg) {
        const int j = rem.degree() - dg;
        // leading coeff of (c x^j) * g is c * theta^j(lead g)
        const FieldElement tl(ctx.field, field.frobenius_idx(g.lead().index(), ctx.theta.exp * j));
        const FieldElement c = rem.lead() * tl.inverse();
        quot[j] = quot[j] + c;
        rem = rem - shifted[j].scale_left(c);
    }
    return {SkewPoly::from_coeffs(ctx, std::move(quot)), rem};
}

bool right_divides(const SkewPoly& g, const SkewPoly& f) {
    return right_divmod(f, g).second.is_zero();
}

SkewPoly h_dagger(const SkewPoly& h, int n) {
    const auto& ctx = h.ctx();
    if (!ctx.delta_is_zero()) throw std::domain_error("h_dagger requires delta = 0");
    if (h.is_zero()) throw std::domain_error("h_dagger of the zero polynomial");
    const int d = h.degree();
    if (d > n) throw std::invalid_argument("deg h exceeds the code length");
    std::vector<FieldElement> out(static_cast<std::size_t>(d) + 1, ctx.field->zero());
    for (int i = 0; i <= d; ++i) {
        FieldElement v = h.coeff(d - i);
        for (int t = 0; t < i; ++t) v = ctx.apply_theta(v);
        out[i] = v;
    }
    return SkewPoly::from_coeffs(ctx, std::move(out));
}

bool is_central(int n, const FieldElement& alpha, const SkewRingCtx& ctx) {
    if (!ctx.delta_is_zero()) throw std::domain_error("centrality guard requires delta = 0");
    if (alpha.is_zero()) return false;
    if (ctx.apply_theta(alpha) != alpha) return false;
    return n % ctx.theta_order() == 0;
}

std::vector<SkewPoly> enumerate_monic_right_divisors(int n, const FieldElement& alpha, int r,
                                                     const SkewRingCtx& ctx, std::uint64_t budget) {
    if (r < 0 || r > n) throw std::invalid_argument("divisor degree out of range");
    const std::uint64_t q = static_cast<std::uint64_t>(ctx.field->q());
    std::uint64_t count = 1;
    for (int i = 0; i < r; ++i) {
        count *= q;
        if (count > budget) throw std::runtime_error("divisor enumeration exceeds budget");
    }

    const SkewPoly modulus = SkewPoly::x_pow_minus(ctx, n, alpha);
    std::vector<SkewPoly> out;
    // Candidate index encodes the r low coefficients base q; the scan is a
    // partitionable flat range, so shards stay disjoint and merge by index.
    for (std::uint64_t t = 0; t < count; ++t) {
        std::vector<FieldElement> c(static_cast<std::size_t>(r) + 1, ctx.field->zero());
        std::uint64_t v = t;
        for (int i = 0; i < r; ++i) {
            c[i] = ctx.field->from_index(static_cast<std::uint32_t>(v % q));
            v /= q;
        }
        c[r] = ctx.field->one();
        SkewPoly g = SkewPoly::from_coeffs(ctx, std::move(c));
        if (right_divides(g, modulus)) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace skewcc
