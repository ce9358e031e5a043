#include "skewcc/gf.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace skewcc {

namespace {

constexpr std::uint32_t kTableMaxQ = 1024;

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Dense polynomial arithmetic over F_p, used to bootstrap the field tables
// and to test the modulus for irreducibility.
using Poly = std::vector<int>;

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mod(Poly a, const Poly& mod, int p) {
    // mod is monic
    const int dm = static_cast<int>(mod.size()) - 1;
    a = trim(std::move(a));
    while (static_cast<int>(a.size()) - 1 >= dm) {
        const int da = static_cast<int>(a.size()) - 1;
        const int lead = a.back();
        for (int i = 0; i <= dm; ++i) {
            int& c = a[da - dm + i];
            c = ((c - lead * mod[i]) % p + p) % p;
        }
        a = trim(std::move(a));
    }
    return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, int p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(prod), mod, p);
}

bool poly_divides(const Poly& d, const Poly& f, int p) {
    // d monic after scaling; returns true iff d | f over F_p
    Poly dd = trim(d);
    if (dd.empty()) return false;
    // scale to monic
    int lead = dd.back();
    int inv = 1;
    for (int x = 1; x < p; ++x)
        if (x * lead % p == 1) inv = x;
    for (auto& c : dd) c = c * inv % p;
    return trim(poly_mod(f, dd, p)).empty();
}

}  // namespace

FieldSpecPtr FieldSpec::make(int p, const std::vector<int>& modulus) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (modulus.size() < 2) throw std::invalid_argument("modulus must have degree >= 1");
    const int m = static_cast<int>(modulus.size()) - 1;
    for (int c : modulus)
        if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic");

    long long q = 1;
    for (int i = 0; i < m; ++i) {
        q *= p;
        if (q > (1 << 16)) throw std::invalid_argument("field too large (q > 2^16 unsupported)");
    }

    // Irreducibility by trial division over all monic divisors of degree
    // <= m/2.  The fields in play have m <= 4, so this is exhaustive and
    // cheap.
    for (int d = 1; 2 * d <= m; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        if (count > (1 << 20)) throw std::invalid_argument("irreducibility check budget exceeded");
        for (long long t = 0; t < count; ++t) {
            Poly cand(d + 1, 0);
            long long v = t;
            for (int i = 0; i < d; ++i) {
                cand[i] = static_cast<int>(v % p);
                v /= p;
            }
            cand[d] = 1;
            if (poly_divides(cand, modulus, p))
                throw std::invalid_argument("modulus is reducible over F_p");
        }
    }

    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    spec->p_ = p;
    spec->m_ = m;
    spec->q_ = static_cast<int>(q);
    spec->modulus_ = modulus;

    if (q <= kTableMaxQ) {
        const auto n = static_cast<std::size_t>(q);
        spec->add_tab_.resize(n * n);
        spec->mul_tab_.resize(n * n);
        spec->inv_tab_.assign(n, 0);
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b) {
                spec->add_tab_[a * n + b] = spec->add_raw(a, b);
                spec->mul_tab_[a * n + b] = spec->mul_raw(a, b);
            }
        for (std::uint32_t a = 1; a < q; ++a)
            for (std::uint32_t b = 1; b < q; ++b)
                if (spec->mul_tab_[a * n + b] == 1) {
                    spec->inv_tab_[a] = b;
                    break;
                }
        if (q <= 255) {
            spec->add8_.resize(n * n);
            spec->mul8_.resize(n * n);
            for (std::size_t i = 0; i < n * n; ++i) {
                spec->add8_[i] = static_cast<std::uint8_t>(spec->add_tab_[i]);
                spec->mul8_[i] = static_cast<std::uint8_t>(spec->mul_tab_[i]);
            }
        }
    }
    return spec;
}

FieldSpecPtr FieldSpec::gf(int q) {
    switch (q) {
        case 4:
            return make(2, {1, 1, 1});
        case 8:
            return make(2, {1, 1, 0, 1});
        case 9:
            return make(3, {2, 2, 1});
        case 16:
            return make(2, {1, 1, 0, 0, 1});
        default:
            if (is_prime(q)) return make(q, {0, 1});
            throw std::invalid_argument("no default modulus for this field order");
    }
}

FieldElement FieldSpec::zero() const { return {shared_from_this(), 0}; }
FieldElement FieldSpec::one() const { return {shared_from_this(), 1}; }

FieldElement FieldSpec::from_scalar(long long c) const {
    long long r = ((c % p_) + p_) % p_;
    return {shared_from_this(), static_cast<std::uint32_t>(r)};
}

FieldElement FieldSpec::from_index(std::uint32_t idx) const {
    if (idx >= static_cast<std::uint32_t>(q_)) throw std::invalid_argument("element index out of range");
    return {shared_from_this(), idx};
}

FieldElement FieldSpec::from_coeffs(const std::vector<int>& coeffs) const {
    return {shared_from_this(), index_of(coeffs)};
}

FieldElement FieldSpec::generator() const { return {shared_from_this(), static_cast<std::uint32_t>(p_)}; }

bool FieldSpec::generator_is_primitive() const {
    if (m_ == 1) return false;
    std::uint32_t w = static_cast<std::uint32_t>(p_);
    std::uint32_t acc = w;
    int order = 1;
    while (acc != 1) {
        acc = mul_idx(acc, w);
        ++order;
        if (order > q_) return false;
    }
    return order == q_ - 1;
}

std::vector<FieldElement> FieldSpec::enumerate() const {
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(q_); ++i) out.emplace_back(shared_from_this(), i);
    return out;
}

bool FieldSpec::same(const FieldSpec& other) const {
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
}

std::vector<int> FieldSpec::coeffs_of(std::uint32_t idx) const {
    std::vector<int> c(m_, 0);
    for (int i = 0; i < m_; ++i) {
        c[i] = static_cast<int>(idx % p_);
        idx /= p_;
    }
    return c;
}

std::uint32_t FieldSpec::index_of(const std::vector<int>& coeffs) const {
    if (static_cast<int>(coeffs.size()) > m_) throw std::invalid_argument("coefficient vector too long");
    std::uint32_t idx = 0;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
        if (coeffs[i] < 0 || coeffs[i] >= p_) throw std::invalid_argument("coefficient out of range");
        idx = idx * p_ + static_cast<std::uint32_t>(coeffs[i]);
    }
    return idx;
}

std::uint32_t FieldSpec::add_raw(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t out = 0;
    std::uint32_t mult = 1;
    for (int i = 0; i < m_; ++i) {
        out += mult * ((a % p_ + b % p_) % p_);
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

std::uint32_t FieldSpec::mul_raw(std::uint32_t a, std::uint32_t b) const {
    Poly pa = coeffs_of(a), pb = coeffs_of(b);
    Poly prod = poly_mul_mod(pa, pb, modulus_, p_);
    prod.resize(m_, 0);
    return index_of(prod);
}

std::uint32_t FieldSpec::add_idx(std::uint32_t a, std::uint32_t b) const {
    if (!add_tab_.empty()) return add_tab_[a * static_cast<std::size_t>(q_) + b];
    return add_raw(a, b);
}

std::uint32_t FieldSpec::neg_idx(std::uint32_t a) const {
    std::uint32_t out = 0;
    std::uint32_t mult = 1;
    for (int i = 0; i < m_; ++i) {
        out += mult * ((p_ - a % p_) % p_);
        a /= p_;
        mult *= p_;
    }
    return out;
}

std::uint32_t FieldSpec::sub_idx(std::uint32_t a, std::uint32_t b) const { return add_idx(a, neg_idx(b)); }

std::uint32_t FieldSpec::mul_idx(std::uint32_t a, std::uint32_t b) const {
    if (!mul_tab_.empty()) return mul_tab_[a * static_cast<std::size_t>(q_) + b];
    return mul_raw(a, b);
}

std::uint32_t FieldSpec::inv_idx(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("zero has no inverse");
    if (!inv_tab_.empty()) return inv_tab_[a];
    return pow_idx(a, static_cast<unsigned long long>(q_) - 2);
}

std::uint32_t FieldSpec::pow_idx(std::uint32_t a, unsigned long long e) const {
    std::uint32_t out = 1;
    std::uint32_t base = a;
    while (e > 0) {
        if (e & 1) out = mul_idx(out, base);
        base = mul_idx(base, base);
        e >>= 1;
    }
    return out;
}

std::uint32_t FieldSpec::frobenius_idx(std::uint32_t a, int e) const {
    e = ((e % m_) + m_) % m_;
    std::uint32_t out = a;
    for (int i = 0; i < e; ++i) out = pow_idx(out, static_cast<unsigned long long>(p_));
    return out;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_spec(*this, o);
    return {spec_, spec_->add_idx(idx_, o.idx_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same_spec(*this, o);
    return {spec_, spec_->sub_idx(idx_, o.idx_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_spec(*this, o);
    return {spec_, spec_->mul_idx(idx_, o.idx_)};
}

FieldElement FieldElement::operator-() const { return {spec_, spec_->neg_idx(idx_)}; }

FieldElement FieldElement::inverse() const { return {spec_, spec_->inv_idx(idx_)}; }

FieldElement FieldElement::pow(unsigned long long e) const { return {spec_, spec_->pow_idx(idx_, e)}; }

bool FieldElement::operator==(const FieldElement& o) const {
    if (!spec_ || !o.spec_) return spec_ == o.spec_ && idx_ == o.idx_;
    return spec_->same(*o.spec_) && idx_ == o.idx_;
}

FieldElement ff_add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement ff_mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement ff_inv(const FieldElement& a) { return a.inverse(); }

FieldElement apply_aut(const FieldAut& theta, const FieldElement& a) {
    return {a.spec(), a.spec()->frobenius_idx(a.index(), theta.exp)};
}

std::vector<FieldElement> enumerate_field(const FieldSpecPtr& spec) { return spec->enumerate(); }

int aut_order(const FieldAut& theta, int m) {
    const int e = ((theta.exp % m) + m) % m;
    if (e == 0) return 1;
    return m / std::gcd(m, e);
}

void require_same_spec(const FieldElement& a, const FieldElement& b) {
    if (!a.spec() || !b.spec() || !a.spec()->same(*b.spec()))
        throw std::invalid_argument("field spec mismatch");
}

}  // namespace skewcc
