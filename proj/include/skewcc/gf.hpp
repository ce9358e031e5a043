#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace skewcc {

class FieldSpec;
class FieldElement;
using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

/// Automorphism of F_{p^m}: the Frobenius power sigma_p^e with 0 <= e < m.
/// e = 0 is the identity.
struct FieldAut {
    int exp = 0;

    bool is_identity() const { return exp == 0; }
};

/// Field description F_q, q = p^m, as F_p[w]/(modulus).  The modulus is a
/// monic irreducible polynomial over F_p given constant-term first, length
/// m+1.  Instances are immutable and shared through FieldSpecPtr; all
/// element operations are pure.
///
/// Elements are indexed 0..q-1 by their coefficient vector read as a base-p
/// number (index = sum coeffs[i] * p^i).  For small fields the pairwise
/// add/mul tables are precomputed from the coefficient arithmetic; larger
/// fields fall back to computing on coefficient vectors directly.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
  public:
    static FieldSpecPtr make(int p, const std::vector<int>& modulus);

    /// Default fields used throughout: F_4 = F_2[w]/(w^2+w+1),
    /// F_8 = F_2[w]/(w^3+w+1), F_9 = F_3[w]/(w^2+2w+2),
    /// F_16 = F_2[w]/(w^4+w+1), and F_p for prime p.
    static FieldSpecPtr gf(int q);

    int p() const { return p_; }
    int m() const { return m_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    FieldElement zero() const;
    FieldElement one() const;
    /// Embedding of the prime subfield: scalar c (mod p) as a field element.
    FieldElement from_scalar(long long c) const;
    FieldElement from_index(std::uint32_t idx) const;
    FieldElement from_coeffs(const std::vector<int>& coeffs) const;
    /// The residue class of the indeterminate w (only meaningful for m > 1).
    FieldElement generator() const;

    /// Multiplicative order of generator() equals q-1.
    bool generator_is_primitive() const;

    /// All q elements in index order (lexicographic on coefficient vectors
    /// read least-significant first).
    std::vector<FieldElement> enumerate() const;

    bool same(const FieldSpec& other) const;

    // Index-level arithmetic.  These are the workhorse entry points; the
    // FieldElement operators forward here.
    std::uint32_t add_idx(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub_idx(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg_idx(std::uint32_t a) const;
    std::uint32_t mul_idx(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv_idx(std::uint32_t a) const;
    std::uint32_t pow_idx(std::uint32_t a, unsigned long long e) const;
    /// a^(p^e): Frobenius power, computed by repeated p-th powering.
    std::uint32_t frobenius_idx(std::uint32_t a, int e) const;

    std::vector<int> coeffs_of(std::uint32_t idx) const;
    std::uint32_t index_of(const std::vector<int>& coeffs) const;

    bool has_tables() const { return !add_tab_.empty(); }
    /// Flat q*q add/mul tables (row-major) for the enumeration engines.
    const std::vector<std::uint8_t>& add_table8() const { return add8_; }
    const std::vector<std::uint8_t>& mul_table8() const { return mul8_; }

  private:
    FieldSpec() = default;

    std::uint32_t add_raw(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const;

    int p_ = 0;
    int m_ = 0;
    int q_ = 0;
    std::vector<int> modulus_;

    std::vector<std::uint32_t> add_tab_;  // q*q
    std::vector<std::uint32_t> mul_tab_;  // q*q
    std::vector<std::uint32_t> inv_tab_;  // q
    std::vector<std::uint8_t> add8_;      // q*q, present when q <= 255
    std::vector<std::uint8_t> mul8_;
};

/// Element of F_{p^m}: logically a length-m coefficient vector over F_p
/// (constant term first), always fully reduced modulo the field modulus.
class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(FieldSpecPtr spec, std::uint32_t idx) : spec_(std::move(spec)), idx_(idx) {}

    const FieldSpecPtr& spec() const { return spec_; }
    std::uint32_t index() const { return idx_; }
    std::vector<int> coeffs() const { return spec_->coeffs_of(idx_); }

    bool is_zero() const { return idx_ == 0; }
    bool is_one() const { return idx_ == 1; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(unsigned long long e) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

  private:
    FieldSpecPtr spec_;
    std::uint32_t idx_ = 0;
};

FieldElement ff_add(const FieldElement& a, const FieldElement& b);
FieldElement ff_mul(const FieldElement& a, const FieldElement& b);
FieldElement ff_inv(const FieldElement& a);
FieldElement apply_aut(const FieldAut& theta, const FieldElement& a);
std::vector<FieldElement> enumerate_field(const FieldSpecPtr& spec);

/// Multiplicative order of sigma_p^e inside Aut(F_{p^m}) = Z/m.
int aut_order(const FieldAut& theta, int m);

/// Throws std::invalid_argument unless both elements live in the same field.
void require_same_spec(const FieldElement& a, const FieldElement& b);

}  // namespace skewcc
