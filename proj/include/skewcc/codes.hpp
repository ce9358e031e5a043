#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "skewcc/gf.hpp"
#include "skewcc/linalg.hpp"
#include "skewcc/ring.hpp"
#include "skewcc/skewpoly.hpp"

namespace skewcc {

/// Knobs shared by every enumeration-backed computation.  budget caps the
/// number of enumerated words before a computation degrades from exact to
/// bound; sample sizes the fallback upper-bound search; worker counts never
/// change results, only wall time.
struct EnumOptions {
    std::uint64_t budget = (1ull << 26);
    int workers = 1;
    std::uint64_t sample = (1ull << 16);
    std::uint64_t seed = 0x5eedcc01ull;
};

struct DistanceResult {
    int d = 0;
    bool exact = false;
};

/// Linear [n, k] code over F_q held by a full-rank generator matrix.
class LinearCode {
  public:
    static LinearCode from_generator(Matrix g);
    static LinearCode zero_code(const FieldSpecPtr& spec, int n);

    const FieldSpecPtr& spec() const { return gen_.spec(); }
    int n() const { return gen_.cols(); }
    int k() const { return gen_.rows(); }
    const Matrix& generators() const { return gen_; }

  private:
    explicit LinearCode(Matrix g) : gen_(std::move(g)) {}
    Matrix gen_;
};

/// A (theta, delta_theta, alpha)-cyclic code over F_q given by its monic
/// generator, a right divisor of x^n - alpha.
struct FqCyclicSpec {
    int n = 0;
    SkewRingCtx ctx;
    FieldElement alpha;
    SkewPoly g;

    /// Throws std::invalid_argument when g is not a monic right divisor of
    /// x^n - alpha or alpha is not a unit.
    void validate() const;
    int dim() const { return n - g.degree(); }
};

/// A (Theta, Delta_{Theta,s}, a)-cyclic code over R = F_q^l via component
/// generators g_i, right divisors of x^n - a_i in F_q[x; theta_i, delta_i].
struct RCodeSpec {
    int n = 0;
    RingCtx rctx;
    RingElement a;
    std::vector<SkewPoly> gens;

    void validate() const;
    FqCyclicSpec component(int i) const;
    int dim() const;
};

/// Built R-code: the component codes plus assembly metadata.  The ambient
/// R-codeword view is produced on demand (position-major, component-minor).
struct RCode {
    RCodeSpec spec;
    std::vector<LinearCode> comps;
    int dim = 0;
};

/// T_{theta,delta,M_alpha} on row vectors: returns
/// (alpha*theta(c_{n-1}) + delta(c_0), theta(c_0) + delta(c_1), ...,
///  theta(c_{n-2}) + delta(c_{n-1})).
std::vector<FieldElement> pseudo_linear_apply(const SkewRingCtx& ctx, const FieldElement& alpha,
                                              const std::vector<FieldElement>& c);

/// Same map over R^n; componentwise it agrees with the F_q version.
std::vector<RingElement> pseudo_linear_apply_r(const RingCtx& ctx, const RingElement& a,
                                               const std::vector<RingElement>& c);

/// Rows g, T(g), ..., T^{k-1}(g) with k = n - deg g; rank-verified.
LinearCode generator_matrix_fq(const FqCyclicSpec& spec);

RCode build_r_code(const RCodeSpec& spec);

/// F_q-basis of C = e_1 C_1 + ... + e_l C_l as R-codewords.
std::vector<std::vector<RingElement>> r_code_basis(const RCode& code);

/// Flattened F_q view of an R-codeword (position-major, component-minor).
std::vector<FieldElement> flatten_r_word(const std::vector<RingElement>& word);

/// True iff the row space is closed under the pseudo-linear transform, i.e.
/// the spec defines a genuine (Theta, Delta, a)-cyclic code.  Tolerates
/// generators that fail the divisibility invariant (returns false).
bool closure_check(const RCodeSpec& spec);
bool t_closed_fq(const Matrix& rows, const SkewRingCtx& ctx, const FieldElement& alpha);

/// Exact minimum nonzero weight by full message enumeration when
/// q^k <= budget; otherwise a sampled upper bound (exact = false).
DistanceResult min_distance(const LinearCode& code, const EnumOptions& opt);

/// A_0..A_n; requires q^k <= budget.
std::vector<std::uint64_t> weight_enumerator(const LinearCode& code, const EnumOptions& opt);

/// Exact distance through the dual weight enumerator and the MacWilliams
/// transform; requires q^(n-k) <= budget.
DistanceResult macwilliams_min_distance(const LinearCode& code, const EnumOptions& opt);

/// Picks the cheaper of direct / MacWilliams; degrades to a sampled bound
/// when neither fits the budget.
DistanceResult min_distance_auto(const LinearCode& code, const EnumOptions& opt);

/// Generator matrix = null_space(G); dim = n - k.
LinearCode euclidean_dual(const LinearCode& code);

/// Minimum weight over C \ rowspace(excluded).  any = false when the sweep
/// found no codeword outside; exact = false when q^k exceeds the budget (d
/// is then meaningless).
struct SweepResult {
    bool feasible = false;
    bool any = false;
    int d = 0;
};
SweepResult min_weight_outside(const LinearCode& code, const LinearCode& excluded, const EnumOptions& opt);

/// All q^k codewords (small cases only; used by oracles and tests).
std::vector<std::vector<FieldElement>> enumerate_codewords(const LinearCode& code, std::uint64_t limit);

}  // namespace skewcc
