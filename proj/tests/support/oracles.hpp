#pragma once

// Test-side oracles and property suites.  Everything here is independent of
// the library code paths it checks: duals are recomputed from null spaces,
// products recomposed, identities evaluated both ways.  The doctest suites
// and the acceptance runner share these so a property is defined once.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "skewcc/codes.hpp"
#include "skewcc/gray.hpp"
#include "skewcc/ring.hpp"
#include "skewcc/skewpoly.hpp"
#include "skewcc/specfile.hpp"

namespace oracles {

using namespace skewcc;

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::uint32_t below(std::uint32_t n) { return static_cast<std::uint32_t>(eng() % n); }
    FieldElement element(const FieldSpecPtr& spec) { return spec->from_index(below(spec->q())); }
    FieldElement nonzero(const FieldSpecPtr& spec) { return spec->from_index(1 + below(spec->q() - 1)); }
    SkewPoly poly(const SkewRingCtx& ctx, int max_deg, bool force_nonzero = false);
};

/// The six (field, theta, s) contexts exercised throughout the worked
/// examples: F_4 with and without the w-derivation, F_8 under both
/// non-trivial automorphisms, F_9 with and without the w-derivation.
std::vector<SkewRingCtx> example_contexts();

/// Directory holding the bundled corpus (SKEWCC_CORPUS or data/corpus).
std::string corpus_dir();
std::vector<CodeSpecFile> load_corpus_table(const std::string& table);
std::vector<CodeSpecFile> load_whole_corpus();

// Each check returns an empty string on success, a diagnostic on failure.
std::string check_field_axioms(const FieldSpecPtr& spec, bool exhaustive, int trials, std::uint64_t seed);
std::string check_frobenius_homomorphism(const FieldSpecPtr& spec, int trials, std::uint64_t seed);
std::string check_aut_group(const FieldSpecPtr& spec);
std::string check_leibniz(const SkewRingCtx& ctx, int trials, std::uint64_t seed);
std::string check_skew_ring_axioms(const SkewRingCtx& ctx, int triples, std::uint64_t seed);
std::string check_divmod(const SkewRingCtx& ctx, int trials, std::uint64_t seed);
std::string check_eta_identity_fq(const SkewRingCtx& ctx, const FieldElement& alpha, int n, int trials,
                                  std::uint64_t seed);
std::string check_eta_identity_r(const RingCtx& rctx, const RingElement& a, int n, int trials,
                                 std::uint64_t seed);
std::string check_closure_equivalence(int specs, std::uint64_t seed);
std::string check_hdagger_matches_nullspace_dual(const FqCyclicSpec& spec);
std::string check_euclidean_criterion_vs_inclusion(const FqCyclicSpec& spec);
std::string check_annihilator_criterion_vs_inclusion(const FqCyclicSpec& spec);
/// Random small (theta, 0, alpha)-cyclic specs over F_4/F_8/F_9, both the
/// Euclidean and (for theta = Id) annihilator criteria against inclusion.
std::string check_criterion_vs_inclusion_random(int specs, std::uint64_t seed);
std::string check_gram_vs_polynomial_form(const FieldSpecPtr& spec, int n, const FieldElement& alpha,
                                          int trials, std::uint64_t seed);
std::string check_phi_orthogonality_transport(const CodeSpecFile& sf);
std::string check_dual_is_inverse_constacyclic(const FqCyclicSpec& spec);

/// All R-codewords of a small code by spanning the basis (oracle-side span,
/// no Gray machinery).
std::vector<std::vector<RingElement>> span_r_code(const RCode& code, std::uint64_t limit);

}  // namespace oracles
