#pragma once

#include <optional>
#include <vector>

#include "skewcc/codes.hpp"
#include "skewcc/linalg.hpp"
#include "skewcc/ring.hpp"

namespace skewcc {

/// Gray map Phi: R^n -> F_q^{nl} given by one invertible l x l matrix per
/// position; position i contributes the row vector a_i * M_i.  A single
/// matrix broadcast to every position is the common case.
struct GrayMapSpec {
    std::vector<Matrix> mats;

    static GrayMapSpec broadcast(const Matrix& m, int n);
    static GrayMapSpec per_position(std::vector<Matrix> mats);
    static GrayMapSpec identity(const FieldSpecPtr& spec, int l, int n);

    int n() const { return static_cast<int>(mats.size()); }
    int l() const { return mats.empty() ? 0 : mats[0].rows(); }

    /// Throws unless every matrix is square l x l over one field and
    /// invertible (rank l).
    void validate() const;
};

std::vector<FieldElement> phi(const std::vector<RingElement>& v, const GrayMapSpec& spec);
std::vector<RingElement> phi_inverse(const std::vector<FieldElement>& image, const GrayMapSpec& spec);

/// Generator matrix = Phi of each basis row of the R-code; the dimension is
/// preserved because Phi is an F_q-isomorphism.
LinearCode gray_image(const RCode& code, const GrayMapSpec& spec);

int gray_weight(const std::vector<RingElement>& v, const GrayMapSpec& spec);

struct OrthogonalityCheck {
    bool ok = false;
    std::optional<FieldElement> lambda;
};

/// True iff one nonzero lambda satisfies M_i M_i^T = lambda * I for every
/// position; under that condition Phi carries dual-containing codes to
/// dual-containing codes.
OrthogonalityCheck check_orthogonality_matrix(const GrayMapSpec& spec);

}  // namespace skewcc
