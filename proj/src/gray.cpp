#include "skewcc/gray.hpp"

#include <stdexcept>

namespace skewcc {

GrayMapSpec GrayMapSpec::broadcast(const Matrix& m, int n) {
    GrayMapSpec spec{std::vector<Matrix>(static_cast<std::size_t>(n), m)};
    spec.validate();
    return spec;
}

GrayMapSpec GrayMapSpec::per_position(std::vector<Matrix> mats) {
    GrayMapSpec spec{std::move(mats)};
    spec.validate();
    return spec;
}

GrayMapSpec GrayMapSpec::identity(const FieldSpecPtr& spec, int l, int n) {
    return broadcast(Matrix::identity(spec, l), n);
}

void GrayMapSpec::validate() const {
    if (mats.empty()) throw std::invalid_argument("Gray map needs at least one position");
    const int ll = mats[0].rows();
    for (const auto& m : mats) {
        if (m.rows() != ll || m.cols() != ll) throw std::invalid_argument("Gray matrices must all be l x l");
        if (!m.spec()->same(*mats[0].spec())) throw std::invalid_argument("Gray matrices must share one field");
        if (rank(m) != ll) throw std::invalid_argument("Gray matrix is singular");
    }
}

std::vector<FieldElement> phi(const std::vector<RingElement>& v, const GrayMapSpec& spec) {
    if (static_cast<int>(v.size()) != spec.n()) throw std::invalid_argument("vector length does not match Gray map");
    std::vector<FieldElement> out;
    out.reserve(v.size() * spec.l());
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto block = vec_mat(v[i].comps(), spec.mats[i]);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

std::vector<RingElement> phi_inverse(const std::vector<FieldElement>& image, const GrayMapSpec& spec) {
    const int l = spec.l();
    if (static_cast<int>(image.size()) != spec.n() * l) throw std::invalid_argument("image length mismatch");
    std::vector<RingElement> out;
    out.reserve(spec.n());
    for (int i = 0; i < spec.n(); ++i) {
        std::vector<FieldElement> block(image.begin() + static_cast<std::ptrdiff_t>(i) * l,
                                        image.begin() + static_cast<std::ptrdiff_t>(i + 1) * l);
        out.emplace_back(vec_mat(block, mat_inv(spec.mats[i])));
    }
    return out;
}

LinearCode gray_image(const RCode& code, const GrayMapSpec& spec) {
    if (spec.n() != code.spec.n || spec.l() != code.spec.rctx.spec.l)
        throw std::invalid_argument("Gray map shape does not match the code");
    const auto basis = r_code_basis(code);
    const auto& field = code.spec.rctx.spec.field;
    if (basis.empty()) return LinearCode::zero_code(field, code.spec.n * spec.l());
    std::vector<std::vector<FieldElement>> rows;
    rows.reserve(basis.size());
    for (const auto& b : basis) rows.push_back(phi(b, spec));
    return LinearCode::from_generator(Matrix::from_rows(field, rows));
}

int gray_weight(const std::vector<RingElement>& v, const GrayMapSpec& spec) {
    if (static_cast<int>(v.size()) != spec.n()) throw std::invalid_argument("vector length does not match Gray map");
    int wt = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (const auto& x : vec_mat(v[i].comps(), spec.mats[i])) wt += !x.is_zero();
    return wt;
}

OrthogonalityCheck check_orthogonality_matrix(const GrayMapSpec& spec) {
    std::optional<FieldElement> lambda;
    for (const auto& m : spec.mats) {
        const Matrix prod = mat_mul(m, transpose(m));
        const FieldElement diag = prod.at(0, 0);
        if (diag.is_zero()) return {false, std::nullopt};
        for (int i = 0; i < prod.rows(); ++i)
            for (int j = 0; j < prod.cols(); ++j) {
                const FieldElement want = (i == j) ? diag : m.spec()->zero();
                if (prod.at(i, j) != want) return {false, std::nullopt};
            }
        if (lambda && *lambda != diag) return {false, std::nullopt};
        lambda = diag;
    }
    return {true, lambda};
}

}  // namespace skewcc
