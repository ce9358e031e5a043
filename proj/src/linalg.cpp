#include "skewcc/linalg.hpp"

#include <stdexcept>

namespace skewcc {

Matrix::Matrix(FieldSpecPtr spec, int rows, int cols)
    : spec_(std::move(spec)), rows_(rows), cols_(cols), idx_(static_cast<std::size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

Matrix Matrix::identity(const FieldSpecPtr& spec, int n) {
    Matrix m(spec, n, n);
    for (int i = 0; i < n; ++i) m.set_idx(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(const FieldSpecPtr& spec, const std::vector<std::vector<FieldElement>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(spec, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged rows");
        for (int j = 0; j < c; ++j) {
            if (!rows[i][j].spec()->same(*spec)) throw std::invalid_argument("field spec mismatch");
            m.set_idx(i, j, rows[i][j].index());
        }
    }
    return m;
}

void Matrix::set(int r, int c, const FieldElement& e) {
    if (!e.spec()->same(*spec_)) throw std::invalid_argument("field spec mismatch");
    set_idx(r, c, e.index());
}

std::vector<FieldElement> Matrix::row(int r) const {
    std::vector<FieldElement> out;
    out.reserve(cols_);
    for (int j = 0; j < cols_; ++j) out.push_back(at(r, j));
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    if (spec_ && o.spec_ && !spec_->same(*o.spec_)) return false;
    return idx_ == o.idx_;
}

RrefResult rref(const Matrix& m) {
    const auto& f = *m.spec();
    Matrix a = m;
    const int rows = a.rows(), cols = a.cols();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (a.idx_at(i, c) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < cols; ++j) {
                auto t = a.idx_at(r, j);
                a.set_idx(r, j, a.idx_at(pr, j));
                a.set_idx(pr, j, t);
            }
        const std::uint32_t inv = f.inv_idx(a.idx_at(r, c));
        for (int j = 0; j < cols; ++j) a.set_idx(r, j, f.mul_idx(inv, a.idx_at(r, j)));
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            const std::uint32_t factor = a.idx_at(i, c);
            if (factor == 0) continue;
            for (int j = 0; j < cols; ++j)
                a.set_idx(i, j, f.sub_idx(a.idx_at(i, j), f.mul_idx(factor, a.idx_at(r, j))));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), r, std::move(pivots)};
}

Matrix null_space(const Matrix& m) {
    const auto& spec = m.spec();
    const auto& f = *spec;
    const int n = m.cols();
    auto rr = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (int c : rr.pivot_columns) is_pivot[c] = true;

    Matrix out(spec, n - rr.rank, n);
    int row = 0;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        // free column c: x_c = 1, pivot variables solve R x = 0
        out.set_idx(row, c, 1);
        for (int pr = 0; pr < rr.rank; ++pr) {
            const int pc = rr.pivot_columns[pr];
            out.set_idx(row, pc, f.neg_idx(rr.reduced.idx_at(pr, c)));
        }
        ++row;
    }
    return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
    if (!a.spec()->same(*b.spec())) throw std::invalid_argument("field spec mismatch");
    const auto& f = *a.spec();
    Matrix out(a.spec(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const std::uint32_t aik = a.idx_at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                out.set_idx(i, j, f.add_idx(out.idx_at(i, j), f.mul_idx(aik, b.idx_at(k, j))));
        }
    return out;
}

Matrix transpose(const Matrix& m) {
    Matrix out(m.spec(), m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.set_idx(j, i, m.idx_at(i, j));
    return out;
}

Matrix mat_inv(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::domain_error("inverse of non-square matrix");
    const int n = m.rows();
    Matrix aug(m.spec(), n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.set_idx(i, j, m.idx_at(i, j));
        aug.set_idx(i, n + i, 1);
    }
    auto rr = rref(aug);
    for (int i = 0; i < n; ++i)
        if (rr.rank <= i || rr.pivot_columns[i] != i) throw std::domain_error("singular matrix");
    Matrix out(m.spec(), n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.set_idx(i, j, rr.reduced.idx_at(i, n + j));
    return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("column count mismatch");
    Matrix out(a.spec(), a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.set_idx(i, j, a.idx_at(i, j));
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) out.set_idx(a.rows() + i, j, b.idx_at(i, j));
    return out;
}

std::vector<FieldElement> mat_vec(const Matrix& a, const std::vector<FieldElement>& v) {
    if (static_cast<int>(v.size()) != a.cols()) throw std::invalid_argument("dimension mismatch");
    std::vector<FieldElement> out;
    out.reserve(a.rows());
    for (int i = 0; i < a.rows(); ++i) {
        FieldElement acc = a.spec()->zero();
        for (int j = 0; j < a.cols(); ++j) acc = acc + a.at(i, j) * v[j];
        out.push_back(acc);
    }
    return out;
}

std::vector<FieldElement> vec_mat(const std::vector<FieldElement>& v, const Matrix& a) {
    if (static_cast<int>(v.size()) != a.rows()) throw std::invalid_argument("dimension mismatch");
    std::vector<FieldElement> out(a.cols(), a.spec()->zero());
    for (int i = 0; i < a.rows(); ++i) {
        if (v[i].is_zero()) continue;
        for (int j = 0; j < a.cols(); ++j) out[j] = out[j] + v[i] * a.at(i, j);
    }
    return out;
}

int rank(const Matrix& m) { return rref(m).rank; }

bool row_space_contains(const Matrix& space, const std::vector<FieldElement>& v) {
    // reduce v against the rref of the space
    auto rr = rref(space);
    const auto& f = *space.spec();
    std::vector<std::uint32_t> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i].index();
    for (int r = 0; r < rr.rank; ++r) {
        const int pc = rr.pivot_columns[r];
        const std::uint32_t c = w[pc];
        if (c == 0) continue;
        for (int j = 0; j < space.cols(); ++j) w[j] = f.sub_idx(w[j], f.mul_idx(c, rr.reduced.idx_at(r, j)));
    }
    for (auto x : w)
        if (x != 0) return false;
    return true;
}

bool row_space_contains_all(const Matrix& space, const Matrix& candidates) {
    return rank(space) == rank(vstack(space, candidates));
}

bool row_space_equal(const Matrix& a, const Matrix& b) {
    auto ra = rref(a), rb = rref(b);
    if (ra.rank != rb.rank) return false;
    for (int i = 0; i < ra.rank; ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (ra.reduced.idx_at(i, j) != rb.reduced.idx_at(i, j)) return false;
    return true;
}

}  // namespace skewcc
