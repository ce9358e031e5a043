#pragma once

#include <vector>

#include "skewcc/gf.hpp"

namespace skewcc {

/// Dense row-major matrix over a single F_q.
class Matrix {
  public:
    Matrix() = default;
    Matrix(FieldSpecPtr spec, int rows, int cols);

    static Matrix identity(const FieldSpecPtr& spec, int n);
    static Matrix from_rows(const FieldSpecPtr& spec, const std::vector<std::vector<FieldElement>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldSpecPtr& spec() const { return spec_; }

    FieldElement at(int r, int c) const { return {spec_, idx_[static_cast<std::size_t>(r) * cols_ + c]}; }
    std::uint32_t idx_at(int r, int c) const { return idx_[static_cast<std::size_t>(r) * cols_ + c]; }
    void set(int r, int c, const FieldElement& e);
    void set_idx(int r, int c, std::uint32_t v) { idx_[static_cast<std::size_t>(r) * cols_ + c] = v; }

    std::vector<FieldElement> row(int r) const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

  private:
    FieldSpecPtr spec_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::uint32_t> idx_;
};

struct RrefResult {
    Matrix reduced;
    int rank = 0;
    std::vector<int> pivot_columns;
};

/// Reduced row echelon form by Gaussian elimination with first-nonzero
/// pivoting; deterministic for reproducible bases.
RrefResult rref(const Matrix& m);

/// Rows form a basis of { x : M x^T = 0 }; row count = cols - rank.
Matrix null_space(const Matrix& m);

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
/// Requires a square full-rank input; throws std::domain_error otherwise.
Matrix mat_inv(const Matrix& m);

Matrix vstack(const Matrix& a, const Matrix& b);
std::vector<FieldElement> mat_vec(const Matrix& a, const std::vector<FieldElement>& v);
std::vector<FieldElement> vec_mat(const std::vector<FieldElement>& v, const Matrix& a);

int rank(const Matrix& m);
bool row_space_contains(const Matrix& space, const std::vector<FieldElement>& v);
bool row_space_contains_all(const Matrix& space, const Matrix& candidates);
bool row_space_equal(const Matrix& a, const Matrix& b);

}  // namespace skewcc
