#pragma once

#include <optional>
#include <vector>

#include "qa/field.hpp"

namespace qa {

/// Dense matrix over Q or GF(p), row-major. Zero-row/zero-column matrices are
/// legal everywhere; representations routinely have empty vertex spaces.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0), field_(FieldSpec::rationals()) {}

    Matrix(int rows, int cols, FieldSpec field)
        : rows_(rows), cols_(cols), field_(field), e_(static_cast<size_t>(rows) * cols, Rat(0)) {
        if (rows < 0 || cols < 0) throw QaError("Matrix: negative dimension");
    }

    static Matrix zero(int rows, int cols, FieldSpec f) { return Matrix(rows, cols, f); }

    static Matrix identity(int n, FieldSpec f) {
        Matrix m(n, n, f);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<Rat>>& rows, FieldSpec f) {
        int r = static_cast<int>(rows.size());
        int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
        Matrix m(r, c, f);
        FieldOps ops(f);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[i].size()) != c) throw QaError("Matrix: ragged rows");
            for (int j = 0; j < c; ++j) m.at(i, j) = ops.reduce(rows[i][j]);
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    Rat& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && e_ == o.e_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : e_)
            if (x != 0) return false;
        return true;
    }

    bool is_square() const { return rows_ == cols_; }

    Matrix transpose() const {
        Matrix t(cols_, rows_, field_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        check_field(o);
        if (cols_ != o.rows_) throw QaError("Matrix multiply: shape mismatch");
        FieldOps ops(field_);
        Matrix r(rows_, o.cols_, field_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rat& a = at(i, k);
                if (a == 0) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    if (o.at(k, j) == 0) continue;
                    r.at(i, j) = ops.add(r.at(i, j), ops.mul(a, o.at(k, j)));
                }
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o);
        FieldOps ops(field_);
        Matrix r(rows_, cols_, field_);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = ops.add(e_[i], o.e_[i]);
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        check_same_shape(o);
        FieldOps ops(field_);
        Matrix r(rows_, cols_, field_);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = ops.sub(e_[i], o.e_[i]);
        return r;
    }

    Matrix scaled(const Rat& c) const {
        FieldOps ops(field_);
        Matrix r(rows_, cols_, field_);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = ops.mul(e_[i], c);
        return r;
    }

    Matrix pow(int k) const {
        if (!is_square()) throw QaError("Matrix pow: not square");
        Matrix r = identity(rows_, field_);
        Matrix b = *this;
        while (k > 0) {
            if (k & 1) r = r * b;
            b = b * b;
            k >>= 1;
        }
        return r;
    }

    /// [this | o] side by side.
    Matrix hstack(const Matrix& o) const {
        if (rows_ != o.rows_ || field_ != o.field_) throw QaError("hstack: shape mismatch");
        Matrix r(rows_, cols_ + o.cols_, field_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
            for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
        }
        return r;
    }

    Matrix vstack(const Matrix& o) const {
        if (cols_ != o.cols_ || field_ != o.field_) throw QaError("vstack: shape mismatch");
        Matrix r(rows_ + o.rows_, cols_, field_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int i = 0; i < o.rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
        return r;
    }

    static Matrix block_diag(const Matrix& a, const Matrix& b) {
        if (a.field_ != b.field_) throw QaError("block_diag: field mismatch");
        Matrix r(a.rows_ + b.rows_, a.cols_ + b.cols_, a.field_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
        return r;
    }

    Matrix submatrix(int row0, int col0, int nrows, int ncols) const {
        Matrix r(nrows, ncols, field_);
        for (int i = 0; i < nrows; ++i)
            for (int j = 0; j < ncols; ++j) r.at(i, j) = at(row0 + i, col0 + j);
        return r;
    }

    Matrix column(int j) const { return submatrix(0, j, rows_, 1); }

    struct Echelon;

    /// Reduced row echelon form. Pivot choice: leftmost column, topmost
    /// nonzero entry; deterministic, so every downstream basis is too.
    Echelon rref() const;

    int rank() const;

    /// Basis of the right null space, returned as the columns of a matrix
    /// (cols() x nullity). Standard free-variable construction from the RREF.
    Matrix kernel_basis() const;

    /// Any particular solution x of (*this) x = b, or nullopt if inconsistent.
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const {
        if (static_cast<int>(b.size()) != rows_) throw QaError("solve: rhs size mismatch");
        Matrix rhs(rows_, 1, field_);
        FieldOps ops(field_);
        for (int i = 0; i < rows_; ++i) rhs.at(i, 0) = ops.reduce(b[i]);
        auto x = solve_matrix(rhs);
        if (!x) return std::nullopt;
        std::vector<Rat> v(cols_);
        for (int i = 0; i < cols_; ++i) v[i] = x->at(i, 0);
        return v;
    }

    /// Solve (*this) X = B columnwise; nullopt if any column is inconsistent.
    std::optional<Matrix> solve_matrix(const Matrix& b) const;

    std::optional<Matrix> inverse() const;

    bool is_invertible() const { return is_square() && rank() == rows_; }

    /// Columns spanning the column space; deterministic (pivot columns in order).
    Matrix column_space_basis() const;

    std::string str() const {
        std::string s = "[";
        for (int i = 0; i < rows_; ++i) {
            if (i) s += "; ";
            for (int j = 0; j < cols_; ++j) {
                if (j) s += ", ";
                s += rat_to_string(at(i, j));
            }
        }
        s += "]";
        return s;
    }

  private:
    void check_field(const Matrix& o) const {
        if (field_ != o.field_) throw QaError("Matrix: field mismatch");
    }
    void check_same_shape(const Matrix& o) const {
        check_field(o);
        if (rows_ != o.rows_ || cols_ != o.cols_) throw QaError("Matrix: shape mismatch");
    }

    int rows_, cols_;
    FieldSpec field_;
    std::vector<Rat> e_;
};

struct Matrix::Echelon {
    Matrix reduced;           // RREF
    std::vector<int> pivots;  // pivot column of each nonzero row, increasing
};

inline Matrix::Echelon Matrix::rref() const {
    FieldOps ops(field_);
    Matrix m = *this;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int pr = -1;
        for (int i = r; i < rows_; ++i)
            if (m.at(i, c) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < cols_; ++j) std::swap(m.at(pr, j), m.at(r, j));
        Rat pivinv = ops.inv(m.at(r, c));
        for (int j = c; j < cols_; ++j) m.at(r, j) = ops.mul(m.at(r, j), pivinv);
        for (int i = 0; i < rows_; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (int j = c; j < cols_; ++j)
                m.at(i, j) = ops.sub(m.at(i, j), ops.mul(f, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

inline int Matrix::rank() const { return static_cast<int>(rref().pivots.size()); }

inline Matrix Matrix::kernel_basis() const {
    FieldOps ops(field_);
    Echelon e = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : e.pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix k(cols_, static_cast<int>(free_cols.size()), field_);
    for (size_t fi = 0; fi < free_cols.size(); ++fi) {
        int fc = free_cols[fi];
        k.at(fc, static_cast<int>(fi)) = 1;
        for (size_t r = 0; r < e.pivots.size(); ++r)
            k.at(e.pivots[r], static_cast<int>(fi)) =
                ops.neg(e.reduced.at(static_cast<int>(r), fc));
    }
    return k;
}

inline std::optional<Matrix> Matrix::solve_matrix(const Matrix& b) const {
    if (b.rows_ != rows_ || b.field_ != field_) throw QaError("solve_matrix: shape mismatch");
    Echelon e = hstack(b).rref();
    Matrix x(cols_, b.cols_, field_);
    for (size_t r = 0; r < e.pivots.size(); ++r) {
        int c = e.pivots[r];
        if (c >= cols_) return std::nullopt;  // pivot in the rhs block: inconsistent
        for (int j = 0; j < b.cols_; ++j)
            x.at(c, j) = e.reduced.at(static_cast<int>(r), cols_ + j);
    }
    return x;
}

inline std::optional<Matrix> Matrix::inverse() const {
    if (!is_square()) return std::nullopt;
    Echelon e = hstack(identity(rows_, field_)).rref();
    for (int i = 0; i < rows_; ++i)
        if (static_cast<int>(e.pivots.size()) <= i || e.pivots[i] != i) return std::nullopt;
    return e.reduced.submatrix(0, rows_, rows_, rows_);
}

inline Matrix Matrix::column_space_basis() const {
    Echelon e = rref();
    Matrix r(rows_, static_cast<int>(e.pivots.size()), field_);
    for (size_t k = 0; k < e.pivots.size(); ++k)
        for (int i = 0; i < rows_; ++i) r.at(i, static_cast<int>(k)) = at(i, e.pivots[k]);
    return r;
}

}  // namespace qa
