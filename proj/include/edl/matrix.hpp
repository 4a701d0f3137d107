/**
 * matrix.hpp -- dense exact linear algebra over Q(zeta_N).
 *
 * Everything is fraction-tracking Gaussian elimination; results are exact.
 * Dense storage is fine at desk scale (dimensions up to a few hundred).
 */
#pragma once

#include <cassert>
#include <functional>
#include <optional>
#include <vector>

#include "edl/cyclotomic.hpp"

namespace edl {

struct Inconsistent : std::runtime_error {
    Inconsistent() : std::runtime_error("linear system has no solution") {}
};
struct NotIdempotent : std::runtime_error {
    NotIdempotent() : std::runtime_error("matrix is not idempotent") {}
};
struct ShapeMismatch : std::runtime_error {
    explicit ShapeMismatch(const std::string& w) : std::runtime_error(w) {}
};

class Mat {
public:
    Mat() : r_(0), c_(0) {}
    Mat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = Cyc::rational(1);
        return m;
    }
    static Mat zero(int rows, int cols) { return Mat(rows, cols); }

    int rows() const { return r_; }
    int cols() const { return c_; }
    Cyc& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const Cyc& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    bool is_zero() const {
        for (const Cyc& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_identity() const {
        if (r_ != c_) return false;
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) {
                if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
            }
        return true;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) return false;
        for (size_t i = 0; i < a.a_.size(); ++i)
            if (a.a_[i] != b.a_[i]) return false;
        return true;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    friend Mat operator+(const Mat& a, const Mat& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw ShapeMismatch("add");
        Mat m(a.r_, a.c_);
        for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] + b.a_[i];
        return m;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw ShapeMismatch("sub");
        Mat m(a.r_, a.c_);
        for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] - b.a_[i];
        return m;
    }
    friend Mat operator*(const Cyc& s, const Mat& a) {
        Mat m(a.r_, a.c_);
        for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = s * a.a_[i];
        return m;
    }
    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.c_ != b.r_) throw ShapeMismatch("mul");
        Mat m(a.r_, b.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int k = 0; k < a.c_; ++k) {
                const Cyc& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.c_; ++j) {
                    const Cyc& bkj = b(k, j);
                    if (!bkj.is_zero()) m(i, j) += aik * bkj;
                }
            }
        return m;
    }
    Mat& operator+=(const Mat& o) { return *this = *this + o; }

    Mat transpose() const {
        Mat m(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    /// Kronecker product (row-major leg order: this is the left factor).
    friend Mat kron(const Mat& a, const Mat& b) {
        Mat m(a.r_ * b.r_, a.c_ * b.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int j = 0; j < a.c_; ++j) {
                if (a(i, j).is_zero()) continue;
                for (int p = 0; p < b.r_; ++p)
                    for (int q = 0; q < b.c_; ++q)
                        if (!b(p, q).is_zero())
                            m(i * b.r_ + p, j * b.c_ + q) = a(i, j) * b(p, q);
            }
        return m;
    }

    Cyc trace() const {
        Cyc t;
        for (int i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
        return t;
    }

    /// Row echelon in place; returns pivot columns.  Used by rank/solve.
    std::vector<int> echelonize() {
        std::vector<int> pivots;
        int row = 0;
        for (int col = 0; col < c_ && row < r_; ++col) {
            int p = -1;
            for (int i = row; i < r_; ++i)
                if (!(*this)(i, col).is_zero()) {
                    p = i;
                    break;
                }
            if (p < 0) continue;
            if (p != row)
                for (int j = 0; j < c_; ++j) std::swap((*this)(p, j), (*this)(row, j));
            Cyc inv = (*this)(row, col).inverse();
            for (int j = col; j < c_; ++j) (*this)(row, j) *= inv;
            for (int i = 0; i < r_; ++i) {
                if (i == row || (*this)(i, col).is_zero()) continue;
                Cyc f = (*this)(i, col);
                for (int j = col; j < c_; ++j) (*this)(i, j) -= f * (*this)(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    int rank() const {
        Mat m = *this;
        return static_cast<int>(m.echelonize().size());
    }

private:
    int r_, c_;
    std::vector<Cyc> a_;
};

struct SolveResult {
    bool consistent = false;
    Mat particular;  // one solution of A X = B (cols match B)
    Mat nullspace;   // columns span ker A
};

/// Exact solution of A X = B together with a nullspace basis of A.
inline SolveResult mat_solve(const Mat& A, const Mat& B) {
    if (A.rows() != B.rows()) throw ShapeMismatch("solve: row mismatch");
    int n = A.cols(), m = B.cols();
    Mat aug(A.rows(), n + m);
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = A(i, j);
        for (int j = 0; j < m; ++j) aug(i, n + j) = B(i, j);
    }
    // Eliminate on the A-columns only.
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < n && row < A.rows(); ++col) {
        int p = -1;
        for (int i = row; i < A.rows(); ++i)
            if (!aug(i, col).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < n + m; ++j) std::swap(aug(p, j), aug(row, j));
        Cyc inv = aug(row, col).inverse();
        for (int j = col; j < n + m; ++j) aug(row, j) *= inv;
        for (int i = 0; i < A.rows(); ++i) {
            if (i == row || aug(i, col).is_zero()) continue;
            Cyc f = aug(i, col);
            for (int j = col; j < n + m; ++j) aug(i, j) -= f * aug(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    SolveResult res;
    // Consistency: no row with zero A-part and nonzero B-part.
    for (int i = row; i < A.rows(); ++i)
        for (int j = 0; j < m; ++j)
            if (!aug(i, n + j).is_zero()) return res;
    res.consistent = true;
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    res.particular = Mat(n, m);
    for (size_t k = 0; k < pivots.size(); ++k)
        for (int j = 0; j < m; ++j) res.particular(pivots[k], j) = aug(static_cast<int>(k), n + j);
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    res.nullspace = Mat(n, static_cast<int>(free_cols.size()));
    for (size_t f = 0; f < free_cols.size(); ++f) {
        res.nullspace(free_cols[f], static_cast<int>(f)) = Cyc::rational(1);
        for (size_t k = 0; k < pivots.size(); ++k)
            res.nullspace(pivots[k], static_cast<int>(f)) =
                -aug(static_cast<int>(k), free_cols[f]);
    }
    return res;
}

/// Splits an exact idempotent P = incl . proj with proj . incl = id_rank.
inline std::pair<Mat, Mat> mat_image_split(const Mat& P) {
    if (P.rows() != P.cols()) throw ShapeMismatch("image_split: square required");
    if (P * P != P) throw NotIdempotent();
    int n = P.rows();
    // incl: basis of the column space, taken from pivot columns of P.
    Mat ech = P;
    std::vector<int> pivots = ech.echelonize();
    int r = static_cast<int>(pivots.size());
    Mat incl(n, r);
    for (int k = 0; k < r; ++k)
        for (int i = 0; i < n; ++i) incl(i, k) = P(i, pivots[k]);
    // proj: unique solution of incl * proj = P (incl has full column rank).
    SolveResult s = mat_solve(incl, P);
    if (!s.consistent) throw std::logic_error("image_split: inconsistent factorization");
    Mat proj = s.particular;
    return {incl, proj};
}

/// Inverse of a square invertible matrix.
inline std::optional<Mat> mat_inverse(const Mat& A) {
    if (A.rows() != A.cols()) return std::nullopt;
    SolveResult s = mat_solve(A, Mat::identity(A.rows()));
    if (!s.consistent || s.nullspace.cols() != 0) return std::nullopt;
    return s.particular;
}

}  // namespace edl
