#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orbitlift/algebra.hpp"
#include "orbitlift/errors.hpp"
#include "orbitlift/rational.hpp"

namespace orbitlift {

// ---------------------------------------------------------------------------
// Exact matrices over k = Q. All elimination in the library funnels through
// this one engine; everything over D is reduced to it via the k-realization.
// ---------------------------------------------------------------------------

class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(long rows, long cols)
        : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}

    static RatMatrix identity(long n) {
        RatMatrix m(n, n);
        for (long i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    Rational& at(long r, long c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& at(long r, long c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }

    bool is_zero() const {
        return std::all_of(e_.begin(), e_.end(), [](const Rational& x) { return x.is_zero(); });
    }

    RatMatrix transpose() const {
        RatMatrix t(cols_, rows_);
        for (long r = 0; r < rows_; ++r)
            for (long c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        if (a.cols_ != b.rows_) throw shape_error("rational matrix product shape mismatch");
        RatMatrix p(a.rows_, b.cols_);
        for (long r = 0; r < a.rows_; ++r)
            for (long m = 0; m < a.cols_; ++m) {
                const Rational& x = a.at(r, m);
                if (x.is_zero()) continue;
                for (long c = 0; c < b.cols_; ++c) {
                    const Rational& y = b.at(m, c);
                    if (!y.is_zero()) p.at(r, c) += x * y;
                }
            }
        return p;
    }

    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw shape_error("rational matrix sum shape mismatch");
        RatMatrix s(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) s.e_[i] = a.e_[i] + b.e_[i];
        return s;
    }
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw shape_error("rational matrix diff shape mismatch");
        RatMatrix s(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) s.e_[i] = a.e_[i] - b.e_[i];
        return s;
    }
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    Rational trace() const {
        if (rows_ != cols_) throw shape_error("trace of a non-square matrix");
        Rational t;
        for (long i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }

    /// In-place reduced row echelon form. Returns the pivot column indices.
    std::vector<long> rref() {
        std::vector<long> pivots;
        long row = 0;
        for (long col = 0; col < cols_ && row < rows_; ++col) {
            long p = -1;
            for (long r = row; r < rows_; ++r)
                if (!at(r, col).is_zero()) { p = r; break; }
            if (p < 0) continue;
            if (p != row)
                for (long c = 0; c < cols_; ++c) std::swap(at(p, c), at(row, c));
            Rational s = at(row, col).inv();
            for (long c = col; c < cols_; ++c) at(row, c) *= s;
            for (long r = 0; r < rows_; ++r) {
                if (r == row || at(r, col).is_zero()) continue;
                Rational f = at(r, col);
                for (long c = col; c < cols_; ++c) at(r, c) -= f * at(row, c);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    long rank() const {
        RatMatrix m = *this;
        return static_cast<long>(m.rref().size());
    }

    /// Basis of {x : Ax = 0}, one column per free variable (deterministic).
    std::vector<std::vector<Rational>> nullspace_basis() const {
        RatMatrix m = *this;
        std::vector<long> pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (long p : pivots) is_pivot[p] = true;
        std::vector<std::vector<Rational>> basis;
        for (long free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<Rational> v(cols_);
            v[free] = 1;
            for (std::size_t i = 0; i < pivots.size(); ++i)
                v[pivots[i]] = -m.at(static_cast<long>(i), free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// One solution X of A X = B (free variables set to zero), or nullopt if
    /// the system is inconsistent.
    static std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b) {
        if (a.rows_ != b.rows_) throw shape_error("solve: row mismatch");
        RatMatrix aug(a.rows_, a.cols_ + b.cols_);
        for (long r = 0; r < a.rows_; ++r) {
            for (long c = 0; c < a.cols_; ++c) aug.at(r, c) = a.at(r, c);
            for (long c = 0; c < b.cols_; ++c) aug.at(r, a.cols_ + c) = b.at(r, c);
        }
        std::vector<long> pivots = aug.rref();
        for (long p : pivots)
            if (p >= a.cols_) return std::nullopt; // pivot escaped into the rhs
        RatMatrix x(a.cols_, b.cols_);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            for (long c = 0; c < b.cols_; ++c)
                x.at(pivots[i], c) = aug.at(static_cast<long>(i), a.cols_ + c);
        return x;
    }

    RatMatrix inverse() const {
        if (rows_ != cols_) throw shape_error("inverse of a non-square matrix");
        auto x = solve(*this, identity(rows_));
        if (!x || rank() != rows_) throw singular_error("singular rational matrix");
        return *x;
    }

private:
    long rows_, cols_;
    std::vector<Rational> e_;
};

// ---------------------------------------------------------------------------
// Rectangular matrices over D, i.e. right-D-module maps D^cols -> D^rows
// acting by left matrix multiplication on column vectors with scalars on
// the right.
// ---------------------------------------------------------------------------

class DMatrix {
public:
    DMatrix() : rows_(0), cols_(0) {}
    DMatrix(AlgebraPtr spec, long rows, long cols)
        : spec_(std::move(spec)), rows_(rows), cols_(cols),
          e_(static_cast<std::size_t>(rows) * cols, DElem(spec_)) {}

    static DMatrix identity(const AlgebraPtr& spec, long n) {
        DMatrix m(spec, n, n);
        for (long i = 0; i < n; ++i) m.at(i, i) = DElem::one(spec);
        return m;
    }
    static DMatrix zero(const AlgebraPtr& spec, long rows, long cols) { return DMatrix(spec, rows, cols); }

    const AlgebraPtr& spec() const { return spec_; }
    long rows() const { return rows_; }
    long cols() const { return cols_; }

    DElem& at(long r, long c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
    const DElem& at(long r, long c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }

    bool is_zero() const {
        return std::all_of(e_.begin(), e_.end(), [](const DElem& x) { return x.is_zero(); });
    }

    friend bool operator==(const DMatrix& a, const DMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && *a.spec_ == *b.spec_ && a.e_ == b.e_;
    }
    friend bool operator!=(const DMatrix& a, const DMatrix& b) { return !(a == b); }

    DMatrix operator-() const {
        DMatrix m(spec_, rows_, cols_);
        for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
        return m;
    }

    friend DMatrix operator+(const DMatrix& a, const DMatrix& b) {
        a.check_same_shape(b, "sum");
        DMatrix m(a.spec_, a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] + b.e_[i];
        return m;
    }
    friend DMatrix operator-(const DMatrix& a, const DMatrix& b) {
        a.check_same_shape(b, "difference");
        DMatrix m(a.spec_, a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] - b.e_[i];
        return m;
    }

    /// Exact product; A's entries multiply on the left (noncommutative D).
    friend DMatrix operator*(const DMatrix& a, const DMatrix& b) {
        check_same_spec(a.spec_, b.spec_);
        if (a.cols_ != b.rows_) throw shape_error("D-matrix product shape mismatch");
        DMatrix p(a.spec_, a.rows_, b.cols_);
        for (long r = 0; r < a.rows_; ++r)
            for (long m = 0; m < a.cols_; ++m) {
                const DElem& x = a.at(r, m);
                if (x.is_zero()) continue;
                for (long c = 0; c < b.cols_; ++c) {
                    const DElem& y = b.at(m, c);
                    if (!y.is_zero()) p.at(r, c) = p.at(r, c) + x * y;
                }
            }
        return p;
    }

    friend DMatrix operator*(const Rational& s, const DMatrix& a) {
        DMatrix m(a.spec_, a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] * s;
        return m;
    }

    /// Entry-wise left multiplication by d.
    DMatrix scaled_left(const DElem& d) const {
        DMatrix m(spec_, rows_, cols_);
        for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = d * e_[i];
        return m;
    }

    DMatrix conj_transpose() const {
        DMatrix m(spec_, cols_, rows_);
        for (long r = 0; r < rows_; ++r)
            for (long c = 0; c < cols_; ++c) m.at(c, r) = conj(at(r, c));
        return m;
    }

    DMatrix pow(long p) const {
        if (rows_ != cols_) throw shape_error("power of a non-square matrix");
        DMatrix acc = identity(spec_, rows_);
        for (long i = 0; i < p; ++i) acc = acc * *this;
        return acc;
    }

    DMatrix submatrix(const std::vector<long>& row_idx, const std::vector<long>& col_idx) const {
        DMatrix m(spec_, static_cast<long>(row_idx.size()), static_cast<long>(col_idx.size()));
        for (std::size_t r = 0; r < row_idx.size(); ++r)
            for (std::size_t c = 0; c < col_idx.size(); ++c)
                m.at(static_cast<long>(r), static_cast<long>(c)) = at(row_idx[r], col_idx[c]);
        return m;
    }

    /// Columns col_idx of the identity-sized ambient space; handy for weight
    /// space bases given by coordinate indices.
    static DMatrix coordinate_columns(const AlgebraPtr& spec, long dim, const std::vector<long>& col_idx) {
        DMatrix m(spec, dim, static_cast<long>(col_idx.size()));
        for (std::size_t c = 0; c < col_idx.size(); ++c)
            m.at(col_idx[c], static_cast<long>(c)) = DElem::one(spec);
        return m;
    }

    static DMatrix hstack(const DMatrix& a, const DMatrix& b) {
        check_same_spec(a.spec(), b.spec());
        if (a.rows() != b.rows()) throw shape_error("hstack row mismatch");
        DMatrix m(a.spec(), a.rows(), a.cols() + b.cols());
        for (long r = 0; r < a.rows(); ++r) {
            for (long c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
            for (long c = 0; c < b.cols(); ++c) m.at(r, a.cols() + c) = b.at(r, c);
        }
        return m;
    }

    std::string str() const {
        std::string s = "[";
        for (long r = 0; r < rows_; ++r) {
            s += r ? "; " : "";
            for (long c = 0; c < cols_; ++c) s += (c ? ", " : "") + at(r, c).str();
        }
        return s + "]";
    }

private:
    void check_same_shape(const DMatrix& o, const char* what) const {
        check_same_spec(spec_, o.spec_);
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw shape_error(std::string("D-matrix ") + what + " shape mismatch");
    }

    AlgebraPtr spec_;
    long rows_, cols_;
    std::vector<DElem> e_;
};

// ---------------------------------------------------------------------------
// k-realization and everything that leans on it
// ---------------------------------------------------------------------------

/// Block matrix whose (r,c) block is the left-multiplication matrix of the
/// entry A[r][c]. Functorial: realize_k(AB) = realize_k(A) realize_k(B).
inline RatMatrix realize_k(const DMatrix& a) {
    int d = a.spec()->dim();
    RatMatrix m(a.rows() * d, a.cols() * d);
    for (long r = 0; r < a.rows(); ++r)
        for (long c = 0; c < a.cols(); ++c) {
            const DElem& x = a.at(r, c);
            if (x.is_zero()) continue;
            std::vector<Rational> block = left_mult_matrix(x);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) m.at(r * d + i, c * d + j) = block[static_cast<std::size_t>(i) * d + j];
        }
    return m;
}

/// Stack the coordinates of each column: an (rows*d) x cols rational matrix
/// with realize_k(A) * vec(X) = vec(A X) column by column.
inline RatMatrix vec_columns(const DMatrix& a) {
    int d = a.spec()->dim();
    RatMatrix m(a.rows() * d, a.cols());
    for (long r = 0; r < a.rows(); ++r)
        for (long c = 0; c < a.cols(); ++c)
            for (int i = 0; i < d; ++i) m.at(r * d + i, c) = a.at(r, c).coord(i);
    return m;
}

inline DMatrix unvec_columns(const RatMatrix& m, const AlgebraPtr& spec) {
    int d = spec->dim();
    if (m.rows() % d != 0) throw shape_error("unvec: row count not divisible by dim D");
    DMatrix a(spec, m.rows() / d, m.cols());
    for (long r = 0; r < a.rows(); ++r)
        for (long c = 0; c < a.cols(); ++c) {
            std::array<Rational, 4> coords{Rational(0), Rational(0), Rational(0), Rational(0)};
            for (int i = 0; i < d; ++i) coords[i] = m.at(r * d + i, c);
            a.at(r, c) = DElem(spec, std::move(coords));
        }
    return a;
}

/// D-module rank = rank_k(realize_k(A)) / dim_k(D).
inline long rank(const DMatrix& a) {
    long rk = realize_k(a).rank();
    int d = a.spec()->dim();
    if (rk % d != 0) throw error("k-rank not divisible by dim D (should be impossible)");
    return rk / d;
}

/// Solve A X = B over D (X = A^{-1} B column-wise through the realization).
/// Returns nullopt when inconsistent.
inline std::optional<DMatrix> solve(const DMatrix& a, const DMatrix& b) {
    check_same_spec(a.spec(), b.spec());
    if (a.rows() != b.rows()) throw shape_error("solve over D: row mismatch");
    auto y = RatMatrix::solve(realize_k(a), vec_columns(b));
    if (!y) return std::nullopt;
    return unvec_columns(*y, a.spec());
}

inline DMatrix inverse(const DMatrix& a) {
    if (a.rows() != a.cols()) throw shape_error("inverse of a non-square D-matrix");
    if (rank(a) != a.rows()) throw singular_error("singular D-matrix");
    auto x = solve(a, DMatrix::identity(a.spec(), a.rows()));
    return *x;
}

/// Basis of the right-D-module kernel {v : Av = 0}, as columns.
inline std::vector<DMatrix> kernel_basis(const DMatrix& a) {
    auto knull = realize_k(a).nullspace_basis();
    int d = a.spec()->dim();
    std::vector<DMatrix> chosen;
    std::optional<DMatrix> stack;
    long target = a.cols() - rank(a);
    for (const auto& kvec : knull) {
        if (static_cast<long>(chosen.size()) == target) break;
        RatMatrix col(a.cols() * d, 1);
        for (long i = 0; i < a.cols() * d; ++i) col.at(i, 0) = kvec[static_cast<std::size_t>(i)];
        DMatrix cand = unvec_columns(col, a.spec());
        DMatrix trial = stack ? DMatrix::hstack(*stack, cand) : cand;
        if (rank(trial) == static_cast<long>(chosen.size()) + 1) {
            chosen.push_back(cand);
            stack = trial;
        }
    }
    if (static_cast<long>(chosen.size()) != target)
        throw error("kernel basis extraction came up short (should be impossible)");
    return chosen;
}

/// Smallest m with A^m = 0, or nullopt if A is not nilpotent.
inline std::optional<long> nilpotency_index(const DMatrix& a) {
    if (a.rows() != a.cols()) throw shape_error("nilpotency of a non-square matrix");
    if (a.is_zero()) return 1;
    DMatrix p = a;
    for (long m = 1; m <= a.rows(); ++m) {
        if (p.is_zero()) return m;
        p = p * a;
    }
    return p.is_zero() ? std::optional<long>(a.rows() + 1) : std::nullopt;
}

inline bool is_nilpotent(const DMatrix& a) { return nilpotency_index(a).has_value(); }

/// Finite-sum exponential of a verified nilpotent matrix; exact rationals
/// throughout, series truncated at the nilpotency index.
inline DMatrix nilpotent_exp(const DMatrix& a) {
    auto idx = nilpotency_index(a);
    if (!idx) throw nilpotency_error("exp of a non-nilpotent matrix");
    DMatrix sum = DMatrix::identity(a.spec(), a.rows());
    DMatrix term = DMatrix::identity(a.spec(), a.rows());
    Rational fact(1);
    for (long j = 1; j < *idx; ++j) {
        term = term * a;
        fact *= Rational(j);
        sum = sum + fact.inv() * term;
    }
    return sum;
}

/// Finite-sum logarithm of a unipotent matrix; nilpotent_log(nilpotent_exp(A)) = A.
inline DMatrix nilpotent_log(const DMatrix& u) {
    DMatrix n = u - DMatrix::identity(u.spec(), u.rows());
    auto idx = nilpotency_index(n);
    if (!idx) throw nilpotency_error("log of a non-unipotent matrix");
    DMatrix sum(u.spec(), u.rows(), u.rows());
    DMatrix term = DMatrix::identity(u.spec(), u.rows());
    for (long j = 1; j < *idx; ++j) {
        term = term * n;
        Rational c(Rational(j % 2 == 1 ? 1 : -1) / Rational(j));
        sum = sum + c * term;
    }
    return sum;
}

/// Trace of A as a k-linear transformation: sum of trace_k over the diagonal;
/// equals the trace of realize_k(A).
inline Rational trace_k_map(const DMatrix& a) {
    if (a.rows() != a.cols()) throw shape_error("trace of a non-square D-matrix");
    Rational t;
    for (long i = 0; i < a.rows(); ++i) t += trace_k(a.at(i, i));
    return t;
}

/// trace_k_map(A*B) without forming the product.
inline Rational trace_pair(const DMatrix& a, const DMatrix& b) {
    check_same_spec(a.spec(), b.spec());
    if (a.cols() != b.rows() || a.rows() != b.cols()) throw shape_error("trace_pair shape mismatch");
    Rational t;
    for (long i = 0; i < a.rows(); ++i)
        for (long m = 0; m < a.cols(); ++m) {
            const DElem& x = a.at(i, m);
            const DElem& y = b.at(m, i);
            if (!x.is_zero() && !y.is_zero()) t += trace_k(x * y);
        }
    return t;
}

} // namespace orbitlift
