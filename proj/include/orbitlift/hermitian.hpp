#pragma once

#include <memory>
#include <vector>

#include "orbitlift/dmatrix.hpp"

namespace orbitlift {

/// (V, B): right D-module of dimension dim with a nondegenerate
/// epsilon-Hermitian form, stored as its Gram matrix. The Hermitian
/// condition conj-transpose(gram) = epsilon * gram and nondegeneracy are
/// constructor-time errors, never latent state.
class HermitianModule {
public:
    HermitianModule(AlgebraPtr algebra, int epsilon, DMatrix gram)
        : algebra_(std::move(algebra)), epsilon_(epsilon), gram_(std::move(gram)) {
        if (epsilon_ != 1 && epsilon_ != -1) throw value_error("epsilon must be +1 or -1");
        if (gram_.rows() != gram_.cols()) throw shape_error("Gram matrix must be square");
        check_same_spec(algebra_, gram_.spec());
        DMatrix ct = gram_.conj_transpose();
        if (ct != Rational(epsilon_) * gram_)
            throw value_error("Gram matrix is not epsilon-Hermitian for epsilon = " +
                              std::to_string(epsilon_));
        try {
            gram_inv_ = inverse(gram_);
        } catch (const singular_error&) {
            throw singular_error("degenerate Gram matrix");
        }
    }

    const AlgebraPtr& algebra() const { return algebra_; }
    int epsilon() const { return epsilon_; }
    long dim() const { return gram_.rows(); }
    const DMatrix& gram() const { return gram_; }
    const DMatrix& gram_inv() const { return gram_inv_; }

    /// B(v, w) for coordinate columns v, w.
    DElem form(const DMatrix& v, const DMatrix& w) const {
        DMatrix r = v.conj_transpose() * gram_ * w;
        return r.at(0, 0);
    }

    friend bool operator==(const HermitianModule& a, const HermitianModule& b) {
        return a.epsilon_ == b.epsilon_ && a.gram_ == b.gram_;
    }

private:
    AlgebraPtr algebra_;
    int epsilon_;
    DMatrix gram_;
    DMatrix gram_inv_;
};

using ModulePtr = std::shared_ptr<const HermitianModule>;

inline ModulePtr make_module(AlgebraPtr algebra, int epsilon, DMatrix gram) {
    return std::make_shared<const HermitianModule>(std::move(algebra), epsilon, std::move(gram));
}

inline void check_same_module(const ModulePtr& a, const ModulePtr& b) {
    if (a == b) return;
    if (!a || !b || !(*a == *b)) throw spec_mismatch_error("operands live on different modules");
}

/// T* for T : source -> target, defined by B_target(Tv, w) = B_source(v, T*w);
/// concretely T* = gram_source^{-1} conj-transpose(T) gram_target.
inline DMatrix adjoint(const DMatrix& t, const HermitianModule& source, const HermitianModule& target) {
    if (t.rows() != target.dim() || t.cols() != source.dim())
        throw shape_error("adjoint: map shape does not match source/target modules");
    check_same_spec(t.spec(), source.algebra());
    check_same_spec(t.spec(), target.algebra());
    return source.gram_inv() * t.conj_transpose() * target.gram();
}

inline DMatrix adjoint(const DMatrix& t, const ModulePtr& source, const ModulePtr& target) {
    return adjoint(t, *source, *target);
}

inline DMatrix adjoint(const DMatrix& t, const ModulePtr& v) { return adjoint(t, *v, *v); }

/// Membership in g = {T : T* = -T}.
inline bool is_lie_algebra_element(const DMatrix& t, const ModulePtr& v) {
    if (t.rows() != v->dim() || t.cols() != v->dim()) throw shape_error("expected a square map on V");
    return adjoint(t, v) == -t;
}

/// Element of the isometry Lie algebra; T* = -T is validated on construction.
struct LieElement {
    ModulePtr module;
    DMatrix mat;
};

inline LieElement lie_element(const ModulePtr& v, DMatrix t) {
    if (!is_lie_algebra_element(t, v))
        throw membership_error("matrix is not in the isometry Lie algebra (T* != -T)");
    return LieElement{v, std::move(t)};
}

inline DMatrix bracket(const DMatrix& a, const DMatrix& b) { return a * b - b * a; }

inline LieElement bracket(const LieElement& a, const LieElement& b) {
    check_same_module(a.module, b.module);
    return LieElement{a.module, bracket(a.mat, b.mat)};
}

/// kappa(T, S) = Tr(T* S)/2 as a k-linear trace. For validated Lie elements
/// T* = -T, so this is -Tr(TS)/2, computed without forming the product.
inline Rational kappa(const LieElement& t, const LieElement& s) {
    check_same_module(t.module, s.module);
    return Rational(-1, 2) * trace_pair(t.mat, s.mat);
}

/// Same value computed from the definition; kept separate as a cross-check.
inline Rational kappa_from_adjoint(const ModulePtr& v, const DMatrix& t, const DMatrix& s) {
    return Rational(1, 2) * trace_k_map(adjoint(t, v) * s);
}

namespace detail {

/// k-basis of {x in D : conj(x) = -eps * x}.
inline std::vector<DElem> skew_scalar_basis(const AlgebraPtr& spec, int eps) {
    std::vector<DElem> out;
    if (eps == -1) {
        out.push_back(DElem::one(spec)); // conj-fixed scalars: k itself
        return out;
    }
    for (int i = 1; i < spec->dim(); ++i) out.push_back(DElem::basis(spec, i));
    return out;
}

} // namespace detail

/// k-basis of the isometry Lie algebra g = {T : T* + T = 0}. The solution
/// set is exactly gram^{-1} * {A : conj-transpose(A) = -eps * A}, which the
/// second factor parameterizes entry by entry.
inline std::vector<LieElement> lie_algebra_basis(const ModulePtr& v) {
    const AlgebraPtr& spec = v->algebra();
    long n = v->dim();
    int eps = v->epsilon();
    std::vector<LieElement> out;
    for (long p = 0; p < n; ++p) {
        for (const DElem& x : detail::skew_scalar_basis(spec, eps)) {
            DMatrix a(spec, n, n);
            a.at(p, p) = x;
            out.push_back(lie_element(v, v->gram_inv() * a));
        }
        for (long q = p + 1; q < n; ++q)
            for (int i = 0; i < spec->dim(); ++i) {
                DElem d = DElem::basis(spec, i);
                DMatrix a(spec, n, n);
                a.at(p, q) = d;
                a.at(q, p) = Rational(-eps) * conj(d);
                out.push_back(lie_element(v, v->gram_inv() * a));
            }
    }
    return out;
}

/// dim_k of g from the classical closed forms, for cross-checking.
inline long classical_lie_dim(const ModulePtr& v) {
    long n = v->dim();
    switch (v->algebra()->kind()) {
        case AlgebraKind::Field:
            return v->epsilon() == 1 ? n * (n - 1) / 2 : n * (n + 1) / 2;
        case AlgebraKind::Quadratic:
            return n * n;
        default:
            return v->epsilon() == 1 ? n * (2 * n + 1) : n * (2 * n - 1);
    }
}

/// Independent route: assemble the k-linear system T* + T = 0 on the entry
/// coordinates and take its nullspace. Cubic in n^2 dim_k(D); used as a test
/// oracle against lie_algebra_basis.
inline std::vector<DMatrix> lie_algebra_basis_nullspace(const ModulePtr& v) {
    const AlgebraPtr& spec = v->algebra();
    long n = v->dim();
    int d = spec->dim();
    long nvars = n * n * d;
    RatMatrix sys(nvars, nvars);
    long col = 0;
    for (long p = 0; p < n; ++p)
        for (long q = 0; q < n; ++q)
            for (int i = 0; i < d; ++i, ++col) {
                DMatrix t(spec, n, n);
                t.at(p, q) = DElem::basis(spec, i);
                DMatrix img = adjoint(t, v) + t;
                long row = 0;
                for (long r = 0; r < n; ++r)
                    for (long c = 0; c < n; ++c)
                        for (int j = 0; j < d; ++j, ++row) sys.at(row, col) = img.at(r, c).coord(j);
            }
    std::vector<DMatrix> out;
    for (const auto& vvec : sys.nullspace_basis()) {
        DMatrix t(spec, n, n);
        long idx = 0;
        for (long p = 0; p < n; ++p)
            for (long q = 0; q < n; ++q) {
                std::array<Rational, 4> coords{Rational(0), Rational(0), Rational(0), Rational(0)};
                for (int i = 0; i < d; ++i, ++idx) coords[i] = vvec[static_cast<std::size_t>(idx)];
                t.at(p, q) = DElem(spec, std::move(coords));
            }
        out.push_back(std::move(t));
    }
    return out;
}

/// Flatten to the k-coordinate row used for span/independence bookkeeping.
inline std::vector<Rational> flatten_k(const DMatrix& m) {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(m.rows()) * m.cols() * m.spec()->dim());
    for (long r = 0; r < m.rows(); ++r)
        for (long c = 0; c < m.cols(); ++c)
            for (int i = 0; i < m.spec()->dim(); ++i) out.push_back(m.at(r, c).coord(i));
    return out;
}

/// k-dimension of the span of the given matrices.
inline long span_dim_k(const std::vector<DMatrix>& mats) {
    if (mats.empty()) return 0;
    std::size_t w = flatten_k(mats[0]).size();
    RatMatrix m(static_cast<long>(mats.size()), static_cast<long>(w));
    for (std::size_t r = 0; r < mats.size(); ++r) {
        auto row = flatten_k(mats[r]);
        for (std::size_t c = 0; c < w; ++c) m.at(static_cast<long>(r), static_cast<long>(c)) = row[c];
    }
    return m.rank();
}

} // namespace orbitlift
