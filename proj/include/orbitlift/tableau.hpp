#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitlift/hermitian.hpp"
#include "orbitlift/sl2_triple.hpp"

namespace orbitlift {

// ---------------------------------------------------------------------------
// Partitions
// ---------------------------------------------------------------------------

/// Weakly decreasing positive parts.
using Partition = std::vector<long>;

inline bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

inline long partition_total(const Partition& p) {
    long s = 0;
    for (long x : p) s += x;
    return s;
}

/// Exponential notation: strictly decreasing (part, multiplicity) pairs.
inline std::vector<std::pair<long, long>> exponential_form(const Partition& p) {
    std::vector<std::pair<long, long>> out;
    for (long x : p) {
        if (!out.empty() && out.back().first == x)
            ++out.back().second;
        else
            out.emplace_back(x, 1);
    }
    return out;
}

/// p <= q in dominance order (prefix sums; requires equal totals).
inline bool dominance_leq(const Partition& p, const Partition& q) {
    if (partition_total(p) != partition_total(q)) return false;
    long sp = 0, sq = 0;
    std::size_t n = std::max(p.size(), q.size());
    for (std::size_t i = 0; i < n; ++i) {
        sp += i < p.size() ? p[i] : 0;
        sq += i < q.size() ? q[i] : 0;
        if (sp > sq) return false;
    }
    return true;
}

inline std::string partition_str(const Partition& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + "]";
}

// ---------------------------------------------------------------------------
// The fixed invariant bilinear forms (.,.)_m on k^m
// ---------------------------------------------------------------------------

/// The m-dimensional irreducible sl2 action on k^m in the weight basis
/// {v0, Yv0, ..., Y^{m-1}v0}: e raises with rate i(m-i), f lowers with rate
/// 1, h is diagonal with weights m-1-2i.
inline void standard_sl2_rep(long m, RatMatrix& e, RatMatrix& h, RatMatrix& f) {
    e = RatMatrix(m, m);
    h = RatMatrix(m, m);
    f = RatMatrix(m, m);
    for (long i = 0; i < m; ++i) {
        h.at(i, i) = m - 1 - 2 * i;
        if (i + 1 < m) f.at(i + 1, i) = 1;
        if (i >= 1) e.at(i - 1, i) = Rational(i * (m - i));
    }
}

/// The invariant bilinear form on k^m, found by solving the invariance
/// system (M f1, f2) + (f1, M f2) = 0 for M in {e, h, f} and normalized so
/// (v0, Y^{m-1} v0) = 1. Unique up to scalar, so the solve pins it exactly.
inline RatMatrix invariant_form(long m) {
    if (m < 1) throw value_error("invariant_form needs m >= 1");
    RatMatrix e, h, f;
    standard_sl2_rep(m, e, h, f);
    // unknown F (m x m), equations M^t F + F M = 0, three generators stacked
    RatMatrix sys(3 * m * m, m * m);
    long block = 0;
    for (const RatMatrix* gen : {&e, &h, &f}) {
        const RatMatrix mt = gen->transpose();
        for (long r = 0; r < m; ++r)
            for (long c = 0; c < m; ++c) {
                long row = block * m * m + r * m + c;
                // (M^t F)_{rc} = sum_s M^t_{rs} F_{sc};  (F M)_{rc} = sum_s F_{rs} M_{sc}
                for (long s = 0; s < m; ++s) {
                    sys.at(row, s * m + c) += mt.at(r, s);
                    sys.at(row, r * m + s) += gen->at(s, c);
                }
            }
        ++block;
    }
    auto null = sys.nullspace_basis();
    if (null.size() != 1) throw error("invariant form solver: solution space is not a line");
    RatMatrix F(m, m);
    for (long r = 0; r < m; ++r)
        for (long c = 0; c < m; ++c) F.at(r, c) = null[0][static_cast<std::size_t>(r * m + c)];
    const Rational& pin = F.at(0, m - 1);
    if (pin.is_zero()) throw error("invariant form solver: cannot normalize (v0, Y^{m-1}v0)");
    Rational s = pin.inv();
    for (long r = 0; r < m; ++r)
        for (long c = 0; c < m; ++c) F.at(r, c) *= s;
    return F;
}

/// Cache of the forms (.,.)_m.
class Sl2FormTable {
public:
    const RatMatrix& get(long m) {
        auto it = cache_.find(m);
        if (it == cache_.end()) it = cache_.emplace(m, invariant_form(m)).first;
        return it->second;
    }

private:
    std::map<long, RatMatrix> cache_;
};

// ---------------------------------------------------------------------------
// Sesquilinear Young tableaux
// ---------------------------------------------------------------------------

/// One distinct part length with its attached eps_j-Hermitian form.
struct TableauRow {
    long t;       // part length
    long mult;    // multiplicity i_j = dim of the attached form
    int eps;      // sign of the attached form
    DMatrix gram; // mult x mult attached Gram matrix
};

class YoungTableau {
public:
    YoungTableau(AlgebraPtr algebra, std::vector<TableauRow> rows)
        : algebra_(std::move(algebra)), rows_(std::move(rows)) {
        long prev = 0;
        for (std::size_t j = 0; j < rows_.size(); ++j) {
            const TableauRow& r = rows_[j];
            if (r.t < 1) throw value_error("part lengths must be >= 1");
            if (j > 0 && r.t >= prev) throw value_error("part lengths must be strictly decreasing");
            prev = r.t;
            if (r.mult < 1) throw value_error("multiplicities must be >= 1");
            if (r.gram.rows() != r.mult) throw shape_error("attached form has the wrong dimension");
            attached_.push_back(make_module(algebra_, r.eps, r.gram)); // validates the form
        }
    }

    const AlgebraPtr& algebra() const { return algebra_; }
    const std::vector<TableauRow>& rows() const { return rows_; }
    const ModulePtr& attached_module(std::size_t j) const { return attached_[j]; }

    Partition partition() const {
        Partition p;
        for (const auto& r : rows_)
            for (long i = 0; i < r.mult; ++i) p.push_back(r.t);
        return p;
    }

    /// Dimension over D of the module the tableau builds.
    long dim() const {
        long d = 0;
        for (const auto& r : rows_) d += r.t * r.mult;
        return d;
    }

private:
    AlgebraPtr algebra_;
    std::vector<TableauRow> rows_;
    std::vector<ModulePtr> attached_;
};

/// (-1)^{t_j - 1} eps_j = epsilon for every row.
inline bool is_admissible(const YoungTableau& g, int epsilon) {
    for (const auto& r : g.rows()) {
        int sign = (r.t - 1) % 2 == 0 ? r.eps : -r.eps;
        if (sign != epsilon) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Building the module of a tableau
// ---------------------------------------------------------------------------

/// Where row j landed inside the built module.
struct BlockLayout {
    long t;
    long mult;
    int eps;
    long base; // first coordinate index of the block
};

/// Output of build_module: (V, B) together with the standard sl2 triple
/// acting as identity (x) {e,h,f} on each row block, plus enough layout to
/// address the isotypic weight spaces by coordinates.
struct BuiltModule {
    ModulePtr module;
    Sl2Triple triple;
    std::vector<BlockLayout> layout;

    long index(std::size_t j, long copy, long widx) const {
        return layout[j].base + copy * layout[j].t + widx;
    }

    /// Coordinate indices of V^{gamma, t_j}_w (empty when w is not a weight
    /// of the j-th block).
    std::vector<long> isotypic_weight_indices(std::size_t j, long w) const {
        const BlockLayout& b = layout[j];
        std::vector<long> idx;
        long widx2 = b.t - 1 - w;
        if (widx2 < 0 || widx2 % 2 != 0) return idx;
        long widx = widx2 / 2;
        if (widx >= b.t) return idx;
        for (long a = 0; a < b.mult; ++a) idx.push_back(index(j, a, widx));
        return idx;
    }

    /// Coordinate indices of the full weight space V_w.
    std::vector<long> weight_indices(long w) const {
        std::vector<long> idx;
        for (std::size_t j = 0; j < layout.size(); ++j)
            for (long i : isotypic_weight_indices(j, w)) idx.push_back(i);
        return idx;
    }

    std::vector<long> weights() const {
        std::vector<long> ws;
        long tmax = layout.empty() ? 1 : layout.front().t;
        for (long w = tmax - 1; w >= -(tmax - 1); --w)
            if (!weight_indices(w).empty()) ws.push_back(w);
        return ws;
    }
};

/// V = (+)_j attached_j (x) k^{t_j} with B = B_j (x) (.,.)_{t_j} blockwise,
/// X = id (x) e, H = id (x) h, Y = id (x) f. Basis inside a block: copy a,
/// then weight vector Y^i v0, so the Gram is anti-diagonal by weight.
inline BuiltModule build_module(const YoungTableau& g, int epsilon) {
    if (!is_admissible(g, epsilon))
        throw admissibility_error("tableau is not admissible for epsilon = " + std::to_string(epsilon));
    const AlgebraPtr& spec = g.algebra();
    long n = g.dim();
    DMatrix gram(spec, n, n), X(spec, n, n), H(spec, n, n), Y(spec, n, n);
    Sl2FormTable forms;
    std::vector<BlockLayout> layout;
    long base = 0;
    for (const auto& r : g.rows()) {
        layout.push_back(BlockLayout{r.t, r.mult, r.eps, base});
        const RatMatrix& F = forms.get(r.t);
        RatMatrix e, h, f;
        standard_sl2_rep(r.t, e, h, f);
        for (long a = 0; a < r.mult; ++a) {
            for (long b = 0; b < r.mult; ++b) {
                const DElem& gab = r.gram.at(a, b);
                if (gab.is_zero()) continue;
                for (long i = 0; i < r.t; ++i)
                    for (long l = 0; l < r.t; ++l) {
                        const Rational& s = F.at(i, l);
                        if (!s.is_zero())
                            gram.at(base + a * r.t + i, base + b * r.t + l) = gab * s;
                    }
            }
            for (long i = 0; i < r.t; ++i) {
                H.at(base + a * r.t + i, base + a * r.t + i) = DElem(spec, Rational(r.t - 1 - 2 * i));
                if (i + 1 < r.t) {
                    X.at(base + a * r.t + i, base + a * r.t + i + 1) = DElem(spec, e.at(i, i + 1));
                    Y.at(base + a * r.t + i + 1, base + a * r.t + i) = DElem(spec, Rational(1));
                }
            }
        }
        base += r.t * r.mult;
    }
    ModulePtr module = make_module(spec, epsilon, std::move(gram));
    Sl2Triple triple = make_sl2_triple(module, std::move(X), std::move(H), std::move(Y));
    return BuiltModule{module, std::move(triple), std::move(layout)};
}

// ---------------------------------------------------------------------------
// Jordan type
// ---------------------------------------------------------------------------

/// Partition of the Jordan block sizes of a nilpotent map, from the rank
/// sequence: #parts >= m equals rank(X^{m-1}) - rank(X^m).
inline Partition jordan_type(const DMatrix& x) {
    if (!is_nilpotent(x)) throw nilpotency_error("jordan_type of a non-nilpotent matrix");
    long n = x.rows();
    std::vector<long> rk; // rk[m] = rank(X^m)
    rk.push_back(n);
    DMatrix p = DMatrix::identity(x.spec(), n);
    for (long m = 1; m <= n; ++m) {
        p = p * x;
        rk.push_back(rank(p));
        if (rk.back() == 0) break;
    }
    while (static_cast<long>(rk.size()) <= n + 1) rk.push_back(0);
    Partition parts;
    for (long m = n; m >= 1; --m) {
        long ge_m = rk[static_cast<std::size_t>(m - 1)] - rk[static_cast<std::size_t>(m)];
        long ge_m1 = m < n ? rk[static_cast<std::size_t>(m)] - rk[static_cast<std::size_t>(m + 1)] : 0;
        long exactly_m = ge_m - ge_m1;
        for (long c = 0; c < exactly_m; ++c) parts.push_back(m);
    }
    return parts;
}

// ---------------------------------------------------------------------------
// Theta lift of a tableau
// ---------------------------------------------------------------------------

/// Default attached form of dimension dim with sign eps: identity when
/// eps = +1; for eps = -1 the anti-diagonal hyperbolic form over k (dim must
/// be even there), and the diagonal imaginary form over the other algebras.
inline DMatrix default_eps_form(const AlgebraPtr& spec, int eps, long dim) {
    if (eps == 1) return DMatrix::identity(spec, dim);
    DMatrix m(spec, dim, dim);
    if (spec->kind() == AlgebraKind::Field) {
        if (dim % 2 != 0)
            throw value_error("no nondegenerate antisymmetric form of odd dimension over k");
        for (long i = 0; i < dim / 2; ++i) {
            m.at(i, dim - 1 - i) = DElem::one(spec);
            m.at(dim - 1 - i, i) = -DElem::one(spec);
        }
        return m;
    }
    for (long i = 0; i < dim; ++i) m.at(i, i) = DElem::basis(spec, 1); // sqrt(delta) resp. u
    return m;
}

struct LiftedTableau {
    YoungTableau tableau;
    long s;           // multiplicity of the appended length-1 column rows
    bool merged_rows; // a lifted length collided with an existing one (see lift notes)
};

/// d~ = [(t_1+1)^{i_1}, ..., (t_l+1)^{i_l}, 1^s] with s = dim V~ - dim V -
/// sum i_j; each lifted row keeps its attached form, the new 1-row carries a
/// (-epsilon)-Hermitian form of dimension s (caller-supplied or default).
/// The output is admissible for -epsilon.
inline LiftedTableau theta_lift_tableau(const YoungTableau& g, int epsilon, long dim_vtilde,
                                        std::optional<DMatrix> new_row_form = std::nullopt) {
    if (!is_admissible(g, epsilon))
        throw admissibility_error("theta lift of a non-admissible tableau");
    long sum_mult = 0;
    for (const auto& r : g.rows()) sum_mult += r.mult;
    long s = dim_vtilde - g.dim() - sum_mult;
    if (s < 0)
        throw value_error("dim V~ too small: s = " + std::to_string(s) + " < 0");
    int eps_tilde = -epsilon;
    std::vector<TableauRow> rows;
    for (const auto& r : g.rows()) rows.push_back(TableauRow{r.t + 1, r.mult, r.eps, r.gram});
    if (s > 0) {
        DMatrix f = new_row_form ? *new_row_form : default_eps_form(g.algebra(), eps_tilde, s);
        if (f.rows() != s) throw shape_error("new-row form must have dimension s");
        rows.push_back(TableauRow{1, s, eps_tilde, std::move(f)});
    }
    // Merge equal part lengths (orthogonal direct sum) if they ever collide;
    // unreachable for strictly decreasing inputs since every length shifts
    // by one and the appended length is 1 < t_l + 1.
    bool merged = false;
    std::vector<TableauRow> merged_rows;
    for (auto& r : rows) {
        if (!merged_rows.empty() && merged_rows.back().t == r.t) {
            TableauRow& prev = merged_rows.back();
            if (prev.eps != r.eps)
                throw value_error("colliding part lengths carry forms of opposite sign");
            long n1 = prev.mult, n2 = r.mult;
            DMatrix sum(g.algebra(), n1 + n2, n1 + n2);
            for (long i = 0; i < n1; ++i)
                for (long j = 0; j < n1; ++j) sum.at(i, j) = prev.gram.at(i, j);
            for (long i = 0; i < n2; ++i)
                for (long j = 0; j < n2; ++j) sum.at(n1 + i, n1 + j) = r.gram.at(i, j);
            prev.mult += r.mult;
            prev.gram = std::move(sum);
            merged = true;
        } else {
            merged_rows.push_back(std::move(r));
        }
    }
    YoungTableau lifted(g.algebra(), std::move(merged_rows));
    if (!is_admissible(lifted, eps_tilde)) throw error("lifted tableau failed its own sign rule");
    return LiftedTableau{std::move(lifted), s, merged};
}

// ---------------------------------------------------------------------------
// Certificate-based equivalence
// ---------------------------------------------------------------------------

/// True iff the partitions and signs match and every certificate P_j is an
/// isometry between the attached forms: conj-transpose(P_j) gram2_j P_j =
/// gram1_j. Never throws; any failure is just false.
inline bool tableau_equivalent(const YoungTableau& g1, const YoungTableau& g2,
                               const std::vector<DMatrix>& certificates) {
    try {
        if (*g1.algebra() != *g2.algebra()) return false;
        if (g1.rows().size() != g2.rows().size()) return false;
        if (certificates.size() != g1.rows().size()) return false;
        for (std::size_t j = 0; j < g1.rows().size(); ++j) {
            const TableauRow& r1 = g1.rows()[j];
            const TableauRow& r2 = g2.rows()[j];
            if (r1.t != r2.t || r1.mult != r2.mult || r1.eps != r2.eps) return false;
            const DMatrix& p = certificates[j];
            if (p.rows() != r1.mult || p.cols() != r1.mult) return false;
            if (p.conj_transpose() * r2.gram * p != r1.gram) return false;
        }
        return true;
    } catch (const error&) {
        return false;
    }
}

} // namespace orbitlift
