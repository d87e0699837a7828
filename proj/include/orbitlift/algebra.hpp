#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "orbitlift/errors.hpp"
#include "orbitlift/rational.hpp"

namespace orbitlift {

enum class AlgebraKind { Field, Quadratic, Quaternion };

/// One of the three involutive division algebras over k = Q: k itself, a
/// quadratic extension k(sqrt(delta)), or a quaternion algebra (a,b|k) with
/// basis {1, u, v, uv}, u^2 = a, v^2 = b, uv = -vu. The conjugation fixes 1
/// and negates the rest. A split (a,b) is accepted; inv() reports the zero
/// norm elements it then has (see non_invertible_error).
class AlgebraSpec {
public:
    static AlgebraSpec field() { return AlgebraSpec(AlgebraKind::Field, 0, 0); }

    static AlgebraSpec quadratic(const Rational& delta) {
        if (delta.is_zero() || delta.is_square())
            throw value_error("quadratic spec needs a non-square delta, got " + delta.str());
        return AlgebraSpec(AlgebraKind::Quadratic, delta, 0);
    }

    static AlgebraSpec quaternion(const Rational& a, const Rational& b) {
        if (a.is_zero() || b.is_zero())
            throw value_error("quaternion spec needs nonzero structure constants");
        return AlgebraSpec(AlgebraKind::Quaternion, a, b);
    }

    AlgebraKind kind() const { return kind_; }
    int dim() const {
        switch (kind_) {
            case AlgebraKind::Field: return 1;
            case AlgebraKind::Quadratic: return 2;
            default: return 4;
        }
    }
    const Rational& delta() const { return a_; }
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    friend bool operator==(const AlgebraSpec& x, const AlgebraSpec& y) {
        return x.kind_ == y.kind_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const AlgebraSpec& x, const AlgebraSpec& y) { return !(x == y); }

    std::string str() const {
        switch (kind_) {
            case AlgebraKind::Field: return "k";
            case AlgebraKind::Quadratic: return "k(sqrt(" + a_.str() + "))";
            default: return "(" + a_.str() + "," + b_.str() + "|k)";
        }
    }

private:
    AlgebraSpec(AlgebraKind k, Rational a, Rational b) : kind_(k), a_(std::move(a)), b_(std::move(b)) {}
    AlgebraKind kind_;
    Rational a_, b_;
};

using AlgebraPtr = std::shared_ptr<const AlgebraSpec>;

inline AlgebraPtr make_field() { return std::make_shared<const AlgebraSpec>(AlgebraSpec::field()); }
inline AlgebraPtr make_quadratic(const Rational& d) {
    return std::make_shared<const AlgebraSpec>(AlgebraSpec::quadratic(d));
}
inline AlgebraPtr make_quaternion(const Rational& a, const Rational& b) {
    return std::make_shared<const AlgebraSpec>(AlgebraSpec::quaternion(a, b));
}

inline void check_same_spec(const AlgebraPtr& x, const AlgebraPtr& y) {
    if (x == y) return;
    if (!x || !y || *x != *y)
        throw spec_mismatch_error("operands live over different algebra specs");
}

/// Element of D in the basis {1}, {1, sqrt(delta)} or {1, u, v, uv}.
/// Coordinates beyond dim are kept at zero, so one set of quaternion-shaped
/// formulas (with a = delta, b = 0 in the quadratic case) covers all kinds.
class DElem {
public:
    DElem() = default;
    explicit DElem(AlgebraPtr spec) : spec_(std::move(spec)) {}
    DElem(AlgebraPtr spec, Rational scalar) : spec_(std::move(spec)) { c_[0] = std::move(scalar); }
    DElem(AlgebraPtr spec, std::array<Rational, 4> coords) : spec_(std::move(spec)), c_(std::move(coords)) {
        for (int i = spec_->dim(); i < 4; ++i)
            if (!c_[i].is_zero()) throw value_error("coordinate outside the algebra's dimension");
    }

    static DElem zero(const AlgebraPtr& s) { return DElem(s); }
    static DElem one(const AlgebraPtr& s) { return DElem(s, Rational(1)); }
    /// Basis element 1, u, v or uv (index 0..dim-1).
    static DElem basis(const AlgebraPtr& s, int i) {
        DElem e(s);
        if (i < 0 || i >= s->dim()) throw value_error("basis index out of range");
        e.c_[i] = 1;
        return e;
    }

    const AlgebraPtr& spec() const { return spec_; }
    const Rational& coord(int i) const { return c_[i]; }
    const std::array<Rational, 4>& coords() const { return c_; }

    bool is_zero() const {
        return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
    }
    bool is_one() const {
        return c_[0] == Rational(1) && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
    }

    DElem operator-() const {
        DElem r(spec_);
        for (int i = 0; i < 4; ++i) r.c_[i] = -c_[i];
        return r;
    }

    friend DElem operator+(const DElem& x, const DElem& y) {
        check_same_spec(x.spec_, y.spec_);
        DElem r(x.spec_);
        for (int i = 0; i < 4; ++i) r.c_[i] = x.c_[i] + y.c_[i];
        return r;
    }
    friend DElem operator-(const DElem& x, const DElem& y) {
        check_same_spec(x.spec_, y.spec_);
        DElem r(x.spec_);
        for (int i = 0; i < 4; ++i) r.c_[i] = x.c_[i] - y.c_[i];
        return r;
    }

    friend DElem operator*(const DElem& x, const DElem& y) {
        check_same_spec(x.spec_, y.spec_);
        const Rational& a = x.spec_->a();
        const Rational& b = x.spec_->b();
        const auto& p = x.c_;
        const auto& q = y.c_;
        DElem r(x.spec_);
        r.c_[0] = p[0] * q[0] + a * (p[1] * q[1]) + b * (p[2] * q[2]) - a * b * (p[3] * q[3]);
        r.c_[1] = p[0] * q[1] + p[1] * q[0] - b * (p[2] * q[3]) + b * (p[3] * q[2]);
        r.c_[2] = p[0] * q[2] + p[2] * q[0] + a * (p[1] * q[3]) - a * (p[3] * q[1]);
        r.c_[3] = p[0] * q[3] + p[3] * q[0] + p[1] * q[2] - p[2] * q[1];
        return r;
    }

    friend DElem operator*(const DElem& x, const Rational& s) {
        DElem r(x.spec_);
        for (int i = 0; i < 4; ++i) r.c_[i] = x.c_[i] * s;
        return r;
    }
    friend DElem operator*(const Rational& s, const DElem& x) { return x * s; }

    friend bool operator==(const DElem& x, const DElem& y) {
        return *x.spec_ == *y.spec_ && x.c_ == y.c_;
    }
    friend bool operator!=(const DElem& x, const DElem& y) { return !(x == y); }

    std::string str() const {
        static const char* names[4] = {"", "u", "v", "uv"};
        std::string s;
        for (int i = 0; i < spec_->dim(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += c_[i].str();
            s += names[i];
        }
        return s.empty() ? "0" : s;
    }

private:
    AlgebraPtr spec_;
    std::array<Rational, 4> c_{Rational(0), Rational(0), Rational(0), Rational(0)};
};

/// Canonical involutive anti-automorphism: identity on k, the Galois element
/// on k(sqrt(delta)), the main involution on quaternions.
inline DElem conj(const DElem& x) {
    std::array<Rational, 4> c = x.coords();
    for (int i = 1; i < 4; ++i) c[i] = -c[i];
    return DElem(x.spec(), std::move(c));
}

/// Reduced norm x * conj(x), a rational.
inline Rational reduced_norm(const DElem& x) {
    const Rational& a = x.spec()->a();
    const Rational& b = x.spec()->b();
    const auto& c = x.coords();
    return c[0] * c[0] - a * (c[1] * c[1]) - b * (c[2] * c[2]) + a * b * (c[3] * c[3]);
}

inline DElem inv(const DElem& x) {
    if (x.is_zero()) throw division_by_zero_error("inverse of zero in D");
    Rational n = reduced_norm(x);
    if (n.is_zero())
        throw non_invertible_error("zero-norm element of a split quaternion spec: " + x.str());
    return conj(x) * n.inv();
}

/// Trace of left multiplication by x on D as a k-vector space.
inline Rational trace_k(const DElem& x) {
    return Rational(x.spec()->dim()) * x.coord(0);
}

/// dim x dim matrix of left multiplication by x in the basis {1, u, v, uv},
/// row-major. This is the k-realization of a 1x1 D-matrix.
inline std::vector<Rational> left_mult_matrix(const DElem& x) {
    const Rational& a = x.spec()->a();
    const Rational& b = x.spec()->b();
    const auto& c = x.coords();
    int d = x.spec()->dim();
    std::vector<Rational> m(static_cast<std::size_t>(d) * d);
    auto at = [&](int r, int col) -> Rational& { return m[static_cast<std::size_t>(r) * d + col]; };
    at(0, 0) = c[0];
    if (d >= 2) {
        at(0, 1) = a * c[1];
        at(1, 0) = c[1];
        at(1, 1) = c[0];
    }
    if (d == 4) {
        at(0, 2) = b * c[2];
        at(0, 3) = -a * b * c[3];
        at(1, 2) = b * c[3];
        at(1, 3) = -b * c[2];
        at(2, 0) = c[2];
        at(2, 1) = -a * c[3];
        at(2, 2) = c[0];
        at(2, 3) = a * c[1];
        at(3, 0) = c[3];
        at(3, 1) = -c[2];
        at(3, 2) = c[1];
        at(3, 3) = c[0];
    }
    return m;
}

} // namespace orbitlift
