#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "orbitlift/errors.hpp"

namespace orbitlift {

/// Exact rational number. Always stored reduced with positive denominator
/// (mpq canonical form). Serializes as a decimal-free string "p/q", with
/// "/q" omitted when q = 1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT: implicit by design, scalars mix freely
    Rational(long n, long d) {
        if (d == 0) throw division_by_zero_error("rational with zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}

    static Rational from_string(const std::string& s) {
        std::size_t slash = s.find('/');
        try {
            if (slash == std::string::npos) {
                mpz_class n(s);
                return Rational(mpz_class(n));
            }
            mpz_class n(s.substr(0, slash));
            mpz_class d(s.substr(slash + 1));
            if (d == 0) throw division_by_zero_error("rational with zero denominator");
            mpq_class q(n, d);
            q.canonicalize();
            return Rational(std::move(q));
        } catch (const std::invalid_argument&) {
            throw value_error("cannot parse rational: '" + s + "'");
        }
    }

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    /// Exact square root, when this is the square of a rational.
    std::optional<Rational> sqrt_if_square() const {
        if (sgn(v_) < 0) return std::nullopt;
        if (v_ == 0) return Rational(0);
        mpz_class n = v_.get_num(), d = v_.get_den();
        if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
            return std::nullopt;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
        mpq_class q(rn, rd);
        q.canonicalize();
        return Rational(std::move(q));
    }

    /// True iff this is the square of some rational (p·q a perfect square, p/q reduced).
    bool is_square() const { return sqrt_if_square().has_value(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.v_ == 0) throw division_by_zero_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inv() const {
        if (v_ == 0) throw division_by_zero_error("inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

private:
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

} // namespace orbitlift
