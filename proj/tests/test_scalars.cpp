#include <catch2/catch_amalgamated.hpp>

#include "orbitlift/algebra.hpp"
#include "orbitlift/prng.hpp"

using namespace orbitlift;

namespace {

DElem random_elem(Prng& rng, const AlgebraPtr& spec, long bound) {
    std::array<Rational, 4> c{Rational(0), Rational(0), Rational(0), Rational(0)};
    for (int i = 0; i < spec->dim(); ++i) c[i] = rng.rational(bound);
    return DElem(spec, std::move(c));
}

std::vector<AlgebraPtr> all_specs() {
    return {make_field(), make_quadratic(Rational(-1)), make_quadratic(Rational(5)),
            make_quaternion(Rational(-1), Rational(-1))};
}

} // namespace

TEST_CASE("rational basics") {
    Rational r(6, -4);
    CHECK(r.str() == "-3/2");
    CHECK(r.den() == 2);
    CHECK(Rational::from_string("-3/2") == r);
    CHECK(Rational::from_string("7").str() == "7");
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 0), division_by_zero_error);
    CHECK_THROWS_AS(Rational(1).operator/(Rational(0)), division_by_zero_error);
    CHECK(Rational(9, 4).is_square());
    CHECK(*Rational(9, 4).sqrt_if_square() == Rational(3, 2));
    CHECK_FALSE(Rational(2).is_square());
    CHECK_FALSE(Rational(-4).is_square());
    CHECK_FALSE(Rational(4, 9).sqrt_if_square().value() != Rational(2, 3));
}

TEST_CASE("algebra spec validation") {
    CHECK_THROWS_AS(make_quadratic(Rational(4)), value_error);
    CHECK_THROWS_AS(make_quadratic(Rational(4, 9)), value_error);
    CHECK_THROWS_AS(make_quadratic(Rational(0)), value_error);
    CHECK_NOTHROW(make_quadratic(Rational(-1)));
    CHECK_NOTHROW(make_quadratic(Rational(5)));
    CHECK_NOTHROW(make_quadratic(Rational(2, 3)));
    CHECK_THROWS_AS(make_quaternion(Rational(0), Rational(1)), value_error);
    CHECK(make_field()->dim() == 1);
    CHECK(make_quadratic(Rational(5))->dim() == 2);
    CHECK(make_quaternion(Rational(-1), Rational(-1))->dim() == 4);
}

TEST_CASE("basis multiplication in (-1,-1|Q)") {
    auto H = make_quaternion(Rational(-1), Rational(-1));
    DElem one = DElem::one(H), i = DElem::basis(H, 1), j = DElem::basis(H, 2), k = DElem::basis(H, 3);

    // (1+i)(1+j) = 1 + i + j + ij
    DElem lhs = (one + i) * (one + j);
    CHECK(lhs == one + i + j + k);

    CHECK(i * i == -one);
    CHECK(j * j == -one);
    CHECK(i * j == k);
    CHECK(j * i == -k);
    CHECK(k * k == -one);
}

TEST_CASE("anti-commutation i*j = -(j*i) in any quaternion algebra") {
    for (auto [a, b] : {std::pair<long, long>{-1, -1}, {2, 3}, {-1, 5}, {1, -1}}) {
        auto H = make_quaternion(Rational(a), Rational(b));
        DElem i = DElem::basis(H, 1), j = DElem::basis(H, 2);
        CHECK(i * j == -(j * i));
    }
}

TEST_CASE("mul requires matching specs") {
    auto f = make_field();
    auto q = make_quadratic(Rational(5));
    CHECK_THROWS_AS(DElem::one(f) * DElem::one(q), spec_mismatch_error);
}

TEST_CASE("conjugation") {
    auto f = make_field();
    CHECK(conj(DElem(f, Rational(3, 2))) == DElem(f, Rational(3, 2)));

    auto q = make_quadratic(Rational(7));
    DElem x(q, {Rational(1), Rational(2), Rational(0), Rational(0)}); // 1 + 2 sqrt(7)
    CHECK(conj(x) == DElem(q, {Rational(1), Rational(-2), Rational(0), Rational(0)}));

    auto H = make_quaternion(Rational(-1), Rational(-1));
    DElem i = DElem::basis(H, 1), j = DElem::basis(H, 2);
    CHECK(conj(i * j) == conj(j) * conj(i));
    CHECK(conj(i * j) == j * i);
    CHECK(conj(i * j) == -(i * j));
}

TEST_CASE("conj is an involutive anti-automorphism (randomized)") {
    Prng rng(2024);
    for (const auto& spec : all_specs()) {
        for (int it = 0; it < 200; ++it) {
            DElem x = random_elem(rng, spec, 10), y = random_elem(rng, spec, 10);
            CHECK(conj(x * y) == conj(y) * conj(x));
            CHECK(conj(conj(x)) == x);
        }
    }
}

TEST_CASE("inverses") {
    auto f = make_field();
    CHECK(inv(DElem(f, Rational(2))) == DElem(f, Rational(1, 2)));

    auto q = make_quadratic(Rational(7));
    DElem s = DElem::basis(q, 1); // sqrt(7)
    CHECK(inv(s) == DElem(q, {Rational(0), Rational(1, 7), Rational(0), Rational(0)}));

    auto H = make_quaternion(Rational(-1), Rational(-1));
    DElem i = DElem::basis(H, 1);
    CHECK(inv(i) == -i);

    CHECK_THROWS_AS(inv(DElem::zero(f)), division_by_zero_error);
}

TEST_CASE("split quaternion spec: zero-norm element is non-invertible") {
    auto S = make_quaternion(Rational(1), Rational(-1)); // split: norm(1+u) = 1 - 1 = 0
    DElem x = DElem::one(S) + DElem::basis(S, 1);
    CHECK(reduced_norm(x).is_zero());
    CHECK_THROWS_AS(inv(x), non_invertible_error);
    // elements of nonzero norm still invert fine in a split spec
    DElem y = DElem(S, Rational(2)) + DElem::basis(S, 1);
    CHECK(y * inv(y) == DElem::one(S));
}

TEST_CASE("x * inv(x) = 1 (randomized, 1000 per spec)") {
    Prng rng(77);
    for (const auto& spec : all_specs()) {
        int done = 0;
        while (done < 1000) {
            DElem x = random_elem(rng, spec, 10);
            if (x.is_zero() || reduced_norm(x).is_zero()) continue;
            CHECK(x * inv(x) == DElem::one(spec));
            CHECK(inv(x) * x == DElem::one(spec));
            ++done;
        }
    }
}

TEST_CASE("trace_k") {
    auto f = make_field();
    CHECK(trace_k(DElem(f, Rational(5))) == Rational(5));

    auto q = make_quadratic(Rational(7));
    DElem x(q, {Rational(3), Rational(4), Rational(0), Rational(0)}); // 3 + 4 sqrt(7)
    CHECK(trace_k(x) == Rational(6));

    // trace of left multiplication by 2+u on the quaternions, from its 4x4 matrix
    auto H = make_quaternion(Rational(-1), Rational(-1));
    DElem z = DElem(H, Rational(2)) + DElem::basis(H, 1);
    auto m = left_mult_matrix(z);
    Rational diag_sum;
    for (int i = 0; i < 4; ++i) diag_sum += m[static_cast<std::size_t>(i) * 4 + i];
    CHECK(diag_sum == Rational(8));
    CHECK(trace_k(z) == Rational(8));
}

TEST_CASE("trace_k(xy) = trace_k(yx) (randomized)") {
    Prng rng(31337);
    for (const auto& spec : all_specs())
        for (int it = 0; it < 300; ++it) {
            DElem x = random_elem(rng, spec, 10), y = random_elem(rng, spec, 10);
            CHECK(trace_k(x * y) == trace_k(y * x));
        }
}

TEST_CASE("multiplication is associative and distributes (randomized)") {
    Prng rng(9);
    for (const auto& spec : all_specs())
        for (int it = 0; it < 200; ++it) {
            DElem x = random_elem(rng, spec, 6), y = random_elem(rng, spec, 6), z = random_elem(rng, spec, 6);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x * DElem::one(spec) == x);
        }
}
