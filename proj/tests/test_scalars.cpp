#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qbundle/matrix.hpp"
#include "qbundle/scalar.hpp"

#include <random>

using namespace qb;

namespace {

Scalar random_scalar(std::mt19937& rng, bool allow_fraction = true) {
    std::uniform_int_distribution<int> coef(-5, 5), deg(0, 4), shift(-6, 6);
    auto poly = [&] {
        std::vector<mpz_class> c;
        int d = deg(rng);
        for (int i = 0; i <= d; ++i) c.emplace_back(coef(rng));
        return Poly(std::move(c));
    };
    Poly n = poly();
    Poly d = allow_fraction ? poly() : Poly(1);
    if (d.is_zero()) d = Poly(1);
    return Scalar::fraction(n, d) * Scalar::u_pow(shift(rng));
}

}  // namespace

TEST_CASE("qint values") {
    CHECK(qint(0).is_zero());
    CHECK(qint(1) == Scalar(1));
    CHECK(qint(2) == Scalar::u_pow(4) + Scalar::u_pow(-4));
    CHECK(qint(-3) == -qint(3));
    // [n] is fixed by (q^n - q^-n) = [n] (q - q^-1)
    for (int n = 1; n <= 6; ++n) {
        Scalar q = Scalar::q();
        CHECK(qint(n) * (q - q.inverse()) == q.pow(n) - q.pow(-n));
    }
}

TEST_CASE("eval_at specializations") {
    CHECK(qint(2).eval_at(1) == 2);
    for (int n = 1; n <= 5; ++n) CHECK(qint(n).eval_at(1) == n);

    // Oracle: the defining quotient evaluated in plain rational arithmetic.
    mpq_class u0(1, 2);
    mpq_class q = u0 * u0 * u0 * u0;
    mpq_class q3 = q * q * q;
    mpq_class expected = (q3 - 1 / q3) / (q - 1 / q);
    CHECK(qint(3).eval_at(u0) == expected);
    CHECK(expected == mpq_class(65793, 256));

    Scalar pole = Scalar::u() / (Scalar::u() - Scalar(1));
    CHECK_THROWS_AS(pole.eval_at(1), PoleError);
    CHECK_THROWS_AS(Scalar::u_pow(-1).eval_at(0), PoleError);
}

TEST_CASE("canonical form makes equality decidable") {
    Scalar u = Scalar::u();
    Scalar a = (u * u - Scalar(1)) / (u - Scalar(1));
    CHECK(a == u + Scalar(1));
    CHECK(a.is_laurent());
    Scalar b = Scalar(2) / (Scalar(-4) * u - Scalar(6));
    CHECK(b.den().lc() > 0);
    CHECK(b == Scalar(-1) / (Scalar(2) * u + Scalar(3)));
    CHECK((u / u).is_one());
}

TEST_CASE("field axioms on random samples") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("specialization is a ring homomorphism") {
    std::mt19937 rng(11);
    const mpq_class u0(2, 3);
    for (int trial = 0; trial < 30; ++trial) {
        Scalar a = random_scalar(rng), b = random_scalar(rng);
        try {
            CHECK((a * b).eval_at(u0) == a.eval_at(u0) * b.eval_at(u0));
            CHECK((a + b).eval_at(u0) == a.eval_at(u0) + b.eval_at(u0));
        } catch (const PoleError&) {
        }
    }
}

TEST_CASE("parse round trip") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        Scalar a = random_scalar(rng);
        CHECK(Scalar::parse(a.to_string()) == a);
    }
    CHECK(Scalar::parse("q") == Scalar::u_pow(4));
    CHECK(Scalar::parse("(u^8 - 1)/u^4") == Scalar::q() - Scalar::q().inverse());
    CHECK_THROWS_AS(Scalar::parse("u +"), std::invalid_argument);
}

TEST_CASE("polynomial gcd") {
    Poly x({0, 1});
    Poly a = (x + Poly(1)) * (x * x - Poly(3)) * Poly(6);
    Poly b = (x + Poly(1)) * (x - Poly(2)) * Poly(4);
    CHECK(gcd(a, b) == (x + Poly(1)) * Poly(2));
    Poly big({1, 0, 0, 0, 0, 0, 0, 0, 1});  // u^8 + 1
    CHECK(gcd(big * big * (x - Poly(5)), big * (x + Poly(5))) == big);
}

TEST_CASE("kernel, rank and solve") {
    CHECK(kernel(Matrix::identity(3)).empty());
    CHECK(rank(Matrix(2, 2)) == 0);

    Scalar u = Scalar::u();
    Matrix m(2, 2);
    m(0, 0) = 1;
    m(0, 1) = u;
    m(1, 0) = u;
    m(1, 1) = u * u;
    auto k = kernel(m);
    REQUIRE(k.size() == 1);
    CHECK(is_zero(m * k[0]));
    // span{(-u, 1)}
    CHECK(k[0][0] * Scalar(1) == -u * k[0][1]);

    Matrix s(2, 2);
    s(0, 0) = u;
    s(0, 1) = 1;
    s(1, 0) = 1;
    s(1, 1) = u;
    Vector rhs{Scalar(1), Scalar(0)};
    Vector x = solve(s, rhs);
    CHECK(s * x == rhs);
    CHECK(inverse(s) * s == Matrix::identity(2));
    CHECK_THROWS_AS(solve(m, Vector{Scalar(1), Scalar(0)}), NoSolution);
}

TEST_CASE("rank plus nullity on random matrices") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t r = 3 + trial % 2, c = 4;
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar(rng, false);
        // Force a dependency.
        for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * Scalar::u() + m(1, j);
        auto k = kernel(m);
        CHECK(rank(m) + k.size() == c);
        for (const auto& v : k) CHECK(is_zero(m * v));
    }
}
