#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qbundle/uea.hpp"

#include <random>

using namespace qb;

namespace {

const UEAElement E = UEAElement::e(), F = UEAElement::f(), K = UEAElement::k(), KI = UEAElement::k(-1);

Scalar q() { return Scalar::q(); }
Scalar qq() { return (Scalar::q() - Scalar::q().inverse()).inverse(); }

// (k^2 - k^-2)/(q - q^-1)
UEAElement cartan_bracket() { return (UEAElement::k(2) - UEAElement::k(-2)) * qq(); }

UEAElement random_element(std::mt19937& rng, int degree) {
    auto monos = pbw_monomials(degree);
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    std::uniform_int_distribution<int> coef(-3, 3), shift(-4, 4);
    UEAElement x;
    for (int i = 0; i < 3; ++i) x.add_term(monos[pick(rng)], Scalar(coef(rng)) * Scalar::u_pow(shift(rng)));
    return x;
}

}  // namespace

TEST_CASE("defining relations") {
    CHECK(K * KI == UEAElement::one());
    CHECK(K * E * KI == E * q());
    CHECK(K * F * KI == F * q().inverse());
    CHECK(E * F == F * E + cartan_bracket());
    CHECK(E * F - F * E == cartan_bracket());
}

TEST_CASE("e^2 f against hand rewriting") {
    // e e f = e (f e + H) = (f e + H) e + e H, then e k^{+-2} = q^{-+2} k^{+-2} e.
    UEAElement H = cartan_bracket();
    UEAElement eH = (UEAElement::monomial({0, 2, 1}, q().pow(-2)) - UEAElement::monomial({0, -2, 1}, q().pow(2))) * qq();
    UEAElement expected = UEAElement::monomial({1, 0, 2}) + H * E + eH;
    CHECK(E * E * F == expected);
    CHECK(multiply_monomials({0, 0, 2}, {1, 0, 0}) == expected);
}

TEST_CASE("multiplication is associative (rewriting is confluent)") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 25; ++trial) {
        UEAElement a = random_element(rng, 3), b = random_element(rng, 3), c = random_element(rng, 2);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("coproduct basics") {
    CHECK(coproduct(UEAElement::one()) == TensorUEA::simple(UEAElement::one(), UEAElement::one()));
    CHECK(coproduct(K) == TensorUEA::simple(K, K));
    TensorUEA de = TensorUEA::simple(E, K) + TensorUEA::simple(KI, E);
    TensorUEA df = TensorUEA::simple(F, K) + TensorUEA::simple(KI, F);
    CHECK(coproduct(E) == de);
    CHECK(coproduct(E * F) == de * df);
    CHECK(coproduct(F * E + cartan_bracket()) == de * df);
}

TEST_CASE("coproduct is an algebra map") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        UEAElement a = random_element(rng, 2), b = random_element(rng, 2);
        CHECK(coproduct(a * b) == coproduct(a) * coproduct(b));
    }
}

TEST_CASE("Hopf axioms on PBW monomials up to degree 4") {
    for (const auto& m : pbw_monomials(4)) {
        UEAElement x = UEAElement::monomial(m);
        TensorUEA d = coproduct(x);
        CHECK(coproduct_left(d) == coproduct_right(d));
        UEAElement eps_x = UEAElement(counit(x));
        CHECK(map_legs(d, antipode, nullptr).multiply_legs() == eps_x);
        CHECK(map_legs(d, nullptr, antipode).multiply_legs() == eps_x);
        UEAElement left, right;
        for (const auto& [a, b] : d.pairs()) {
            left += b * counit(a);
            right += a * counit(b);
        }
        CHECK(left == x);
        CHECK(right == x);
        CHECK(antipode(antipode_inv(x)) == x);
        CHECK(antipode_inv(antipode(x)) == x);
        CHECK(star(star(x)) == x);
    }
}

TEST_CASE("counit, antipode and star on generators") {
    CHECK(counit(E).is_zero());
    CHECK(counit(K) == Scalar(1));
    CHECK(antipode(K) == KI);
    CHECK(antipode(E) == E * -q());
    CHECK(star(E) == F);
    CHECK(star(star(E)) == E);
    CHECK(star(K) == K);
    for (const auto& g : {E, F, K, KI}) CHECK(coproduct(star(g)) == map_legs(coproduct(g), star, star));
}

TEST_CASE("antipode and star are anti-multiplicative") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        UEAElement a = random_element(rng, 2), b = random_element(rng, 2);
        CHECK(antipode(a * b) == antipode(b) * antipode(a));
        CHECK(star(a * b) == star(b) * star(a));
    }
}

TEST_CASE("text serialization") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        UEAElement a = random_element(rng, 3);
        CHECK(UEAElement::parse(a.to_string()) == a);
    }
    CHECK(UEAElement::parse("[q] f^1 k^-1 e^0 - [1] e") == F * KI * q() - E);
    CHECK(UEAElement::parse("0").is_zero());
    CHECK_THROWS_AS(UEAElement::parse("[1] x^2"), std::invalid_argument);
}
