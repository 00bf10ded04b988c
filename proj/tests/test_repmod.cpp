#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qbundle/repmod.hpp"

#include <random>

using namespace qb;

namespace {

UEAElement random_element(std::mt19937& rng, int degree) {
    auto monos = pbw_monomials(degree);
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    UEAElement x;
    for (int i = 0; i < 3; ++i) x.add_term(monos[pick(rng)], Scalar(coef(rng)));
    return x;
}

// Action of x on W1 (x) W2 through the coproduct, or the opposite coproduct.
Matrix tensor_action(const Module& a, const Module& b, const UEAElement& x, bool opposite) {
    Matrix out(a.dim() * b.dim(), a.dim() * b.dim());
    for (const auto& [l, r] : coproduct(x).pairs())
        out += opposite ? kron(a.act(r), b.act(l)) : kron(a.act(l), b.act(r));
    return out;
}

}  // namespace

TEST_CASE("irreps satisfy the relations and represent products") {
    for (int n = 0; n <= 4; ++n) {
        const Module& w = irrep(n);
        CHECK(w.dim() == static_cast<std::size_t>(n + 1));
        CHECK(w.satisfies_relations());
        CHECK(w.weights().front() == n);
        CHECK(w.weights().back() == -n);
    }
    std::mt19937 rng(1);
    const Module& w = irrep(3);
    for (int t = 0; t < 8; ++t) {
        UEAElement x = random_element(rng, 3), y = random_element(rng, 2);
        CHECK(w.act(x * y) == w.act(x) * w.act(y));
    }
    Matrix bad = irrep(1).e();
    CHECK_THROWS_AS(Module::from_generators(bad, bad, irrep(1).k()), std::invalid_argument);
}

TEST_CASE("tensor product follows the coproduct") {
    const Module& a = irrep(1);
    const Module& b = irrep(2);
    Module t = tensor(a, b);
    CHECK(t.satisfies_relations());
    std::mt19937 rng(4);
    for (int i = 0; i < 5; ++i) {
        UEAElement x = random_element(rng, 2);
        CHECK(t.act(x) == tensor_action(a, b, x, false));
    }
}

TEST_CASE("Clebsch-Gordan decomposition") {
    for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
        Module t = tensor(irrep(n), irrep(m));
        auto comps = decompose(t);
        REQUIRE(comps.size() == static_cast<std::size_t>(std::min(n, m) + 1));
        Matrix sum(t.dim(), t.dim());
        for (std::size_t i = 0; i < comps.size(); ++i) {
            CHECK(comps[i].highest == n + m - 2 * static_cast<int>(i));
            CHECK(comps[i].embedding.intertwines());
            CHECK(comps[i].projection.intertwines());
            for (std::size_t j = 0; j < comps.size(); ++j) {
                Matrix pe = comps[i].projection.matrix * comps[j].embedding.matrix;
                if (i == j)
                    CHECK(pe == Matrix::identity(comps[i].embedding.source.dim()));
                else
                    CHECK(pe.is_zero());
            }
            sum += comps[i].embedding.matrix * comps[i].projection.matrix;
        }
        CHECK(sum == Matrix::identity(t.dim()));
    }
}

TEST_CASE("decomposition rejects non-semisimple input") {
    // e acting as a single Jordan block between weights 1 and -1 with f = 0
    // violates [e,f], so build a module that is a valid direct sum and then
    // check the sum of two copies splits into two components instead.
    Module two = direct_sum(irrep(1), irrep(1));
    auto comps = decompose(two);
    CHECK(comps.size() == 2);
}

TEST_CASE("R-matrix intertwines the coproduct and its opposite") {
    std::mt19937 rng(8);
    for (auto [n, m] : {std::pair{1, 1}, {1, 2}, {2, 2}}) {
        const Module& a = irrep(n);
        const Module& b = irrep(m);
        Matrix r = universal_R(a, b);
        for (const UEAElement& g : {UEAElement::e(), UEAElement::f(), UEAElement::k()})
            CHECK(r * tensor_action(a, b, g, false) == tensor_action(a, b, g, true) * r);
        UEAElement x = random_element(rng, 2);
        CHECK(r * tensor_action(a, b, x, false) == tensor_action(a, b, x, true) * r);
    }
}

TEST_CASE("Hecke relation on the fundamental representation") {
    // P R has eigenvalue q^(1/2) on the symmetric part and -q^(-3/2) on the
    // antisymmetric part.
    const Module& v = irrep(1);
    Matrix pr = flip(2, 2) * universal_R(v, v);
    Matrix id = Matrix::identity(4);
    const Scalar a = Scalar::u_pow(2), b = -Scalar::u_pow(-6);
    CHECK((pr - id * a) * (pr - id * b) == Matrix(4, 4));
}

TEST_CASE("Yang-Baxter equation") {
    for (int n : {1, 2}) {
        const Module& v = irrep(n);
        const std::size_t d = v.dim();
        Matrix r = universal_R(v, v), id = Matrix::identity(d);
        Matrix r12 = kron(r, id), r23 = kron(id, r);
        Matrix p23 = kron(id, flip(d, d));
        Matrix r13 = p23 * r12 * p23;
        CHECK(r12 * r13 * r23 == r23 * r13 * r12);
    }
}

TEST_CASE("R with one leg represented") {
    const Module& a = irrep(1);
    const Module& w = irrep(2);
    UEAMatrix leg = r_matrix_second_leg(w);
    UEAMatrix leg21 = r21_matrix_second_leg(w);
    Matrix full = universal_R(a, w);
    Matrix full21 = flip(w.dim(), a.dim()) * universal_R(w, a) * flip(a.dim(), w.dim());
    for (std::size_t rr = 0; rr < w.dim(); ++rr)
        for (std::size_t s = 0; s < w.dim(); ++s) {
            Matrix m = a.act(leg[rr][s]), m21 = a.act(leg21[rr][s]);
            for (std::size_t i = 0; i < a.dim(); ++i)
                for (std::size_t j = 0; j < a.dim(); ++j) {
                    CHECK(m(i, j) == full(i * w.dim() + rr, j * w.dim() + s));
                    CHECK(m21(i, j) == full21(i * w.dim() + rr, j * w.dim() + s));
                }
        }
}

TEST_CASE("trivial module is a unit") {
    const Module& t = irrep(0);
    CHECK(t.dim() == 1);
    CHECK(t.e().is_zero());
    CHECK(t.f().is_zero());
    CHECK(irrep(1).k()(0, 0) == Scalar::u_pow(2));
    Module w = tensor(t, irrep(2));
    CHECK(w.e() == irrep(2).e());
    CHECK(w.f() == irrep(2).f());
    CHECK(w.k() == irrep(2).k());
    CHECK(universal_R(t, irrep(2)) == Matrix::identity(3));
    CHECK(tensor(irrep(1), irrep(1)).dim() == 4);
}

TEST_CASE("braiding is a module map") {
    for (int n : {1, 2}) {
        const Module& v = irrep(n);
        Module vv = tensor(v, v);
        Matrix br = flip(v.dim(), v.dim()) * universal_R(v, v);
        CHECK(br * vv.e() == vv.e() * br);
        CHECK(br * vv.f() == vv.f() * br);
        CHECK(br * vv.k() == vv.k() * br);
    }
}
