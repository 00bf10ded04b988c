#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qbundle/calculus.hpp"

#include <random>

using namespace qb;

namespace {

const Calculus& four() {
    static const Calculus c(from_rep(irrep(1)));
    return c;
}

CoeffElement random_function(std::mt19937& rng, int level) {
    std::uniform_int_distribution<int> coef(-3, 3);
    CoeffElement a;
    for (int n = 0; n <= level; ++n)
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                const int c = coef(rng);
                if (c != 0 && (rng() % 3 == 0)) a.add_term({n, i, j}, Scalar(c));
            }
    if (a.is_zero()) a = CoeffElement::t(1, static_cast<int>(rng() % 2), static_cast<int>(rng() % 2));
    return a;
}

FormElement random_form(std::mt19937& rng, int degree, int level) {
    const Calculus& c = four();
    FormElement w = c.zero(degree);
    for (auto& x : w.coords)
        if (rng() % 2 == 0) x = random_function(rng, level);
    return w;
}

}  // namespace

TEST_CASE("degenerate source") {
    CalculusData c = from_rep(irrep(0));
    CHECK(c.K == 1);
    CHECK(c.X[0].is_zero());
    CHECK_FALSE(c.nondegenerate);
    CHECK_THROWS_AS(Calculus{c}, DomainError);
}

TEST_CASE("four dimensional calculus axioms") {
    const CalculusData& c = four().data();
    CHECK(c.K == 4);
    CHECK(c.nondegenerate);
    CHECK(check_axioms(c).all());
    // Expand Delta(X_a) directly against the pairing with irrep(1)(x)irrep(1) matrices.
    for (std::size_t a = 0; a < c.K; ++a) {
        CHECK(counit(c.X[a]).is_zero());
        for (std::size_t b = 0; b < c.K; ++b) CHECK(counit(c.F[a][b]) == Scalar(a == b ? 1 : 0));
    }
    CHECK(c.gamma.satisfies_relations());
    std::vector<int> w = c.gamma.weights();
    std::sort(w.begin(), w.end());
    CHECK(w == std::vector<int>{-2, 0, 0, 2});
}

TEST_CASE("braiding split") {
    const Calculus& c = four();
    const BraidingSplit& s = c.split();
    const std::size_t n = c.K() * c.K();
    CHECK(s.sigma.eval_at(1) == flip(c.K(), c.K()).eval_at(1));
    CHECK(s.plus - s.minus == s.sigma);
    CHECK((s.plus * s.minus).is_zero());
    CHECK((s.minus * s.plus).is_zero());
    const Module gg = tensor(c.data().gamma, c.data().gamma);
    for (const Matrix* m : {&s.plus, &s.minus, &s.sigma}) {
        CHECK(*m * gg.e() == gg.e() * *m);
        CHECK(*m * gg.f() == gg.f() * *m);
        CHECK(*m * gg.k() == gg.k() * *m);
    }
    CHECK(s.kernel_minus.size() == 10);
    std::size_t total = 0;
    for (const auto& e : s.eigenspaces) total += e.vectors.size();
    CHECK(total == n);
    // Braid relation.
    const Matrix id = Matrix::identity(c.K());
    const Matrix a1 = kron(s.sigma, id), a2 = kron(id, s.sigma);
    CHECK(a1 * a2 * a1 == a2 * a1 * a2);
    // The flip composed with R also specializes to the flip.
    CHECK(r_braiding_matrix(c.data()).eval_at(1) == flip(c.K(), c.K()).eval_at(1));
}

TEST_CASE("split rejects non-diagonalizable") {
    Matrix j(2, 2);
    j(0, 0) = Scalar(1);
    j(0, 1) = Scalar(1);
    j(1, 1) = Scalar(1);
    CHECK_THROWS_AS(split_braiding(j), SplitError);
}

TEST_CASE("exterior algebra dimensions") {
    const Calculus& c = four();
    const std::vector<std::size_t> expected{1, 4, 6, 4, 1, 0};
    for (int n = 0; n <= 5; ++n) CHECK(c.omega_dim(n) == expected[static_cast<std::size_t>(n)]);
    // Every degree-5 tensor reduces to zero.
    std::mt19937 rng(5);
    FormElement big{5, false, std::vector<CoeffElement>(1024)};
    for (int i = 0; i < 20; ++i) big.coords[rng() % 1024] += CoeffElement::t(1, 0, 1, Scalar(i + 1));
    CHECK(c.reduce_mod_J(big).is_zero());
    // Reduction is idempotent and kills ker sigma_-.
    FormElement w2{2, false, std::vector<CoeffElement>(16)};
    for (std::size_t i = 0; i < 16; ++i) w2.coords[i] = CoeffElement(c.split().kernel_minus[3][i]);
    CHECK(c.reduce_mod_J(w2).is_zero());
    FormElement w3{2, false, std::vector<CoeffElement>(16)};
    w3.coords[1] = CoeffElement::unit();
    const FormElement r = c.reduce_mod_J(w3);
    CHECK(c.reduce_mod_J(r) == r);
    CHECK_FALSE(r.is_zero());
}

TEST_CASE("d0 coordinates and Leibniz") {
    const Calculus& c = four();
    CHECK(c.d0(CoeffElement::unit()).is_zero());
    // X_a o t_ij = sum_k t_ik <t_kj, X_a>.
    for (int i = 0; i <= 1; ++i)
        for (int j = 0; j <= 1; ++j) {
            const FormElement w = c.d0(CoeffElement::t(1, i, j));
            for (std::size_t a = 0; a < c.K(); ++a) {
                const Matrix x = irrep(1).act(c.data().X[a]);
                CoeffElement expect;
                for (int k = 0; k <= 1; ++k)
                    expect.add_term({1, i, k}, x(static_cast<std::size_t>(k), static_cast<std::size_t>(j)));
                CHECK(w.coords[a] == expect);
            }
        }
    const CoeffElement a = CoeffElement::t(1, 0, 0), b = CoeffElement::t(1, 0, 1);
    CHECK(c.d0(a * b) == c.add(c.right_mult(c.d0(a), b), c.left_mult(a, c.d0(b))));
    std::mt19937 rng(11);
    for (int s = 0; s < 10; ++s) {
        const CoeffElement x = random_function(rng, 1), y = random_function(rng, 2);
        CHECK(c.d0(x * y) == c.add(c.right_mult(c.d0(x), y), c.left_mult(x, c.d0(y))));
        CHECK(c.d(c.function(x)) == c.d0(x));
    }
}

TEST_CASE("bimodule structure") {
    const Calculus& c = four();
    std::mt19937 rng(3);
    for (int s = 0; s < 8; ++s) {
        const FormElement w = random_form(rng, 1 + s % 2, 1);
        const CoeffElement a = random_function(rng, 1), b = random_function(rng, 1);
        CHECK(c.right_mult(w, CoeffElement::unit()) == w);
        CHECK(c.right_mult(c.right_mult(w, a), b) == c.right_mult(w, a * b));
        CHECK(c.right_mult(c.left_mult(a, w), b) == c.left_mult(a, c.right_mult(w, b)));
    }
}

TEST_CASE("d squared and graded Leibniz") {
    const Calculus& c = four();
    std::mt19937 rng(7);
    for (int s = 0; s < 6; ++s) {
        const FormElement a = random_form(rng, 0, 1);
        const FormElement w = random_form(rng, 1, 1);
        const FormElement v = random_form(rng, 1, 1);
        CHECK(c.d(c.d(a)).is_zero());
        CHECK(c.d(c.d(w)).is_zero());
        const FormElement lhs = c.d(c.wedge(w, v));
        const FormElement rhs = c.add(c.wedge(c.d(w), v), c.scale(c.wedge(w, c.d(v)), Scalar(-1)));
        CHECK(lhs == rhs);
    }
    // d of an invariant one-form.
    const FormElement w0 = c.basis_form(1, 1);
    CHECK(c.d(w0) == c.add(c.wedge(c.theta(), w0), c.wedge(w0, c.theta())));
}

TEST_CASE("actions commute with d") {
    const Calculus& c = four();
    std::mt19937 rng(13);
    const std::vector<UEAElement> gens{UEAElement::e(), UEAElement::f(), UEAElement::k(), UEAElement::k(-1)};
    for (int s = 0; s < 4; ++s) {
        const FormElement w = random_form(rng, s % 2, 1);
        for (const auto& x : gens) {
            CHECK(c.dot(x, c.d(w)) == c.d(c.dot(x, w)));
            CHECK(c.circle(x, c.d(w)) == c.d(c.circle(x, w)));
        }
    }
    const FormElement w = random_form(rng, 1, 1);
    CHECK(c.dot(UEAElement::one(), w) == w);
}

TEST_CASE("restricted calculus on the sphere") {
    const Calculus& c = four();
    const ThetaChoice theta{};
    const RestrictedCalculus r = restrict(c, theta, 2);
    CHECK(r.dims[0] == invariants(theta, 2).elements.size());
    CHECK(r.dims == std::vector<std::size_t>{4, 12, 32});
    CHECK(r.closed == std::vector<bool>{true, true});
    const auto basis = invariants(theta, 2).elements;
    const FormElement w = c.left_mult(basis[1], c.d0(basis[2]));
    for (int p : {1, -1}) CHECK(circle_on_restricted(c, r, UEAElement::k(p), w) == w);
    CHECK_THROWS_AS(circle_on_restricted(c, r, UEAElement::k(), c.d0(CoeffElement::t(1, 0, 0))), DomainError);

    const RestrictedCalculus trivial = restrict(c, ThetaChoice{1, {1}}, 2);
    CHECK(trivial.dims == std::vector<std::size_t>{1, 0, 0});
}
