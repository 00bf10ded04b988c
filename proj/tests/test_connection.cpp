#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qbundle/connection.hpp"

#include <random>

using namespace qb;

namespace {

const Calculus& four() {
    static const Calculus c(from_rep(irrep(1)));
    return c;
}

const Bundle& line_bundle() {
    static const Bundle b(LModule::from_weights({1}));
    return b;
}

CoeffElement random_invariant(std::mt19937& rng) {
    const auto basis = invariants(ThetaChoice{}, 2).elements;
    CoeffElement a;
    for (const auto& x : basis) {
        const int c = static_cast<int>(rng() % 5) - 2;
        if (c != 0) a += x * Scalar(c);
    }
    if (a.is_zero()) a = basis[1];
    return a;
}

// Random element of e(W (x) Omega^n(E_q)): sum_a zeta_a w_a.
WForm random_psi(std::mt19937& rng, const Bundle& b, int degree) {
    const Calculus& c = four();
    WForm psi = wform_zero(b, c, degree);
    const auto gens = b.generators();
    for (std::size_t a = 0; a < gens.size(); ++a) {
        FormElement w = c.function(random_invariant(rng));
        if (degree == 1) w = c.left_mult(w.coords[0], c.d0(random_invariant(rng)));
        const WForm z = embed_section(b, c, gens[a]);
        for (std::size_t r = 0; r < psi.size(); ++r) psi[r] = c.add(psi[r], c.left_mult(z[r].coords[0], w));
    }
    return psi;
}

}  // namespace

TEST_CASE("trivial bundle") {
    const Calculus& c = four();
    const Bundle b(LModule::from_weights({0}));
    std::mt19937 rng(1);
    const CoeffElement a = random_invariant(rng);
    const WForm p = partial(b, c, Section{a});
    REQUIRE(p.size() == 1);
    CHECK(p[0] == c.d0(a));
    const WForm psi{c.left_mult(a, c.d0(random_invariant(rng)))};
    CHECK(nabla0(b, c, psi)[0] == c.d(psi[0]));
    CHECK(curvature(b, c, base_connection()).is_zero());
}

TEST_CASE("partial on the line bundle") {
    const Calculus& c = four();
    const Bundle& b = line_bundle();
    const auto gens = b.generators();
    std::mt19937 rng(2);
    for (int s = 0; s < 3; ++s) {
        std::vector<CoeffElement> a(b.dim_w());
        for (auto& x : a) x = random_invariant(rng);
        Section sec(b.fiber().dim());
        for (std::size_t i = 0; i < a.size(); ++i) sec = add(sec, b.wp(i, a[i]));
        const WForm chain = partial(b, c, sec);
        CHECK(chain == partial_explicit(b, c, a));
        CHECK(in_image(b, c, chain));
    }
    for (std::size_t alpha = 0; alpha < gens.size(); ++alpha) {
        const CoeffElement a = random_invariant(rng);
        const WForm lhs = partial(b, c, right_multiply(gens[alpha], a));
        WForm rhs;
        const WForm pz = partial(b, c, gens[alpha]);
        const WForm z = embed_section(b, c, gens[alpha]);
        for (std::size_t r = 0; r < pz.size(); ++r)
            rhs.push_back(c.add(c.right_mult(pz[r], a), c.left_mult(z[r].coords[0], c.d0(a))));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("nabla0 realizations and connection law") {
    const Calculus& c = four();
    const Bundle& b = line_bundle();
    std::mt19937 rng(3);
    for (const auto& z : b.generators()) {
        const WForm psi = embed_section(b, c, z);
        CHECK(nabla0(b, c, psi) == nabla0_chain(b, c, psi));
    }
    for (int s = 0; s < 4; ++s) {
        const int n = s % 2;
        const WForm psi = random_psi(rng, b, n);
        REQUIRE(in_image(b, c, psi));
        const WForm np = nabla0(b, c, psi);
        CHECK(np == nabla0_chain(b, c, psi));
        CHECK(np[0].degree == n + 1);
        const FormElement w = c.left_mult(random_invariant(rng), c.d0(random_invariant(rng)));
        const WForm lhs = nabla0(b, c, wform_right(c, psi, w));
        WForm rhs = wform_right(c, np, w);
        const WForm tail = wform_right(c, psi, c.d(w));
        rhs = n % 2 == 0 ? wform_add(rhs, tail) : wform_sub(rhs, tail);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("affine space of connections") {
    const Calculus& c = four();
    const Bundle& b = line_bundle();
    const std::size_t d = b.dim_w();
    const auto basis = invariants(ThetaChoice{}, 2).elements;
    std::vector<std::vector<FormElement>> m(d, std::vector<FormElement>(d, c.zero(1)));
    m[0][0] = c.scale(c.d0(basis[1]), Scalar(2));
    m[1][1] = c.scale(c.d0(basis[1]), Scalar::u_pow(3));
    const ConnectionMap conn = make_connection(b, c, form_matrix_map(b, c, m));
    const ConnectionMap base = base_connection();
    CHECK(difference_is_linear(b, c, conn, base));

    std::mt19937 rng(4);
    const WForm psi = random_psi(rng, b, 0);
    const FormElement w = c.d0(random_invariant(rng));
    CHECK(conn.apply(b, c, wform_right(c, psi, w)) ==
          wform_add(wform_right(c, conn.apply(b, c, psi), w), wform_right(c, psi, c.d(w))));

    // partial itself satisfies a Leibniz rule, so it is not right linear.
    const SectionFormMap del = [&](const Section& s) { return partial(b, c, s); };
    CHECK_THROWS_AS(make_connection(b, c, del), NotLinear);
}

TEST_CASE("curvature") {
    const Calculus& c = four();
    const Bundle& b = line_bundle();
    const ConnectionMap base = base_connection();
    const CurvatureMap f = curvature(b, c, base);
    CHECK_FALSE(f.is_zero());
    for (const auto& col : f.columns) CHECK(col[0].degree == 2);
    std::mt19937 rng(5);
    const auto gens = b.generators();
    for (std::size_t a = 0; a < gens.size(); ++a) {
        const CoeffElement g = random_invariant(rng);
        const WForm zg = embed_section(b, c, right_multiply(gens[a], g));
        const WForm lhs = base.apply(b, c, base.apply(b, c, zg));
        WForm rhs;
        for (const auto& x : f.columns[a]) rhs.push_back(c.right_mult(x, g));
        CHECK(lhs == rhs);
    }
    CHECK(bianchi(b, c, base, f));
}
