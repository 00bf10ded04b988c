#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qbundle/bundle.hpp"

#include <random>

using namespace qb;

namespace {

LModule line(int m) { return LModule::from_weights({m}); }

CoeffElement random_invariant(std::mt19937& rng, int level) {
    const auto basis = invariants(ThetaChoice{}, level).elements;
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> c(-2, 2);
    CoeffElement a;
    for (int t = 0; t < 2; ++t) a += basis[pick(rng)] * Scalar(c(rng) == 0 ? 1 : c(rng));
    return a;
}

}  // namespace

TEST_CASE("completion") {
    Completion c0 = complete(line(0));
    CHECK(c0.w.dim() == 1);
    CHECK(c0.emb == Matrix::identity(1));
    Completion c1 = complete(line(1));
    CHECK(c1.w.dim() == 2);
    CHECK(c1.emb(0, 0) == Scalar(1));
    CHECK(c1.proj * c1.emb == Matrix::identity(1));
    Completion c2 = complete(LModule::from_weights({1, -1}));
    CHECK(c2.w.dim() == 4);
    CHECK(c2.proj * c2.emb == Matrix::identity(2));
    // The embedding is weight preserving: k commutes through it.
    Matrix kv(2, 2);
    kv(0, 0) = Scalar::u_pow(2);
    kv(1, 1) = Scalar::u_pow(-2);
    CHECK(c2.w.k() * c2.emb == c2.emb * kv);
    CHECK(c2.proj * c2.w.k() == kv * c2.proj);
    CHECK_THROWS_AS(complete(LModule::from_k_exponents({1})), std::invalid_argument);
}

TEST_CASE("section spaces") {
    auto triv = sections_basis(line(0), 4);
    auto inv = invariants(ThetaChoice{}, 4).elements;
    REQUIRE(triv.size() == inv.size());
    for (std::size_t i = 0; i < inv.size(); ++i) CHECK(triv[i][0] == inv[i]);
    for (int m : {1, -1, 2}) {
        LModule v = line(m);
        for (int n = 0; n <= 4; ++n) {
            std::size_t here = sections_basis(v, n).size() - (n ? sections_basis(v, n - 1).size() : 0);
            bool present = n >= std::abs(m) && (n - m) % 2 == 0;
            CHECK(here == (present ? static_cast<std::size_t>(n + 1) : 0u));
        }
        for (const auto& s : sections_basis(v, 3)) CHECK(satisfies_constraint(v, s));
    }
    CHECK(sections_basis(LModule::from_k_exponents({1}), 5).empty());
    CHECK(sections_basis(LModule::from_k_exponents({3, 1}), 5).empty());
}

TEST_CASE("the maps wp and im") {
    Bundle triv(line(0));
    CoeffElement a = CoeffElement::t(2, 0, 1);
    CHECK(triv.wp(0, a)[0] == a);
    CHECK(triv.im({a})[0] == a);

    Bundle b(line(1));
    for (std::size_t alpha = 0; alpha < 2; ++alpha)
        CHECK(b.wp(alpha, CoeffElement::unit())[0] == antipode(CoeffElement::t(1, 0, static_cast<int>(alpha))));

    std::mt19937 rng(3);
    for (const auto& v : {line(1), LModule::from_weights({1, -1}), line(-2)}) {
        Bundle bb(v);
        for (const auto& s : sections_basis(v, 3)) {
            WVector x = bb.im(s);
            for (const auto& leg : x) CHECK(is_invariant(ThetaChoice{}, leg));
            CHECK(bb.wp(x) == s);
            CoeffElement g = random_invariant(rng, 2);
            CHECK(bb.im(right_multiply(s, g)) == right_multiply(x, g));
            CHECK(satisfies_constraint(v, left_multiply(g, s)));
            CHECK(left_multiply(g, right_multiply(s, g)) == right_multiply(left_multiply(g, s), g));
        }
        for (std::size_t alpha = 0; alpha < bb.dim_w(); ++alpha) {
            CoeffElement a1 = random_invariant(rng, 2), a2 = random_invariant(rng, 2);
            Section s = bb.wp(alpha, a1);
            CHECK(satisfies_constraint(v, s));
            CHECK(bb.wp(alpha, multiply(a1, a2)) == right_multiply(s, a2));
        }
    }
}

TEST_CASE("projectivity idempotent") {
    BundleIdempotent t = idempotent(line(0), 3);
    REQUIRE(t.matrix.size() == 1);
    CHECK(t.matrix[0][0] == CoeffElement::unit());
    for (const auto& v : {line(1), LModule::from_weights({1, -1})}) {
        for (int n = 1; n <= 3; ++n) {
            BundleIdempotent e = idempotent(v, n);
            CHECK(e.matrix_idempotent);
            CHECK(e.window_idempotent);
            CHECK(e.rank == e.sections_dim);
        }
    }
}

TEST_CASE("generators") {
    Bundle triv(line(0));
    REQUIRE(triv.generators().size() == 1);
    CHECK(triv.generators()[0][0] == CoeffElement::unit());
    Bundle b(line(1));
    auto gens = b.generators();
    CHECK(gens.size() == 2);
    std::vector<std::vector<CoeffElement>> cols(gens.begin(), gens.end());
    for (const auto& s : sections_basis(line(1), 3)) {
        auto coeffs = generation_coefficients(b, s, 4);
        Section sum(1);
        for (std::size_t a = 0; a < gens.size(); ++a) sum = add(sum, right_multiply(gens[a], coeffs[a]));
        CHECK(sum == s);
        // The explicit choice a_alpha = im(s)_alpha also works.
        WVector x = b.im(s);
        Section sum2(1);
        for (std::size_t a = 0; a < gens.size(); ++a) sum2 = add(sum2, right_multiply(gens[a], x[a]));
        CHECK(sum2 == s);
    }
}

TEST_CASE("holomorphic sections") {
    auto triv = holomorphic_sections(line(0), 3);
    REQUIRE(triv.size() == 1);
    CHECK(triv[0][0] == CoeffElement::unit());
    for (int n = 1; n <= 3; ++n) {
        auto h = holomorphic_sections(line(-n), n + 2);
        CHECK(h.size() == static_cast<std::size_t>(n + 1));
        CHECK(is_irreducible(dot_action(h)));
        CHECK(holomorphic_sections(line(n), n + 2).empty());
    }
    CHECK_FALSE(is_irreducible(dot_action(sections_basis(line(1), 3))));
}
