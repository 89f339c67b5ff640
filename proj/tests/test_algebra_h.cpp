#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mhahn/algebra_h.hpp"
#include "mhahn/errors.hpp"
#include "mhahn/hahn.hpp"
#include "mhahn/matrix.hpp"

using namespace mhahn;

TEST_CASE("structure constants at frozen cells") {
    const StructureConstants even = structure_constants(HahnParams(Rational(4), Rational(4), 2));
    CHECK(even.nu == 1);
    CHECK(even.sigma == -4);
    CHECK(even.rho == -4);
    CHECK(casimir_value(even) == Rational(43, 4));

    const StructureConstants odd = structure_constants(HahnParams(Rational(3), Rational(2), 3));
    CHECK(odd.nu == Rational(1, 2));
    CHECK(odd.sigma == -35);
    CHECK(odd.rho == -5);
}

TEST_CASE("defining relations hold across parities") {
    const std::vector<HahnParams> cells = {
        HahnParams(Rational(4), Rational(4), 2),       HahnParams(Rational(3), Rational(2), 3),
        HahnParams(Rational(9, 2), Rational(13, 4), 3), HahnParams(Rational(23, 3), Rational(25, 4), 6),
        HahnParams(Rational(1), Rational(2), 0)};
    for (const auto& p : cells) {
        const GeneratorSet g = build_realization(p);
        const Report rep = verify_relations(g);
        CHECK(rep.pass());

        const auto scalar = casimir_H(g).as_scalar();
        REQUIRE(scalar.has_value());
        CHECK(*scalar == casimir_value(g.constants));

        CHECK(spectrum_equals(Rational(2) * g.K2, grid(p)));
        CHECK((g.P * g.P) == RMatrix::identity(g.dim()));
    }
}

TEST_CASE("a perturbed generator breaks the relations") {
    GeneratorSet g = build_realization(HahnParams(Rational(4), Rational(4), 2));
    g.K3(0, 1) += 1;
    CHECK_FALSE(verify_relations(g).pass());
}

TEST_CASE("conjugated form is pentadiagonal with integer spectrum") {
    const std::vector<HahnParams> cells = {HahnParams(Rational(4), Rational(4), 2),
                                           HahnParams(Rational(3), Rational(2), 7),
                                           HahnParams(Rational(11, 2), Rational(11, 2), 4)};
    for (const auto& p : cells) {
        CHECK(verify_pentadiagonality(p).pass());

        const GeneratorSet g = build_realization(p);
        const TransitionMatrix t = transition_matrix(p);
        const RMatrix conj = t.S.inverse() * (g.K1 * t.S);
        CHECK(conj.bandwidth() <= 2);
        std::vector<Rational> expected;
        for (unsigned n = 0; n <= p.N; ++n) expected.emplace_back(static_cast<long>(n));
        CHECK(spectrum_equals(conj, expected));
    }
}

TEST_CASE("rotated presentation at a frozen cell") {
    const GeneratorSet g = build_realization(HahnParams(Rational(4), Rational(4), 2));
    CHECK(verify_tilde(g).pass());

    const TildeSet t = tilde_presentation(g);
    CHECK(t.nu == 1);
    CHECK(t.chi == 0);  // (sigma - nu rho) / 4 = (-4 + 4) / 4

    const RMatrix quad = t.K1 * t.K1 + t.K2 * t.K2 - t.K3 * t.K3 + (t.nu / 2) * t.P;
    const auto scalar = quad.as_scalar();
    REQUIRE(scalar.has_value());
    CHECK(*scalar == Rational(7, 2));
}

TEST_CASE("rotated presentation across the lattice") {
    const std::vector<HahnParams> cells = {HahnParams(Rational(3), Rational(2), 3),
                                           HahnParams(Rational(7, 2), Rational(7, 2), 5),
                                           HahnParams(Rational(7), Rational(8), 6)};
    for (const auto& p : cells) {
        const GeneratorSet g = build_realization(p);
        CHECK(verify_tilde(g).pass());
        const TildeSet t = tilde_presentation(g);
        const StructureConstants& sc = g.constants;
        CHECK(t.chi == (sc.sigma - sc.nu * sc.rho) / 4);
    }
}

TEST_CASE("transition matrix columns live on the half grid") {
    const HahnParams p(Rational(4), Rational(3), 2);
    const TransitionMatrix t = transition_matrix(p);
    const GeneratorSet g = build_realization(p);
    for (unsigned s = 0; s <= p.N; ++s) CHECK(t.halfgrid[s] == grid_point(p, s) / 2);
    // columns of S are K2 eigenvectors
    for (unsigned s = 0; s <= p.N; ++s) {
        std::vector<Rational> col(p.N + 1);
        for (unsigned i = 0; i <= p.N; ++i) col[i] = t.S(i, s);
        const auto image = g.K2.apply(col);
        for (unsigned i = 0; i <= p.N; ++i) CHECK(image[i] == t.halfgrid[s] * col[i]);
    }
}
