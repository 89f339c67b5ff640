#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mhahn/algebra_h.hpp"
#include "mhahn/errors.hpp"
#include "mhahn/hahn.hpp"
#include "mhahn/matrix.hpp"
#include "mhahn/sl_minus.hpp"

using namespace mhahn;

TEST_CASE("ladder module relations at the truncation") {
    for (int eps : {1, -1})
        for (const Rational& mu : {Rational(0), Rational(1, 2), Rational(3, 2)}) {
            const ModuleLabel label{eps, mu};
            CHECK(verify_parabose(label, 12).pass());
            const auto q = module_action(label, SlGenerator::Q, 12).as_scalar();
            REQUIRE(q.has_value());
            CHECK(*q == Rational(-eps) * mu);
        }
}

TEST_CASE("involution squares to the identity on the module") {
    const ModuleLabel label{-1, Rational(3, 2)};
    const RMatrix r = module_action(label, SlGenerator::R, 9);
    CHECK(r * r == RMatrix::identity(9));
}

TEST_CASE("coupled operators at the smallest nontrivial cell") {
    const CouplingProblem cp{{1, Rational(0)}, {1, Rational(0)}, 1};
    const KappaSet k = coupled_operators(cp);
    CHECK(k.dim() == 2);
    CHECK(k.lambda1 == 0);
    CHECK(k.lambda2 == 0);
    CHECK(k.lambda3 == -1);
    CHECK(k.lambda4 == 2);
    CHECK(verify_kappa_relations(k).pass());
    CHECK(verify_casimir_spectrum(cp).pass());

    const auto lines = casimir_spectrum(cp);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0].eps_ab == 1);
    CHECK(lines[0].mu_ab == Rational(1, 2));
    CHECK(lines[0].q_ab == Rational(-1, 2));
    CHECK(lines[1].eps_ab == -1);
    CHECK(lines[1].mu_ab == Rational(3, 2));
    CHECK(lines[1].q_ab == Rational(3, 2));

    const CGTable t = clebsch_gordan(cp);
    CHECK(t.two_eig == std::vector<Rational>{Rational(1), Rational(-3)});
}

TEST_CASE("coupling lattice satisfies the relations") {
    for (const Rational& ma : {Rational(0), Rational(1), Rational(3, 2)})
        for (const Rational& mb : {Rational(1, 2), Rational(3, 2)})
            for (int ea : {1, -1})
                for (int eb : {1, -1})
                    for (unsigned N : {1u, 2u, 4u}) {
                        const CouplingProblem cp{{ea, ma}, {eb, mb}, N};
                        CHECK(verify_kappa_relations(coupled_operators(cp)).pass());
                        CHECK(verify_casimir_spectrum(cp).pass());
                        CHECK(verify_cg_orthonormality(cp).pass());
                    }
}

TEST_CASE("frozen coupling table") {
    const CouplingProblem cp{{1, Rational(1, 2)}, {1, Rational(1)}, 2};
    const CGTable t = clebsch_gordan(cp);
    REQUIRE(t.dim == 3);

    CHECK(t.two_eig == std::vector<Rational>{Rational(-4), Rational(6), Rational(-8)});
    CHECK(t.squared[0] ==
          std::vector<Rational>{Rational(3, 5), Rational(4, 35), Rational(2, 7)});
    CHECK(t.squared[1] == std::vector<Rational>{Rational(0), Rational(5, 7), Rational(2, 7)});
    CHECK(t.squared[2] ==
          std::vector<Rational>{Rational(2, 5), Rational(6, 35), Rational(3, 7)});
    CHECK(t.sign[0] == std::vector<int>{1, 1, 1});  // top row positive by convention
    CHECK(t.sign[1] == std::vector<int>{0, -1, 1});
    CHECK(t.phase_row[0] == 0);

    // columns are unit vectors
    for (std::size_t k = 0; k < t.dim; ++k) {
        Rational sum(0);
        for (std::size_t n = 0; n < t.dim; ++n) sum += t.squared[n][k];
        CHECK(sum == 1);
    }

    const HahnParams mapped = cg_parameter_map(cp);
    CHECK(mapped.alpha == 5);
    CHECK(mapped.beta == 4);
    CHECK(mapped.N == 2);
    CHECK(verify_cg_polynomial_match(cp).pass());
    CHECK(verify_kappa_is_H(cp).pass());
}

TEST_CASE("coupling reproduces the polynomial family across cells") {
    for (const Rational& ma : {Rational(0), Rational(1, 2), Rational(3, 2)})
        for (const Rational& mb : {Rational(0), Rational(1)})
            for (unsigned N : {1u, 2u, 3u, 5u}) {
                const CouplingProblem cp{{1, ma}, {1, mb}, N};
                CHECK(verify_cg_polynomial_match(cp).pass());
                CHECK(verify_kappa_is_H(cp).pass());
            }
}

TEST_CASE("odd coupling maps onto the odd parameter branch") {
    // mu_a = 1/2, mu_b = 1, N = 3 lands on (1, 2, 3), whose sigma is -13
    const CouplingProblem cp{{1, Rational(1, 2)}, {1, Rational(1)}, 3};
    const HahnParams mapped = cg_parameter_map(cp);
    CHECK(mapped.alpha == 1);
    CHECK(mapped.beta == 2);
    CHECK(mapped.N == 3);
    CHECK(structure_constants(mapped).sigma == -13);
    CHECK(verify_kappa_is_H(cp).pass());
}

TEST_CASE("signed matching requires the plus branch") {
    const CouplingProblem cp{{-1, Rational(1, 2)}, {1, Rational(1)}, 2};
    CHECK(verify_cg_orthonormality(cp).pass());
    CHECK_THROWS_AS(verify_cg_polynomial_match(cp), RegimeError);
    CHECK_THROWS_AS(verify_kappa_is_H(cp), RegimeError);
}
