#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "mhahn/algebra_h.hpp"
#include "mhahn/dual_rep.hpp"
#include "mhahn/errors.hpp"
#include "mhahn/hahn.hpp"
#include "mhahn/matrix.hpp"

using namespace mhahn;

namespace {

FreeParams generic_gauge(unsigned N) {
    std::vector<Rational> v;
    for (unsigned i = 0; i <= N; ++i) v.emplace_back(Rational(2 * long(i) + 2, 2 * long(i) + 1));
    return FreeParams(std::move(v));
}

std::map<std::string, int> finding_counts(const std::vector<BlockFinding>& findings) {
    std::map<std::string, int> counts;
    for (const auto& f : findings) {
        CHECK(f.explained);
        ++counts[f.id];
    }
    return counts;
}

} // namespace

TEST_CASE("gauge vectors must be nonzero and sized to the module") {
    CHECK_THROWS_AS(FreeParams({Rational(1), Rational(0)}), ZeroParameter);
    CHECK(FreeParams::ones(3).values.size() == 4);

    const HahnParams p(Rational(3), Rational(2), 3);
    CHECK_THROWS_AS(build_dual_rep_printed(p, FreeParams::ones(2)), ZeroParameter);
}

TEST_CASE("two-dimensional cell pins the involution block") {
    const HahnParams p(Rational(3), Rational(2), 1);
    const DualRep d = build_dual_rep_printed(p, FreeParams::ones(1));

    CHECK(d.K2(0, 0) == 3);
    CHECK(d.K2(1, 1) == -4);
    CHECK(d.spectrum_lambda == dual_spectrum(p));
    CHECK(d.spectrum_lambda == std::vector<Rational>{Rational(3), Rational(-4)});

    CHECK(d.P(0, 0) == Rational(-1, 7));
    CHECK(d.P(0, 1) == Rational(6, 7));
    CHECK(d.P(1, 0) == Rational(8, 7));
    CHECK(d.P(1, 1) == Rational(1, 7));
    CHECK(d.P * d.P == RMatrix::identity(2));

    CHECK(verify_dual_rep(d).pass());
}

TEST_CASE("closed-form build verifies on both parities") {
    const HahnParams podd(Rational(3), Rational(2), 3);
    const DualRep dodd = build_dual_rep_printed(podd, FreeParams::ones(3));
    CHECK(verify_dual_rep(dodd).pass());
    CHECK(dodd.K1.trace() == 6);  // spectrum 0..N

    const HahnParams peven(Rational(4), Rational(3), 2);
    const DualRep deven = build_dual_rep_printed(peven, generic_gauge(2));
    CHECK(verify_dual_rep(deven).pass());
    CHECK(spectrum_equals(deven.K1, {Rational(0), Rational(1), Rational(2)}));
}

TEST_CASE("derivation from the relations alone") {
    const HahnParams p0(Rational(1), Rational(2), 0);
    const DualRep d0 = derive_dual_rep(p0, FreeParams::ones(0));
    CHECK(d0.K1(0, 0) == 0);
    CHECK(d0.K2(0, 0) == -1);
    CHECK(d0.P(0, 0) == 1);

    const HahnParams p(Rational(4), Rational(4), 2);
    const DualRep d = derive_dual_rep(p, generic_gauge(2));
    CHECK(verify_dual_rep(d).pass());
    CHECK(spectrum_equals(d.K1, {Rational(0), Rational(1), Rational(2)}));
}

TEST_CASE("derived and closed-form representations coincide") {
    const std::vector<HahnParams> cells = {
        HahnParams(Rational(3), Rational(2), 3), HahnParams(Rational(4), Rational(3), 2),
        HahnParams(Rational(7, 2), Rational(7, 2), 5), HahnParams(Rational(5), Rational(6), 4)};
    for (const auto& p : cells) {
        const FreeParams fp = generic_gauge(p.N);
        const DualRep a = build_dual_rep_printed(p, fp);
        const DualRep b = derive_dual_rep(p, fp);
        CHECK(a.K2 == b.K2);
        CHECK(a.P == b.P);
        // K1 may differ by the residual diagonal gauge; the comparison
        // routine aligns it, so agreement shows up as explained findings only
        for (const auto& f : compare_printed_blocks(p, fp)) CHECK(f.explained);
    }
}

TEST_CASE("a perturbed entry is caught without throwing") {
    const HahnParams p(Rational(3), Rational(2), 3);
    DualRep d = build_dual_rep_printed(p, FreeParams::ones(3));
    d.K1(0, 0) += 1;
    const Report rep = verify_dual_rep(d);
    CHECK_FALSE(rep.pass());
    CHECK(rep.first_failure() != nullptr);
}

TEST_CASE("transcription findings are the expected ones") {
    // odd parity: three pair blocks at N = 5
    const HahnParams podd(Rational(3), Rational(2), 5);
    const auto odd = finding_counts(compare_printed_blocks(podd, generic_gauge(5)));
    CHECK(odd.at("odd-gamma-lower-gauge") == 3);
    CHECK(odd.at("odd-u-lower-left") == 2);
    CHECK(odd.at("odd-u-lower-right") == 2);
    CHECK(odd.at("odd-d-upper-left-variant") == 2);
    CHECK(odd.size() == 4);

    // even parity: two pair blocks plus the tail at N = 4
    const HahnParams peven(Rational(5), Rational(6), 4);
    const auto even = finding_counts(compare_printed_blocks(peven, generic_gauge(4)));
    CHECK(even.at("even-gamma-upper-print") == 2);
    CHECK(even.at("even-c-lower-sign") == 2);
    CHECK(even.size() == 2);
}

TEST_CASE("similarity onto the primal realization") {
    const std::vector<HahnParams> cells = {HahnParams(Rational(3), Rational(2), 3),
                                           HahnParams(Rational(4), Rational(3), 2)};
    for (const auto& p : cells) {
        const DualRep d = derive_dual_rep(p, generic_gauge(p.N));
        const RMatrix m = similarity_to_primal(p, d);
        const GeneratorSet g = build_realization(p);
        CHECK(m.determinant() != 0);
        CHECK(g.K1 * m == m * d.K1);
        CHECK(g.K2 * m == m * d.K2);
        CHECK(g.P * m == m * d.P);
        CHECK(intertwiner_dimension(p, d) == 1);
    }
}

TEST_CASE("derivation refuses the degenerate corner") {
    // alpha = beta = 0 with odd N: the first elimination stage loses its
    // pivot, and guessing is not an option. The closed form still stands.
    const HahnParams p(Rational(0), Rational(0), 3);
    CHECK_THROWS_AS(derive_dual_rep(p, FreeParams::ones(3)), InconsistentSystem);
    CHECK(verify_dual_rep(build_dual_rep_printed(p, FreeParams::ones(3))).pass());
}
