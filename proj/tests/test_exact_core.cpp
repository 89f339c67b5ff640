#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mhahn/errors.hpp"
#include "mhahn/hypergeom.hpp"
#include "mhahn/matrix.hpp"
#include "mhahn/rational.hpp"

using namespace mhahn;

TEST_CASE("rational literals round trip and canonicalize") {
    CHECK(Rational::from_string("3/4").to_string() == "3/4");
    CHECK(Rational::from_string("-7").to_string() == "-7");
    CHECK(Rational::from_string("+5/10").to_string() == "1/2");
    CHECK(Rational::from_string("12/8") == Rational(3, 2));
    CHECK(Rational::from_string("0/9").to_string() == "0");
    CHECK(Rational(-3, 6).to_string() == "-1/2");

    CHECK_THROWS_AS(Rational::from_string(""), ParseError);
    CHECK_THROWS_AS(Rational::from_string("a/b"), ParseError);
    CHECK_THROWS_AS(Rational::from_string("1/-2"), ParseError);
    CHECK_THROWS_AS(Rational::from_string("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::from_string("1.5"), ParseError);
}

TEST_CASE("rational arithmetic and predicates") {
    const Rational a(3, 4), b(-2, 3);
    CHECK(a + b == Rational(1, 12));
    CHECK(a * b == Rational(-1, 2));
    CHECK(a / b == Rational(-9, 8));
    CHECK(a - 1 == Rational(-1, 4));
    CHECK(2 * a == Rational(3, 2));
    CHECK(abs(b) == Rational(2, 3));
    CHECK(pow_ui(b, 3) == Rational(-8, 27));
    CHECK(a < 1);
    CHECK(b.sign() == -1);
    CHECK(Rational(6, 3).is_integer());
    CHECK_FALSE(a.is_integer());
    CHECK(Rational(-4).is_nonpositive_integer());
    CHECK(Rational(-4).nonpositive_magnitude() == 4);
    CHECK(a.approx() == doctest::Approx(0.75));
}

TEST_CASE("rising factorial values and additivity") {
    CHECK(pochhammer(Rational(1), 4) == 24);
    CHECK(pochhammer(Rational(-3, 2), 2) == Rational(3, 4));
    CHECK(pochhammer(Rational(5, 7), 0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(0) == 1);

    // (a)_{m+n} = (a)_m (a+m)_n across a small rational sample
    const std::vector<Rational> sample = {Rational(2), Rational(-5, 2), Rational(1, 3),
                                          Rational(-4)};
    for (const auto& a : sample)
        for (unsigned m = 0; m <= 3; ++m)
            for (unsigned n = 0; n <= 3; ++n)
                CHECK(pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a + Rational(m), n));
}

TEST_CASE("terminating series evaluation") {
    // sum_k (-2)_k / k! at unit argument collapses to (1-1)^2
    CHECK(hyp3f2_terminating(Rational(-2), Rational(1), Rational(1), Rational(1), Rational(1),
                             Rational(1)) == 0);

    // with a spectator parameter upstairs and downstairs this is the
    // classical finite sum (d-b)_n / (d)_n
    const Rational b(1, 2), d(5, 3), c(7);
    const unsigned n = 3;
    CHECK(hyp3f2_terminating(Rational(-long(n)), b, c, d, c, Rational(1)) ==
          pochhammer(d - b, n) / pochhammer(d, n));

    // termination index is the smallest nonpositive upper magnitude, here 1:
    // 1 + (-1)(-9)(2)/(3 * 4) * 5
    CHECK(hyp3f2_terminating(Rational(-1), Rational(-9), Rational(2), Rational(3), Rational(4),
                             Rational(5)) == Rational(17, 2));

    CHECK_THROWS_AS(hyp3f2_terminating(Rational(1, 2), Rational(1), Rational(1), Rational(2),
                                       Rational(2), Rational(1)),
                    NonTerminating);
    CHECK_THROWS_AS(hyp3f2_terminating(Rational(-3), Rational(1), Rational(1), Rational(-2),
                                       Rational(1), Rational(1)),
                    PoleInLowerParameter);
}

namespace {

RMatrix sample_matrix(std::size_t dim, long salt) {
    RMatrix m(dim);
    long v = salt;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            v = (v * 37 + 11) % 19 - 9;
            m(i, j) = Rational(v, (i + j) % 3 + 1);
        }
    return m;
}

} // namespace

TEST_CASE("matrix constructors and accessors") {
    const RMatrix id = RMatrix::identity(3);
    CHECK(id.as_scalar() == Rational(1));
    CHECK(id.bandwidth() == 0);
    CHECK(RMatrix::scalar(4, Rational(5, 2)).trace() == 10);

    const RMatrix d = RMatrix::diagonal({Rational(1), Rational(2), Rational(2)});
    CHECK(spectrum_equals(d, {Rational(2), Rational(1), Rational(2)}));
    CHECK_FALSE(spectrum_equals(d, {Rational(1), Rational(1), Rational(2)}));
    CHECK_FALSE(d.as_scalar().has_value());

    CHECK(d.apply({Rational(1), Rational(1), Rational(1)}) ==
          std::vector<Rational>{Rational(1), Rational(2), Rational(2)});
}

TEST_CASE("inverse, determinant and characteristic polynomial agree") {
    const RMatrix a = sample_matrix(4, 3);
    REQUIRE(a.determinant() != 0);
    CHECK(a.inverse() * a == RMatrix::identity(4));

    // det(xI - A) at x = 0 is (-1)^n det A; the subleading coefficient is
    // minus the trace
    const auto p = a.char_poly();
    REQUIRE(p.size() == 5);
    CHECK(p[4] == 1);
    CHECK(p[0] == a.determinant());  // n = 4 here, so the sign drops out
    CHECK(p[3] == -a.trace());
    CHECK(poly_eval(p, Rational(0)) == p[0]);

    RMatrix singular(3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) singular(i, j) = Rational(long(i) + 1);
    CHECK_THROWS_AS(singular.inverse(), SingularMatrix);
    CHECK(singular.determinant() == 0);
    CHECK(singular.nullspace().size() == 2);
    for (const auto& v : singular.nullspace()) {
        const auto image = singular.apply(v);
        for (const auto& entry : image) CHECK(entry == 0);
    }
}

TEST_CASE("bandwidth and principal corner") {
    RMatrix m(4);
    m(0, 0) = 1;
    m(1, 0) = 2;
    m(0, 1) = 3;
    CHECK(m.bandwidth() == 1);
    m(3, 1) = 5;
    CHECK(m.bandwidth() == 2);
    CHECK(m.principal_submatrix(2).dim() == 2);
    CHECK(m.principal_submatrix(2)(1, 0) == 2);
}

TEST_CASE("commutators satisfy the Jacobi identity") {
    const RMatrix a = sample_matrix(4, 1), b = sample_matrix(4, 2), c = sample_matrix(4, 5);
    const RMatrix lhs = commutator(commutator(a, b), c) + commutator(commutator(b, c), a) +
                        commutator(commutator(c, a), b);
    CHECK(lhs.is_zero());
    CHECK(anticommutator(a, b) == anticommutator(b, a));
}

TEST_CASE("polynomials from roots") {
    const auto p = poly_from_roots({Rational(1), Rational(2)});
    REQUIRE(p.size() == 3);
    CHECK(p[0] == 2);
    CHECK(p[1] == -3);
    CHECK(p[2] == 1);
    CHECK(poly_eval(p, Rational(3)) == 2);
    CHECK(poly_eval(p, Rational(1)) == 0);
}

TEST_CASE("rectangular solves expose particular and homogeneous parts") {
    // x + y = 3, 2x + 2y = 6: consistent with a one-dimensional kernel
    const std::vector<std::vector<Rational>> a = {{Rational(1), Rational(1)},
                                                  {Rational(2), Rational(2)}};
    const auto r = solve_linear(a, {Rational(3), Rational(6)});
    REQUIRE(r.consistent);
    CHECK(r.particular[0] + r.particular[1] == 3);
    REQUIRE(r.kernel.size() == 1);
    CHECK(r.kernel[0][0] + r.kernel[0][1] == 0);

    const auto bad = solve_linear(a, {Rational(3), Rational(7)});
    CHECK_FALSE(bad.consistent);

    const auto k = kernel_basis(a);
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == -k[0][1]);
}
