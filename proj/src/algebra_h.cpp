#include "mhahn/algebra_h.hpp"

#include "mhahn/errors.hpp"

namespace mhahn {

namespace {

std::string residual_note(const RMatrix& r) {
    // Compact one-line sketch of where a relation fails.
    for (std::size_t i = 0; i < r.dim(); ++i)
        for (std::size_t j = 0; j < r.dim(); ++j)
            if (!r(i, j).is_zero())
                return "first nonzero residual at (" + std::to_string(i) + "," +
                       std::to_string(j) + ") = " + r(i, j).to_string();
    return "";
}

void check(Report& rep, const std::string& name, const RMatrix& residual) {
    const bool ok = residual.is_zero();
    rep.add(name, ok, ok ? "" : residual_note(residual));
}

std::vector<Rational> integer_range(std::size_t count) {
    std::vector<Rational> v;
    v.reserve(count);
    for (std::size_t n = 0; n < count; ++n) v.emplace_back(static_cast<long>(n));
    return v;
}

} // namespace

StructureConstants structure_constants(const HahnParams& p) {
    const Rational a = p.alpha, b = p.beta, n(static_cast<long>(p.N));
    StructureConstants c;
    if (p.even()) {
        c.nu = (a + b - 2 * n - 2) / 2;
        c.sigma = a - b + 2 * n * (n + 1 - b);
        c.rho = b - a - 2 * n;
    } else {
        c.nu = (a - b) / 2;
        c.sigma = -(a + b + 2 * a * b + 2 * n * a);
        c.rho = a - b - 2 * n;
    }
    return c;
}

GeneratorSet build_realization(const HahnParams& p) {
    const std::size_t d = p.N + 1;
    GeneratorSet g;
    g.constants = structure_constants(p);

    std::vector<Rational> diag1(d), diagP(d);
    for (std::size_t n = 0; n < d; ++n) {
        diag1[n] = Rational(static_cast<long>(n));
        diagP[n] = (n % 2 == 0) ? Rational(1) : Rational(-1);
    }
    g.K1 = RMatrix::diagonal(diag1);
    g.P = RMatrix::diagonal(diagP);

    // 2*K2 is the Jacobi matrix of the recurrence: u_n below the diagonal,
    // b_n on it, 1 above. Columns of the Q-value table then diagonalize it.
    RMatrix two_k2(d);
    for (std::size_t n = 0; n < d; ++n) {
        const auto rc = recurrence_coefficients(p, static_cast<unsigned>(n));
        two_k2(n, n) = rc.b;
        if (n > 0) two_k2(n, n - 1) = rc.u;
        if (n + 1 < d) two_k2(n, n + 1) = Rational(1);
    }
    g.K2 = Rational(1, 2) * two_k2;
    g.K3 = commutator(g.K1, g.K2);
    return g;
}

Report verify_relations(const GeneratorSet& g) {
    const std::size_t d = g.dim();
    const RMatrix I = RMatrix::identity(d);
    const Rational& nu = g.constants.nu;
    const Rational& sigma = g.constants.sigma;
    const Rational& rho = g.constants.rho;

    Report rep;
    check(rep, "P involution", g.P * g.P - I);
    check(rep, "K1 commutes with P", commutator(g.K1, g.P));
    check(rep, "K2 anticommutes with P up to constants",
          anticommutator(g.K2, g.P) + g.P + RMatrix::scalar(d, 2 * nu));
    check(rep, "K3 anticommutes with P", anticommutator(g.K3, g.P));
    check(rep, "K3 is the K1,K2 bracket", commutator(g.K1, g.K2) - g.K3);
    check(rep, "K1,K3 bracket closes on K2",
          commutator(g.K1, g.K3) - g.K2 - nu * g.P - RMatrix::scalar(d, Rational(1, 2)));
    check(rep, "K3,K2 bracket closes on K1",
          commutator(g.K3, g.K2) - 4 * g.K1 - 4 * nu * (g.K1 * g.P) +
              2 * nu * (g.K3 * g.P) - sigma * g.P - RMatrix::scalar(d, rho));
    return rep;
}

RMatrix casimir_H(const GeneratorSet& g) {
    const Rational& nu = g.constants.nu;
    const Rational& rho = g.constants.rho;
    return 4 * (g.K1 * g.K1) + g.K2 * g.K2 - g.K3 * g.K3 + g.K2 +
           2 * rho * g.K1 + 2 * nu * g.P;
}

TransitionMatrix transition_matrix(const HahnParams& p) {
    const std::size_t d = p.N + 1;
    TransitionMatrix t;
    t.S = RMatrix(d);
    t.halfgrid.reserve(d);
    const auto xs = grid(p);
    for (std::size_t j = 0; j < d; ++j) {
        t.halfgrid.push_back(xs[j] / 2);
        for (std::size_t i = 0; i < d; ++i)
            t.S(i, j) = eval_recurrence(p, static_cast<unsigned>(i), xs[j]);
    }
    if (t.S.determinant().is_zero())
        throw SingularTransition("polynomial value matrix is singular");
    return t;
}

Report verify_pentadiagonality(const HahnParams& p) {
    const auto g = build_realization(p);
    const auto t = transition_matrix(p);
    const RMatrix B = t.S.inverse() * g.K1 * t.S;

    Report rep;
    rep.add("conjugated K1 bandwidth at most 2", B.bandwidth() <= 2,
            "bandwidth = " + std::to_string(B.bandwidth()));
    rep.add("conjugated K1 spectrum is 0..N",
            spectrum_equals(B, integer_range(g.dim())));
    // Sanity that the conjugation really is the K2 eigenbasis.
    rep.add("K2 diagonal in the eigenbasis",
            t.S.inverse() * g.K2 * t.S == RMatrix::diagonal(t.halfgrid));
    return rep;
}

Report verify_tilde(const GeneratorSet& g) {
    const std::size_t d = g.dim();
    const Rational& nu = g.constants.nu;
    const Rational& sigma = g.constants.sigma;
    const Rational& rho = g.constants.rho;
    const Rational chi = (sigma - nu * rho) / 4;
    const Rational half(1, 2);

    const RMatrix T1 = g.K1 + RMatrix::scalar(d, rho / 4);
    const RMatrix T2 = half * (g.K2 + nu * g.P + RMatrix::scalar(d, half));
    const RMatrix T3 = half * g.K3;

    Report rep;
    check(rep, "shifted K1 commutes with P", commutator(T1, g.P));
    check(rep, "shifted K2 anticommutes with P", anticommutator(T2, g.P));
    check(rep, "shifted K3 anticommutes with P", anticommutator(T3, g.P));
    check(rep, "rotated bracket one", commutator(T1, T2) - T3);
    check(rep, "rotated bracket two", commutator(T1, T3) - T2);
    check(rep, "rotated bracket three",
          commutator(T3, T2) - T1 - nu * (T1 * g.P) - chi * g.P);

    const RMatrix quad = T1 * T1 + T2 * T2 - T3 * T3 + (nu / 2) * g.P;
    rep.add("quadratic element scalar", quad.as_scalar().has_value());
    return rep;
}

TildeSet tilde_presentation(const GeneratorSet& g) {
    const auto rep = verify_tilde(g);
    require<RelationViolation>(rep);
    const std::size_t d = g.dim();
    TildeSet t;
    t.nu = g.constants.nu;
    t.chi = (g.constants.sigma - g.constants.nu * g.constants.rho) / 4;
    t.K1 = g.K1 + RMatrix::scalar(d, g.constants.rho / 4);
    t.K2 = Rational(1, 2) * (g.K2 + t.nu * g.P + RMatrix::scalar(d, Rational(1, 2)));
    t.K3 = Rational(1, 2) * g.K3;
    t.P = g.P;
    return t;
}

} // namespace mhahn
