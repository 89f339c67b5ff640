#include "mhahn/sl_minus.hpp"

#include <string>

#include "mhahn/algebra_h.hpp"
#include "mhahn/errors.hpp"

namespace mhahn {

namespace {

void check(Report& rep, const std::string& name, const RMatrix& residual) {
    bool ok = residual.is_zero();
    std::string detail;
    if (!ok) {
        for (std::size_t i = 0; i < residual.dim() && detail.empty(); ++i)
            for (std::size_t j = 0; j < residual.dim(); ++j)
                if (!residual(i, j).is_zero()) {
                    detail = "first nonzero residual at (" + std::to_string(i) + "," +
                             std::to_string(j) + ") = " + residual(i, j).to_string();
                    break;
                }
    }
    rep.add(name, ok, detail);
}

Rational kappa2_eigenvalue(const CouplingProblem& cp, unsigned k) {
    // Independent of the module signs; alternates around zero with
    // strictly growing magnitude, so all N+1 values are distinct.
    Rational mag = cp.a.mu + cp.b.mu + Rational(static_cast<long>(k)) + Rational(1, 2);
    return ((cp.N + k + 1) % 2 == 0) ? mag : -mag;
}

} // namespace

ModuleLabel::ModuleLabel(int eps, Rational m) : epsilon(eps), mu(std::move(m)) {
    if (eps != 1 && eps != -1) throw Error("module sign must be +1 or -1");
    if (mu.sign() < 0) throw Error("module shift must be non-negative");
}

RMatrix module_action(const ModuleLabel& label, SlGenerator which, unsigned cutoff) {
    if (cutoff == 0) throw Error("cutoff must be positive");
    const std::size_t d = cutoff;
    RMatrix m(d);
    switch (which) {
        case SlGenerator::A0:
            for (std::size_t n = 0; n < d; ++n)
                m(n, n) = Rational(static_cast<long>(n)) + label.mu + Rational(1, 2);
            break;
        case SlGenerator::Aplus:
            for (std::size_t n = 0; n + 1 < d; ++n)
                m(n + 1, n) = mu_number(n + 1, label.mu);
            break;
        case SlGenerator::Aminus:
            for (std::size_t n = 1; n < d; ++n) m(n - 1, n) = Rational(1);
            break;
        case SlGenerator::R:
            for (std::size_t n = 0; n < d; ++n)
                m(n, n) = Rational((n % 2 == 0) ? label.epsilon : -label.epsilon);
            break;
        case SlGenerator::Q: {
            const RMatrix ap = module_action(label, SlGenerator::Aplus, cutoff);
            const RMatrix am = module_action(label, SlGenerator::Aminus, cutoff);
            const RMatrix a0 = module_action(label, SlGenerator::A0, cutoff);
            const RMatrix r = module_action(label, SlGenerator::R, cutoff);
            m = ap * am * r - a0 * r + Rational(1, 2) * r;
            break;
        }
    }
    return m;
}

Report verify_parabose(const ModuleLabel& label, unsigned cutoff) {
    if (cutoff < 3) throw Error("cutoff must be at least 3");
    const std::size_t d = cutoff;
    const RMatrix ap = module_action(label, SlGenerator::Aplus, cutoff);
    const RMatrix am = module_action(label, SlGenerator::Aminus, cutoff);
    const RMatrix a0 = module_action(label, SlGenerator::A0, cutoff);
    const RMatrix r = module_action(label, SlGenerator::R, cutoff);
    const RMatrix I = RMatrix::identity(d);
    const Rational two_eps_mu = 2 * label.epsilon * label.mu;

    Report rep;
    // Raising past the cutoff pollutes the last row of these two products.
    check(rep, "ladder commutator",
          (commutator(am, ap) - I - two_eps_mu * r).principal_submatrix(d - 1));
    check(rep, "ladder anticommutator",
          (anticommutator(ap, am) - 2 * a0).principal_submatrix(d - 1));
    check(rep, "weight raises", commutator(a0, ap) - ap);
    check(rep, "weight lowers", commutator(a0, am) + am);
    check(rep, "raising anticommutes with parity", anticommutator(ap, r));
    check(rep, "lowering anticommutes with parity", anticommutator(am, r));
    check(rep, "weight commutes with parity", commutator(a0, r));
    check(rep, "parity involution", r * r - I);

    const RMatrix q = module_action(label, SlGenerator::Q, cutoff);
    check(rep, "casimir scalar",
          q - RMatrix::scalar(d, -label.epsilon * label.mu));
    return rep;
}

Report verify_kappa_relations(const KappaSet& k) {
    const std::size_t d = k.dim();
    const RMatrix I = RMatrix::identity(d);
    const Rational even_mix = k.lambda1 + k.lambda2 * k.lambda3;
    const Rational odd_mix = k.lambda1 - k.lambda2 * k.lambda3;

    Report rep;
    check(rep, "kappa1 commutes with r", commutator(k.kappa1, k.r));
    check(rep, "kappa2 r anticommutator",
          anticommutator(k.kappa2, k.r) + k.r - RMatrix::scalar(d, even_mix));
    check(rep, "kappa3 anticommutes with r", anticommutator(k.kappa3, k.r));
    check(rep, "kappa1 kappa3 bracket",
          commutator(k.kappa1, k.kappa3) - k.kappa2 + (even_mix / 2) * k.r -
              RMatrix::scalar(d, Rational(1, 2)));
    check(rep, "kappa3 kappa2 bracket",
          commutator(k.kappa3, k.kappa2) - 4 * k.kappa1 -
              even_mix * (k.kappa3 * k.r) + 2 * even_mix * (k.kappa1 * k.r) -
              (k.lambda4 * odd_mix) * k.r);

    // The scalar value carries (lambda1 - lambda2*lambda3)^2: expanding the
    // quadratic element on the lowest basis vector leaves the cross term
    // -lambda1*lambda2*lambda3, which flips the sign inside the square.
    const RMatrix quad = 4 * (k.kappa1 * k.kappa1) + k.kappa2 * k.kappa2 -
                         k.kappa3 * k.kappa3 + k.kappa2 - even_mix * k.r;
    const Rational q_cg =
        odd_mix * odd_mix / 4 + k.lambda4 * k.lambda4 - Rational(5, 4);
    check(rep, "coupled quadratic element scalar", quad - RMatrix::scalar(d, q_cg));
    return rep;
}

KappaSet coupled_operators(const CouplingProblem& cp) {
    const std::size_t d = cp.N + 1;
    const Rational mu_a = cp.a.mu, mu_b = cp.b.mu;
    const long nn = static_cast<long>(cp.N);

    KappaSet k;
    k.lambda1 = Rational(-2 * cp.a.epsilon) * mu_a;
    k.lambda2 = Rational(-2 * cp.b.epsilon) * mu_b;
    k.lambda3 = Rational(((cp.N % 2 == 0) ? 1 : -1) * cp.a.epsilon * cp.b.epsilon);
    k.lambda4 = mu_a + mu_b + Rational(nn + 1);

    std::vector<Rational> d1(d), dra(d), drb(d);
    for (std::size_t n = 0; n < d; ++n) {
        d1[n] = Rational(static_cast<long>(n)) + (mu_a - mu_b - Rational(nn)) / 2;
        dra[n] = Rational((n % 2 == 0) ? cp.a.epsilon : -cp.a.epsilon);
        drb[n] = Rational(((cp.N - n) % 2 == 0) ? cp.b.epsilon : -cp.b.epsilon);
    }
    k.kappa1 = RMatrix::diagonal(d1);
    k.r = RMatrix::diagonal(dra);
    const RMatrix rb = RMatrix::diagonal(drb);

    // On g_n = f_n (x) f_{N-n}: lowering the first factor raises the second
    // and conversely, so both mixed ladders stay inside the subspace.
    RMatrix am_bp(d), ap_bm(d);
    for (std::size_t n = 1; n < d; ++n) am_bp(n - 1, n) = mu_number(cp.N - n + 1, mu_b);
    for (std::size_t n = 0; n + 1 < d; ++n) ap_bm(n + 1, n) = mu_number(n + 1, mu_a);

    const Rational qa = Rational(-cp.a.epsilon) * mu_a;
    const Rational qb = Rational(-cp.b.epsilon) * mu_b;
    const RMatrix q_ab = (am_bp - ap_bm) * k.r - Rational(1, 2) * (k.r * rb) +
                         qa * rb + qb * k.r;
    k.kappa2 = k.lambda3 * q_ab;
    k.kappa3 = commutator(k.kappa1, k.kappa2);

    require<RelationViolation>(verify_kappa_relations(k));
    return k;
}

std::vector<CasimirLine> casimir_spectrum(const CouplingProblem& cp) {
    std::vector<CasimirLine> lines;
    lines.reserve(cp.N + 1);
    const int prod = cp.a.epsilon * cp.b.epsilon;
    for (unsigned s = 0; s <= cp.N; ++s) {
        CasimirLine ln;
        ln.eps_ab = (s % 2 == 0) ? prod : -prod;
        ln.mu_ab = cp.a.mu + cp.b.mu + Rational(static_cast<long>(s)) + Rational(1, 2);
        ln.q_ab = Rational(-ln.eps_ab) * ln.mu_ab;
        lines.push_back(ln);
    }
    return lines;
}

Report verify_casimir_spectrum(const CouplingProblem& cp) {
    const KappaSet k = coupled_operators(cp);
    const RMatrix q_ab = k.lambda3 * k.kappa2;  // lambda3 is its own inverse

    std::vector<Rational> expected;
    for (const auto& ln : casimir_spectrum(cp)) expected.push_back(ln.q_ab);

    Report rep;
    rep.add("coupled casimir spectrum", spectrum_equals(q_ab, expected));

    std::vector<Rational> lin;
    for (unsigned n = 0; n <= cp.N; ++n)
        lin.push_back(Rational(static_cast<long>(n)) +
                      (cp.a.mu - cp.b.mu - Rational(static_cast<long>(cp.N))) / 2);
    rep.add("kappa1 linear spectrum", spectrum_equals(k.kappa1, lin));
    return rep;
}

CGTable clebsch_gordan(const CouplingProblem& cp) {
    const std::size_t d = cp.N + 1;
    const KappaSet k = coupled_operators(cp);

    CGTable t;
    t.dim = d;
    t.squared.assign(d, std::vector<Rational>(d));
    t.sign.assign(d, std::vector<int>(d, 0));
    t.V.assign(d, std::vector<Rational>(d));
    t.two_eig.resize(d);
    t.F.resize(d);
    t.T.resize(d);
    t.phase_row.resize(d);

    for (std::size_t n = 0; n < d; ++n)
        t.F[n] = mu_factorial(n, cp.a.mu) * mu_factorial(cp.N - n, cp.b.mu);

    for (unsigned kcol = 0; kcol < d; ++kcol) {
        const Rational eig = kappa2_eigenvalue(cp, kcol);
        t.two_eig[kcol] = 2 * eig;
        RMatrix shifted = k.kappa2 - RMatrix::scalar(d, eig);
        auto null = shifted.nullspace();
        if (null.empty())
            throw DegenerateEigenvalue("predicted eigenvalue " + eig.to_string() +
                                       " is not in the spectrum");
        if (null.size() > 1)
            throw DegenerateEigenvalue("eigenspace of " + eig.to_string() +
                                       " has dimension " + std::to_string(null.size()));
        auto v = null.front();

        unsigned anchor = 0;
        while (anchor < d && v[anchor].is_zero()) ++anchor;
        t.phase_row[kcol] = anchor;  // anchor < d: eigenvectors are nonzero
        if (v[anchor].sign() < 0)
            for (auto& c : v) c = -c;

        Rational norm;
        for (std::size_t n = 0; n < d; ++n) norm += v[n] * v[n] / t.F[n];
        t.T[kcol] = norm;
        for (std::size_t n = 0; n < d; ++n) {
            t.V[n][kcol] = v[n];
            t.squared[n][kcol] = v[n] * v[n] / (t.F[n] * norm);
            t.sign[n][kcol] = v[n].sign();
        }
    }
    return t;
}

Report verify_cg_orthonormality(const CouplingProblem& cp) {
    const CGTable t = clebsch_gordan(cp);
    const std::size_t d = t.dim;
    Report rep;

    bool cols = true;
    std::string cdetail;
    for (std::size_t k1 = 0; k1 < d && cols; ++k1)
        for (std::size_t k2 = k1; k2 < d && cols; ++k2) {
            // Inner product of columns k1, k2 is sum_n V V' / F over sqrt(T T');
            // rationally: the sum must be 0 (k1 != k2) or T_k (k1 == k2).
            Rational s;
            for (std::size_t n = 0; n < d; ++n) s += t.V[n][k1] * t.V[n][k2] / t.F[n];
            const Rational want = (k1 == k2) ? t.T[k1] : Rational(0);
            if (s != want) {
                cols = false;
                cdetail = "columns " + std::to_string(k1) + "," + std::to_string(k2);
            }
        }
    rep.add("columns orthonormal", cols, cdetail);

    bool rows = true;
    std::string rdetail;
    for (std::size_t n = 0; n < d && rows; ++n)
        for (std::size_t m = n; m < d && rows; ++m) {
            Rational s;
            for (std::size_t kc = 0; kc < d; ++kc)
                s += t.V[n][kc] * t.V[m][kc] / t.T[kc];
            const Rational want = (n == m) ? t.F[n] : Rational(0);
            if (s != want) {
                rows = false;
                rdetail = "rows " + std::to_string(n) + "," + std::to_string(m);
            }
        }
    rep.add("rows orthonormal", rows, rdetail);

    bool unit = true;
    for (std::size_t kc = 0; kc < d && unit; ++kc) {
        Rational s;
        for (std::size_t n = 0; n < d; ++n) s += t.squared[n][kc];
        unit = (s == Rational(1));
    }
    rep.add("squared columns sum to one", unit);
    return rep;
}

HahnParams cg_parameter_map(const CouplingProblem& cp) {
    const Rational nn(static_cast<long>(cp.N));
    if (cp.N % 2 == 0)
        return HahnParams(2 * cp.b.mu + nn + 1, 2 * cp.a.mu + nn + 1, cp.N);
    return HahnParams(2 * cp.a.mu, 2 * cp.b.mu, cp.N);
}

Report verify_cg_polynomial_match(const CouplingProblem& cp) {
    if (cp.a.epsilon != 1 || cp.b.epsilon != 1)
        throw RegimeError("polynomial identification requires both module signs +1");
    const HahnParams hp = cg_parameter_map(cp);
    const CGTable t = clebsch_gordan(cp);
    const KappaSet k = coupled_operators(cp);
    const std::size_t d = t.dim;
    const auto xs = grid(hp);
    const auto wt = weights(hp);
    const bool even = cp.N % 2 == 0;

    Report rep;
    rep.add("kappa2 spectrum matches the z grid",
            spectrum_equals(2 * k.kappa2, t.two_eig));

    bool gridrel = true;
    for (std::size_t kc = 0; kc < d && gridrel; ++kc)
        gridrel = (t.two_eig[kc] == (even ? xs[cp.N - kc] : xs[kc]));
    rep.add("z grid equals the polynomial grid", gridrel);

    // In the literal product basis the off-diagonal entries of the coupled
    // Casimir alternate in sign, while the symmetrized Jacobi matrix of the
    // polynomials has positive off-diagonals. The bases differ by the fixed
    // involution s_n = (-1)^(nN + n(n+1)/2), determined by s_{n-1} s_n =
    // (-1)^(N+n); the signed identification holds after that regauge and the
    // squared one verbatim.
    std::vector<int> s(d, 1);
    for (std::size_t n = 1; n < d; ++n)
        s[n] = ((cp.N + n) % 2 == 0) ? s[n - 1] : -s[n - 1];

    bool sq = true, sg = true;
    std::string detail;
    for (std::size_t kc = 0; kc < d && sq && sg; ++kc) {
        const Rational& z = t.two_eig[kc];
        const Rational w = even ? wt.omega[cp.N - kc] : wt.omega[kc];
        for (std::size_t n = 0; n < d; ++n) {
            const Rational q = eval_recurrence(hp, static_cast<unsigned>(n), z);
            if (t.squared[n][kc] != w * q * q / wt.v[n]) {
                sq = false;
                detail = "entry (" + std::to_string(n) + "," + std::to_string(kc) + ")";
                break;
            }
            if (t.sign[n][kc] != s[n] * q.sign()) {
                sg = false;
                detail = "entry (" + std::to_string(n) + "," + std::to_string(kc) + ")";
                break;
            }
        }
    }
    rep.add("squared coefficients match weight * Q^2 / norm", sq, sq ? "" : detail);
    rep.add("coefficient signs match sign(Q) after the basis regauge", sg,
            sg ? "" : detail);
    return rep;
}

Report verify_kappa_is_H(const CouplingProblem& cp) {
    if (cp.a.epsilon != 1 || cp.b.epsilon != 1)
        throw RegimeError("the identification requires both module signs +1");
    const HahnParams hp = cg_parameter_map(cp);
    const StructureConstants sc = structure_constants(hp);
    const KappaSet k = coupled_operators(cp);
    const std::size_t d = k.dim();

    Report rep;
    rep.add("anticommutator constant witness",
            -2 * sc.nu == k.lambda1 + k.lambda2 * k.lambda3,
            "-2nu vs lambda1 + lambda2*lambda3");
    rep.add("closing constant witness",
            sc.sigma == sc.nu * sc.rho +
                            k.lambda4 * (k.lambda1 - k.lambda2 * k.lambda3),
            "sigma vs nu*rho + lambda4*(lambda1 - lambda2*lambda3)");

    GeneratorSet g;
    g.constants = sc;
    g.K1 = k.kappa1 - RMatrix::scalar(d, sc.rho / 4);
    g.K2 = k.kappa2;
    g.K3 = commutator(g.K1, g.K2);
    g.P = k.r;

    std::vector<Rational> range;
    for (std::size_t n = 0; n < d; ++n) range.emplace_back(static_cast<long>(n));
    rep.add("shifted kappa1 spectrum is 0..N", spectrum_equals(g.K1, range));
    rep.merge(verify_relations(g));
    return rep;
}

} // namespace mhahn
