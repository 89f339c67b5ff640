#include "mhahn/hahn.hpp"

#include "mhahn/errors.hpp"
#include "mhahn/hypergeom.hpp"

namespace mhahn {

HahnParams::HahnParams(Rational alpha_, Rational beta_, unsigned N_)
    : alpha(std::move(alpha_)), beta(std::move(beta_)), N(N_) {
    const Rational bound = even() ? Rational(static_cast<long>(N)) : Rational(-1);
    if (!(alpha > bound) || !(beta > bound))
        throw RegimeError("parameters outside the positivity regime: need alpha, beta > " +
                          bound.to_string() + " for N = " + std::to_string(N));
}

Rational HahnParams::xi() const {
    return even() ? (beta - Rational(static_cast<long>(N)) - 1) / 2 : alpha / 2;
}

Rational HahnParams::zeta() const {
    return even() ? (alpha - Rational(static_cast<long>(N)) - 1) / 2 : beta / 2;
}

Rational mu_number(unsigned long n, const Rational& mu) {
    Rational r(static_cast<long>(n));
    if (n % 2 == 1) r += 2 * mu;
    return r;
}

Rational mu_factorial(unsigned long n, const Rational& mu) {
    Rational p(1);
    for (unsigned long k = 1; k <= n; ++k) p *= mu_number(k, mu);
    return p;
}

RecurrencePair recurrence_coefficients(const HahnParams& p, unsigned n) {
    if (n > p.N + 1) throw Error("recurrence index out of range");
    const Rational two_xi = 2 * p.xi(), two_zeta = 2 * p.zeta();
    const Rational swing = p.even() ? two_xi + two_zeta : two_xi - two_zeta;
    RecurrencePair r;
    r.b = (n % 2 == 0 ? -swing : swing) - 1;
    r.u = 4 * mu_number(n, p.xi()) * mu_number(p.N - n + 1, p.zeta());
    return r;
}

Rational grid_point(const HahnParams& p, unsigned s) {
    if (s > p.N) throw Error("grid index out of range");
    const Rational inner = Rational(2 * static_cast<long>(s) + 1) +
                           (p.even() ? -(p.alpha + p.beta) : p.alpha + p.beta);
    return s % 2 == 0 ? inner : -inner;
}

std::vector<Rational> grid(const HahnParams& p) {
    std::vector<Rational> g;
    g.reserve(p.N + 1);
    for (unsigned s = 0; s <= p.N; ++s) g.push_back(grid_point(p, s));
    return g;
}

WeightTable weights(const HahnParams& p) {
    const Rational a = p.alpha, b = p.beta;
    const Rational half(1, 2);
    WeightTable t;
    t.omega.resize(p.N + 1);
    t.v.resize(p.N + 1);

    for (unsigned s = 0; s <= p.N; ++s) {
        const unsigned long j = s / 2, q = s % 2;
        Rational w;
        if (p.even()) {
            const Rational num = pochhammer(-Rational(static_cast<long>(p.N)) / 2, j + q) *
                                 pochhammer(1 - a / 2, j) *
                                 pochhammer(1 - a / 2 - b / 2, j);
            const Rational den = factorial(j) * pochhammer(1 - b / 2, j) *
                                 pochhammer(Rational(static_cast<long>(p.N)) / 2 + 1 - a / 2 - b / 2, j + q);
            if (den.is_zero()) throw Error("vanishing weight denominator");
            w = num / den;
        } else {
            const Rational num = pochhammer(-Rational(static_cast<long>(p.N) - 1) / 2, j) *
                                 pochhammer(half + a / 2, j + q) *
                                 pochhammer(1 + a / 2 + b / 2, j);
            const Rational den = factorial(j) * pochhammer(half + b / 2, j + q) *
                                 pochhammer(Rational(static_cast<long>(p.N)) / 2 + Rational(3, 2) + a / 2 + b / 2, j);
            if (den.is_zero()) throw Error("vanishing weight denominator");
            w = num / den;
        }
        t.omega[s] = (j % 2 == 0) ? w : -w;
    }

    // Common bracket of the squared norms.
    Rational bracket;
    unsigned long half_count;
    if (p.even()) {
        half_count = p.N / 2;
        const Rational den = pochhammer(1 - b / 2, half_count);
        if (den.is_zero()) throw Error("vanishing norm denominator");
        bracket = pochhammer(1 - (a + b) / 2, half_count) / den;
    } else {
        half_count = (p.N + 1) / 2;
        const Rational den = pochhammer((b + 1) / 2, half_count);
        if (den.is_zero()) throw Error("vanishing norm denominator");
        bracket = pochhammer(1 + (a + b) / 2, half_count) / den;
    }

    for (unsigned n = 0; n <= p.N; ++n) {
        const unsigned long j = n / 2, q = n % 2;
        const Rational sixteen = pow_ui(Rational(16), n);
        Rational core;
        if (p.even()) {
            core = factorial(j) * pochhammer(1 - a / 2, j) *
                   pochhammer(-Rational(static_cast<long>(p.N)) / 2, j + q) *
                   pochhammer(b / 2 - Rational(static_cast<long>(p.N)) / 2, j + q);
        } else {
            core = factorial(j) * pochhammer(half + a / 2, j + q) *
                   pochhammer(half - Rational(static_cast<long>(p.N)) / 2, j) *
                   pochhammer(-b / 2 - Rational(static_cast<long>(p.N)) / 2, j + q);
        }
        Rational v = sixteen * core * bracket;
        t.v[n] = (q == 0) ? v : -v;
    }
    return t;
}

Rational eval_recurrence(const HahnParams& p, unsigned n, const Rational& x) {
    if (n > p.N + 1) throw Error("degree out of range");
    Rational prev(0), cur(1);  // Q_{-1}, Q_0
    for (unsigned k = 0; k < n; ++k) {
        const auto rc = recurrence_coefficients(p, k);
        Rational next = (x - rc.b) * cur - rc.u * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

Rational eval_hypergeometric(const HahnParams& p, unsigned n, const Rational& x) {
    if (n > p.N) throw Error("degree out of range for the closed form");
    const Rational a = p.alpha, b = p.beta;
    const unsigned long m = n / 2;
    const Rational mm(-static_cast<long>(m));
    const Rational nn(static_cast<long>(p.N));

    if (p.even()) {
        const Rational delta = Rational(1, 2) - (a + b) / 4;
        const Rational up = delta + (x + 1) / 4, dn = delta - (x + 1) / 4;
        if (n % 2 == 0) {
            const Rational pre = pow_ui(Rational(16), m) *
                                 pochhammer(-nn / 2, m) * pochhammer(1 - a / 2, m);
            return pre * hyp3f2_terminating(mm, up, dn, -nn / 2, 1 - a / 2, 1);
        }
        const Rational tau = 2 * nn + 2 - a - b;
        const Rational pre = pow_ui(Rational(16), m) *
                             pochhammer(1 - nn / 2, m) * pochhammer(1 - a / 2, m);
        return pre * (x + 1 - tau) *
               hyp3f2_terminating(mm, up, dn, 1 - nn / 2, 1 - a / 2, 1);
    }

    const Rational eta = (a + b + 2) / 4;
    const Rational up = eta + (x + 1) / 4, dn = eta - (x + 1) / 4;
    const Rational low1 = (1 - nn) / 2;
    if (n % 2 == 0) {
        const Rational pre = pow_ui(Rational(16), m) *
                             pochhammer(low1, m) * pochhammer((a + 1) / 2, m);
        return pre * hyp3f2_terminating(mm, up, dn, low1, (a + 1) / 2, 1);
    }
    const Rational pre = pow_ui(Rational(16), m) *
                         pochhammer(low1, m) * pochhammer((a + 3) / 2, m);
    return pre * (x + 1 + a - b) *
           hyp3f2_terminating(mm, up, dn, low1, (a + 3) / 2, 1);
}

Report verify_orthogonality(const HahnParams& p) {
    Report rep;
    const auto xs = grid(p);
    const auto wt = weights(p);

    // Cache the polynomial values on the grid.
    std::vector<std::vector<Rational>> qv(p.N + 1, std::vector<Rational>(p.N + 1));
    for (unsigned n = 0; n <= p.N; ++n)
        for (unsigned s = 0; s <= p.N; ++s) qv[n][s] = eval_recurrence(p, n, xs[s]);

    bool all = true;
    std::string detail;
    for (unsigned n = 0; n <= p.N && all; ++n)
        for (unsigned m = n; m <= p.N && all; ++m) {
            Rational g;
            for (unsigned s = 0; s <= p.N; ++s) g += wt.omega[s] * qv[n][s] * qv[m][s];
            const Rational expect = (n == m) ? wt.v[n] : Rational(0);
            if (g != expect) {
                all = false;
                detail = "Gram(" + std::to_string(n) + "," + std::to_string(m) +
                         ") = " + g.to_string() + ", expected " + expect.to_string();
            }
        }
    rep.add("discrete orthogonality", all, detail);

    bool positive = true;
    for (unsigned n = 0; n <= p.N && positive; ++n)
        positive = wt.v[n].sign() > 0;
    rep.add("norms positive", positive);
    return rep;
}

} // namespace mhahn
