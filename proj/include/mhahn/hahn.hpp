#ifndef MHAHN_HAHN_HPP
#define MHAHN_HAHN_HPP

#include <vector>

#include "mhahn/rational.hpp"
#include "mhahn/verdict.hpp"

namespace mhahn {

// Parameter triple (alpha, beta, N) of the degree-N finite family. The
// positivity regime of the recurrence (all u_n > 0 and positive weights) is
// enforced at construction: alpha, beta > N for even N and alpha, beta > -1
// for odd N. Violations throw RegimeError.
struct HahnParams {
    Rational alpha;
    Rational beta;
    unsigned N = 0;

    HahnParams(Rational alpha_, Rational beta_, unsigned N_);

    bool even() const { return N % 2 == 0; }

    // Half-parameters entering the recurrence:
    // even N: xi = (beta-N-1)/2, zeta = (alpha-N-1)/2;
    // odd  N: xi = alpha/2,      zeta = beta/2.
    Rational xi() const;
    Rational zeta() const;
};

// mu-number [n]_mu = n + mu (1 - (-1)^n): n for even n, n + 2 mu for odd n.
Rational mu_number(unsigned long n, const Rational& mu);

// [n]_mu! = [1]_mu [2]_mu ... [n]_mu, with [0]_mu! = 1.
Rational mu_factorial(unsigned long n, const Rational& mu);

struct RecurrencePair {
    Rational b;
    Rational u;
};

// Monic three-term recurrence data: Q_{n+1} = (x - b_n) Q_n - u_n Q_{n-1}
// with b_n = (-1)^{n+1}(2 xi +- 2 zeta) - 1 (+ for even N, - for odd) and
// u_n = 4 [n]_xi [N-n+1]_zeta. Valid for 0 <= n <= N+1; u_0 = u_{N+1} = 0.
RecurrencePair recurrence_coefficients(const HahnParams& p, unsigned n);

// Spectral grid x_s = (-1)^s (2s + 1 - alpha - beta) for even N and
// (-1)^s (2s + 1 + alpha + beta) for odd N, s = 0..N.
Rational grid_point(const HahnParams& p, unsigned s);
std::vector<Rational> grid(const HahnParams& p);

// Discrete weights omega_s (omega_0 = 1) and squared norms v_n of the monic
// family: sum_s omega_s Q_n(x_s) Q_m(x_s) = v_n delta_{nm}.
struct WeightTable {
    std::vector<Rational> omega;  // size N+1
    std::vector<Rational> v;      // size N+1
};

WeightTable weights(const HahnParams& p);

// Q_n(x) by the recurrence. Defined for 0 <= n <= N+1; Q_{N+1} vanishes on
// the grid.
Rational eval_recurrence(const HahnParams& p, unsigned n, const Rational& x);

// Q_n(x) by the terminating 3F2 closed form (parity-split in both N and n).
// Agrees with eval_recurrence everywhere; exercised as an exact identity.
Rational eval_hypergeometric(const HahnParams& p, unsigned n, const Rational& x);

// Exact Gram check of the discrete orthogonality. All (n,m) pairs are
// reported; a failing pair carries the offending indices and residual.
Report verify_orthogonality(const HahnParams& p);

} // namespace mhahn

#endif
