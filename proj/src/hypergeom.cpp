#include "mhahn/hypergeom.hpp"

#include <algorithm>
#include <optional>

namespace mhahn {

Rational pochhammer(const Rational& a, unsigned long n) {
    Rational p(1), f(a);
    for (unsigned long k = 0; k < n; ++k) {
        p *= f;
        f += 1;
    }
    return p;
}

Rational factorial(unsigned long n) {
    Rational p(1);
    for (unsigned long k = 2; k <= n; ++k) p *= Rational(static_cast<long>(k));
    return p;
}

Rational hyp3f2_terminating(const Rational& a1, const Rational& a2, const Rational& a3,
                            const Rational& b1, const Rational& b2, const Rational& z) {
    std::optional<unsigned long> m;
    for (const Rational* a : {&a1, &a2, &a3}) {
        if (a->is_nonpositive_integer()) {
            unsigned long mag = a->nonpositive_magnitude();
            if (!m || mag < *m) m = mag;
        }
    }
    if (!m) throw NonTerminating("no non-positive-integer upper parameter");

    Rational sum(1), term(1);
    for (unsigned long k = 0; k < *m; ++k) {
        const Rational kk(static_cast<long>(k));
        const Rational d1 = b1 + kk, d2 = b2 + kk;
        if (d1.is_zero() || d2.is_zero())
            throw PoleInLowerParameter("lower parameter pole before termination");
        term *= (a1 + kk) * (a2 + kk) * (a3 + kk) * z;
        term /= d1 * d2 * Rational(static_cast<long>(k + 1));
        sum += term;
    }
    return sum;
}

} // namespace mhahn
