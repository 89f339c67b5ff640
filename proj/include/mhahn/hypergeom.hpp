#ifndef MHAHN_HYPERGEOM_HPP
#define MHAHN_HYPERGEOM_HPP

#include "mhahn/rational.hpp"

namespace mhahn {

// Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.
Rational pochhammer(const Rational& a, unsigned long n);

Rational factorial(unsigned long n);

// Terminating 3F2(a1,a2,a3; b1,b2; z) evaluated as an exact finite sum.
// The termination index is min |a_i| over the upper parameters that are
// non-positive integers. Throws NonTerminating when no upper parameter is a
// non-positive integer and PoleInLowerParameter when a lower Pochhammer
// vanishes at or before the termination index.
Rational hyp3f2_terminating(const Rational& a1, const Rational& a2, const Rational& a3,
                            const Rational& b1, const Rational& b2, const Rational& z);

} // namespace mhahn

#endif
