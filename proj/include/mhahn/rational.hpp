#ifndef MHAHN_RATIONAL_HPP
#define MHAHN_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdlib>
#include <ostream>
#include <string>

#include "mhahn/errors.hpp"

namespace mhahn {

// Exact rational scalar. Invariants: stored in lowest terms with positive
// denominator (GMP keeps arithmetic results canonical; constructors
// canonicalize). No operation rounds.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(unsigned n) : v_(static_cast<unsigned long>(n)) {}

    Rational(long num, long den) {
        if (den == 0) throw ParseError("rational with zero denominator");
        v_ = mpq_class(mpz_class(num), mpz_class(den));
        v_.canonicalize();
    }

    explicit Rational(const mpq_class& q) : v_(q) {
        if (v_.get_den() == 0) throw ParseError("rational with zero denominator");
        v_.canonicalize();
    }

    // Accepts "p" or "p/q" with an optional leading sign on p; q > 0 after
    // normalization. Anything else is rejected.
    static Rational from_string(const std::string& text);

    std::string to_string() const { return v_.get_str(); }
    double approx() const { return v_.get_d(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_nonpositive_integer() const { return is_integer() && sgn(v_) <= 0; }

    // Magnitude of a non-positive integer as an unsigned count. Only valid
    // when is_nonpositive_integer() holds and the value fits.
    unsigned long nonpositive_magnitude() const {
        mpz_class m = -v_.get_num();
        if (!m.fits_ulong_p()) throw Error("termination index out of range");
        return m.get_ui();
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error("division by zero rational");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.v_;
    }

private:
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational pow_ui(const Rational& base, unsigned long e) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), e);
    return Rational(mpq_class(num, den));
}

inline Rational Rational::from_string(const std::string& text) {
    auto is_int_literal = [](const std::string& s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!is_int_literal(num, true) || !is_int_literal(den, false))
        throw ParseError("malformed rational literal: \"" + text + "\"");
    if (num[0] == '+') num.erase(0, 1);  // mpz_set_str rejects an explicit plus
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw ParseError("rational with zero denominator: \"" + text + "\"");
    return Rational(mpq_class(n, d));
}

} // namespace mhahn

#endif
