#ifndef MHAHN_MATRIX_HPP
#define MHAHN_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "mhahn/rational.hpp"

namespace mhahn {

// Dense square matrix over Rational. Dimensions in this project stay tiny
// (at most a few hundred rows for the stacked intertwiner systems), so the
// implementation favors clarity over asymptotics.
class RMatrix {
public:
    RMatrix() : dim_(0) {}
    explicit RMatrix(std::size_t dim) : dim_(dim), e_(dim * dim) {}

    static RMatrix identity(std::size_t dim);
    static RMatrix diagonal(const std::vector<Rational>& entries);
    static RMatrix scalar(std::size_t dim, const Rational& value);

    std::size_t dim() const { return dim_; }

    Rational& operator()(std::size_t i, std::size_t j) { return e_[i * dim_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return e_[i * dim_ + j]; }

    RMatrix& operator+=(const RMatrix& o);
    RMatrix& operator-=(const RMatrix& o);
    friend RMatrix operator+(RMatrix a, const RMatrix& b) { return a += b; }
    friend RMatrix operator-(RMatrix a, const RMatrix& b) { return a -= b; }
    friend RMatrix operator*(const RMatrix& a, const RMatrix& b);
    friend RMatrix operator*(const Rational& c, RMatrix m);
    RMatrix operator-() const { return Rational(-1) * (*this); }

    friend bool operator==(const RMatrix& a, const RMatrix& b) {
        return a.dim_ == b.dim_ && a.e_ == b.e_;
    }
    friend bool operator!=(const RMatrix& a, const RMatrix& b) { return !(a == b); }

    bool is_zero() const;
    std::optional<Rational> as_scalar() const;  // c such that *this == c*I, if any

    RMatrix transpose() const;
    Rational trace() const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    // Largest |i-j| over nonzero entries; 0 for diagonal and empty matrices.
    std::size_t bandwidth() const;

    // Top-left k x k corner, used for truncation-safe comparisons.
    RMatrix principal_submatrix(std::size_t k) const;

    // Fraction-aware Gauss-Jordan elimination; pivots are chosen by exact
    // nonzero tests. Throws SingularMatrix.
    RMatrix inverse() const;

    Rational determinant() const;

    // Basis of { v : Av = 0 }, each vector of length dim().
    std::vector<std::vector<Rational>> nullspace() const;

    // Monic characteristic polynomial det(xI - A), ascending coefficients
    // (size dim()+1), computed by the Faddeev-LeVerrier recursion.
    std::vector<Rational> char_poly() const;

private:
    std::size_t dim_;
    std::vector<Rational> e_;
};

inline RMatrix commutator(const RMatrix& a, const RMatrix& b) { return a * b - b * a; }
inline RMatrix anticommutator(const RMatrix& a, const RMatrix& b) { return a * b + b * a; }

// Ascending coefficients of prod_k (x - roots[k]).
std::vector<Rational> poly_from_roots(const std::vector<Rational>& roots);
Rational poly_eval(const std::vector<Rational>& ascending, const Rational& x);

// Multiset spectral equality via characteristic polynomials; exact.
bool spectrum_equals(const RMatrix& a, const std::vector<Rational>& roots);

// General exact linear solve for a (possibly rectangular) system A x = b.
struct LinearSolveResult {
    bool consistent = false;
    std::vector<Rational> particular;              // one solution, if consistent
    std::vector<std::vector<Rational>> kernel;     // basis of the homogeneous solutions
};

LinearSolveResult solve_linear(const std::vector<std::vector<Rational>>& a,
                               const std::vector<Rational>& b);

// Kernel basis of a rectangular homogeneous system.
std::vector<std::vector<Rational>> kernel_basis(const std::vector<std::vector<Rational>>& a);

} // namespace mhahn

#endif
