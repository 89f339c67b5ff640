#ifndef MHAHN_ALGEBRA_H_HPP
#define MHAHN_ALGEBRA_H_HPP

#include "mhahn/hahn.hpp"
#include "mhahn/matrix.hpp"
#include "mhahn/verdict.hpp"

namespace mhahn {

struct StructureConstants {
    Rational nu, sigma, rho;
};

StructureConstants structure_constants(const HahnParams& p);

// The Casimir eigenvalue determined by the structure constants alone.
inline Rational casimir_value(const StructureConstants& c) {
    return c.nu * c.nu + 2 * c.nu - c.sigma - c.rho - Rational(1, 4);
}

// K1 diagonal, 2*K2 the Jacobi matrix of the recurrence, K3 = [K1, K2],
// P the parity involution. All on the (N+1)-dimensional degree basis.
struct GeneratorSet {
    RMatrix K1, K2, K3, P;
    StructureConstants constants;
    std::size_t dim() const { return K1.dim(); }
};

GeneratorSet build_realization(const HahnParams& p);

// The seven defining relations, each as an exact matrix identity.
Report verify_relations(const GeneratorSet& g);

RMatrix casimir_H(const GeneratorSet& g);

struct TransitionMatrix {
    RMatrix S;                        // S(i,j) = Q_i(x_j); columns are K2 eigenvectors
    std::vector<Rational> halfgrid;   // eigenvalue of column j is x_j / 2
};

// Columns ordered by grid index; each column starts with Q_0 = 1, which
// fixes the normalization. Throws SingularTransition if S fails to invert
// (cannot happen inside the admissible parameter region).
TransitionMatrix transition_matrix(const HahnParams& p);

// Conjugates K1 into the K2 eigenbasis and checks that the result is at
// most pentadiagonal with spectrum {0, ..., N}.
Report verify_pentadiagonality(const HahnParams& p);

struct TildeSet {
    RMatrix K1, K2, K3, P;
    Rational nu, chi;
};

// Rescaled generators: K1 + rho/4, (K2 + nu P + 1/2)/2, K3/2. The report
// covers the rotated relation set and the scalar quadratic element.
Report verify_tilde(const GeneratorSet& g);
TildeSet tilde_presentation(const GeneratorSet& g);  // throws RelationViolation

} // namespace mhahn

#endif
