#ifndef MHAHN_SL_MINUS_HPP
#define MHAHN_SL_MINUS_HPP

#include "mhahn/hahn.hpp"
#include "mhahn/matrix.hpp"
#include "mhahn/verdict.hpp"

namespace mhahn {

// One lowest-weight ladder module, labelled by a sign and a shift.
struct ModuleLabel {
    int epsilon;
    Rational mu;
    ModuleLabel(int eps, Rational m);  // eps must be +1 or -1, m >= 0
};

enum class SlGenerator { A0, Aplus, Aminus, R, Q };

// Truncated matrix of one generator in the scaled basis f_n = e_n/sqrt([n]!),
// which keeps every entry rational: A+ f_n = [n+1] f_{n+1}, A- f_n = f_{n-1},
// A0 f_n = (n + mu + 1/2) f_n, R f_n = eps (-1)^n f_n. Q is assembled as
// A+ A- R - A0 R + R/2 and comes out as the scalar -eps*mu.
RMatrix module_action(const ModuleLabel& label, SlGenerator which, unsigned cutoff);

// Ladder relations on the truncation. Products that raise then lower leak
// past the cutoff in their last row, so those two checks compare principal
// submatrices of size cutoff-1; everything else is exact in full.
Report verify_parabose(const ModuleLabel& label, unsigned cutoff);

struct CouplingProblem {
    ModuleLabel a, b;
    unsigned N;  // total degree; the invariant subspace has dimension N+1
};

// Operators on the degree-N subspace spanned by f_n (x) f_{N-n}, n = 0..N.
struct KappaSet {
    RMatrix kappa1, kappa2, kappa3, r;
    Rational lambda1, lambda2, lambda3, lambda4;
    std::size_t dim() const { return kappa1.dim(); }
};

// The five defining relations plus the scalar quadratic element.
Report verify_kappa_relations(const KappaSet& k);

// Builds the KappaSet and self-checks it; throws RelationViolation.
KappaSet coupled_operators(const CouplingProblem& cp);

// Label data of one coupled Casimir eigenvalue.
struct CasimirLine {
    int eps_ab;
    Rational mu_ab;
    Rational q_ab;  // = -eps_ab * mu_ab
};

std::vector<CasimirLine> casimir_spectrum(const CouplingProblem& cp);

// Cross-checks the enumerated spectrum against the coupled Casimir matrix
// and the diagonal kappa1 against its predicted linear spectrum.
Report verify_casimir_spectrum(const CouplingProblem& cp);

// Coupling coefficients, stored losslessly: the raw rational eigenvector
// matrix V (columns ordered by increasing |eigenvalue| of kappa2), the
// per-row factors F_n = [n]_a! [N-n]_b! and per-column normalizers
// T_k = sum_n V(n,k)^2 / F_n. The orthonormal-basis coefficient is
// V(n,k) / sqrt(F_n T_k); its square and sign are tabulated directly.
struct CGTable {
    std::size_t dim = 0;
    std::vector<std::vector<Rational>> squared;  // [n][k]
    std::vector<std::vector<int>> sign;          // [n][k], in {-1, 0, +1}
    std::vector<Rational> two_eig;               // 2 * (kappa2 eigenvalue of column k)
    std::vector<std::vector<Rational>> V;        // phase-fixed eigenvectors, [n][k]
    std::vector<Rational> F;                     // row factors
    std::vector<Rational> T;                     // column normalizers
    std::vector<unsigned> phase_row;             // row anchoring each column's phase
};

// Phase convention: the n = 0 component of each column is positive; if it
// vanishes the lowest nonzero component anchors instead (phase_row records
// which). Throws DegenerateEigenvalue if an eigenspace is not a line.
CGTable clebsch_gordan(const CouplingProblem& cp);

Report verify_cg_orthonormality(const CouplingProblem& cp);

// Parameters of the polynomial family whose values reproduce the table.
HahnParams cg_parameter_map(const CouplingProblem& cp);

// Requires eps_a = eps_b = 1 (throws RegimeError otherwise): squared
// coefficients against weight * Q_n(z_k)^2 / norm, signed values against
// sign(Q_n(z_k)), the kappa2 spectrum against the z-grid, and the z-grid
// against the polynomial grid under the parameter map.
Report verify_cg_polynomial_match(const CouplingProblem& cp);

// Requires eps_a = eps_b = 1: shifting kappa1 by a constant turns the
// coupled operators into the three-generator algebra with the structure
// constants of the mapped parameters; also witnesses the two scalar
// identities tying (lambda1..lambda4) to (nu, sigma, rho).
Report verify_kappa_is_H(const CouplingProblem& cp);

} // namespace mhahn

#endif
