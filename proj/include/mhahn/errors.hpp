#ifndef MHAHN_ERRORS_HPP
#define MHAHN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mhahn {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed rational literal or zero denominator.
struct ParseError : Error { using Error::Error; };

// Parameters outside the positivity regime of the three-term recurrence.
struct RegimeError : Error { using Error::Error; };

// Hypergeometric series with no non-positive-integer upper parameter.
struct NonTerminating : Error { using Error::Error; };

// A lower Pochhammer vanishes at or before the termination index.
struct PoleInLowerParameter : Error { using Error::Error; };

struct SingularMatrix : Error { using Error::Error; };

// Transition matrix between the recurrence basis and the grid is singular.
struct SingularTransition : Error { using Error::Error; };

// An algebra relation fails as an exact matrix identity.
struct RelationViolation : Error { using Error::Error; };

struct OrthogonalityViolation : Error { using Error::Error; };

struct BandwidthViolation : Error { using Error::Error; };

// Coupling coefficients disagree with the polynomial closed form.
struct MatchViolation : Error { using Error::Error; };

struct DegenerateEigenvalue : Error { using Error::Error; };

struct PhaseUndefined : Error { using Error::Error; };

// A free gauge parameter was given as zero.
struct ZeroParameter : Error { using Error::Error; };

// The defining linear system of the diagonal realization has no solution
// with the expected block structure.
struct InconsistentSystem : Error { using Error::Error; };

struct NoIntertwiner : Error { using Error::Error; };

} // namespace mhahn

#endif
