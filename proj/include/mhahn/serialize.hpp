#ifndef MHAHN_SERIALIZE_HPP
#define MHAHN_SERIALIZE_HPP

#include <string>
#include <vector>

#include "mhahn/algebra_h.hpp"
#include "mhahn/dual_rep.hpp"
#include "mhahn/hahn.hpp"
#include "mhahn/sl_minus.hpp"
#include "mhahn/verdict.hpp"

namespace mhahn {

// Every JSON document carries a top-level "schema": 1 and is newline
// terminated. Exact values are emitted as "p/q" strings ("p" when the
// denominator is one, sign on the numerator); matrices are row-major arrays
// of such strings. With approx = true a decimal rendering is added next to
// each exact field under a name ending in "_approx".

// RFC 4180 field quoting: wraps the field in double quotes when it contains
// a comma, a quote or a line break, doubling embedded quotes.
std::string csv_escape(const std::string& field);

// Recurrence coefficients, grid with weights, norms and the value matrix
// Q_n(x_s) for one parameter cell.
std::string tables_json(const HahnParams& p, bool approx = false);
std::string tables_csv(const HahnParams& p, bool approx = false);

// A named check list, e.g. from one of the verify_* routines.
std::string report_json(const std::string& suite, const Report& rep);
std::string report_csv(const Report& rep);

// The four generator matrices with their structure constants.
std::string generators_json(const GeneratorSet& g);

// Clebsch-Gordan table: squared coefficients, signs, per-column eigenvalue
// labels and the induced polynomial parameters when they fall in regime.
std::string cg_json(const CouplingProblem& cp, bool approx = false);
std::string cg_csv(const CouplingProblem& cp, bool approx = false);

// Block decomposition of a dual-basis representation (Lambda, Gamma, C, U, D
// blocks by pair index) together with the printed-versus-derived findings.
std::string dual_rep_json(const DualRep& d, const std::vector<BlockFinding>& findings);

} // namespace mhahn

#endif
