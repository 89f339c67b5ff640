#ifndef MHAHN_SWEEP_HPP
#define MHAHN_SWEEP_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mhahn {

// Acceptance matrix driver. Nine criteria, each swept over its own
// parameter lattice; every check is an exact equality. Deterministic for a
// fixed seed: the generator for one cell is seeded by
// seed ^ FNV1a("<criterion>:<cell label>"), so results do not depend on
// scheduling or worker count.
struct SweepConfig {
    std::uint64_t seed = 1;
    // Cap on N for the lattices. Criteria 5 and 6 additionally cap at 10
    // and criterion 7 at 9, matching their budgets.
    unsigned max_n = 12;
    bool keep_going = false;  // keep running cells after the first failure
    // Worker count; 0 means single-threaded. The MHAHN_THREADS environment
    // variable, when set, caps whatever is requested.
    unsigned threads = 0;
};

struct CellResult {
    unsigned criterion = 0;  // 1..9, 0 in a slot that never ran
    std::string cell;
    bool pass = false;
    std::string detail;  // first failing check, empty on pass
};

struct CriterionVerdict {
    unsigned criterion = 0;
    std::string title;
    std::size_t cells = 0;
    std::size_t failed = 0;
    bool pass() const { return cells > 0 && failed == 0; }
};

struct SweepSummary {
    std::vector<CellResult> cells;            // lattice order
    std::vector<CriterionVerdict> verdicts;   // one per criterion, 1..9
    bool pass = false;                        // all criteria ran and passed
};

const char* criterion_title(unsigned criterion);

SweepSummary run_sweep(const SweepConfig& cfg);

} // namespace mhahn

#endif
