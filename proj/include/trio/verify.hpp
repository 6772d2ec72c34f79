#pragma once

#include <string>
#include <vector>

namespace trio::verify {

enum class Level { Fast, Full };

struct PropertyResult {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// Runs the invariant suite.  Fast covers the internal cross-checks
// (symmetry, closed forms vs engine, structural invariants); Full adds the
// oracle cross-checks (quadrature, Fock network, common-frequency
// independence, Wigner normalization).
std::vector<PropertyResult> run(Level level);

// True iff every property passed.
bool all_pass(const std::vector<PropertyResult>& results);

} // namespace trio::verify
