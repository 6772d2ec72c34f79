#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "trio/types.hpp"

namespace trio::sweep {

struct SweepConfig {
    std::vector<FockState> states;
    double theta_min = -1.0;
    double theta_max = 1.0;
    int samples = 401;

    bool valid() const {
        return !states.empty() && theta_min < theta_max && samples >= 2;
    }
};

// Named presets reproducing the data behind the figures (states and range).
// Returns false if the name is unknown.
bool apply_preset(const std::string& name, SweepConfig& config);
std::vector<std::string> preset_names();

// Runs the sweep and writes CSV to the stream.  Header:
// theta,mu_theta,n,m,l,S_Lx,S_Ly,S_Lz,M_x,M_y,M_z,flag
// Rows where theta falls outside the |tan(theta)| < sqrt(2) domain carry
// empty value fields and flag=domain; samples within the pole guard of
// |mu_theta| = 1 are evaluated by the regular limit form and flagged
// pole_limit.  Output is deterministic for a fixed config.
// threads <= 0 means: use TRIO_THREADS if set, else hardware concurrency.
void run_sweep(const SweepConfig& config, std::ostream& out, int threads = 0);

// Parses "n,m,l" triples separated by ';', e.g. "1,0,0;0,2,0".
std::vector<FockState> parse_states(const std::string& spec);

} // namespace trio::sweep
