#include "trio/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "trio/purity_engine.hpp"
#include "trio/reduced_angles.hpp"

namespace trio::sweep {

namespace {

std::vector<FockState> family_states() {
    std::vector<FockState> st;
    for (int k = 1; k <= 4; ++k) st.push_back({k, 0, 0});
    for (int k = 1; k <= 4; ++k) st.push_back({0, k, 0});
    for (int k = 1; k <= 4; ++k) st.push_back({0, 0, k});
    return st;
}

std::vector<FockState> one_one_states() {
    return {{1, 1, 1}, {2, 1, 1}, {3, 1, 1},
            {1, 2, 1}, {1, 3, 1},
            {1, 1, 2}, {1, 1, 3}};
}

std::vector<FockState> mixed_states() {
    return {{2, 2, 1}, {3, 3, 1}, {4, 1, 1}, {1, 4, 1}, {1, 1, 4}};
}

struct Preset {
    const char* name;
    std::vector<FockState> (*states)();
};

const Preset kPresets[] = {
    {"fig2", family_states},   // S_Lx, single-excitation families
    {"fig3", mixed_states},    // S_Lx, multi-excitation states
    {"fig4", family_states},   // S_Ly, single-excitation families
    {"fig5", one_one_states},  // S_Ly, (n,1,1)/(1,m,1)/(1,1,l)
    {"fig6", mixed_states},    // S_Ly, multi-excitation states
    {"fig7", family_states},   // S_Lz, single-excitation families
    {"fig8", one_one_states},  // S_Lz, (n,1,1)/(1,m,1)/(1,1,l)
    {"fig9",                   // S_Lz, (n,n,1)/(n,1,n)/(1,n,n)
     [] {
         std::vector<FockState> st;
         for (int k = 1; k <= 3; ++k) st.push_back({k, k, 1});
         for (int k = 2; k <= 3; ++k) st.push_back({k, 1, k});
         for (int k = 2; k <= 3; ++k) st.push_back({1, k, k});
         return st;
     }},
    {"fig10",                  // trade-off quantities M_x, M_y, M_z
     [] {
         return std::vector<FockState>{{1, 2, 2}, {2, 1, 2}, {2, 2, 1}};
     }},
};

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct RowText {
    std::string text;
};

RowText compute_row(const FockState& state, double theta) {
    std::ostringstream os;
    const double mu = std::tan(theta);
    os << format_double(theta) << ',' << format_double(mu) << ',' << state.n
       << ',' << state.m << ',' << state.l << ',';
    if (!(std::abs(mu) < angles::kMuThetaDomain - 1e-12)) {
        os << ",,,,,,domain";
        return {os.str()};
    }
    const engine::SweepRow row = engine::sweep_row(state, theta);
    os << format_double(row.s_lx) << ',' << format_double(row.s_ly) << ','
       << format_double(row.s_lz) << ',' << format_double(row.m_x) << ','
       << format_double(row.m_y) << ',' << format_double(row.m_z) << ',';
    if (std::abs(std::abs(mu) - 1.0) < angles::kPoleGuard) os << "pole_limit";
    return {os.str()};
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("TRIO_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

} // namespace

bool apply_preset(const std::string& name, SweepConfig& config) {
    for (const Preset& p : kPresets) {
        if (name == p.name) {
            config.states = p.states();
            config.theta_min = -1.0;
            config.theta_max = 1.0;
            return true;
        }
    }
    return false;
}

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const Preset& p : kPresets) names.emplace_back(p.name);
    return names;
}

std::vector<FockState> parse_states(const std::string& spec) {
    std::vector<FockState> states;
    std::istringstream groups(spec);
    std::string group;
    while (std::getline(groups, group, ';')) {
        if (group.empty()) continue;
        FockState st;
        char c1 = 0, c2 = 0;
        std::istringstream is(group);
        if (!(is >> st.n >> c1 >> st.m >> c2 >> st.l) || c1 != ',' ||
            c2 != ',' || !st.valid()) {
            throw std::invalid_argument("bad state triple: '" + group + "'");
        }
        states.push_back(st);
    }
    return states;
}

void run_sweep(const SweepConfig& config, std::ostream& out, int threads) {
    if (!config.valid()) throw std::invalid_argument("invalid sweep config");

    struct Task {
        FockState state;
        double theta;
    };
    std::vector<Task> tasks;
    const double step =
        (config.theta_max - config.theta_min) / (config.samples - 1);
    for (const FockState& st : config.states) {
        for (int i = 0; i < config.samples; ++i) {
            tasks.push_back({st, config.theta_min + step * i});
        }
    }

    std::vector<RowText> rows(tasks.size());
    const int nthreads =
        std::min<int>(resolve_threads(threads), static_cast<int>(tasks.size()));
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (int t = 0; t < nthreads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < tasks.size();
                 i = next.fetch_add(1)) {
                rows[i] = compute_row(tasks[i].state, tasks[i].theta);
            }
        });
    }
    for (std::thread& th : pool) th.join();

    out << "theta,mu_theta,n,m,l,S_Lx,S_Ly,S_Lz,M_x,M_y,M_z,flag\n";
    for (const RowText& r : rows) out << r.text << '\n';
}

} // namespace trio::sweep
