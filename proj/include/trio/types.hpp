#pragma once

namespace trio {

// Excitation numbers of the three normal modes.
struct FockState {
    int n = 0;
    int m = 0;
    int l = 0;

    int total() const { return n + m + l; }
    bool valid(int max_total = 12) const {
        return n >= 0 && m >= 0 && l >= 0 && total() <= max_total;
    }
    friend bool operator==(const FockState&, const FockState&) = default;
};

// One oscillator against the remaining two.
enum class Bipartition { X_vs_YZ, Y_vs_XZ, XY_vs_Z };

} // namespace trio
