#include "trio/series.hpp"

#include <cmath>
#include <cstdlib>

#include "trio/errors.hpp"

namespace trio::mps {

namespace {

// Iterate multi-exponents bounded componentwise by `bound`, in row-major
// order.  Returns false when the iteration wraps around to all zeros.
bool next_exponent(std::vector<int>& e, const std::vector<int>& bound) {
    for (std::size_t i = e.size(); i-- > 0;) {
        if (e[i] < bound[i]) {
            ++e[i];
            return true;
        }
        e[i] = 0;
    }
    return false;
}

} // namespace

TruncatedSeries::TruncatedSeries(std::vector<int> caps) : caps_(std::move(caps)) {
    if (caps_.empty()) {
        throw std::invalid_argument("TruncatedSeries: need at least one variable");
    }
    for (int d : caps_) {
        if (d < 0) throw std::invalid_argument("TruncatedSeries: negative cap");
    }
    strides_.resize(caps_.size());
    std::size_t total = 1;
    for (std::size_t i = caps_.size(); i-- > 0;) {
        strides_[i] = total;
        total *= static_cast<std::size_t>(caps_[i]) + 1;
    }
    coeffs_.assign(total, 0.0);
}

TruncatedSeries TruncatedSeries::constant(double value, std::vector<int> caps) {
    TruncatedSeries s(std::move(caps));
    s.coeffs_[0] = value;
    return s;
}

TruncatedSeries TruncatedSeries::affine(double constant,
                                        const std::vector<std::pair<int, double>>& linear,
                                        std::vector<int> caps) {
    TruncatedSeries s = TruncatedSeries::constant(constant, std::move(caps));
    for (const auto& [var, c] : linear) {
        if (var < 0 || static_cast<std::size_t>(var) >= s.caps_.size()) {
            throw OutOfCaps("affine: variable index out of range");
        }
        if (s.caps_[static_cast<std::size_t>(var)] >= 1) {
            s.coeffs_[s.strides_[static_cast<std::size_t>(var)]] += c;
        }
        // A linear term in a variable capped at degree 0 is truncated away.
    }
    return s;
}

TruncatedSeries TruncatedSeries::polynomial(
    const std::vector<std::pair<std::vector<int>, double>>& terms,
    std::vector<int> caps) {
    TruncatedSeries s(std::move(caps));
    for (const auto& [e, c] : terms) {
        if (e.size() != s.caps_.size()) {
            throw OutOfCaps("polynomial: exponent arity mismatch");
        }
        bool inside = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0) throw OutOfCaps("polynomial: negative exponent");
            if (e[i] > s.caps_[i]) inside = false;
        }
        if (inside) s.coeffs_[s.linear_index(e)] += c;
    }
    return s;
}

std::size_t TruncatedSeries::linear_index(const std::vector<int>& exponent) const {
    if (exponent.size() != caps_.size()) {
        throw OutOfCaps("exponent arity mismatch");
    }
    std::size_t idx = 0;
    for (std::size_t i = 0; i < exponent.size(); ++i) {
        if (exponent[i] < 0 || exponent[i] > caps_[i]) {
            throw OutOfCaps("exponent outside caps");
        }
        idx += static_cast<std::size_t>(exponent[i]) * strides_[i];
    }
    return idx;
}

double TruncatedSeries::coeff(const std::vector<int>& exponent) const {
    return coeffs_[linear_index(exponent)];
}

void TruncatedSeries::set_coeff(const std::vector<int>& exponent, double value) {
    coeffs_[linear_index(exponent)] = value;
}

void TruncatedSeries::check_same_caps(const TruncatedSeries& other) const {
    if (caps_ != other.caps_) throw CapMismatch("series caps differ");
}

TruncatedSeries TruncatedSeries::add(const TruncatedSeries& other) const {
    check_same_caps(other);
    TruncatedSeries out = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += other.coeffs_[i];
    return out;
}

TruncatedSeries TruncatedSeries::sub(const TruncatedSeries& other) const {
    check_same_caps(other);
    TruncatedSeries out = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] -= other.coeffs_[i];
    return out;
}

TruncatedSeries TruncatedSeries::scale(double factor) const {
    TruncatedSeries out = *this;
    for (double& c : out.coeffs_) c *= factor;
    return out;
}

TruncatedSeries TruncatedSeries::mul(const TruncatedSeries& other) const {
    check_same_caps(other);
    TruncatedSeries out(caps_);
    std::vector<int> e1(caps_.size(), 0);
    std::vector<int> rem(caps_.size(), 0);
    do {
        const double f = coeffs_[linear_index(e1)];
        if (f == 0.0) continue;
        const std::size_t base = linear_index(e1);
        for (std::size_t i = 0; i < caps_.size(); ++i) rem[i] = caps_[i] - e1[i];
        std::vector<int> e2(caps_.size(), 0);
        do {
            const double g = other.coeffs_[other.linear_index(e2)];
            if (g == 0.0) continue;
            out.coeffs_[base + other.linear_index(e2)] += f * g;
        } while (next_exponent(e2, rem));
    } while (next_exponent(e1, caps_));
    return out;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
    const double f0 = coeffs_[0];
    if (f0 == 0.0 || !std::isfinite(f0)) {
        throw ZeroConstantTerm("reciprocal: constant term is zero or non-finite");
    }
    TruncatedSeries g(caps_);
    g.coeffs_[0] = 1.0 / f0;
    // Row-major order lists every e' <= e (componentwise) before e, so the
    // graded recursion g_e = -(sum_{0<e'<=e} f_{e'} g_{e-e'}) / f_0 is well posed.
    std::vector<int> e(caps_.size(), 0);
    while (next_exponent(e, caps_)) {
        double acc = 0.0;
        std::vector<int> ep(caps_.size(), 0);
        const std::size_t le = linear_index(e);
        while (next_exponent(ep, e)) {
            const double f = coeffs_[linear_index(ep)];
            if (f == 0.0) continue;
            acc += f * g.coeffs_[le - linear_index(ep)];
        }
        g.coeffs_[le] = -acc / f0;
    }
    return g;
}

} // namespace trio::mps
