#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace trio::mps {

// Multivariate power series truncated to per-variable degree caps.
// Coefficients are stored densely in row-major order, so the linear index of
// a sum of exponents is the sum of the linear indices whenever the sum stays
// within the caps.  That makes the truncated Cauchy product a plain double
// loop over linear indices.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<int> caps);

    static TruncatedSeries constant(double value, std::vector<int> caps);

    // Polynomial c0 + sum_i c_i * x_i embedded exactly (every |c_i| may be 0).
    static TruncatedSeries affine(double constant,
                                  const std::vector<std::pair<int, double>>& linear,
                                  std::vector<int> caps);

    // General sparse polynomial: list of (exponent vector, coefficient).
    static TruncatedSeries polynomial(
        const std::vector<std::pair<std::vector<int>, double>>& terms,
        std::vector<int> caps);

    std::size_t num_vars() const { return caps_.size(); }
    const std::vector<int>& caps() const { return caps_; }

    double coeff(const std::vector<int>& exponent) const;
    void set_coeff(const std::vector<int>& exponent, double value);

    TruncatedSeries add(const TruncatedSeries& other) const;
    TruncatedSeries sub(const TruncatedSeries& other) const;
    TruncatedSeries scale(double factor) const;
    TruncatedSeries mul(const TruncatedSeries& other) const;

    // g with f*g = 1 up to the caps; requires a nonzero constant term.
    TruncatedSeries reciprocal() const;

    TruncatedSeries operator+(const TruncatedSeries& o) const { return add(o); }
    TruncatedSeries operator-(const TruncatedSeries& o) const { return sub(o); }
    TruncatedSeries operator*(const TruncatedSeries& o) const { return mul(o); }
    TruncatedSeries operator*(double f) const { return scale(f); }

private:
    std::size_t linear_index(const std::vector<int>& exponent) const;
    void check_same_caps(const TruncatedSeries& other) const;

    std::vector<int> caps_;
    std::vector<std::size_t> strides_;
    std::vector<double> coeffs_;
};

} // namespace trio::mps
