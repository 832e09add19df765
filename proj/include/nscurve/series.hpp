#pragma once

#include "nscurve/tower.hpp"

#include <vector>

namespace nscurve {

// Power series in s known modulo s^N; N is the certified order.
class PowerSeriesTrunc {
public:
    explicit PowerSeriesTrunc(int N = 0, Coeff p = 3);
    PowerSeriesTrunc(std::vector<TowerScalar> coeffs, int N);

    static PowerSeriesTrunc constant(const TowerScalar& c, int N);
    // s itself
    static PowerSeriesTrunc variable(int N, Coeff p = 3);

    int prec() const { return static_cast<int>(c_.size()); }
    Coeff p() const { return p_; }
    int level() const;
    const TowerScalar& operator[](int k) const { return c_[k]; }
    const std::vector<TowerScalar>& coeffs() const { return c_; }
    // First index with a nonzero coefficient, or prec() if none is known.
    int order() const;
    bool is_zero() const { return order() == prec(); }

    PowerSeriesTrunc operator+(const PowerSeriesTrunc& o) const;
    PowerSeriesTrunc operator-(const PowerSeriesTrunc& o) const;
    PowerSeriesTrunc operator-() const;
    // Certified order of the product: min(N_a + ord b, N_b + ord a),
    // capped at max(N_a, N_b).
    PowerSeriesTrunc operator*(const PowerSeriesTrunc& o) const;
    PowerSeriesTrunc operator*(const TowerScalar& c) const;
    // Requires a nonzero constant term.
    PowerSeriesTrunc inverse() const;
    // Exact division; the order of d must not exceed the order of *this.
    PowerSeriesTrunc divided_by(const PowerSeriesTrunc& d) const;
    PowerSeriesTrunc derivative() const;
    PowerSeriesTrunc truncated(int N) const;
    // Coefficients raised to the p^k-th power, same index: the series of
    // g^(p^k) written in sigma = s^(p^k).
    PowerSeriesTrunc frobenius(int k) const;
    PowerSeriesTrunc lifted(int level) const;

    bool operator==(const PowerSeriesTrunc& o) const;

private:
    Coeff p_;
    std::vector<TowerScalar> c_;
};

} // namespace nscurve
