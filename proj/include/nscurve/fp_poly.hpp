#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nscurve {

using Coeff = std::uint32_t;

// Residue mod a small prime p.
struct PrimeScalar {
    Coeff value = 0;
    Coeff p = 3;

    PrimeScalar() = default;
    PrimeScalar(long long v, Coeff prime);

    PrimeScalar operator+(PrimeScalar o) const;
    PrimeScalar operator-(PrimeScalar o) const;
    PrimeScalar operator*(PrimeScalar o) const;
    PrimeScalar operator-() const;
    PrimeScalar inverse() const;
    bool operator==(const PrimeScalar& o) const = default;
};

bool is_prime(Coeff p);
Coeff mod_inverse(Coeff a, Coeff p);
Coeff mod_reduce(long long v, Coeff p);

// Dense univariate polynomial over F_p. Trailing zero coefficients are
// always trimmed, so the zero polynomial has no coefficients.
class FpPoly {
public:
    FpPoly() = default;
    explicit FpPoly(Coeff p) : p_(p) {}
    FpPoly(Coeff p, std::vector<Coeff> coeffs);

    static FpPoly constant(Coeff p, long long c);
    static FpPoly monomial(Coeff p, long long c, std::size_t deg);

    Coeff p() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    // Degree of the zero polynomial is -1.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Coeff lead() const { return c_.empty() ? 0 : c_.back(); }
    Coeff operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<Coeff>& coeffs() const { return c_; }
    // Lowest exponent with a nonzero coefficient; -1 for zero.
    long low_degree() const;

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator-() const;
    FpPoly operator*(const FpPoly& o) const;
    FpPoly scaled(Coeff c) const;
    FpPoly pow(unsigned long e) const;

    // Euclidean division; throws on division by zero.
    void divmod(const FpPoly& d, FpPoly& q, FpPoly& r) const;
    FpPoly operator/(const FpPoly& d) const;
    FpPoly operator%(const FpPoly& d) const;

    FpPoly monic() const;
    FpPoly derivative() const;
    // u -> u^k
    FpPoly stretch(std::size_t k) const;
    // Inverse of stretch; requires every exponent to be divisible by k.
    FpPoly shrink(std::size_t k) const;
    bool exponents_divisible_by(std::size_t k) const;
    Coeff eval(Coeff x) const;

    bool operator==(const FpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const FpPoly& o) const { return !(*this == o); }
    // Arbitrary but fixed total order, used for canonical sorting.
    bool operator<(const FpPoly& o) const;

    std::string to_string(const std::string& var = "u") const;

private:
    void trim();
    void check_same(const FpPoly& o) const;

    Coeff p_ = 3;
    std::vector<Coeff> c_;
};

// Monic gcd; gcd(0, 0) = 0.
FpPoly gcd(FpPoly a, FpPoly b);

// g with g^2 = q and lead(g) the smaller square root of lead(q), if any.
bool poly_square_root(const FpPoly& q, FpPoly& out);

} // namespace nscurve
