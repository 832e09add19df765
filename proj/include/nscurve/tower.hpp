#pragma once

#include "nscurve/fp_poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nscurve {

inline constexpr int kDefaultMaxLevel = 4;

// Element of F_p(r_m) with r_m^(p^m) = t, stored as a reduced fraction
// num/den of polynomials in r_m with den monic.
class TowerScalar {
public:
    TowerScalar() : num_(3), den_(FpPoly::constant(3, 1)) {}
    TowerScalar(long long c, Coeff p = 3);
    TowerScalar(FpPoly num, FpPoly den, int level);

    static TowerScalar t(Coeff p = 3);
    // The generator r_m at level m.
    static TowerScalar generator(int level, Coeff p = 3);

    Coeff p() const { return num_.p(); }
    int level() const { return level_; }
    const FpPoly& num() const { return num_; }
    const FpPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    // True for elements of F_p.
    bool is_prime_constant() const { return num_.is_constant() && den_.is_one(); }

    TowerScalar operator+(const TowerScalar& o) const;
    TowerScalar operator-(const TowerScalar& o) const;
    TowerScalar operator*(const TowerScalar& o) const;
    TowerScalar operator/(const TowerScalar& o) const;
    TowerScalar operator-() const;
    TowerScalar& operator+=(const TowerScalar& o) { return *this = *this + o; }
    TowerScalar& operator-=(const TowerScalar& o) { return *this = *this - o; }
    TowerScalar& operator*=(const TowerScalar& o) { return *this = *this * o; }
    TowerScalar& operator/=(const TowerScalar& o) { return *this = *this / o; }
    TowerScalar inverse() const;
    TowerScalar pow(long long e) const;

    bool operator==(const TowerScalar& o) const;
    bool operator!=(const TowerScalar& o) const { return !(*this == o); }

    // Same element rewritten at its minimal level.
    TowerScalar reduced() const;
    // Reinterpret at another level without changing num/den; only valid
    // when the caller knows the element already lives there.
    TowerScalar retagged(int level) const;

    std::string debug_string() const;

private:
    void normalize();

    FpPoly num_;
    FpPoly den_;
    int level_ = 0;
};

TowerScalar lift(const TowerScalar& x, int m, int max_level = kDefaultMaxLevel);
TowerScalar p_th_root(const TowerScalar& x, int max_level = kDefaultMaxLevel);
// x^(p^k), computed without multiplication.
TowerScalar frobenius(const TowerScalar& x, int k = 1);
int level_of(const TowerScalar& x);
TowerScalar derive(const TowerScalar& x);
// Lift both arguments to their common level.
int common_level(const TowerScalar& a, const TowerScalar& b);

struct KCoordinates {
    int level = 0;
    std::vector<TowerScalar> coords;  // p^level entries, all at level 0

    TowerScalar reconstruct() const;
};

KCoordinates k_coordinates(const TowerScalar& x);
// Coordinates of x relative to level m >= x.level.
KCoordinates k_coordinates(const TowerScalar& x, int m);

std::optional<TowerScalar> scalar_square_root(const TowerScalar& x);

using Matrix = std::vector<std::vector<TowerScalar>>;

struct Echelon {
    Matrix rows;              // nonzero rows of the echelon form
    std::vector<int> pivots;  // pivot column of each row
    std::size_t rank() const { return pivots.size(); }
};

// Gauss-Jordan elimination over the common level of the entries. Columns
// are scanned in `column_order` (all columns in natural order if empty);
// pivots are normalized to 1. With reduced = false the pivot columns are
// cleared only below the pivot.
Echelon row_echelon(const Matrix& m, const std::vector<int>& column_order = {}, bool reduced = true);
std::size_t rank(const Matrix& m);
// Basis of {v : m v = 0}, returned in reduced row echelon form.
Matrix null_space(const Matrix& m, std::size_t ncols);

} // namespace nscurve
