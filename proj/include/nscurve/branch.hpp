#pragma once

#include "nscurve/affine.hpp"
#include "nscurve/series.hpp"

#include <set>
#include <vector>

namespace nscurve {

inline constexpr int kDefaultTruncation = 12;
inline constexpr int kMaxTruncation = 128;
inline constexpr int kDefaultSpanDegree = 4;

enum class CoeffField { K, Full };

struct BlowUp {
    // horizontal: (u, v) = (d u1, u1 (v1 + d slope)) with d the denominator
    // of the slope; vertical: (u, v) = (u1 v1, v1)
    bool vertical = false;
    TowerScalar slope;
    TowerScalar scale{1};
};

struct BranchParam {
    // Affine chart coordinates along the branch, including the constant
    // terms given by the centre.
    PowerSeriesTrunc x, y;
    TowerScalar a, b;  // centre of the germ in the chart
    int multiplicity = 0;
    int certified_order = 0;
    std::vector<BlowUp> blowups;

    int level() const { return std::max(x.level(), y.level()); }
};

// Branch of the affine curve f = 0 at (a, b).
BranchParam hn_parametrize(const AffPoly& f, const TowerScalar& a, const TowerScalar& b,
                           int N = kDefaultTruncation, int max_level = kDefaultMaxLevel);
// Branch of the projective curve F = 0 at P, in P's chart.
BranchParam hn_parametrize(const HomPoly& F, const ProjPoint& P, int N = kDefaultTruncation,
                           int max_level = kDefaultMaxLevel);

// g(x(s), y(s)); the result is known modulo s^prec.
PowerSeriesTrunc compose(const AffPoly& g, const PowerSeriesTrunc& x, const PowerSeriesTrunc& y);
std::vector<PowerSeriesTrunc> compose_all(const std::vector<AffPoly>& functions, const BranchParam& branch, int N);

// Attained orders of nonzero elements of the span of `functions`.
std::set<int> value_set(const std::vector<AffPoly>& functions, const BranchParam& branch, CoeffField field, int N);
std::set<int> value_set(const std::vector<PowerSeriesTrunc>& series, CoeffField field, int N);

int derivative_min_order(const std::vector<AffPoly>& functions, const BranchParam& branch, CoeffField field, int N);
int derivative_min_order(const std::vector<PowerSeriesTrunc>& series, CoeffField field, int N);

struct LevelData {
    std::vector<PowerSeriesTrunc> functions;  // in sigma = s^(p^i)
    PowerSeriesTrunc x, y;
};

LevelData frobenius_level_subspace(const std::vector<AffPoly>& functions, const BranchParam& branch, int i, int N);

// Echelon basis of the K- or full span of the series, ordered by leading
// order; each basis element keeps the precision of the inputs.
std::vector<PowerSeriesTrunc> span_basis(const std::vector<PowerSeriesTrunc>& series, CoeffField field, int N);

// Fractions g / D^k (0 <= k <= depth) where D is the basis element of
// smallest positive order and g runs over basis elements of order at least
// k ord(D). Approximates the local ring of the normalization of the curve
// whose local ring contains the span.
std::vector<PowerSeriesTrunc> local_ring_fractions(const std::vector<PowerSeriesTrunc>& series, CoeffField field,
                                                   int N, int depth = 2);

// Monomials u^i v^j with i + j <= degree.
std::vector<AffPoly> monomials_up_to(int degree, Coeff p = 3);

} // namespace nscurve
