#pragma once

#include "nscurve/tower.hpp"

#include <array>
#include <map>
#include <utility>
#include <vector>

namespace nscurve {

using Exps = std::array<int, 3>;

// Lexicographic with x before y before z, largest exponents first.
struct ExpsOrder {
    bool operator()(const Exps& a, const Exps& b) const { return a > b; }
};

class HomPoly {
public:
    using Terms = std::map<Exps, TowerScalar, ExpsOrder>;

    explicit HomPoly(int degree = 0, Coeff p = 3) : degree_(degree), p_(p) {}

    static HomPoly monomial(const Exps& e, const TowerScalar& c);
    // x, y, z for i = 0, 1, 2
    static HomPoly var(int i, Coeff p = 3);
    // Linear form a x + b y + c z.
    static HomPoly linear(const TowerScalar& a, const TowerScalar& b, const TowerScalar& c);

    int degree() const { return degree_; }
    Coeff p() const { return p_; }
    int level() const;
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    TowerScalar coeff(const Exps& e) const;
    void set(const Exps& e, const TowerScalar& c);
    void add_term(const Exps& e, const TowerScalar& c);

    HomPoly operator+(const HomPoly& o) const;
    HomPoly operator-(const HomPoly& o) const;
    HomPoly operator-() const;
    HomPoly operator*(const HomPoly& o) const;
    HomPoly operator*(const TowerScalar& c) const;
    HomPoly pow(int e) const;
    HomPoly partial(int var) const;

    // Coefficients rewritten at their minimal levels.
    HomPoly reduced() const;
    // Coefficients lifted to `level`.
    HomPoly lifted(int level) const;
    // Coefficients reinterpreted at `level` without changing num/den.
    HomPoly retagged(int level) const;
    // Divide by the leading coefficient.
    HomPoly monic() const;

    // Equality of polynomials (coefficients compared across levels).
    bool operator==(const HomPoly& o) const;
    bool operator!=(const HomPoly& o) const { return !(*this == o); }

private:
    int degree_;
    Coeff p_;
    Terms terms_;
};

HomPoly operator*(const TowerScalar& c, const HomPoly& f);

// All exponent triples of total degree d in ExpsOrder.
std::vector<Exps> monomials_of_degree(int d);

// f(L0, L1, L2) for linear forms L0, L1, L2.
HomPoly substitute(const HomPoly& f, const std::array<HomPoly, 3>& forms);

// True if f = c g for some nonzero scalar c.
bool proportional(const HomPoly& f, const HomPoly& g);

class ProjPoint {
public:
    ProjPoint(const TowerScalar& x, const TowerScalar& y, const TowerScalar& z);

    const TowerScalar& operator[](int i) const { return c_[i]; }
    const std::array<TowerScalar, 3>& coords() const { return c_; }
    int level() const;
    // Index of the coordinate normalized to 1.
    int chart() const;
    bool operator==(const ProjPoint& o) const { return c_ == o.c_; }
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }

private:
    std::array<TowerScalar, 3> c_;
};

class ProjMap {
public:
    using Mat = std::array<std::array<TowerScalar, 3>, 3>;

    explicit ProjMap(const Mat& m);
    static ProjMap identity(Coeff p = 3);
    // Map whose rows are the coefficient vectors of the given linear forms,
    // i.e. the point (x:y:z) goes to (L0(x,y,z):L1:L2).
    static ProjMap from_forms(const std::array<HomPoly, 3>& forms);

    const Mat& matrix() const { return m_; }
    const TowerScalar& operator()(int i, int j) const { return m_[i][j]; }
    int definition_level() const;
    TowerScalar determinant() const;
    ProjMap inverse() const;
    ProjPoint apply(const ProjPoint& P) const;
    std::array<HomPoly, 3> forms() const;

    bool operator==(const ProjMap& o) const { return m_ == o.m_; }

private:
    Mat m_;
};

// this ∘ other as matrices
ProjMap compose(const ProjMap& outer, const ProjMap& inner);

TowerScalar evaluate(const HomPoly& f, const ProjPoint& P);
bool is_singular_at(const HomPoly& f, const ProjPoint& P);

inline constexpr int kDefaultIntersectionBound = 40;
int intersection_multiplicity(const HomPoly& f, const HomPoly& g, const ProjPoint& P,
                              int bound = kDefaultIntersectionBound);

int conic_rank(const HomPoly& f);

// Basis (reduced row echelon in monomial order, level 0) of the K-forms of
// degree d vanishing at every point.
std::vector<HomPoly> forms_through(const std::vector<ProjPoint>& points, int d, Coeff p = 3);

// f ∘ T^{-1}: the zero set of the result is T applied to the zero set of f.
HomPoly apply_map(const ProjMap& T, const HomPoly& f);

} // namespace nscurve
