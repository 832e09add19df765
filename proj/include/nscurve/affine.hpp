#pragma once

#include "nscurve/plane.hpp"

#include <map>
#include <utility>

namespace nscurve {

// Polynomial in two affine variables (u, v) over tower scalars.
class AffPoly {
public:
    using Key = std::pair<int, int>;
    using Terms = std::map<Key, TowerScalar>;

    explicit AffPoly(Coeff p = 3) : p_(p) {}
    static AffPoly constant(const TowerScalar& c);
    static AffPoly u(Coeff p = 3);
    static AffPoly v(Coeff p = 3);
    static AffPoly monomial(int i, int j, const TowerScalar& c);

    Coeff p() const { return p_; }
    int level() const;
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    TowerScalar coeff(int i, int j) const;
    void add_term(int i, int j, const TowerScalar& c);

    AffPoly operator+(const AffPoly& o) const;
    AffPoly operator-(const AffPoly& o) const;
    AffPoly operator-() const;
    AffPoly operator*(const AffPoly& o) const;
    AffPoly operator*(const TowerScalar& c) const;
    AffPoly pow(int e) const;
    bool operator==(const AffPoly& o) const;

    // Lowest total degree of a term; -1 for zero.
    int order() const;
    int total_degree() const;
    AffPoly homogeneous_part(int d) const;
    AffPoly partial_u() const;
    AffPoly partial_v() const;
    TowerScalar eval(const TowerScalar& a, const TowerScalar& b) const;
    // g(u + a, v + b)
    AffPoly translated(const TowerScalar& a, const TowerScalar& b) const;
    AffPoly lifted(int level) const;

private:
    Coeff p_;
    Terms terms_;
};

// Affine variables of the chart where coordinate `chart` is set to 1, in
// increasing index order.
std::array<int, 2> chart_variables(int chart);
AffPoly dehomogenize(const HomPoly& f, int chart);
// Local equation of f at P: dehomogenized at P's chart and translated so
// that P is the origin.
AffPoly local_equation(const HomPoly& f, const ProjPoint& P);
// Affine coordinates of P in its own chart.
std::array<TowerScalar, 2> affine_coordinates(const ProjPoint& P);

} // namespace nscurve
