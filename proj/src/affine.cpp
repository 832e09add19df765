#include "nscurve/affine.hpp"

#include "nscurve/error.hpp"

#include <algorithm>

namespace nscurve {

AffPoly AffPoly::constant(const TowerScalar& c) { return monomial(0, 0, c); }
AffPoly AffPoly::u(Coeff p) { return monomial(1, 0, TowerScalar(1, p)); }
AffPoly AffPoly::v(Coeff p) { return monomial(0, 1, TowerScalar(1, p)); }

AffPoly AffPoly::monomial(int i, int j, const TowerScalar& c) {
    AffPoly f(c.p());
    f.add_term(i, j, c);
    return f;
}

int AffPoly::level() const {
    int lv = 0;
    for (const auto& [k, c] : terms_) lv = std::max(lv, c.level());
    return lv;
}

TowerScalar AffPoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? TowerScalar(0, p_) : it->second;
}

void AffPoly::add_term(int i, int j, const TowerScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(Key{i, j}, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

AffPoly AffPoly::operator+(const AffPoly& o) const {
    AffPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

AffPoly AffPoly::operator-() const {
    AffPoly r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

AffPoly AffPoly::operator-(const AffPoly& o) const { return *this + (-o); }

AffPoly AffPoly::operator*(const AffPoly& o) const {
    AffPoly r(p_);
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return r;
}

AffPoly AffPoly::operator*(const TowerScalar& c) const {
    AffPoly r(p_);
    if (c.is_zero()) return r;
    for (const auto& [k, a] : terms_) r.terms_[k] = a * c;
    return r;
}

AffPoly AffPoly::pow(int e) const {
    AffPoly r = constant(TowerScalar(1, p_)), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

bool AffPoly::operator==(const AffPoly& o) const { return terms_ == o.terms_; }

int AffPoly::order() const {
    int ord = -1;
    for (const auto& [k, c] : terms_) {
        int d = k.first + k.second;
        if (ord < 0 || d < ord) ord = d;
    }
    return ord;
}

int AffPoly::total_degree() const {
    int deg = -1;
    for (const auto& [k, c] : terms_) deg = std::max(deg, k.first + k.second);
    return deg;
}

AffPoly AffPoly::homogeneous_part(int d) const {
    AffPoly r(p_);
    for (const auto& [k, c] : terms_)
        if (k.first + k.second == d) r.terms_[k] = c;
    return r;
}

AffPoly AffPoly::partial_u() const {
    AffPoly r(p_);
    for (const auto& [k, c] : terms_)
        if (k.first > 0) r.add_term(k.first - 1, k.second, c * TowerScalar(k.first, p_));
    return r;
}

AffPoly AffPoly::partial_v() const {
    AffPoly r(p_);
    for (const auto& [k, c] : terms_)
        if (k.second > 0) r.add_term(k.first, k.second - 1, c * TowerScalar(k.second, p_));
    return r;
}

TowerScalar AffPoly::eval(const TowerScalar& a, const TowerScalar& b) const {
    TowerScalar acc(0, p_);
    for (const auto& [k, c] : terms_) acc += c * a.pow(k.first) * b.pow(k.second);
    return acc;
}

AffPoly AffPoly::translated(const TowerScalar& a, const TowerScalar& b) const {
    const int deg = std::max(total_degree(), 0);
    std::vector<AffPoly> pu{constant(TowerScalar(1, p_))}, pv{constant(TowerScalar(1, p_))};
    AffPoly su = u(p_) + constant(a), sv = v(p_) + constant(b);
    for (int k = 1; k <= deg; ++k) {
        pu.push_back(pu.back() * su);
        pv.push_back(pv.back() * sv);
    }
    AffPoly r(p_);
    for (const auto& [k, c] : terms_) r = r + pu[k.first] * pv[k.second] * c;
    return r;
}

AffPoly AffPoly::lifted(int level) const {
    AffPoly r = *this;
    for (auto& [k, c] : r.terms_) c = lift(c, level, std::max(level, c.level()));
    return r;
}

std::array<int, 2> chart_variables(int chart) {
    switch (chart) {
    case 0: return {1, 2};
    case 1: return {0, 2};
    default: return {0, 1};
    }
}

AffPoly dehomogenize(const HomPoly& f, int chart) {
    const auto vars = chart_variables(chart);
    AffPoly r(f.p());
    for (const auto& [e, c] : f.terms()) r.add_term(e[vars[0]], e[vars[1]], c);
    return r;
}

std::array<TowerScalar, 2> affine_coordinates(const ProjPoint& P) {
    const auto vars = chart_variables(P.chart());
    return {P[vars[0]], P[vars[1]]};
}

AffPoly local_equation(const HomPoly& f, const ProjPoint& P) {
    const auto ab = affine_coordinates(P);
    return dehomogenize(f, P.chart()).translated(ab[0], ab[1]);
}

} // namespace nscurve
