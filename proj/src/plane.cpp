#include "nscurve/plane.hpp"

#include "nscurve/affine.hpp"
#include "nscurve/error.hpp"

#include <algorithm>

namespace nscurve {

HomPoly HomPoly::monomial(const Exps& e, const TowerScalar& c) {
    HomPoly f(e[0] + e[1] + e[2], c.p());
    f.set(e, c);
    return f;
}

HomPoly HomPoly::var(int i, Coeff p) {
    Exps e{0, 0, 0};
    e[i] = 1;
    return monomial(e, TowerScalar(1, p));
}

HomPoly HomPoly::linear(const TowerScalar& a, const TowerScalar& b, const TowerScalar& c) {
    HomPoly f(1, a.p());
    f.set({1, 0, 0}, a);
    f.set({0, 1, 0}, b);
    f.set({0, 0, 1}, c);
    return f;
}

int HomPoly::level() const {
    int lv = 0;
    for (const auto& [e, c] : terms_) lv = std::max(lv, c.level());
    return lv;
}

TowerScalar HomPoly::coeff(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? TowerScalar(0, p_) : it->second;
}

void HomPoly::set(const Exps& e, const TowerScalar& c) {
    if (e[0] < 0 || e[1] < 0 || e[2] < 0 || e[0] + e[1] + e[2] != degree_)
        throw Error(ErrorKind::InvalidArgument, "exponent does not match degree");
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = c;
}

void HomPoly::add_term(const Exps& e, const TowerScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        set(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

HomPoly HomPoly::operator+(const HomPoly& o) const {
    if (o.is_zero()) return *this;
    if (is_zero()) return o;
    if (degree_ != o.degree_) throw Error(ErrorKind::InvalidArgument, "adding forms of different degree");
    HomPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

HomPoly HomPoly::operator-() const {
    HomPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

HomPoly HomPoly::operator-(const HomPoly& o) const { return *this + (-o); }

HomPoly HomPoly::operator*(const HomPoly& o) const {
    HomPoly r(degree_ + o.degree_, p_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
    return r;
}

HomPoly HomPoly::operator*(const TowerScalar& c) const {
    HomPoly r(degree_, p_);
    if (c.is_zero()) return r;
    for (const auto& [e, a] : terms_) r.terms_[e] = a * c;
    return r;
}

HomPoly operator*(const TowerScalar& c, const HomPoly& f) { return f * c; }

HomPoly HomPoly::pow(int e) const {
    if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative power of a form");
    HomPoly r = monomial({0, 0, 0}, TowerScalar(1, p_));
    HomPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

HomPoly HomPoly::partial(int var) const {
    HomPoly r(std::max(degree_ - 1, 0), p_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exps f = e;
        --f[var];
        r.add_term(f, c * TowerScalar(e[var], p_));
    }
    return r;
}

HomPoly HomPoly::reduced() const {
    HomPoly r = *this;
    for (auto& [e, c] : r.terms_) c = c.reduced();
    return r;
}

HomPoly HomPoly::lifted(int level) const {
    HomPoly r = *this;
    for (auto& [e, c] : r.terms_) c = lift(c, level, std::max(level, c.level()));
    return r;
}

HomPoly HomPoly::retagged(int level) const {
    HomPoly r = *this;
    for (auto& [e, c] : r.terms_) c = c.retagged(level);
    return r;
}

HomPoly HomPoly::monic() const {
    if (is_zero()) return *this;
    return *this * terms_.begin()->second.inverse();
}

bool HomPoly::operator==(const HomPoly& o) const {
    if (is_zero() && o.is_zero()) return true;
    return degree_ == o.degree_ && terms_ == o.terms_;
}

std::vector<Exps> monomials_of_degree(int d) {
    std::vector<Exps> out;
    for (int i = d; i >= 0; --i)
        for (int j = d - i; j >= 0; --j) out.push_back({i, j, d - i - j});
    return out;
}

HomPoly substitute(const HomPoly& f, const std::array<HomPoly, 3>& forms) {
    const Coeff p = f.p();
    HomPoly r(f.degree(), p);
    // cache powers of the forms
    std::array<std::vector<HomPoly>, 3> pw;
    for (int v = 0; v < 3; ++v) {
        pw[v].push_back(HomPoly::monomial({0, 0, 0}, TowerScalar(1, p)));
        for (int k = 1; k <= f.degree(); ++k) pw[v].push_back(pw[v].back() * forms[v]);
    }
    for (const auto& [e, c] : f.terms()) r = r + (pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]]) * c;
    return r;
}

bool proportional(const HomPoly& f, const HomPoly& g) {
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    if (f.degree() != g.degree() || f.terms().size() != g.terms().size()) return false;
    const TowerScalar ratio = g.terms().begin()->second / f.terms().begin()->second;
    return f * ratio == g;
}

ProjPoint::ProjPoint(const TowerScalar& x, const TowerScalar& y, const TowerScalar& z) : c_{x, y, z} {
    int k = 2;
    while (k >= 0 && c_[k].is_zero()) --k;
    if (k < 0) throw Error(ErrorKind::InvalidArgument, "all coordinates of a point are zero");
    if (!c_[k].is_one()) {
        TowerScalar inv = c_[k].inverse();
        for (auto& c : c_) c *= inv;
    }
}

int ProjPoint::level() const { return std::max({c_[0].level(), c_[1].level(), c_[2].level()}); }

int ProjPoint::chart() const {
    for (int k = 2; k >= 0; --k)
        if (!c_[k].is_zero()) return k;
    return 2;
}

ProjMap::ProjMap(const Mat& m) : m_(m) {
    if (determinant().is_zero()) throw Error(ErrorKind::InvalidArgument, "singular projective map");
}

ProjMap ProjMap::identity(Coeff p) {
    Mat m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = TowerScalar(i == j ? 1 : 0, p);
    return ProjMap(m);
}

ProjMap ProjMap::from_forms(const std::array<HomPoly, 3>& forms) {
    Mat m;
    for (int i = 0; i < 3; ++i) {
        if (forms[i].degree() != 1) throw Error(ErrorKind::InvalidArgument, "map components must be linear");
        for (int j = 0; j < 3; ++j) {
            Exps e{0, 0, 0};
            e[j] = 1;
            m[i][j] = forms[i].coeff(e);
        }
    }
    return ProjMap(m);
}

int ProjMap::definition_level() const {
    int lv = 0;
    for (const auto& row : m_)
        for (const auto& e : row) lv = std::max(lv, level_of(e));
    return lv;
}

TowerScalar ProjMap::determinant() const {
    const auto& a = m_;
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

ProjMap ProjMap::inverse() const {
    const auto& a = m_;
    TowerScalar det = determinant();
    Mat inv;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            // cofactor of a[j][i]
            int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            inv[i][j] = (a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0]) / det;
        }
    return ProjMap(inv);
}

ProjPoint ProjMap::apply(const ProjPoint& P) const {
    std::array<TowerScalar, 3> v;
    for (int i = 0; i < 3; ++i) v[i] = m_[i][0] * P[0] + m_[i][1] * P[1] + m_[i][2] * P[2];
    return ProjPoint(v[0], v[1], v[2]);
}

std::array<HomPoly, 3> ProjMap::forms() const {
    return {HomPoly::linear(m_[0][0], m_[0][1], m_[0][2]), HomPoly::linear(m_[1][0], m_[1][1], m_[1][2]),
            HomPoly::linear(m_[2][0], m_[2][1], m_[2][2])};
}

ProjMap compose(const ProjMap& outer, const ProjMap& inner) {
    ProjMap::Mat m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m[i][j] = outer(i, 0) * inner(0, j) + outer(i, 1) * inner(1, j) + outer(i, 2) * inner(2, j);
    return ProjMap(m);
}

HomPoly apply_map(const ProjMap& T, const HomPoly& f) { return substitute(f, T.inverse().forms()); }

TowerScalar evaluate(const HomPoly& f, const ProjPoint& P) {
    const Coeff p = f.p();
    TowerScalar acc(0, p);
    std::array<std::vector<TowerScalar>, 3> pw;
    for (int v = 0; v < 3; ++v) {
        pw[v].push_back(TowerScalar(1, p));
        for (int k = 1; k <= f.degree(); ++k) pw[v].push_back(pw[v].back() * P[v]);
    }
    for (const auto& [e, c] : f.terms()) acc += c * pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]];
    return acc;
}

bool is_singular_at(const HomPoly& f, const ProjPoint& P) {
    if (!evaluate(f, P).is_zero()) throw Error(ErrorKind::PointNotOnCurve, "point is not on the curve");
    for (int v = 0; v < 3; ++v)
        if (!evaluate(f.partial(v), P).is_zero()) return false;
    return true;
}

namespace {

// dim of L[u,v]/((f,g) + m^N) for local equations f, g at the origin.
std::size_t truncated_colength(const AffPoly& f, const AffPoly& g, int N, int level) {
    const Coeff p = f.p();
    // monomials u^a v^b with a+b < N, indexed by total degree then a descending
    std::map<AffPoly::Key, int> index;
    for (int d = 0; d < N; ++d)
        for (int a = d; a >= 0; --a) index[{a, d - a}] = static_cast<int>(index.size());
    const std::size_t ncols = index.size();
    Matrix rows;
    for (const AffPoly* h : {&f, &g}) {
        int ord = h->order();
        if (ord < 0 || ord >= N) continue;
        for (int d = 0; d + ord < N; ++d)
            for (int a = d; a >= 0; --a) {
                std::vector<TowerScalar> row(ncols, TowerScalar(0, p));
                bool any = false;
                for (const auto& [k, c] : h->terms()) {
                    int i = k.first + a, j = k.second + d - a;
                    if (i + j >= N) continue;
                    row[index[{i, j}]] = lift(c, level, level);
                    any = true;
                }
                if (any) rows.push_back(std::move(row));
            }
    }
    return ncols - (rows.empty() ? 0 : rank(rows));
}

} // namespace

int intersection_multiplicity(const HomPoly& f, const HomPoly& g, const ProjPoint& P, int bound) {
    AffPoly lf = local_equation(f, P), lg = local_equation(g, P);
    const int level = std::max(lf.level(), lg.level());
    // Bezout: a finite local intersection number never exceeds deg f deg g.
    const std::size_t bezout = static_cast<std::size_t>(std::max(f.degree(), 1) * std::max(g.degree(), 1));
    std::size_t prev = truncated_colength(lf, lg, 1, level);
    for (int N = 2; N <= bound; ++N) {
        std::size_t cur = truncated_colength(lf, lg, N, level);
        if (cur == prev) return static_cast<int>(cur);
        if (cur > bezout) break;
        prev = cur;
    }
    throw Error(ErrorKind::NotIsolated, "intersection multiplicity did not stabilize");
}

int conic_rank(const HomPoly& f) {
    if (f.degree() != 2) throw Error(ErrorKind::InvalidArgument, "conic_rank needs a quadratic form");
    if (f.p() == 2) throw Error(ErrorKind::InvalidArgument, "conic_rank needs odd characteristic");
    const Coeff p = f.p();
    const TowerScalar half = TowerScalar(2, p).inverse();
    Matrix m(3, std::vector<TowerScalar>(3, TowerScalar(0, p)));
    for (const auto& [e, c] : f.terms()) {
        std::vector<int> idx;
        for (int v = 0; v < 3; ++v)
            for (int k = 0; k < e[v]; ++k) idx.push_back(v);
        if (idx[0] == idx[1])
            m[idx[0]][idx[0]] = c;
        else {
            m[idx[0]][idx[1]] = c * half;
            m[idx[1]][idx[0]] = c * half;
        }
    }
    return static_cast<int>(rank(m));
}

std::vector<HomPoly> forms_through(const std::vector<ProjPoint>& points, int d, Coeff p) {
    const auto monos = monomials_of_degree(d);
    Matrix constraints;
    for (const auto& P : points) {
        const int m = P.level();
        std::vector<KCoordinates> vals;
        for (const auto& e : monos) vals.push_back(k_coordinates(evaluate(HomPoly::monomial(e, TowerScalar(1, p)), P), m));
        const std::size_t width = vals.front().coords.size();
        for (std::size_t k = 0; k < width; ++k) {
            std::vector<TowerScalar> row;
            for (const auto& v : vals) row.push_back(v.coords[k]);
            constraints.push_back(std::move(row));
        }
    }
    Matrix basis = null_space(constraints, monos.size());
    std::vector<HomPoly> out;
    for (const auto& row : basis) {
        HomPoly f(d, p);
        for (std::size_t i = 0; i < monos.size(); ++i) f.set(monos[i], row[i].reduced());
        out.push_back(f);
    }
    return out;
}

} // namespace nscurve
