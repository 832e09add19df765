#include "nscurve/branch.hpp"

#include "nscurve/error.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <utility>

namespace nscurve {

namespace {

constexpr int kMaxBlowups = 64;

using Series = PowerSeriesTrunc;

// (v - slope u)^m as an affine polynomial.
AffPoly tangent_power(const TowerScalar& slope, int m, Coeff p) {
    AffPoly lin = AffPoly::v(p) - AffPoly::u(p) * slope;
    return lin.pow(m);
}

// g(d u1, u1 (v1 + n)) / u1^m, the blow-up along the slope n / d with
// polynomial n and d so that integral coefficients stay integral.
AffPoly blow_up_horizontal(const AffPoly& g, const TowerScalar& n, const TowerScalar& d, int m) {
    const Coeff p = g.p();
    AffPoly shifted = AffPoly::v(p) + AffPoly::constant(n);
    int maxj = 0, maxi = 0;
    for (const auto& [k, c] : g.terms()) {
        maxi = std::max(maxi, k.first);
        maxj = std::max(maxj, k.second);
    }
    std::vector<AffPoly> pw{AffPoly::constant(TowerScalar(1, p))};
    for (int j = 1; j <= maxj; ++j) pw.push_back(pw.back() * shifted);
    std::vector<TowerScalar> dp{TowerScalar(1, p)};
    for (int i = 1; i <= maxi; ++i) dp.push_back(dp.back() * d);
    AffPoly r(p);
    for (const auto& [k, c] : g.terms()) {
        const int upow = k.first + k.second - m;
        const TowerScalar cd = c * dp[k.first];
        for (const auto& [k2, c2] : pw[k.second].terms()) r.add_term(upow + k2.first, k2.second, cd * c2);
    }
    return r;
}

// Multiply by the lcm of the coefficient denominators.
AffPoly clear_denominators(const AffPoly& g) {
    int level = 0;
    for (const auto& [k, c] : g.terms()) level = std::max(level, c.level());
    FpPoly l = FpPoly::constant(g.p(), 1);
    for (const auto& [k, c] : g.terms()) {
        const FpPoly d = lift(c, level, level).den();
        l = l * (d / gcd(l, d));
    }
    if (l.is_one()) return g;
    return g * TowerScalar(l, FpPoly::constant(g.p(), 1), level);
}

// Numerator and denominator of x as elements of the same level.
std::pair<TowerScalar, TowerScalar> split_fraction(const TowerScalar& x) {
    const FpPoly one = FpPoly::constant(x.p(), 1);
    return {TowerScalar(x.num(), one, x.level()), TowerScalar(x.den(), one, x.level())};
}

// g(u1 v1, v1) / v1^m
AffPoly blow_up_vertical(const AffPoly& g, int m) {
    AffPoly r(g.p());
    for (const auto& [k, c] : g.terms()) r.add_term(k.first, k.first + k.second - m, c);
    return r;
}

int p_adic_valuation(int m, Coeff p) {
    int k = 0;
    while (m % static_cast<int>(p) == 0) {
        m /= static_cast<int>(p);
        ++k;
    }
    return k;
}

// (u, v) = (c^2 s, c phi(s)) on the smooth germ g = 0 with
// c = g_v(0, 0) != 0. After u = c^2 z, v = c w the germ divided by c^2 has
// integral coefficients and unit w-derivative, so Newton's iteration stays
// integral as well.
std::pair<Series, Series> solve_smooth(const AffPoly& g, int N) {
    const Coeff p = g.p();
    const TowerScalar c = g.coeff(0, 1);
    const TowerScalar c2 = c * c;
    int maxk = 0;
    for (const auto& [k, e] : g.terms()) maxk = std::max(maxk, 2 * k.first + k.second);
    std::vector<TowerScalar> cp{TowerScalar(1, p)};
    for (int i = 1; i <= maxk; ++i) cp.push_back(cp.back() * c);
    AffPoly h(p);
    for (const auto& [k, e] : g.terms()) {
        const int w = 2 * k.first + k.second;  // 1 only for the term c v
        if (w < 1) throw Error(ErrorKind::NotUnibranch, "germ does not pass through the centre");
        h.add_term(k.first, k.second, w == 1 ? TowerScalar(1, p) : e * cp[w - 2]);
    }
    const Series s = Series::variable(N, p);
    const AffPoly hv = h.partial_v();
    Series phi(N, p);
    for (int iter = 0; iter <= N + 1; ++iter) {
        Series G = compose(h, s, phi);
        if (G.is_zero()) return {s * c2, phi * c};
        Series Gv = compose(hv, s, phi);
        phi = phi - G * Gv.inverse();
    }
    throw Error(ErrorKind::NotUnibranch, "implicit function iteration did not converge");
}

AffPoly swap_variables(const AffPoly& g) {
    AffPoly r(g.p());
    for (const auto& [k, c] : g.terms()) r.add_term(k.second, k.first, c);
    return r;
}

int gcd_of(const std::set<int>& vals) {
    int g = 0;
    for (int v : vals) g = std::gcd(g, v);
    return g;
}

// Row vectors for echelon computations over K or the full tower level.
Matrix series_rows(const std::vector<Series>& series, CoeffField field, int N, int& width, int& level) {
    level = 0;
    for (const auto& s : series) level = std::max(level, s.level());
    width = 1;
    if (field == CoeffField::K)
        for (int i = 0; i < level; ++i) width *= static_cast<int>(series.front().p());
    Matrix rows;
    for (const auto& s : series) {
        std::vector<TowerScalar> row(static_cast<std::size_t>(N * width), TowerScalar(0, s.p()));
        for (int k = 0; k < N; ++k) {
            if (s[k].is_zero()) continue;
            if (field == CoeffField::K) {
                auto kc = k_coordinates(s[k], level);
                for (int j = 0; j < width; ++j) row[k * width + j] = kc.coords[j];
            } else {
                row[k] = lift(s[k], level, level);
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void check_nonvanishing(const std::vector<Series>& series, int N) {
    for (const auto& s : series) {
        if (s.prec() < N) throw Error(ErrorKind::TruncationTooSmall, "series known to fewer than N terms");
        if (s.truncated(N).is_zero())
            throw Error(ErrorKind::TruncationTooSmall, "a function vanishes on the branch modulo s^N");
    }
}

} // namespace

PowerSeriesTrunc compose(const AffPoly& g, const PowerSeriesTrunc& x, const PowerSeriesTrunc& y) {
    const int N = std::min(x.prec(), y.prec());
    const Coeff p = g.p();
    int mi = 0, mj = 0;
    for (const auto& [k, c] : g.terms()) {
        mi = std::max(mi, k.first);
        mj = std::max(mj, k.second);
    }
    std::vector<Series> px{Series::constant(TowerScalar(1, p), N)}, py{Series::constant(TowerScalar(1, p), N)};
    for (int i = 1; i <= mi; ++i) px.push_back((px.back() * x).truncated(N));
    for (int j = 1; j <= mj; ++j) py.push_back((py.back() * y).truncated(N));
    Series acc(N, p);
    for (const auto& [k, c] : g.terms()) acc = acc + (px[k.first] * py[k.second]).truncated(N) * c;
    return acc;
}

std::vector<PowerSeriesTrunc> compose_all(const std::vector<AffPoly>& functions, const BranchParam& branch, int N) {
    if (N > branch.certified_order)
        throw Error(ErrorKind::TruncationTooSmall, "branch is certified to fewer than N terms");
    const Series x = branch.x.truncated(N), y = branch.y.truncated(N);
    const Coeff p = x.p();
    int mi = 0, mj = 0;
    for (const auto& g : functions)
        for (const auto& [k, c] : g.terms()) {
            mi = std::max(mi, k.first);
            mj = std::max(mj, k.second);
        }
    std::vector<Series> px{Series::constant(TowerScalar(1, p), N)}, py{Series::constant(TowerScalar(1, p), N)};
    for (int i = 1; i <= mi; ++i) px.push_back((px.back() * x).truncated(N));
    for (int j = 1; j <= mj; ++j) py.push_back((py.back() * y).truncated(N));
    std::vector<Series> out;
    for (const auto& g : functions) {
        Series acc(N, p);
        for (const auto& [k, c] : g.terms()) acc = acc + (px[k.first] * py[k.second]).truncated(N) * c;
        out.push_back(acc);
    }
    return out;
}

BranchParam hn_parametrize(const AffPoly& f, const TowerScalar& a, const TowerScalar& b, int N, int max_level) {
    if (!f.eval(a, b).is_zero()) throw Error(ErrorKind::PointNotOnCurve, "centre is not on the curve");
    const Coeff p = f.p();
    const AffPoly germ = clear_denominators(f.translated(a, b));
    if (germ.is_zero()) throw Error(ErrorKind::NotUnibranch, "zero equation");

    BranchParam out;
    out.a = a;
    out.b = b;
    AffPoly g = germ;
    while (g.order() > 1) {
        if (static_cast<int>(out.blowups.size()) >= kMaxBlowups)
            throw Error(ErrorKind::NotUnibranch, "expansion does not terminate; germ not reduced");
        const int m = g.order();
        const AffPoly h = g.homogeneous_part(m);
        const TowerScalar cv = h.coeff(0, m);
        BlowUp step;
        if (!cv.is_zero()) {
            // h = cv (v - a u)^m with m = p^k m'; the u^q v^(m-q) coefficient
            // of (v^q - a^q u^q)^m' gives a^q.
            const int k = p_adic_valuation(m, p);
            int q = 1;
            for (int i = 0; i < k; ++i) q *= static_cast<int>(p);
            const int mprime = m / q;
            TowerScalar slope = -h.coeff(q, m - q) / (cv * TowerScalar(mprime, p));
            for (int i = 0; i < k; ++i) slope = p_th_root(slope.reduced(), max_level);
            if (!(h == tangent_power(slope, m, p) * cv))
                throw Error(ErrorKind::NotUnibranch, "tangent cone has more than one direction");
            auto [n, d] = split_fraction(slope);
            step.slope = slope;
            step.scale = d;
            g = clear_denominators(blow_up_horizontal(g, n, d, m));
        } else {
            if (!(h == AffPoly::monomial(m, 0, h.coeff(m, 0))))
                throw Error(ErrorKind::NotUnibranch, "tangent cone has more than one direction");
            step.vertical = true;
            g = blow_up_vertical(g, m);
        }
        out.blowups.push_back(step);
        if (g.order() < 1) throw Error(ErrorKind::NotUnibranch, "strict transform misses the centre");
    }
    if (g.order() != 1) throw Error(ErrorKind::NotUnibranch, "degenerate germ");

    Series U(N, p), V(N, p);
    if (!g.coeff(0, 1).is_zero()) {
        std::tie(U, V) = solve_smooth(g, N);
    } else {
        std::tie(V, U) = solve_smooth(swap_variables(g), N);
    }
    for (auto it = out.blowups.rbegin(); it != out.blowups.rend(); ++it) {
        if (it->vertical) {
            U = (U * V).truncated(N);
        } else {
            V = (U * (V + Series::constant(it->slope * it->scale, N))).truncated(N);
            U = U * it->scale;
        }
    }
    if (!compose(germ, U, V).is_zero())
        throw Error(ErrorKind::NotUnibranch, "parametrization does not satisfy the equation");

    out.x = U + Series::constant(a, N);
    out.y = V + Series::constant(b, N);
    out.multiplicity = std::min(U.order(), V.order());
    out.certified_order = N;
    // s must be a uniformizer: attained orders of low-degree local
    // functions have gcd 1.
    std::vector<Series> local;
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; i + j <= 2; ++j)
            if (i + j > 0) {
                AffPoly mono = AffPoly::monomial(i, j, TowerScalar(1, p));
                Series s = compose(mono, U, V);
                if (!s.is_zero()) local.push_back(s);
            }
    if (gcd_of(value_set(local, CoeffField::Full, N)) != 1)
        throw Error(ErrorKind::NotUnibranch, "parametrization is not primitive");
    return out;
}

BranchParam hn_parametrize(const HomPoly& F, const ProjPoint& P, int N, int max_level) {
    const auto ab = affine_coordinates(P);
    return hn_parametrize(dehomogenize(F, P.chart()), ab[0], ab[1], N, max_level);
}

std::set<int> value_set(const std::vector<PowerSeriesTrunc>& series, CoeffField field, int N) {
    std::set<int> out;
    if (series.empty()) return out;
    check_nonvanishing(series, N);
    int width, level;
    Matrix rows = series_rows(series, field, N, width, level);
    Echelon e = row_echelon(rows, {}, false);
    for (int c : e.pivots) out.insert(c / width);
    return out;
}

std::set<int> value_set(const std::vector<AffPoly>& functions, const BranchParam& branch, CoeffField field, int N) {
    return value_set(compose_all(functions, branch, N), field, N);
}

int derivative_min_order(const std::vector<PowerSeriesTrunc>& series, CoeffField, int N) {
    // The smallest leading order in a span is the smallest leading order of
    // a spanning vector, whatever the coefficient field.
    int best = -1;
    for (const auto& s : series) {
        Series d = s.truncated(N).derivative();
        int o = d.order();
        if (o < d.prec() && (best < 0 || o < best)) best = o;
    }
    if (best < 0) throw Error(ErrorKind::AllDerivativesVanish, "every derivative vanishes modulo s^N");
    return best;
}

int derivative_min_order(const std::vector<AffPoly>& functions, const BranchParam& branch, CoeffField field, int N) {
    return derivative_min_order(compose_all(functions, branch, N), field, N);
}

LevelData frobenius_level_subspace(const std::vector<AffPoly>& functions, const BranchParam& branch, int i, int N) {
    LevelData out;
    for (const auto& s : compose_all(functions, branch, N)) out.functions.push_back(s.frobenius(i));
    out.x = branch.x.truncated(N).frobenius(i);
    out.y = branch.y.truncated(N).frobenius(i);
    return out;
}

std::vector<PowerSeriesTrunc> span_basis(const std::vector<PowerSeriesTrunc>& series, CoeffField field, int N) {
    std::vector<Series> kept;
    for (const auto& s : series)
        if (!s.truncated(N).is_zero()) kept.push_back(s.truncated(N));
    std::vector<Series> out;
    if (kept.empty()) return out;
    int width, level;
    Matrix rows = series_rows(kept, field, N, width, level);
    Echelon e = row_echelon(rows);
    const Coeff p = kept.front().p();
    const TowerScalar r = TowerScalar::generator(level, p);
    for (const auto& row : e.rows) {
        std::vector<TowerScalar> c(N, TowerScalar(0, p));
        for (int k = 0; k < N; ++k) {
            if (field == CoeffField::K) {
                KCoordinates kc{level, {}};
                bool any = false;
                for (int j = 0; j < width; ++j) {
                    kc.coords.push_back(row[k * width + j]);
                    any = any || !row[k * width + j].is_zero();
                }
                if (any) c[k] = kc.reconstruct();
            } else {
                c[k] = row[k];
            }
        }
        out.emplace_back(c, N);
    }
    return out;
}

std::vector<PowerSeriesTrunc> local_ring_fractions(const std::vector<PowerSeriesTrunc>& series, CoeffField field,
                                                   int N, int depth) {
    std::vector<Series> basis = span_basis(series, field, N);
    std::vector<Series> out = basis;
    const Series* D = nullptr;
    for (const auto& b : basis)
        if (b.order() > 0) {
            D = &b;
            break;
        }
    if (!D) return out;
    const int e = D->order();
    Series Dk = *D;
    for (int k = 1; k <= depth && N - k * e > 1; ++k) {
        for (const auto& g : basis)
            if (g.order() >= k * e) out.push_back(g.divided_by(Dk));
        Dk = Dk * *D;
    }
    return out;
}

std::vector<AffPoly> monomials_up_to(int degree, Coeff p) {
    std::vector<AffPoly> out;
    for (int d = 0; d <= degree; ++d)
        for (int i = d; i >= 0; --i) out.push_back(AffPoly::monomial(i, d - i, TowerScalar(1, p)));
    return out;
}

} // namespace nscurve
