#include "nscurve/descent.hpp"

#include "nscurve/error.hpp"
#include "nscurve/invariants.hpp"

#include <algorithm>

namespace nscurve {

namespace {

void require_p3(Coeff p) {
    if (p != 3) throw Error(ErrorKind::InvalidArgument, "this operation is implemented for p = 3 only");
}

void require_level1(const HomPoly& f) {
    for (const auto& [e, c] : f.terms())
        if (level_of(c) > 1) throw Error(ErrorKind::InvalidArgument, "descent supports coefficients up to level 1");
}

std::vector<TowerScalar> coefficient_vector(const HomPoly& f, const std::vector<Exps>& monos) {
    std::vector<TowerScalar> row;
    row.reserve(monos.size());
    for (const auto& e : monos) row.push_back(lift(f.coeff(e).reduced(), 1, 1));
    return row;
}

Matrix graded_rows(const IdealPresentation& I, int d) {
    const auto monos = monomials_of_degree(d);
    Matrix rows;
    for (const auto& g : I.generators) {
        if (g.is_zero() || g.degree() > d) continue;
        for (const auto& e : monomials_of_degree(d - g.degree()))
            rows.push_back(coefficient_vector(g * HomPoly::monomial(e, TowerScalar(1, g.p())), monos));
    }
    return rows;
}

// Linear form with the gradient of f at P as coefficients.
HomPoly tangent_line(const HomPoly& f, const ProjPoint& P) {
    return HomPoly::linear(evaluate(f.partial(0), P), evaluate(f.partial(1), P), evaluate(f.partial(2), P));
}

TowerScalar apply_linear(const HomPoly& L, const ProjPoint& P) { return evaluate(L, P); }

bool lines_independent(const std::vector<HomPoly>& lines) {
    Matrix m;
    for (const auto& L : lines) m.push_back(coefficient_vector(L, monomials_of_degree(1)));
    return rank(m) == lines.size();
}

} // namespace

HomPoly coeff_derivation(const HomPoly& f) {
    require_level1(f);
    HomPoly r(f.degree(), f.p());
    for (const auto& [e, c] : f.terms()) r.set(e, derive(lift(c.reduced(), 1, 1)));
    return r;
}

Echelon graded_piece(const IdealPresentation& I, int d) {
    Matrix rows = graded_rows(I, d);
    return row_echelon(rows);
}

bool same_graded_pieces(const IdealPresentation& I, const IdealPresentation& J, int max_degree) {
    for (int d = 0; d <= max_degree; ++d) {
        Echelon a = graded_piece(I, d), b = graded_piece(J, d);
        if (a.pivots != b.pivots || a.rows != b.rows) return false;
    }
    return true;
}

bool is_invariant(const IdealPresentation& I) {
    for (const auto& g : I.generators) {
        if (g.is_zero()) continue;
        HomPoly Dg = coeff_derivation(g);
        if (Dg.is_zero()) continue;
        Matrix rows = graded_rows(I, g.degree());
        const std::size_t r0 = rank(rows);
        rows.push_back(coefficient_vector(Dg, monomials_of_degree(g.degree())));
        if (rank(rows) != r0) return false;
    }
    return true;
}

HomPoly trace(const HomPoly& f) {
    require_p3(f.p());
    HomPoly t = coeff_derivation(coeff_derivation(f));
    HomPoly out(f.degree(), f.p());
    for (const auto& [e, c] : t.terms()) {
        TowerScalar k = c.reduced();
        if (k.level() != 0) throw Error(ErrorKind::InvalidArgument, "trace left K; input was not at level 1");
        out.set(e, k);
    }
    return out;
}

std::array<HomPoly, 3> decompose(const HomPoly& f) {
    require_p3(f.p());
    const TowerScalar r = TowerScalar::generator(1, f.p());
    std::array<HomPoly, 3> out;
    for (int i = 0; i < 3; ++i) out[i] = -trace(f * r.pow(2 - i));
    return out;
}

HomPoly primitive_form(const HomPoly& f) {
    if (f.is_zero()) return f;
    for (const auto& [e, c] : f.terms())
        if (c.reduced().level() != 0) return f.monic();
    const Coeff p = f.p();
    // clear denominators, then divide by the gcd of the numerators
    FpPoly l = FpPoly::constant(p, 1);
    for (const auto& [e, c] : f.terms()) {
        const FpPoly d = c.reduced().den();
        l = l * (d / gcd(l, d));
    }
    HomPoly g = f * TowerScalar(l, FpPoly::constant(p, 1), 0);
    FpPoly content(p);
    for (const auto& [e, c] : g.terms()) content = gcd(content, c.reduced().num());
    g = g * TowerScalar(FpPoly::constant(p, 1), content, 0);
    const TowerScalar lead = g.terms().begin()->second.reduced();
    return (g * TowerScalar(mod_inverse(lead.num().lead(), p), p)).reduced();
}

IdealPresentation descend(const IdealPresentation& I) {
    if (!is_invariant(I)) throw Error(ErrorKind::NotInvariant, "ideal is not invariant under the derivation");
    IdealPresentation J;
    J.level = 0;
    for (const auto& g : I.generators) {
        if (g.is_zero()) continue;
        require_p3(g.p());
        const TowerScalar r = TowerScalar::generator(1, g.p());
        for (int j = 0; j < 3; ++j) {
            HomPoly h = trace(g * r.pow(j));
            if (h.is_zero()) continue;
            h = primitive_form(h);
            if (std::find(J.generators.begin(), J.generators.end(), h) == J.generators.end()) J.generators.push_back(h);
        }
    }
    return J;
}

IdealPresentation extend(const IdealPresentation& J) {
    IdealPresentation I;
    I.level = 1;
    for (const auto& g : J.generators) I.generators.push_back(g.lifted(1));
    return I;
}

HomPoly x_quotient(const HomPoly& L) {
    if (L.degree() != 1) throw Error(ErrorKind::InvalidArgument, "x_quotient expects a line");
    require_level1(L);
    const Coeff p = L.p();
    HomPoly out(static_cast<int>(p), p);
    for (const auto& [e, c] : L.terms()) {
        Exps f = e;
        for (auto& x : f) x *= static_cast<int>(p);
        out.set(f, frobenius(lift(c.reduced(), 1, 1)).reduced());
    }
    return out;
}

OneTypeResult one_type(const ProjPoint& P) {
    require_p3(P[0].p());
    if (degree_of_point(P) != 3)
        throw Error(ErrorKind::InvalidArgument, "one_type expects a point of degree 3");
    OneTypeResult res;
    auto lines = forms_through({P}, 1, P[0].p());
    if (!lines.empty()) {
        res.type = 1;
        res.witness = lines.front();
        return res;
    }
    auto conics = forms_through({P}, 2, P[0].p());
    for (const auto& c : conics)
        if (conic_rank(c) == 3) {
            res.type = 2;
            res.witness = c;
            return res;
        }
    for (std::size_t i = 0; i < conics.size(); ++i)
        for (std::size_t j = i + 1; j < conics.size(); ++j) {
            HomPoly c = conics[i] + conics[j];
            if (conic_rank(c) == 3) {
                res.type = 2;
                res.witness = c;
                return res;
            }
        }
    throw Error(ErrorKind::NoWitness, "no K-line and no irreducible K-conic through the point");
}

std::optional<ProjPoint> find_rational_point(const HomPoly& conic) {
    const Coeff p = conic.p();
    const TowerScalar zero(0, p), one(1, p);
    const std::array<ProjPoint, 3> coord = {ProjPoint(one, zero, zero), ProjPoint(zero, one, zero),
                                            ProjPoint(zero, zero, one)};
    for (const auto& q : coord)
        if (evaluate(conic, q).is_zero()) return q;
    // restrict to the coordinate line x_k = 0: a u^2 + b u w + c w^2
    for (int k = 0; k < 3; ++k) {
        const int i = (k + 1) % 3, j = (k + 2) % 3;
        auto coeff = [&](int ei, int ej) {
            Exps e{0, 0, 0};
            e[i] = ei;
            e[j] = ej;
            return conic.coeff(e).reduced();
        };
        TowerScalar a = coeff(2, 0), b = coeff(1, 1), c = coeff(0, 2);
        if (a.is_zero()) continue;  // then (1:0) is a root, i.e. a coordinate point
        auto s = scalar_square_root(b * b - TowerScalar(4, p) * a * c);
        if (!s) continue;
        TowerScalar u = (-b + *s) / (TowerScalar(2, p) * a);
        std::array<TowerScalar, 3> v{zero, zero, zero};
        v[i] = u;
        v[j] = one;
        return ProjPoint(v[0], v[1], v[2]);
    }
    return std::nullopt;
}

ProjMap conic_normal_map(const HomPoly& conic, const ProjPoint& r1, const std::optional<ProjPoint>& second) {
    const Coeff p = conic.p();
    const TowerScalar zero(0, p), one(1, p);
    const HomPoly target = HomPoly::var(0, p).pow(2) - HomPoly::var(1, p) * HomPoly::var(2, p);
    const HomPoly t1 = tangent_line(conic, r1);
    // second K-point: along a K-line through R1 and a coordinate point
    std::optional<ProjPoint> r2 = second;
    const std::array<ProjPoint, 3> coord = {ProjPoint(one, zero, zero), ProjPoint(zero, one, zero),
                                            ProjPoint(zero, zero, one)};
    for (const auto& s : coord) {
        if (r2) break;
        if (s == r1) continue;
        TowerScalar slope = apply_linear(t1, s);
        if (slope.is_zero()) continue;  // line R1 S is tangent
        TowerScalar cs = evaluate(conic, s);
        if (cs.is_zero()) {
            r2 = s;
            break;
        }
        TowerScalar lam = -slope / cs;
        r2 = ProjPoint(r1[0] + lam * s[0], r1[1] + lam * s[1], r1[2] + lam * s[2]);
    }
    if (!r2) throw Error(ErrorKind::NoWitness, "no second K-point on the conic");
    const HomPoly t2 = tangent_line(conic, *r2);
    // chord through R1 and R2
    const HomPoly chord = HomPoly::linear(r1[1] * (*r2)[2] - r1[2] * (*r2)[1], r1[2] * (*r2)[0] - r1[0] * (*r2)[2],
                                          r1[0] * (*r2)[1] - r1[1] * (*r2)[0]);
    ProjMap T = ProjMap::from_forms({chord, t2, t1});
    // image conic is alpha x^2 + beta y z; rescale y to reach x^2 - y z
    HomPoly image = apply_map(T, conic);
    TowerScalar alpha = image.coeff({2, 0, 0}), beta = image.coeff({0, 1, 1});
    if (alpha.is_zero() || beta.is_zero()) throw Error(ErrorKind::InvalidArgument, "conic is singular");
    TowerScalar mu = -alpha / beta;
    ProjMap S({{{one, zero, zero}, {zero, mu.inverse(), zero}, {zero, zero, one}}});
    ProjMap M = compose(S, T);
    if (!proportional(apply_map(M, conic), target)) throw Error(ErrorKind::NoWitness, "conic normalization failed");
    return M;
}

PairNormalForm pair_normal_form(const ProjPoint& P, const ProjPoint& Q, const std::optional<ProjPoint>& conic_point) {
    if (P == Q) throw Error(ErrorKind::InvalidArgument, "points must be distinct");
    const Coeff p = P[0].p();
    OneTypeResult tp = one_type(P), tq = one_type(Q);
    if (tp.type != tq.type) throw Error(ErrorKind::DistinctTypes, "points have different 1-types");
    const TowerScalar zero(0, p), one(1, p);
    PairNormalForm out{tp.type, ProjMap::identity(p), P, Q, HomPoly(0, p)};

    if (tp.type == 1) {
        const HomPoly& m1 = tp.witness;  // through P, becomes y
        const HomPoly& m2 = tq.witness;  // through Q, becomes x
        if (!lines_independent({m1, m2})) throw Error(ErrorKind::InvalidArgument, "points share their K-line");
        const std::vector<HomPoly> candidates = {
            HomPoly::var(2, p), HomPoly::var(0, p), HomPoly::var(1, p),
            HomPoly::var(0, p) + HomPoly::var(1, p) + HomPoly::var(2, p),
            HomPoly::var(0, p) + HomPoly::var(2, p), HomPoly::var(1, p) + HomPoly::var(2, p),
            HomPoly::var(0, p) + HomPoly::var(1, p)};
        for (const auto& l3 : candidates) {
            if (!lines_independent({m1, m2, l3})) continue;
            if (apply_linear(l3, P).is_zero() || apply_linear(l3, Q).is_zero()) continue;
            out.map = ProjMap::from_forms({m2, m1, l3});
            out.p_image = out.map.apply(P);
            out.q_image = out.map.apply(Q);
            return out;
        }
        throw Error(ErrorKind::NoWitness, "no third K-line avoiding both points");
    }

    // type 2: a shared irreducible K-conic
    auto conics = forms_through({P, Q}, 2, p);
    std::optional<HomPoly> conic;
    for (const auto& c : conics)
        if (conic_rank(c) == 3) {
            conic = c;
            break;
        }
    for (std::size_t i = 0; i < conics.size() && !conic; ++i)
        for (std::size_t j = i + 1; j < conics.size() && !conic; ++j)
            if (conic_rank(conics[i] + conics[j]) == 3) conic = conics[i] + conics[j];
    if (!conic) throw Error(ErrorKind::NoWitness, "no irreducible K-conic through both points");
    const HomPoly target = HomPoly::var(0, p).pow(2) - HomPoly::var(1, p) * HomPoly::var(2, p);
    out.conic = *conic;
    if (proportional(*conic, target)) return out;

    std::optional<ProjPoint> r1 = find_rational_point(*conic);
    if (!r1 && conic_point) {
        if (conic_point->level() != 0 || !evaluate(*conic, *conic_point).is_zero())
            throw Error(ErrorKind::InvalidArgument, "supplied point is not a K-point of the conic");
        r1 = conic_point;
    }
    if (!r1) throw Error(ErrorKind::NeedsSeparableExtension, "no K-rational point found on the conic");

    out.map = conic_normal_map(*conic, *r1);
    out.p_image = out.map.apply(P);
    out.q_image = out.map.apply(Q);
    return out;
}

} // namespace nscurve
