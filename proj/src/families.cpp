#include "nscurve/families.hpp"

#include "nscurve/descent.hpp"
#include "nscurve/error.hpp"

namespace nscurve {

namespace {

constexpr Coeff kP = 3;

TowerScalar S(long long c) { return TowerScalar(c, kP); }
HomPoly X() { return HomPoly::var(0, kP); }
HomPoly Y() { return HomPoly::var(1, kP); }
HomPoly Z() { return HomPoly::var(2, kP); }

HomPoly family_conic(Family f) { return f == Family::C2 ? X() * Y() : X().pow(2) - Y() * Z(); }
HomPoly family_factor(Family f) { return f == Family::C0 ? X() : Z(); }

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidParameters, what); }

// Line coefficients before division by a^{1/3}.
std::array<TowerScalar, 3> raw_line(Family tag, const TowerScalar& t1, const TowerScalar& t2) {
    if (tag == Family::C2) return {t1, t2, -(t1 * t2)};
    return {t1 * t1 - t2 * t2, t2 - t1, t1 * t2 * t2 - t2 * t1 * t1};
}

// Binary quadratic obtained by restricting a conic to a line; roots are
// returned as points of the line.
struct LineRestriction {
    ProjPoint u, v;
    TowerScalar alpha, beta, gamma;  // F(s u + w v) = alpha s^2 + beta s w + gamma w^2
};

LineRestriction restrict_to_line(const HomPoly& F, const HomPoly& N) {
    Matrix row{{N.coeff({1, 0, 0}), N.coeff({0, 1, 0}), N.coeff({0, 0, 1})}};
    auto ker = null_space(row, 3);
    if (ker.size() != 2) throw Error(ErrorKind::InvalidArgument, "not a line");
    ProjPoint u(ker[0][0], ker[0][1], ker[0][2]), v(ker[1][0], ker[1][1], ker[1][2]);
    ProjPoint uv(u[0] + v[0], u[1] + v[1], u[2] + v[2]);
    TowerScalar a = evaluate(F, u), c = evaluate(F, v);
    return {u, v, a, evaluate(F, uv) - a - c, c};
}

std::vector<ProjPoint> rational_roots(const LineRestriction& lr) {
    const auto &a = lr.alpha, &b = lr.beta, &c = lr.gamma;
    auto at = [&](const TowerScalar& s, const TowerScalar& w) {
        return ProjPoint(s * lr.u[0] + w * lr.v[0], s * lr.u[1] + w * lr.v[1], s * lr.u[2] + w * lr.v[2]);
    };
    std::vector<ProjPoint> out;
    if (a.is_zero()) {
        out.push_back(at(S(1), S(0)));
        if (!b.is_zero()) out.push_back(at(-c, b));
        return out;
    }
    auto sq = scalar_square_root((b * b - S(4) * a * c).reduced());
    if (!sq) return out;
    out.push_back(at(-b + *sq, S(2) * a));
    if (!sq->is_zero()) out.push_back(at(-b - *sq, S(2) * a));
    return out;
}

bool proportional_poly(const HomPoly& f, const HomPoly& g) { return proportional(f.reduced(), g.reduced()); }

} // namespace

const char* family_name(Family f) {
    switch (f) {
    case Family::C0: return "C0";
    case Family::C1: return "C1";
    case Family::C2: return "C2";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    if (s == "C0") return Family::C0;
    if (s == "C1") return Family::C1;
    if (s == "C2") return Family::C2;
    throw Error(ErrorKind::InvalidArgument, "unknown family '" + s + "' (expected C0, C1 or C2)");
}

FamilyMember make_member(Family tag, const TowerScalar& t1, const TowerScalar& t2, const TowerScalar& a,
                         int max_level) {
    if (t1.p() != kP || t2.p() != kP || a.p() != kP) invalid("families are defined for p = 3");
    if (level_of(t1) != 1) invalid("t1 must lie in K^(1/3) but not in K");
    if (level_of(t2) != 1) invalid("t2 must lie in K^(1/3) but not in K");
    if (t1 == t2) invalid("t1 and t2 must be distinct");
    if (level_of(a) != 0) invalid("a must lie in K");
    if (a.is_zero()) invalid("a must be nonzero");
    if (tag == Family::C0) {
        TowerScalar e = t1 * t1 - t2 * t2;
        if (a == -(e * e * e)) invalid("a = -(t1^2 - t2^2)^3 is excluded for C0");
    }
    FamilyMember m;
    m.tag = tag;
    m.t1 = lift(t1.reduced(), 1, 1);
    m.t2 = lift(t2.reduced(), 1, 1);
    m.a = a.reduced();
    const TowerScalar root = p_th_root(m.a, std::max(max_level, 1));
    auto raw = raw_line(tag, m.t1, m.t2);
    for (int i = 0; i < 3; ++i) m.abc[i] = (raw[i] / root).reduced();
    return m;
}

FamilyMember member_from_abc(Family tag, const std::array<TowerScalar, 3>& abc, int max_level) {
    const auto &A = abc[0], &B = abc[1], &C = abc[2];
    if (B.is_zero()) invalid("B must be nonzero");
    TowerScalar t1, t2, alpha;
    if (tag == Family::C2) {
        if (A.is_zero() || C.is_zero()) invalid("A and C must be nonzero");
        alpha = -C / (A * B);
        t1 = A * alpha;
        t2 = B * alpha;
    } else {
        // t1, t2 are the roots of w^2 + (A/B) w + C/B
        TowerScalar b = A / B, c = C / B;
        auto sq = scalar_square_root((b * b - S(4) * c).reduced());
        if (!sq) invalid("(A, B, C) does not come from parameters t1, t2 in K^(1/3)");
        t1 = (-b - *sq) / S(2);
        t2 = (-b + *sq) / S(2);
        alpha = (t2 - t1) / B;
    }
    FamilyMember m = make_member(tag, t1, t2, frobenius(alpha).reduced(), max_level);
    for (int i = 0; i < 3; ++i)
        if (m.abc[i] != abc[i]) invalid("(A, B, C) does not come from valid parameters");
    return m;
}

HomPoly member_line(const FamilyMember& m) {
    auto raw = raw_line(m.tag, m.t1, m.t2);
    return HomPoly::linear(raw[0], raw[1], raw[2]);
}

HomPoly equation(const FamilyMember& m) {
    HomPoly F = family_conic(m.tag);
    HomPoly eq = (F * F * m.a + x_quotient(member_line(m)) * family_factor(m.tag)).reduced();
    for (const auto& [e, c] : eq.terms())
        if (c.level() != 0) throw Error(ErrorKind::InvalidArgument, "family equation left K");
    return eq;
}

std::array<ProjPoint, 2> singular_points(const FamilyMember& m) {
    const TowerScalar one = S(1), zero = S(0);
    std::array<ProjPoint, 2> pts = m.tag == Family::C2
        ? std::array<ProjPoint, 2>{ProjPoint(zero, m.t1, one), ProjPoint(m.t2, zero, one)}
        : std::array<ProjPoint, 2>{ProjPoint(m.t1, m.t1 * m.t1, one), ProjPoint(m.t2, m.t2 * m.t2, one)};
    HomPoly eq = equation(m);
    for (const auto& q : pts)
        if (!is_singular_at(eq, q)) throw Error(ErrorKind::InvalidArgument, "closed-form point is not singular");
    return pts;
}

ClassifyResult classify(const TowerScalar& c, const HomPoly& F, const HomPoly& M, const HomPoly& N) {
    if (c.is_zero()) throw Error(ErrorKind::InvalidArgument, "c must be nonzero");
    if (F.degree() != 2 || M.degree() != 1 || N.degree() != 1)
        throw Error(ErrorKind::InvalidArgument, "expected a conic and two lines");
    IdealPresentation I{{M}, 1};
    if (is_invariant(I)) throw Error(ErrorKind::InvariantLine, "the level-1 line is invariant, so the cube is a K-line cubed");

    ClassifyResult res;
    if (conic_rank(F) < 3) {
        res.tag = Family::C2;
        // the singular point of the line pair and its two lines
        Matrix gram(3, std::vector<TowerScalar>(3, S(0)));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Exps e{0, 0, 0};
                ++e[i];
                ++e[j];
                gram[i][j] = i == j ? F.coeff(e) : F.coeff(e) / S(2);
            }
        auto ker = null_space(gram, 3);
        if (ker.size() == 1) {
            ProjPoint s(ker[0][0], ker[0][1], ker[0][2]);
            for (int k = 0; k < 3 && !res.normalization; ++k) {
                if (s[k].is_zero()) continue;
                auto roots = rational_roots(restrict_to_line(F, HomPoly::var(k, kP)));
                if (roots.size() != 2) break;
                auto join = [&](const ProjPoint& q) {
                    return HomPoly::linear(s[1] * q[2] - s[2] * q[1], s[2] * q[0] - s[0] * q[2], s[0] * q[1] - s[1] * q[0]);
                };
                ProjMap T = ProjMap::from_forms({join(roots[0]), join(roots[1]), N});
                if (T.determinant().is_zero()) break;
                if (proportional_poly(apply_map(T, F), X() * Y()) && proportional_poly(apply_map(T, N), Z()))
                    res.normalization = T;
            }
        }
        if (!res.normalization) res.note = "NoNormalization: the line pair is not split over K or meets N badly";
        return res;
    }
    LineRestriction lr = restrict_to_line(F, N);
    const bool tangent = (lr.beta * lr.beta - S(4) * lr.alpha * lr.gamma).is_zero();
    auto roots = rational_roots(lr);
    if (tangent) {
        res.tag = Family::C1;
        if (roots.empty() || intersection_multiplicity(F, N, roots.front()) != 2)
            throw Error(ErrorKind::InvalidArgument, "tangency check failed");
        ProjMap T = conic_normal_map(F, roots.front());
        if (proportional_poly(apply_map(T, N), Z())) res.normalization = T;
    } else {
        res.tag = Family::C0;
        if (roots.size() == 2) {
            ProjMap T = conic_normal_map(F, roots[0], roots[1]);
            if (proportional_poly(apply_map(T, N), X())) res.normalization = T;
        }
    }
    if (!res.normalization) res.note = "NoNormalization: N meets the conic in points that are not K-rational";
    return res;
}

const char* verdict_name(EquivalenceVerdict v) {
    switch (v) {
    case EquivalenceVerdict::Equivalent: return "equivalent";
    case EquivalenceVerdict::NotEquivalent: return "not_equivalent";
    case EquivalenceVerdict::DifferentFamily: return "different_family";
    }
    return "?";
}

EquivalenceResult are_equivalent(const FamilyMember& m1, const FamilyMember& m2, int max_level) {
    EquivalenceResult res;
    if (m1.tag != m2.tag) {
        res.verdict = EquivalenceVerdict::DifferentFamily;
        return res;
    }
    const HomPoly eq1 = equation(m1), eq2 = equation(m2);
    const auto &A = m1.abc[0], &B = m1.abc[1], &C = m1.abc[2];
    const auto &A2 = m2.abc[0], &B2 = m2.abc[1], &C2 = m2.abc[2];
    const TowerScalar zero = S(0), one = S(1);
    const int ml = std::max(max_level, 1);

    // sigma is the substitution taking the first equation to a multiple of
    // the second; the witness is its inverse.
    auto attempt = [&](const ProjMap::Mat& sigma, std::vector<std::pair<std::string, TowerScalar>> params) {
        ProjMap sub(sigma);
        if (sub.definition_level() != 0 || sub.determinant().is_zero()) return false;
        ProjMap T = sub.inverse();
        if (!proportional(apply_map(T, eq1).reduced(), eq2)) return false;
        res.verdict = EquivalenceVerdict::Equivalent;
        res.witness = EquivalenceWitness{T, std::move(params)};
        return true;
    };
    auto in_k = [](const TowerScalar& x) { return level_of(x) == 0; };

    switch (m1.tag) {
    case Family::C0: {
        // (x : l y : l^-1 z) and its composite with y <-> z
        if (A2 == A) {
            TowerScalar l = (B2 / B).reduced();
            if (in_k(l) && C2 == C / l &&
                attempt({{{one, zero, zero}, {zero, l, zero}, {zero, zero, l.inverse()}}},
                        {{"beta", one}, {"lambda", l}, {"swap", zero}}))
                return res;
            l = (B2 / C).reduced();
            if (in_k(l) && C2 == B / l &&
                attempt({{{one, zero, zero}, {zero, zero, l.inverse()}, {zero, l, zero}}},
                        {{"beta", one}, {"lambda", l}, {"swap", one}}))
                return res;
        }
        break;
    }
    case Family::C1: {
        // x -> l x + k z, y -> l^2 y + 2 l k x + k^2 z, z -> z
        TowerScalar q = (B2 / B).pow(3).reduced();
        auto sq = in_k(q) ? scalar_square_root(q) : std::nullopt;
        if (!sq) break;
        for (const TowerScalar& l : {*sq, -*sq}) {
            if (!in_k(l) || l.is_zero()) continue;
            TowerScalar l3 = p_th_root(l, ml);
            TowerScalar lambda1 = ((A2 * l3 - A) / B).reduced();
            TowerScalar k = (lambda1 / S(2)).reduced();
            if (!in_k(k)) continue;
            if (attempt({{{l, zero, k}, {S(2) * l * k, l * l, k * k}, {zero, zero, one}}},
                        {{"beta", one}, {"lambda1", lambda1}, {"lambda2", l}}))
                return res;
        }
        break;
    }
    case Family::C2: {
        // diagonal (u x : v y : z), or with x <-> y; normalized so that C
        // scales by w = (uv)^{-2/3}
        TowerScalar w = (C2 / C).reduced();
        for (int swap = 0; swap < 2; ++swap) {
            const TowerScalar& Ax = swap ? B : A;
            const TowerScalar& By = swap ? A : B;
            TowerScalar u = (A2 / (Ax * w)).reduced(), v = (B2 / (By * w)).reduced();
            if (!in_k(u) || !in_k(v)) continue;
            std::vector<std::pair<std::string, TowerScalar>> params;
            // the same map written as (l1 x : l1^-1 y : l2 z) when possible
            auto c = scalar_square_root((u * v).inverse().reduced());
            if (c) params = {{"lambda1", (*c * (swap ? v : u)).reduced()}, {"lambda2", *c}};
            params.push_back({"u", u});
            params.push_back({"v", v});
            params.push_back({"swap", swap ? one : zero});
            ProjMap::Mat sigma = swap ? ProjMap::Mat{{{zero, v, zero}, {u, zero, zero}, {zero, zero, one}}}
                                      : ProjMap::Mat{{{u, zero, zero}, {zero, v, zero}, {zero, zero, one}}};
            if (attempt(sigma, params)) return res;
        }
        break;
    }
    }
    res.verdict = EquivalenceVerdict::NotEquivalent;
    return res;
}

bool MemberVerification::all_pass() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

MemberVerification verify_member(const FamilyMember& m, const Settings& s) {
    MemberVerification out;
    const HomPoly eq = equation(m);
    auto add = [&](const std::string& name, bool ok) { out.checks.push_back({name, ok}); };

    std::array<ProjPoint, 2> pts = singular_points(m);
    add("two_singular_points", is_singular_at(eq, pts[0]) && is_singular_at(eq, pts[1]) && pts[0] != pts[1]);

    std::vector<int> deltas;
    for (const auto& q : pts) {
        out.reports.push_back(full_report(eq, q, s));
        deltas.push_back(out.reports.back().delta);
    }
    out.geometric_genus = geometric_genus(4, deltas);

    bool deg3 = true, regular = true, gamma = true, delta1 = true, cond2 = true, dlev = true, formula = true,
         report_checks = true, type_ok = true;
    const int expected_type = m.tag == Family::C2 ? 1 : 2;
    for (std::size_t i = 0; i < 2; ++i) {
        const auto& r = out.reports[i];
        deg3 = deg3 && r.degree_of_point == 3;
        regular = regular && r.regularity == Regularity::Certified;
        const auto& sg = r.semigroup;
        gamma = gamma && sg.scale == 1 && sg.gaps == std::vector<int>{1} && sg.minimal_generators == std::vector<int>{2, 3};
        delta1 = delta1 && r.delta == 1;
        cond2 = cond2 && r.conductor == 2;
        dlev = dlev && r.d_levels == std::vector<int>{2, 1};
        formula = formula && conductor_formula_check(r);
        report_checks = report_checks && r.all_checks_pass();
        type_ok = type_ok && one_type(pts[i]).type == expected_type;
    }
    add("degree_of_point_3", deg3);
    add("regular_certified", regular);
    add("semigroup_2_3", gamma);
    add("delta_1", delta1);
    add("conductor_2", cond2);
    add("d_levels_2_1", dlev);
    add("conductor_formula", formula);
    add("report_checks", report_checks);
    add("genus_1", out.geometric_genus == 1);
    add("one_type", type_ok);

    // probe: no further common zero of the partials on a grid of points
    std::vector<TowerScalar> grid;
    const TowerScalar r = TowerScalar::generator(1, kP), t = TowerScalar::t(kP);
    for (const auto& base : {S(0), S(1), S(2), t, t + S(1), t * t})
        for (const auto& e : {S(0), r, S(2) * r})
            if (grid.size() < 15) grid.push_back((base + e).reduced());
    const std::array<HomPoly, 3> partials = {eq.partial(0), eq.partial(1), eq.partial(2)};
    for (std::size_t i = 0; i < grid.size() && out.probe_points < 200; ++i)
        for (std::size_t j = 0; j < grid.size() && out.probe_points < 200; ++j) {
            ProjPoint q(grid[i], grid[j], S(1));
            ++out.probe_points;
            if (q == pts[0] || q == pts[1]) continue;
            bool sing = evaluate(eq, q).is_zero();
            for (const auto& d : partials) sing = sing && evaluate(d, q).is_zero();
            if (sing) ++out.probe_extra_singular;
        }
    add("probe_no_extra_singular", out.probe_extra_singular == 0);
    return out;
}

FamilyMember sample_member(Family tag, std::mt19937_64& rng, int max_level) {
    auto small_poly = [&](bool nonzero) {
        for (;;) {
            std::vector<Coeff> c(3);
            for (auto& x : c) x = static_cast<Coeff>(rng() % kP);
            FpPoly f(kP, c);
            if (!nonzero || !f.is_zero()) return f;
        }
    };
    auto small_k = [&](bool nonzero) {
        FpPoly num = small_poly(nonzero), den = small_poly(true);
        return TowerScalar(num, den.monic(), 0) * TowerScalar(static_cast<long long>(den.lead()), kP).inverse();
    };
    const TowerScalar r = TowerScalar::generator(1, kP);
    for (;;) {
        TowerScalar e1(static_cast<long long>(1 + rng() % (kP - 1)), kP), e2(static_cast<long long>(1 + rng() % (kP - 1)), kP);
        TowerScalar t1 = e1 * r + small_k(false), t2 = e2 * r + small_k(false);
        TowerScalar a = small_k(true);
        try {
            return make_member(tag, t1, t2, a, max_level);
        } catch (const Error& err) {
            if (err.kind() != ErrorKind::InvalidParameters) throw;
        }
    }
}

} // namespace nscurve
