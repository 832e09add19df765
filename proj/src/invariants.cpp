#include "nscurve/invariants.hpp"

#include "nscurve/error.hpp"

#include <algorithm>
#include <numeric>

namespace nscurve {

namespace {

template <class Fn>
auto with_truncation_retry(const Settings& s, Fn fn) {
    for (int N = s.truncation;; N *= 2) {
        try {
            return fn(N);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::TruncationTooSmall || N * 2 > s.max_truncation) throw;
        }
    }
}

int ipow(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

SemigroupData semigroup_from_branch(const BranchParam& b, SemigroupMode mode, const Settings& s, int N) {
    auto monos = monomials_up_to(s.span_degree, b.x.p());
    CoeffField field = mode == SemigroupMode::Geometric ? CoeffField::Full : CoeffField::K;
    return make_semigroup(value_set(monos, b, field, N), N);
}

int differential_degree_from_branch(const BranchParam& b, int level, const Settings& s, int N) {
    auto monos = monomials_up_to(s.span_degree, b.x.p());
    LevelData data = frobenius_level_subspace(monos, b, level, N);
    if (level == 0) return 1 + derivative_min_order(data.functions, CoeffField::K, N);
    // C_i is the normalization of the Frobenius twist, so its local ring
    // also contains quotients of elements of the twist.
    auto fr = local_ring_fractions(data.functions, CoeffField::K, N, s.fraction_depth);
    return 1 + derivative_min_order(fr, CoeffField::K, N);
}

ProjPoint level_image(const ProjPoint& P, int level) {
    std::array<TowerScalar, 3> c = P.coords();
    for (auto& x : c) x = frobenius(x, level);
    return ProjPoint(c[0], c[1], c[2]);
}

} // namespace

bool SemigroupData::contains(int v) const { return std::binary_search(values.begin(), values.end(), v); }

SemigroupData make_semigroup(const std::set<int>& attained, int N) {
    SemigroupData sg;
    sg.truncation = N;
    int scale = 0;
    for (int v : attained) scale = std::gcd(scale, v);
    if (scale == 0) throw Error(ErrorKind::TruncationTooSmall, "no positive value attained below N");
    sg.scale = scale;
    sg.multiplicity = *std::find_if(attained.begin(), attained.end(), [](int v) { return v > 0; });
    const int m = sg.multiplicity;
    // least c with c, c+scale, ..., c+m-scale all attained
    int c = -1;
    for (int cand = 0; cand + m - scale < N; cand += scale) {
        bool run = true;
        for (int k = cand; k < cand + m && run; k += scale) run = attained.count(k) > 0;
        if (run) {
            c = cand;
            break;
        }
    }
    if (c < 0) throw Error(ErrorKind::TruncationTooSmall, "conductor not certified below N");
    sg.conductor = c;
    for (int v = 0; v < N; v += scale) {
        if (v >= c || attained.count(v))
            sg.values.push_back(v);
        else
            sg.gaps.push_back(v);
    }
    sg.delta = static_cast<int>(sg.gaps.size());
    for (int v : sg.values) {
        if (v == 0 || v > c + m) continue;
        bool decomposable = false;
        for (int a : sg.values) {
            if (a == 0) continue;
            if (a > v - a) break;
            if (sg.contains(v - a)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) sg.minimal_generators.push_back(v);
    }
    for (int a : sg.values)
        for (int b : sg.values) {
            if (a + b >= N) break;
            if (!sg.contains(a + b)) sg.closed = false;
        }
    return sg;
}

bool InvariantsReport::all_checks_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.ok; });
}

const NamedCheck* InvariantsReport::check(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

int degree_of_point(const ProjPoint& P) {
    const int m = P.level();
    if (m == 0) return 1;
    const auto ab = [&] {
        std::array<TowerScalar, 2> r;
        int k = 0;
        for (int i = 0; i < 3; ++i)
            if (i != P.chart()) r[k++] = P[i];
        return r;
    }();
    const int q = ipow(static_cast<int>(P[0].p()), m);
    Matrix rows;
    TowerScalar ai(1, P[0].p());
    for (int i = 0; i < q; ++i) {
        TowerScalar prod = ai;
        for (int j = 0; j < q; ++j) {
            rows.push_back(k_coordinates(prod, m).coords);
            prod *= ab[1];
        }
        ai *= ab[0];
    }
    return static_cast<int>(rank(rows));
}

SemigroupData semigroup_at(const HomPoly& curve, const ProjPoint& P, SemigroupMode mode, const Settings& s) {
    return with_truncation_retry(s, [&](int N) {
        BranchParam b = hn_parametrize(curve, P, N, s.max_level);
        return semigroup_from_branch(b, mode, s, N);
    });
}

int differential_degree(const HomPoly& curve, const ProjPoint& P, int level, const Settings& s) {
    return with_truncation_retry(s, [&](int N) {
        BranchParam b = hn_parametrize(curve, P, N, s.max_level);
        return differential_degree_from_branch(b, level, s, N);
    });
}

Regularity regularity_certificate(const HomPoly& curve, const ProjPoint& P, const Settings& s) {
    SemigroupData k = semigroup_at(curve, P, SemigroupMode::OverK, s);
    return k.contains(degree_of_point(P)) ? Regularity::Certified : Regularity::Inconclusive;
}

bool conductor_formula_holds(const std::vector<int>& d, int conductor, Coeff p) {
    if (d.empty() || d.back() != 1) return false;
    long long sum = 0, pi = 1;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        sum += static_cast<long long>(p - 1) * (d[i] - 1) * pi;
        pi *= p;
    }
    return sum == conductor;
}

bool conductor_formula_check(const InvariantsReport& r) { return conductor_formula_holds(r.d_levels, r.conductor, r.p); }

bool divisibility_holds(int degree, int conductor, int d) { return degree > 0 && (conductor + d - 1) % degree == 0; }

bool divisibility_check(const InvariantsReport& r) {
    return !r.d_levels.empty() && divisibility_holds(r.degree_of_point, r.conductor, r.d_levels.front());
}

int geometric_genus(int degree, const std::vector<int>& deltas) {
    int g = (degree - 1) * (degree - 2) / 2;
    for (int d : deltas) g -= d;
    return g;
}

const char* regularity_name(Regularity r) { return r == Regularity::Certified ? "regular_certified" : "inconclusive"; }

InvariantsReport full_report(const HomPoly& curve, const ProjPoint& P, const Settings& s) {
    InvariantsReport rep(P);
    const Coeff p = curve.p();
    rep.p = p;
    rep.singular = is_singular_at(curve, P);
    rep.embedding_dimension = rep.singular ? 2 : 1;
    rep.degree_of_point = degree_of_point(P);

    with_truncation_retry(s, [&](int N) {
        BranchParam b = hn_parametrize(curve, P, N, s.max_level);
        rep.semigroup = semigroup_from_branch(b, SemigroupMode::Geometric, s, N);
        rep.semigroup_K = semigroup_from_branch(b, SemigroupMode::OverK, s, N);
        rep.d_levels.clear();
        rep.level_point_degrees.clear();
        for (int i = 0; i <= s.level_cap; ++i) {
            rep.d_levels.push_back(differential_degree_from_branch(b, i, s, N));
            rep.level_point_degrees.push_back(degree_of_point(level_image(P, i)));
            if (rep.d_levels.back() == 1) break;
        }
        return 0;
    });
    rep.delta = rep.semigroup.delta;
    rep.conductor = rep.semigroup.conductor;
    rep.regularity = rep.semigroup_K.contains(rep.degree_of_point) ? Regularity::Certified : Regularity::Inconclusive;

    const int d = rep.d_levels.front();
    const bool level_one_smooth = d == 1 || (rep.d_levels.size() >= 2 && rep.d_levels[1] == 1);
    rep.checks.push_back({"conductor_formula", conductor_formula_check(rep)});
    rep.checks.push_back({"divisibility", divisibility_check(rep)});
    rep.checks.push_back({"p_does_not_divide_d", d % static_cast<int>(p) != 0});
    if (level_one_smooth) {
        std::vector<int> expected;
        for (int v = 0; v < rep.semigroup.truncation; ++v) {
            bool in = false;
            for (int a = 0; a * d <= v && !in; ++a) in = (v - a * d) % static_cast<int>(p) == 0;
            if (in) expected.push_back(v);
        }
        rep.checks.push_back({"gamma_matches_d_and_p", expected == rep.semigroup.values});
        rep.checks.push_back({"delta_formula", 2 * rep.delta == (d - 1) * static_cast<int>(p - 1)});
    }
    rep.checks.push_back({"conductor_equals_2delta", rep.conductor == 2 * rep.delta});
    bool divides = true;
    for (std::size_t i = 1; i < rep.d_levels.size(); ++i)
        divides = divides && (d - rep.d_levels[i]) % rep.level_point_degrees[i] == 0;
    rep.checks.push_back({"level_degree_divides_d_difference", divides});
    rep.checks.push_back({"semigroup_closed", rep.semigroup.closed});
    rep.checks.push_back({"primitive_parametrization", rep.semigroup.scale == 1});
    return rep;
}

} // namespace nscurve
