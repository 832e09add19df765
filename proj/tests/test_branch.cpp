#include "doctest.h"
#include "nscurve/branch.hpp"
#include "nscurve/error.hpp"
#include "nscurve/parse.hpp"
#include "oracles.hpp"

#include <algorithm>

using namespace nscurve;
using namespace testutil;

namespace {

HomPoly P(const std::string& s) { return parse_poly(s); }
ProjPoint Pt(const std::string& s) { return parse_point(s); }

AffPoly U() { return AffPoly::u(); }
AffPoly V() { return AffPoly::v(); }
AffPoly C(long long c) { return AffPoly::constant(S(c)); }

const char* kC2 = "(x*y)^2 + (r*x + (r+1)*y - r*(r+1)*z)^3*z";
const char* kC0 = "(x^2-y*z)^2 + ((r^2-(r+1)^2)*x + y + (r*(r+1)^2-(r+1)*r^2)*z)^3*x";

std::vector<int> as_vec(const std::set<int>& s) { return {s.begin(), s.end()}; }

} // namespace

TEST_CASE("cusp parametrization") {
    AffPoly f = V().pow(2) - U().pow(3);
    BranchParam b = hn_parametrize(f, S(0), S(0), 12);
    CHECK(b.multiplicity == 2);
    CHECK(b.certified_order == 12);
    CHECK(b.x.order() == 2);
    CHECK(b.y.order() == 3);
    CHECK(compose(f, b.x, b.y).is_zero());
    // this expansion happens to give exactly (s^2, s^3)
    for (int k = 0; k < 12; ++k) {
        CHECK(b.x[k] == S(k == 2 ? 1 : 0));
        CHECK(b.y[k] == S(k == 3 ? 1 : 0));
    }
}

TEST_CASE("smooth germ parametrization") {
    AffPoly f = V() - U().pow(2);
    BranchParam b = hn_parametrize(f, S(0), S(0), 10);
    CHECK(b.multiplicity == 1);
    CHECK(b.x[1] == S(1));
    CHECK(b.y[2] == S(1));
    CHECK(b.blowups.empty());
}

TEST_CASE("C2 member branch") {
    BranchParam b = hn_parametrize(P(kC2).reduced(), Pt("(0:r:1)"));
    CHECK(b.multiplicity == 2);
    auto vs = value_set(monomials_up_to(2), b, CoeffField::Full, kDefaultTruncation);
    auto v = as_vec(vs);
    REQUIRE(v.size() >= 3);
    CHECK(v[0] == 0);
    CHECK(v[1] == 2);
    CHECK(v[2] == 3);
}

TEST_CASE("branch errors") {
    // node: two tangent directions
    try {
        hn_parametrize(V().pow(2) - U().pow(2) - U().pow(3), S(0), S(0));
        FAIL("expected NotUnibranch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotUnibranch);
    }
    // tacnode y^2 = x^4: one tangent, two branches
    try {
        hn_parametrize(V().pow(2) - U().pow(4), S(0), S(0));
        FAIL("expected NotUnibranch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotUnibranch);
    }
    try {
        hn_parametrize(V() - U(), S(1), S(0));
        FAIL("expected PointNotOnCurve");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PointNotOnCurve);
    }
}

TEST_CASE("value sets") {
    BranchParam cusp = hn_parametrize(V().pow(2) - U().pow(3), S(0), S(0), 12);
    std::vector<AffPoly> fs = {C(1), U(), V(), U().pow(2), U() * V(), V().pow(2), U().pow(3)};
    // y^2 and x^3 agree on the branch, so the span is 6-dimensional
    CHECK(as_vec(value_set(fs, cusp, CoeffField::Full, 10)) == std::vector<int>{0, 2, 3, 4, 5, 6});
    CHECK(as_vec(value_set({C(1)}, cusp, CoeffField::Full, 10)) == std::vector<int>{0});
    BranchParam smooth = hn_parametrize(V() - U().pow(2), S(0), S(0), 10);
    try {
        value_set({V() - U().pow(2)}, smooth, CoeffField::Full, 10);
        FAIL("expected TruncationTooSmall");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TruncationTooSmall);
    }
}

TEST_CASE("derivative orders") {
    BranchParam cusp = hn_parametrize(V().pow(2) - U().pow(3), S(0), S(0), 12);
    CHECK(derivative_min_order({U(), V()}, cusp, CoeffField::Full, 12) == 1);
    BranchParam smooth = hn_parametrize(V() - U().pow(2), S(0), S(0), 10);
    CHECK(derivative_min_order({U()}, smooth, CoeffField::Full, 10) == 0);
    BranchParam c2 = hn_parametrize(P(kC2).reduced(), Pt("(0:r:1)"));
    CHECK(derivative_min_order(monomials_up_to(8), c2, CoeffField::K, kDefaultTruncation) == 1);
    try {
        derivative_min_order({C(1)}, cusp, CoeffField::Full, 12);
        FAIL("expected AllDerivativesVanish");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::AllDerivativesVanish);
    }
}

TEST_CASE("Frobenius level data") {
    BranchParam cusp = hn_parametrize(V().pow(2) - U().pow(3), S(0), S(0), 12);
    auto l0 = frobenius_level_subspace({U(), V()}, cusp, 0, 12);
    CHECK(l0.functions == compose_all({U(), V()}, cusp, 12));
    auto l1 = frobenius_level_subspace({U(), V()}, cusp, 1, 12);
    CHECK(l1.functions[0].order() == 2);
    CHECK(l1.functions[1].order() == 3);
    CHECK(l1.x.order() == 2);

    BranchParam c2 = hn_parametrize(P(kC2).reduced(), Pt("(0:r:1)"));
    auto data = frobenius_level_subspace(monomials_up_to(8), c2, 1, kDefaultTruncation);
    for (const auto& s : data.functions) CHECK(s.level() == 0);
    auto fr = local_ring_fractions(data.functions, CoeffField::K, kDefaultTruncation);
    CHECK(derivative_min_order(fr, CoeffField::K, kDefaultTruncation) == 0);
}

TEST_CASE("property: branch order equals intersection multiplicity") {
    std::mt19937_64 rng(41);
    struct Case {
        const char* f;
        const char* pt;
    };
    for (const Case& c : {Case{"y^2*z - x^3", "(0:0:1)"}, Case{kC2, "(0:r:1)"}, Case{kC0, "(r:r^2:1)"}}) {
        HomPoly F = P(c.f).reduced();
        ProjPoint pt = Pt(c.pt);
        BranchParam b = hn_parametrize(F, pt);
        int checked = 0;
        while (checked < 10) {
            HomPoly g = random_form_through(rng, 1 + static_cast<int>(rng() % 2), pt);
            if (g.is_zero()) continue;
            PowerSeriesTrunc s = compose(dehomogenize(g, pt.chart()), b.x, b.y);
            REQUIRE_FALSE(s.is_zero());
            CHECK(s.order() == intersection_multiplicity(F, g, pt));
            ++checked;
        }
    }
}

TEST_CASE("property: value set monotonicity, field inclusion and order independence") {
    BranchParam b = hn_parametrize(P(kC0).reduced(), Pt("(r:r^2:1)"));
    const int N = kDefaultTruncation;
    auto monos = monomials_up_to(4);
    std::vector<AffPoly> small(monos.begin(), monos.begin() + 6);
    auto full_small = value_set(small, b, CoeffField::Full, N);
    auto full_big = value_set(monos, b, CoeffField::Full, N);
    CHECK(std::includes(full_big.begin(), full_big.end(), full_small.begin(), full_small.end()));
    auto k_big = value_set(monos, b, CoeffField::K, N);
    CHECK(std::includes(full_big.begin(), full_big.end(), k_big.begin(), k_big.end()));
    std::mt19937_64 rng(42);
    auto shuffled = monos;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(value_set(shuffled, b, CoeffField::Full, N) == full_big);
    CHECK(value_set(shuffled, b, CoeffField::K, N) == k_big);
    // invertible triangular change of basis over K
    auto mixed = monos;
    for (std::size_t i = 1; i < mixed.size(); ++i) mixed[i] = mixed[i] + mixed[i - 1] * random_nonzero_scalar(rng, 0, 3, 2);
    CHECK(value_set(mixed, b, CoeffField::K, N) == k_big);
}

TEST_CASE("property: closure under addition and truncation independence") {
    for (const char* f : {kC0, kC2}) {
        HomPoly F = P(f).reduced();
        ProjPoint pt = Pt(f == kC0 ? "(r:r^2:1)" : "(0:r:1)");
        BranchParam b32 = hn_parametrize(F, pt, 32);
        BranchParam b48 = hn_parametrize(F, pt, 48);
        auto v32 = value_set(monomials_up_to(8), b32, CoeffField::Full, 32);
        auto v48 = value_set(monomials_up_to(8), b48, CoeffField::Full, 32);
        CHECK(v32 == v48);
        for (int a : v32)
            for (int c : v32)
                if (a + c < 24) CHECK(v32.count(a + c) == 1);
    }
}
