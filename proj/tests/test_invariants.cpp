#include "doctest.h"
#include "nscurve/error.hpp"
#include "nscurve/invariants.hpp"
#include "nscurve/parse.hpp"
#include "oracles.hpp"

#include <algorithm>

using namespace nscurve;
using namespace testutil;

namespace {

HomPoly P(const std::string& s) { return parse_poly(s).reduced(); }
ProjPoint Pt(const std::string& s) { return parse_point(s); }

const char* kCusp = "y^2*z - x^3";
const char* kC0 = "(x^2-y*z)^2 + ((r^2-(r+1)^2)*x + y + (r*(r+1)^2-(r+1)*r^2)*z)^3*x";
const char* kC1 = "(x^2-y*z)^2 + ((r^2-(r+1)^2)*x + y + (r*(r+1)^2-(r+1)*r^2)*z)^3*z";
const char* kC2 = "(x*y)^2 + (r*x + (r+1)*y - r*(r+1)*z)^3*z";

// Independent oracle for the residue degree: K(a, b) is a level of the
// tower, so its degree is p^max(level a, level b).
int degree_oracle(const ProjPoint& q) {
    int lv = 0;
    for (int i = 0; i < 3; ++i) lv = std::max(lv, level_of(q[i]));
    int d = 1;
    while (lv-- > 0) d *= 3;
    return d;
}

} // namespace

TEST_CASE("degree of a point") {
    CHECK(degree_of_point(Pt("(0:0:1)")) == 1);
    CHECK(degree_of_point(Pt("(r:r^2:1)")) == 3);
    CHECK(degree_of_point(Pt("(0:r:1)")) == 3);
    CHECK(degree_of_point(Pt("(r^3:t:1)")) == 1);
    std::mt19937_64 rng(51);
    for (int i = 0; i < 30; ++i) {
        int m = static_cast<int>(rng() % 3);
        ProjPoint q(random_scalar(rng, m, 3, 2), random_scalar(rng, m, 3, 2), S(1));
        CHECK(degree_of_point(q) == degree_oracle(q));
    }
}

TEST_CASE("semigroups") {
    SemigroupData cusp = semigroup_at(P(kCusp), Pt("(0:0:1)"), SemigroupMode::Geometric);
    CHECK(cusp.values == semigroup_oracle({2, 3}, cusp.truncation));
    CHECK(cusp.delta == 1);
    CHECK(cusp.conductor == 2);
    CHECK(cusp.gaps == std::vector<int>{1});
    CHECK(cusp.minimal_generators == std::vector<int>{2, 3});
    CHECK(cusp.multiplicity == 2);

    SemigroupData c0 = semigroup_at(P(kC0), Pt("(r:r^2:1)"), SemigroupMode::Geometric);
    CHECK(c0.values == semigroup_oracle({2, 3}, c0.truncation));
    CHECK(c0.delta == 1);
    CHECK(c0.conductor == 2);

    SemigroupData c0k = semigroup_at(P(kC0), Pt("(r:r^2:1)"), SemigroupMode::OverK);
    CHECK(c0k.contains(3));
    CHECK_FALSE(c0k.contains(1));
    CHECK_FALSE(c0k.contains(2));
    CHECK(c0k.scale == 3);
}

TEST_CASE("semigroup assembly") {
    SemigroupData s = make_semigroup({0, 2, 3, 4, 5, 6}, 10);
    CHECK(s.conductor == 2);
    CHECK(s.values == std::vector<int>{0, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK(s.closed);
    CHECK_THROWS_AS(make_semigroup({0, 2, 5}, 6), Error);
    CHECK(make_semigroup({0, 4}, 6).scale == 4);
    SemigroupData t = make_semigroup({0, 1, 2, 3}, 4);
    CHECK(t.minimal_generators == std::vector<int>{1});
    CHECK(t.delta == 0);
}

TEST_CASE("differential degree") {
    CHECK(differential_degree(P("x^2 - y*z"), Pt("(0:0:1)"), 0) == 1);
    for (const auto& [f, pt] : std::vector<std::pair<const char*, const char*>>{
             {kC0, "(r:r^2:1)"}, {kC1, "(r:r^2:1)"}, {kC2, "(0:r:1)"}}) {
        CHECK(differential_degree(P(f), Pt(pt), 0) == 2);
        CHECK(differential_degree(P(f), Pt(pt), 1) == 1);
    }
}

TEST_CASE("conductor formula and divisibility arithmetic") {
    CHECK(conductor_formula_holds({2, 1}, 2, 3));
    CHECK(conductor_formula_holds({1}, 0, 3));
    CHECK(conductor_formula_holds({4, 1}, 6, 3));
    CHECK_FALSE(conductor_formula_holds({2}, 2, 3));
    CHECK(divisibility_holds(3, 2, 2));
    CHECK(divisibility_holds(1, 5, 7));
    CHECK_FALSE(divisibility_holds(3, 2, 3));
}

TEST_CASE("regularity certificate") {
    HomPoly c2 = P(kC2);
    CHECK(regularity_certificate(c2, Pt("(0:r:1)")) == Regularity::Certified);
    CHECK(regularity_certificate(c2, Pt("(r+1:0:1)")) == Regularity::Certified);
    CHECK(regularity_certificate(P(kCusp), Pt("(0:0:1)")) == Regularity::Inconclusive);
    CHECK(regularity_certificate(P("x^2 - y*z"), Pt("(0:0:1)")) == Regularity::Certified);
}

TEST_CASE("geometric genus") {
    CHECK(geometric_genus(4, {1, 1}) == 1);
    CHECK(geometric_genus(4, {}) == 3);
    CHECK(geometric_genus(3, {1}) == 0);
}

TEST_CASE("full reports") {
    InvariantsReport c1 = full_report(P(kC1), Pt("(r:r^2:1)"));
    CHECK(c1.all_checks_pass());
    CHECK(c1.d_levels == std::vector<int>{2, 1});
    CHECK(c1.degree_of_point == 3);
    CHECK(c1.regularity == Regularity::Certified);
    CHECK(c1.embedding_dimension == 2);

    InvariantsReport cusp = full_report(P(kCusp), Pt("(0:0:1)"));
    CHECK(cusp.all_checks_pass());
    CHECK(cusp.regularity == Regularity::Inconclusive);
    CHECK(cusp.d_levels == std::vector<int>{2, 1});
    CHECK(conductor_formula_check(cusp));

    InvariantsReport smooth = full_report(P("x^2 - y*z"), Pt("(1:1:1)"));
    CHECK_FALSE(smooth.singular);
    CHECK(smooth.d_levels == std::vector<int>{1});
    CHECK(smooth.delta == 0);
    CHECK(smooth.all_checks_pass());
}

TEST_CASE("property: semigroup data does not depend on the truncation") {
    Settings a, b;
    b.truncation = 64;
    for (const auto& [f, pt] : std::vector<std::pair<const char*, const char*>>{{kC2, "(0:r:1)"}, {kCusp, "(0:0:1)"}}) {
        SemigroupData s = semigroup_at(P(f), Pt(pt), SemigroupMode::Geometric, a);
        SemigroupData t = semigroup_at(P(f), Pt(pt), SemigroupMode::Geometric, b);
        CHECK(s.gaps == t.gaps);
        CHECK(s.conductor == t.conductor);
        CHECK(s.minimal_generators == t.minimal_generators);
        std::vector<int> tv;
        for (int v : t.values)
            if (v < s.truncation) tv.push_back(v);
        CHECK(s.values == tv);
    }
}

TEST_CASE("property: the tower level of the branch suffices") {
    BranchParam b = hn_parametrize(P(kC0), Pt("(r:r^2:1)"));
    auto monos = monomials_up_to(6);
    auto here = value_set(monos, b, CoeffField::Full, kDefaultTruncation);
    BranchParam lifted = b;
    lifted.x = b.x.lifted(2);
    lifted.y = b.y.lifted(2);
    CHECK(value_set(monos, lifted, CoeffField::Full, kDefaultTruncation) == here);
}
