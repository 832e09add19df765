// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. The command line tool path is argv[1] (criterion 9).

#include "nscurve/branch.hpp"
#include "nscurve/descent.hpp"
#include "nscurve/error.hpp"
#include "nscurve/families.hpp"
#include "nscurve/invariants.hpp"
#include "nscurve/parse.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace nscurve;
using namespace testutil;

namespace {

constexpr int kSamplesPerFamily = 20;
constexpr std::uint64_t kSeed = 7;
constexpr double kSecondsPerInstance = 5.0;

HomPoly P(const std::string& s) { return parse_poly(s).reduced(); }
ProjPoint Pt(const std::string& s) { return parse_point(s); }

const char* kCusp = "y^2*z - x^3";

bool over_k(const HomPoly& f) {
    for (const auto& [e, c] : f.terms())
        if (level_of(c) != 0) return false;
    return true;
}

// Counts individual checks inside one criterion and keeps the first few
// failure descriptions.
class Tally {
public:
    void check(bool ok, const std::string& what) {
        ++total_;
        if (ok) return;
        ++failed_;
        if (notes_.size() < 3) notes_.push_back(what);
    }

    template <class F>
    void guarded(const std::string& what, F&& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            check(false, what + ": " + e.what());
        }
    }

    bool ok() const { return failed_ == 0 && total_ > 0; }

    std::string summary() const {
        std::ostringstream ss;
        ss << (total_ - failed_) << "/" << total_ << " checks";
        for (const auto& n : notes_) ss << "; " << n;
        return ss.str();
    }

private:
    int total_ = 0;
    int failed_ = 0;
    std::vector<std::string> notes_;
};

struct Instance {
    FamilyMember member;
    MemberVerification verification;
    double seconds = 0;
};

std::vector<Instance> g_instances;

std::string describe(const FamilyMember& m) {
    return std::string(family_name(m.tag)) + "(" + format_scalar(m.t1) + ", " + format_scalar(m.t2) + ", " +
           format_scalar(m.a, 0) + ")";
}

// d = 1 + smallest order of a derivative of a local function along the
// branch, measured from monomials in the chart coordinates.
int measured_d(const HomPoly& curve, const ProjPoint& pt) {
    const int N = 16;
    BranchParam b = hn_parametrize(curve, pt, N);
    return 1 + derivative_min_order(monomials_up_to(3), b, CoeffField::K, N);
}

Tally criterion_family_verification() {
    Tally t;
    for (Family tag : {Family::C0, Family::C1, Family::C2}) {
        std::mt19937_64 rng(kSeed);
        for (int i = 0; i < kSamplesPerFamily; ++i) {
            Instance inst{sample_member(tag, rng), {}, 0};
            t.guarded(describe(inst.member), [&] {
                const auto start = std::chrono::steady_clock::now();
                inst.verification = verify_member(inst.member);
                inst.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                for (const auto& c : inst.verification.checks)
                    t.check(c.ok, describe(inst.member) + " " + c.name);
                t.check(inst.seconds < kSecondsPerInstance, describe(inst.member) + " took " +
                                                                std::to_string(inst.seconds) + " s");
                g_instances.push_back(inst);
            });
        }
    }
    return t;
}

Tally criterion_conductor_formula() {
    Tally t;
    for (const auto& inst : g_instances)
        for (const auto& r : inst.verification.reports) {
            t.check(r.conductor == 2, describe(inst.member) + " conductor");
            t.check(conductor_formula_holds(r.d_levels, r.conductor, 3), describe(inst.member) + " formula");
        }
    t.guarded("cusp", [&] {
        InvariantsReport r = full_report(P(kCusp), Pt("(0:0:1)"));
        t.check(r.conductor == 2, "cusp conductor");
        t.check(conductor_formula_holds(r.d_levels, r.conductor, 3), "cusp formula");
    });
    return t;
}

void check_semigroup_identities(Tally& t, const HomPoly& curve, const ProjPoint& pt, const InvariantsReport& r,
                                const std::string& label) {
    const int d = measured_d(curve, pt);
    t.check(r.semigroup.values == semigroup_oracle({d, 3}, r.semigroup.truncation), label + " semigroup");
    t.check(2 * r.delta == (d - 1) * (3 - 1), label + " delta");
}

Tally criterion_semigroup_and_delta() {
    Tally t;
    for (const auto& inst : g_instances) {
        const HomPoly f = equation(inst.member);
        const auto pts = singular_points(inst.member);
        for (std::size_t k = 0; k < pts.size() && k < inst.verification.reports.size(); ++k)
            t.guarded(describe(inst.member),
                      [&] { check_semigroup_identities(t, f, pts[k], inst.verification.reports[k], describe(inst.member)); });
    }
    t.guarded("cusp", [&] {
        const HomPoly f = P(kCusp);
        const ProjPoint pt = Pt("(0:0:1)");
        check_semigroup_identities(t, f, pt, full_report(f, pt), "cusp");
    });
    return t;
}

Tally criterion_order_equals_intersection() {
    Tally t;
    std::mt19937_64 rng(41);
    const FamilyMember c0 = make_member(Family::C0, R(), R() + S(1), S(1));
    const FamilyMember c2 = make_member(Family::C2, R(), T() * R() + S(1), S(2));
    struct Case {
        HomPoly f;
        ProjPoint pt;
        std::string label;
    };
    const std::vector<Case> cases = {{P(kCusp), Pt("(0:0:1)"), "cusp"},
                                     {equation(c0), singular_points(c0)[0], describe(c0)},
                                     {equation(c2), singular_points(c2)[0], describe(c2)}};
    for (const auto& c : cases) {
        t.guarded(c.label, [&] {
            BranchParam b = hn_parametrize(c.f, c.pt, 24);
            int checked = 0;
            while (checked < 12) {
                HomPoly g = random_form_through(rng, 1 + static_cast<int>(rng() % 2), c.pt);
                if (g.is_zero()) continue;
                PowerSeriesTrunc s = compose(dehomogenize(g, c.pt.chart()), b.x, b.y);
                const int mult = intersection_multiplicity(c.f, g, c.pt);
                t.check(!s.is_zero() && s.order() == mult, c.label + " form " + format_poly(g));
                ++checked;
            }
        });
    }
    return t;
}

Tally criterion_descent() {
    Tally t;
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        HomPoly f = random_form(rng, static_cast<int>(rng() % 5), 1);
        auto parts = decompose(f);
        bool k_parts = true;
        for (const auto& part : parts)
            for (const auto& [e, c] : part.terms()) k_parts = k_parts && level_of(c) == 0;
        t.check(k_parts && parts[0] + parts[1] * R() + parts[2] * R().pow(2) == f, "decompose " + format_poly(f));
    }
    int ideals = 0;
    while (ideals < 50) {
        IdealPresentation J;
        J.level = 0;
        const int n = 1 + static_cast<int>(rng() % 2);
        for (int k = 0; k < n; ++k) {
            HomPoly g = random_form(rng, 1 + static_cast<int>(rng() % 2), 0);
            if (!g.is_zero()) J.generators.push_back(g);
        }
        if (J.generators.empty()) continue;
        ++ideals;
        t.guarded("ideal " + format_poly(J.generators[0], 0), [&] {
            IdealPresentation I = extend(J);
            t.check(is_invariant(I), "extended ideal invariant");
            IdealPresentation J2 = descend(I);
            t.check(same_graded_pieces(J2, J, 6), "descend after extend");
            t.check(same_graded_pieces(extend(J2), I, 6), "extend after descend");
        });
    }
    IdealPresentation bad;
    bad.level = 1;
    bad.generators = {P("x - r*z")};
    t.check(!is_invariant(bad), "<x - r z> reported invariant");
    return t;
}

Tally criterion_one_type() {
    Tally t;
    t.guarded("(0:r:1)", [&] {
        const ProjPoint q = Pt("(0:r:1)");
        OneTypeResult a = one_type(q);
        t.check(a.type == 1 && a.witness.degree() == 1, "(0:r:1) type");
        t.check(evaluate(a.witness, q).is_zero(), "(0:r:1) witness vanishes");
        t.check(over_k(a.witness), "(0:r:1) witness over K");
    });
    t.guarded("(r:r^2:1)", [&] {
        const ProjPoint q = Pt("(r:r^2:1)");
        OneTypeResult b = one_type(q);
        t.check(b.type == 2 && b.witness.degree() == 2, "(r:r^2:1) type");
        t.check(conic_rank(b.witness) == 3, "(r:r^2:1) conic rank");
        t.check(evaluate(b.witness, q).is_zero(), "(r:r^2:1) witness vanishes");
        t.check(over_k(b.witness), "(r:r^2:1) witness over K");
    });
    return t;
}

Tally criterion_equivalence() {
    Tally t;
    const FamilyMember c0 = make_member(Family::C0, R(), R() + S(1), S(1));
    const FamilyMember c1 = make_member(Family::C1, R(), R() + S(1), S(1));
    const FamilyMember c2 = make_member(Family::C2, R(), R() + S(1), S(1));
    for (const auto& m : {c0, c1, c2})
        t.guarded("identity", [&] { t.check(witness_valid(m, m, are_equivalent(m, m)), describe(m) + " identity"); });

    t.guarded("C0 transport", [&] {
        const FamilyMember moved = member_from_abc(Family::C0, {c0.abc[0], T() * c0.abc[1], c0.abc[2] / T()});
        t.check(substitution_works(equation(c0), equation(moved), diag(S(1), T(), T().inverse())),
                "C0 transport construction");
        t.check(witness_valid(c0, moved, are_equivalent(c0, moved)), "C0 transport witness");
        t.check(witness_valid(moved, c0, are_equivalent(moved, c0)), "C0 reverse witness");
    });
    t.guarded("C2 transport", [&] {
        const TowerScalar l1 = T(), l2 = T() + S(1), c = R() + S(1);
        const FamilyMember moved =
            member_from_abc(Family::C2, {c2.abc[0] * l1 * c, c2.abc[1] / l1 * c, c2.abc[2] * c * c * c * c});
        t.check(substitution_works(equation(c2), equation(moved), diag(l1, l1.inverse(), l2)),
                "C2 transport construction");
        t.check(witness_valid(c2, moved, are_equivalent(c2, moved)), "C2 transport witness");
        t.check(witness_valid(moved, c2, are_equivalent(moved, c2)), "C2 reverse witness");
    });
    t.guarded("different family", [&] {
        t.check(are_equivalent(c0, c1).verdict == EquivalenceVerdict::DifferentFamily, "C0 vs C1");
    });

    const std::vector<std::pair<FamilyMember, FamilyMember>> negatives = {
        {c0, make_member(Family::C0, R(), R() + S(1), T().pow(3))},
        {c1, make_member(Family::C1, R(), R() + S(2), S(1))},
        {c2, make_member(Family::C2, R(), T() * R() + S(1), S(2))}};
    for (const auto& [a, b] : negatives)
        t.guarded("negative", [&] {
            const std::string label = describe(a) + " vs " + describe(b);
            t.check(are_equivalent(a, b).verdict == EquivalenceVerdict::NotEquivalent, label + " verdict");
            t.check(!brute_force_equivalent(a, b), label + " brute force found a map");
        });
    return t;
}

Tally criterion_divisibility() {
    Tally t;
    for (const auto& inst : g_instances)
        for (const auto& r : inst.verification.reports) {
            const int d = r.d_levels.empty() ? 0 : r.d_levels.front();
            t.check(divisibility_holds(r.degree_of_point, r.conductor, d) && r.degree_of_point == 3,
                    describe(inst.member) + " 3 | c + d - 1");
            t.check(d > 0 && d % 3 != 0, describe(inst.member) + " p does not divide d");
        }
    t.guarded("cusp", [&] {
        const HomPoly f = P(kCusp);
        const ProjPoint pt = Pt("(0:0:1)");
        const int d = measured_d(f, pt);
        t.check(d % 3 != 0, "cusp p does not divide d");
        t.check(differential_degree(f, pt, 0) == d, "cusp d agrees");
    });
    return t;
}

std::pair<int, std::string> run_capture(const std::string& cmd) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Tally criterion_determinism(const std::string& cli) {
    Tally t;
    if (cli.empty()) {
        t.check(false, "no command line tool path given");
        return t;
    }
    for (const char* fam : {"C0", "C1", "C2"}) {
        const std::string cmd = "'" + cli + "' --json --seed 7 verify --family " + fam + " --samples 3";
        const auto a = run_capture(cmd);
        const auto b = run_capture(cmd + " --jobs 2");
        t.check(a.first == 0 && b.first == 0, std::string(fam) + " exit status");
        t.check(!a.second.empty() && a.second == b.second, std::string(fam) + " outputs differ");
    }
    return t;
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    struct Criterion {
        const char* name;
        std::function<Tally()> run;
    };
    const std::vector<Criterion> criteria = {
        {"family verification", criterion_family_verification},
        {"conductor formula", criterion_conductor_formula},
        {"semigroup and delta identities", criterion_semigroup_and_delta},
        {"branch order equals intersection multiplicity", criterion_order_equals_intersection},
        {"descent suite", criterion_descent},
        {"1-type examples", criterion_one_type},
        {"equivalence decision", criterion_equivalence},
        {"divisibility and p not dividing d", criterion_divisibility},
        {"verify determinism", [&] { return criterion_determinism(cli); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Tally t;
        try {
            t = criteria[i].run();
        } catch (const std::exception& e) {
            t.check(false, e.what());
        }
        failed += t.ok() ? 0 : 1;
        std::cout << (t.ok() ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].name << ": " << t.summary()
                  << std::endl;
    }
    double worst = 0;
    for (const auto& inst : g_instances) worst = std::max(worst, inst.seconds);
    std::cout << "slowest family instance: " << worst << " s" << std::endl;
    return failed == 0 ? 0 : 1;
}
