#pragma once

#include "nscurve/settings.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace nscurve {

// Value semigroup of a branch, possibly of the form scale * S for a
// numerical semigroup S (value sets over K of non-rational points).
struct SemigroupData {
    std::vector<int> values;  // completed above the conductor, within [0, N)
    int truncation = 0;
    int scale = 1;
    int multiplicity = 0;
    std::vector<int> gaps;  // multiples of scale below the conductor that are not values
    int delta = 0;
    int conductor = 0;
    std::vector<int> minimal_generators;
    bool closed = true;  // closure under addition within [0, N)

    bool contains(int v) const;
};

// Raw attained orders -> certified semigroup data.
SemigroupData make_semigroup(const std::set<int>& attained, int N);

enum class SemigroupMode { Geometric, OverK };
enum class Regularity { Certified, Inconclusive };

struct NamedCheck {
    std::string name;
    bool ok;
};

struct InvariantsReport {
    ProjPoint point;
    Coeff p = 3;
    bool singular = false;
    int degree_of_point = 1;
    SemigroupData semigroup;    // over the tower
    SemigroupData semigroup_K;  // coefficients restricted to K
    std::vector<int> d_levels;  // d(C,P), d(C_1,P_1), ...
    std::vector<int> level_point_degrees;  // degree of the image of P at each level
    int delta = 0;
    int conductor = 0;
    int embedding_dimension = 1;
    Regularity regularity = Regularity::Inconclusive;
    std::vector<NamedCheck> checks;

    explicit InvariantsReport(const ProjPoint& P) : point(P) {}
    bool all_checks_pass() const;
    const NamedCheck* check(const std::string& name) const;
};

int degree_of_point(const ProjPoint& P);

SemigroupData semigroup_at(const HomPoly& curve, const ProjPoint& P, SemigroupMode mode, const Settings& s = {});
int differential_degree(const HomPoly& curve, const ProjPoint& P, int level, const Settings& s = {});
Regularity regularity_certificate(const HomPoly& curve, const ProjPoint& P, const Settings& s = {});

// c = sum_{i<n} (p-1)(d_i - 1) p^i with d_n = 1.
bool conductor_formula_holds(const std::vector<int>& d_levels, int conductor, Coeff p);
bool conductor_formula_check(const InvariantsReport& r);
bool divisibility_holds(int degree, int conductor, int d);
bool divisibility_check(const InvariantsReport& r);

int geometric_genus(int degree, const std::vector<int>& deltas);

InvariantsReport full_report(const HomPoly& curve, const ProjPoint& P, const Settings& s = {});

const char* regularity_name(Regularity r);

} // namespace nscurve
