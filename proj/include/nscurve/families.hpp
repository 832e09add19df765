#pragma once

#include "nscurve/invariants.hpp"
#include "nscurve/plane.hpp"

#include <array>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace nscurve {

enum class Family { C0, C1, C2 };

const char* family_name(Family f);
Family parse_family(const std::string& s);

struct FamilyMember {
    Family tag = Family::C0;
    TowerScalar t1, t2;  // level 1
    TowerScalar a;       // level 0, nonzero
    std::array<TowerScalar, 3> abc;  // (A, B, C), level 1
};

// Validates the parameters and computes (A, B, C). Throws InvalidParameters.
FamilyMember make_member(Family tag, const TowerScalar& t1, const TowerScalar& t2, const TowerScalar& a,
                         int max_level = kDefaultMaxLevel);

// Member with the given (A, B, C) triple. Throws InvalidParameters when
// the triple does not come from valid parameters.
FamilyMember member_from_abc(Family tag, const std::array<TowerScalar, 3>& abc, int max_level = kDefaultMaxLevel);

// The line whose cube, read over K, enters the equation.
HomPoly member_line(const FamilyMember& m);
// a F^2 + (line)^3 N with coefficients in K.
HomPoly equation(const FamilyMember& m);
std::array<ProjPoint, 2> singular_points(const FamilyMember& m);

struct ClassifyResult {
    Family tag = Family::C0;
    std::optional<ProjMap> normalization;  // over K, F to x^2 - yz or xy and N to x or z
    std::string note;
};

// Family of c F^2 + (x-quotient of M) N. Throws InvariantLine if M is invariant.
ClassifyResult classify(const TowerScalar& c, const HomPoly& F, const HomPoly& M, const HomPoly& N);

enum class EquivalenceVerdict { Equivalent, NotEquivalent, DifferentFamily };

struct EquivalenceWitness {
    ProjMap map;  // apply_map(map, equation(m1)) is a K-multiple of equation(m2)
    std::vector<std::pair<std::string, TowerScalar>> parameters;
};

struct EquivalenceResult {
    EquivalenceVerdict verdict = EquivalenceVerdict::NotEquivalent;
    std::optional<EquivalenceWitness> witness;
};

const char* verdict_name(EquivalenceVerdict v);

EquivalenceResult are_equivalent(const FamilyMember& m1, const FamilyMember& m2, int max_level = kDefaultMaxLevel);

struct MemberVerification {
    std::vector<InvariantsReport> reports;
    int geometric_genus = 0;
    int probe_points = 0;
    int probe_extra_singular = 0;
    std::vector<NamedCheck> checks;

    bool all_pass() const;
};

MemberVerification verify_member(const FamilyMember& m, const Settings& s = {});

// Deterministic sampler: t_i = e_i r + o_i with e_i in F_p^*, o_i in K of
// numerator and denominator degree <= 2, and a in K^* of the same height.
FamilyMember sample_member(Family tag, std::mt19937_64& rng, int max_level = kDefaultMaxLevel);

} // namespace nscurve
