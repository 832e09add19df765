#pragma once

#include "nscurve/plane.hpp"

#include <array>
#include <optional>
#include <vector>

namespace nscurve {

// Homogeneous ideal of the coordinate ring of the plane over level 0 or 1.
struct IdealPresentation {
    std::vector<HomPoly> generators;
    int level = 1;
};

// Applies d/dr to every coefficient (coefficients read at level 1).
HomPoly coeff_derivation(const HomPoly& f);

// Degree-d piece of I as the reduced row echelon form of the monomial
// multiples of the generators, over the level-1 field.
Echelon graded_piece(const IdealPresentation& I, int d);
bool same_graded_pieces(const IdealPresentation& I, const IdealPresentation& J, int max_degree);

bool is_invariant(const IdealPresentation& I);

// D^2 for p = 3; the result has coefficients in K.
HomPoly trace(const HomPoly& f);
// (f0, f1, f2) over K with f = f0 + r f1 + r^2 f2.
std::array<HomPoly, 3> decompose(const HomPoly& f);

// Scale a K-form to have polynomial coefficients with trivial content and
// a monic leading coefficient.
HomPoly primitive_form(const HomPoly& f);

IdealPresentation descend(const IdealPresentation& I);
IdealPresentation extend(const IdealPresentation& J);

// (a x + b y + c z) -> a^3 x^3 + b^3 y^3 + c^3 z^3
HomPoly x_quotient(const HomPoly& L);

struct OneTypeResult {
    int type = 1;
    HomPoly witness;  // over K: a line (type 1) or an irreducible conic (type 2)
};

OneTypeResult one_type(const ProjPoint& P);

struct PairNormalForm {
    int type = 1;
    ProjMap map;  // entries in K
    ProjPoint p_image, q_image;
    HomPoly conic;  // shared K-conic for type 2, zero otherwise
};

// Map over K taking {P, Q} to {(a:0:1), (0:b:1)} (type 1) or onto the
// conic x^2 - yz (type 2). `conic_point` is a K-point of the shared conic
// to use when the built-in search finds none.
PairNormalForm pair_normal_form(const ProjPoint& P, const ProjPoint& Q,
                                const std::optional<ProjPoint>& conic_point = std::nullopt);

// Some K-rational point on the conic, from coordinate points and
// intersections with the coordinate lines.
std::optional<ProjPoint> find_rational_point(const HomPoly& conic);

// Map over K taking the smooth conic through the K-point r1 onto x^2 - yz,
// with r1 going to (0:1:0) and a second K-point (found when not given) to
// (0:0:1).
ProjMap conic_normal_map(const HomPoly& conic, const ProjPoint& r1,
                         const std::optional<ProjPoint>& second = std::nullopt);

} // namespace nscurve
