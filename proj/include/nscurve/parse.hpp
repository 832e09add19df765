#pragma once

#include "nscurve/plane.hpp"

#include <string>

namespace nscurve {

struct ParseContext {
    Coeff p = 3;
    // Meaning of `r`: the generator with r^(p^level) = t. A leading
    // `level m` directive in the text overrides it.
    int level = 1;
    int max_level = kDefaultMaxLevel;
};

TowerScalar parse_scalar(const std::string& text, const ParseContext& ctx = {});
// Rejects non-homogeneous input.
HomPoly parse_poly(const std::string& text, const ParseContext& ctx = {});
// "(a:b:c)"
ProjPoint parse_point(const std::string& text, const ParseContext& ctx = {});

// Printed relative to `level`; level-0 elements are written in t only.
std::string format_scalar(const TowerScalar& x, int level = 1);
std::string format_poly(const HomPoly& f, int level = 1);
std::string format_point(const ProjPoint& P, int level = 1);

} // namespace nscurve
