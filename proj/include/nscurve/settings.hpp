#pragma once

#include "nscurve/branch.hpp"

namespace nscurve {

// Numerical policy shared by the invariant computations.
struct Settings {
    int max_level = kDefaultMaxLevel;
    int truncation = kDefaultTruncation;
    int max_truncation = kMaxTruncation;
    // monomials of total degree <= span_degree span the coordinate ring
    int span_degree = kDefaultSpanDegree;
    // Frobenius levels are iterated until d = 1 or this many levels
    int level_cap = 4;
    // largest k in the fractions g / D^k of the level-i local ring
    int fraction_depth = 2;
};

} // namespace nscurve
