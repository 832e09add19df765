#pragma once

#include "nscurve/tower.hpp"

#include <random>

namespace testutil {

using nscurve::Coeff;
using nscurve::FpPoly;
using nscurve::TowerScalar;

inline FpPoly random_poly(std::mt19937_64& rng, Coeff p, int max_deg) {
    int deg = static_cast<int>(rng() % (max_deg + 1));
    std::vector<Coeff> c(deg + 1);
    for (auto& x : c) x = static_cast<Coeff>(rng() % p);
    return FpPoly(p, c);
}

inline FpPoly random_nonzero_poly(std::mt19937_64& rng, Coeff p, int max_deg) {
    for (;;) {
        FpPoly f = random_poly(rng, p, max_deg);
        if (!f.is_zero()) return f;
    }
}

inline TowerScalar random_scalar(std::mt19937_64& rng, int level, Coeff p = 3, int max_deg = 4) {
    return TowerScalar(random_poly(rng, p, max_deg), random_nonzero_poly(rng, p, max_deg), level);
}

inline TowerScalar random_nonzero_scalar(std::mt19937_64& rng, int level, Coeff p = 3, int max_deg = 4) {
    return TowerScalar(random_nonzero_poly(rng, p, max_deg), random_nonzero_poly(rng, p, max_deg), level);
}

inline TowerScalar S(long long c) { return TowerScalar(c); }
inline TowerScalar T() { return TowerScalar::t(); }
inline TowerScalar R(int level = 1) { return TowerScalar::generator(level); }

} // namespace testutil
