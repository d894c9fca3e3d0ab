#pragma once

#include <cstdint>
#include <random>

#include "treeqaoa/params.hpp"

namespace testing {

inline double uniform(std::mt19937_64 &rng, double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Angles drawn from a wider box than the optimizer uses, so periodicity is
/// exercised too.
inline treeqaoa::ParamSet random_params(std::mt19937_64 &rng, int p, int d, bool field) {
    treeqaoa::ParamSet ps = treeqaoa::ParamSet::zeros(p, d, field);
    for (double &g : ps.gamma)
        g = uniform(rng, -3.2, 3.2);
    for (double &b : ps.beta)
        b = uniform(rng, -3.2, 3.2);
    if (ps.gamma_prime)
        for (double &g : *ps.gamma_prime)
            g = uniform(rng, -3.2, 3.2);
    return ps;
}

} // namespace testing
