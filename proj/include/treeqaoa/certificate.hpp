#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "treeqaoa/params.hpp"
#include "treeqaoa/schedule.hpp"

namespace treeqaoa {

/// floor(x * 10^4) / 10^4. Certified bounds are only ever rounded down.
double truncate_bound(double x) noexcept;

/// Lower bounds certified by one set of angles on every d-regular graph of
/// girth >= 2p+2.
struct BoundCertificate {
    int p = 0;
    int d = 0;
    int girth_requirement = 0; ///< 2p + 2
    double c_edge = 0.0;       ///< untruncated
    double c_edge_bound = 0.0;
    double m_g_bound = 0.0;    ///< equals c_edge_bound
    /// truncate((3/4) c_edge - 1/4); cubic graphs only.
    std::optional<double> ir_two_param_bound;
    /// truncate of the 3p-angle optimum; cubic graphs only.
    std::optional<double> ir_three_param_bound;
    ParamSet params;
    std::optional<ParamSet> mis_params;
    std::string engine_version;
    std::uint64_t seed = 0;
};

/// `cut` must come from a maxcut or mis2 optimization; `mis` from mis3.
/// Values are re-evaluated from the angles rather than copied.
BoundCertificate make_certificate(const OptimizationResult &cut,
                                  const std::optional<OptimizationResult> &mis = std::nullopt,
                                  const EngineOptions &opts = {});

/// "every d-regular graph of girth >= g has ..." sentences, one per bound.
std::string describe(const BoundCertificate &cert);

} // namespace treeqaoa
