#pragma once

// Depth-by-depth angle optimization for the cut and independent-set tables.

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "treeqaoa/engine.hpp"
#include "treeqaoa/optimizer.hpp"
#include "treeqaoa/params.hpp"

namespace treeqaoa {

enum class Mode { maxcut, mis_two_param, mis_three_param };
enum class InitStrategy { random, interpolated, user };

std::string_view to_string(Mode m) noexcept;
std::string_view to_string(InitStrategy s) noexcept;
/// Accepts "maxcut", "mis2", "mis3" and the long names. Throws InvalidParameter.
Mode parse_mode(std::string_view text);

struct OptimizationResult {
    ParamSet params;
    Mode mode = Mode::maxcut;
    double value = 0.0; ///< reported objective: c_edge, (3/4)c - 1/4, or I_1 per vertex
    double gradient_norm = 0.0;
    std::size_t evaluations = 0; ///< summed over all restarts
    int iterations = 0;          ///< of the winning restart
    int restarts_used = 0;
    int best_restart = 0;
    InitStrategy init_strategy = InitStrategy::random;
    OptStatus status = OptStatus::stalled;
    std::uint64_t seed = 0;
};

/// Value the optimizer maximizes for `mode`. mis_two_param maximizes c_edge
/// (the reported value is an affine image of it).
double objective(Mode mode, const ParamSet &params, const EngineOptions &opts = {});

/// Value reported for `mode`.
double reported_value(Mode mode, const ParamSet &params, const EngineOptions &opts = {});

/// Same objective, angles folded into one period window: gamma and beta into
/// [-pi/4, pi/4), gamma' into [-pi/2, pi/2), and the overall sign chosen so
/// gamma_1 >= 0. Folding gamma for odd d (or beta with gamma') also negates
/// some of the other angles, which leaves the expectation unchanged.
ParamSet canonical_angles(const ParamSet &params);

/// Resamples each angle sequence of a depth p-1 optimum onto depth p by
/// piecewise-linear interpolation from (j-1)/(p-2) onto (j-1)/(p-1).
/// Throws InvalidParameter when prev.p < 1 (depth 1 has no predecessor).
ParamSet interpolate_init(const ParamSet &prev);

/// Uniform draw: gamma, gamma' in (-pi/2, pi/2), beta in (-pi/4, pi/4).
ParamSet random_init(int p, int d, bool with_gamma_prime, std::uint64_t seed);

struct Start {
    ParamSet params;
    InitStrategy strategy;
};

/// Runs every start, then the requested number of random restarts, and keeps
/// the best value (ties to the lowest restart index). Restarts may run on
/// several threads; the result does not depend on completion order.
OptimizationResult optimize_depth(int p, int d, Mode mode, std::vector<Start> starts,
                                  int random_restarts, const OptimizerConfig &cfg,
                                  const EngineOptions &opts = {});

struct TableSchedule {
    int small_depth = 4;      ///< p <= this uses `random_small` restarts
    int random_small = 10;
    int random_large = 4;     ///< p above small_depth; plus the interpolated start

    int random_restarts(int p) const noexcept { return p <= small_depth ? random_small : random_large; }
};

/// The cut result relabelled with value (3/4) c - 1/4. d must be 3.
OptimizationResult as_mis_two_param(const OptimizationResult &cut);

/// Sequential ascent in p with interpolated warm starts. mis_three_param also
/// starts from the cut optimum at each depth with gamma' = 0, so it runs the
/// cut chain alongside. `on_result` is called as each depth finishes.
std::vector<OptimizationResult>
optimize_table(int p_max, int d, Mode mode, const OptimizerConfig &cfg,
               const TableSchedule &schedule = {}, const EngineOptions &opts = {},
               const std::function<void(const OptimizationResult &)> &on_result = {});

/// The mis_three_param chain given the maxcut rows for p = 1..p_max: each
/// depth starts from the cut angles with gamma' = 0 ("user"), from the
/// interpolated previous row, and from the scheduled random draws.
std::vector<OptimizationResult>
mis_table_from_cut(const std::vector<OptimizationResult> &cut_rows, const OptimizerConfig &cfg,
                   const TableSchedule &schedule = {}, const EngineOptions &opts = {},
                   const std::function<void(const OptimizationResult &)> &on_result = {});

} // namespace treeqaoa
