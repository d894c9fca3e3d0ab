#pragma once

// Unconstrained maximization with L-BFGS over central finite differences.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace treeqaoa {

using Objective = std::function<double(std::span<const double>)>;

struct OptimizerConfig {
    int max_iterations = 500;
    double gradient_tolerance = 1e-8;
    double finite_difference_step = 1e-6;
    int restart_count = 10;
    std::uint64_t seed = 1;
    int lbfgs_history = 10;

    /// Throws InvalidParameter unless every field is positive.
    void validate() const;
};

enum class OptStatus { converged, iteration_limit, stalled };

std::string_view to_string(OptStatus s) noexcept;

struct MaximizeResult {
    std::vector<double> x;
    double value = 0.0;
    double gradient_norm = 0.0;
    std::size_t evaluations = 0;
    int iterations = 0;
    OptStatus status = OptStatus::stalled;
};

/// Central differences (f(x + h e_i) - f(x - h e_i)) / 2h. Throws NumericError
/// naming the component when a probe is not finite. Adds 2n to *evaluations.
std::vector<double> gradient(const Objective &f, std::span<const double> x, double step,
                             std::size_t *evaluations = nullptr);

/// L-BFGS ascent with backtracking (Armijo) line search. The returned point is
/// the best one seen; its value is f at that point exactly as evaluated.
MaximizeResult maximize(const Objective &f, std::vector<double> init, const OptimizerConfig &cfg);

} // namespace treeqaoa
