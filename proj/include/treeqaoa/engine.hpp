#pragma once

// Exact per-edge QAOA expectation values on the depth-p edge neighbourhood
// of a d-regular tree.
//
// A branch message is the contraction of one subtree, left open on the
// trajectory bits of the subtree root's parent. All d-1 children of a vertex
// carry the same message, so their product is an entrywise (d-1)-th power and
// one chain of p level steps replaces the whole tree. Time is
// O(p^2 4^p) per evaluation and memory O(4^p), independent of d.

#include <cstddef>
#include <string>

#include "treeqaoa/message.hpp"
#include "treeqaoa/params.hpp"

namespace treeqaoa {

inline constexpr const char *kEngineVersion = "treeqaoa-engine/1.0.0";

enum class Backend { serial, parallel };

struct EngineOptions {
    /// Largest depth whose 4^p message is allowed. 12 is ~268 MB per message.
    int max_depth = 12;
    Backend backend = Backend::parallel;
};

struct EdgeExpectation {
    double zz = 0.0;       ///< <Z_i Z_j> on the root edge
    double z_single = 0.0; ///< <Z_i> on a root vertex
    double norm = 0.0;     ///< <I>, 1 for a unitary circuit
    double c_edge = 0.0;   ///< (1 - zz) / 2
    double max_imag = 0.0; ///< largest discarded imaginary part
};

/// Bytes held at the peak of edge_expectation for depth p.
std::size_t working_set_bytes(int p) noexcept;

/// Throws ResourceError naming the 4^p requirement when p exceeds the budget.
void check_budget(int p, const EngineOptions &opts);

/// All-ones message: the leaf-level input to level_step.
BranchMessage unit_message(int p);

BranchMessage entrywise_power(const BranchMessage &msg, int k,
                              Backend backend = Backend::parallel);

/// Message one level closer to the root. Consumes `child`.
BranchMessage level_step(BranchMessage child, const ParamSet &params,
                         Backend backend = Backend::parallel);

EdgeExpectation edge_expectation(const ParamSet &params, const EngineOptions &opts = {});

/// Expected I_1 per vertex on a 3-regular graph of sufficient girth.
/// Needs gamma_prime (may be zeros); d must be 3.
double mis_edge_objective(const ParamSet &params, const EngineOptions &opts = {});

/// Per-vertex I_1 from the root-edge observables on a 3-regular tree.
constexpr double mis_value_from(double zz, double z_single) noexcept {
    return 0.125 - 0.375 * zz + 0.25 * z_single;
}

/// Independence-ratio lower bound from a cut fraction: (3/4) c - 1/4.
constexpr double ir_from_cut_fraction(double c_edge) noexcept {
    return 0.75 * c_edge - 0.25;
}

} // namespace treeqaoa
