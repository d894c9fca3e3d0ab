#pragma once

#include <optional>
#include <span>
#include <vector>

namespace treeqaoa {

/// QAOA angles for a depth-p circuit on a d-regular tree.
///
/// One cost layer with angle gamma applies exp(i gamma Z_a Z_b) on every
/// edge and, when gamma_prime is present, exp(i gamma' Z_v) on every vertex.
/// The mixer is exp(-i beta X) on every qubit. Relative to the textbook
/// exp(-i gamma C) with C = sum (1 - Z Z)/2 this is gamma -> -gamma/2 up to
/// a global phase, so raw angles are not interchangeable with other codes;
/// objective values are.
struct ParamSet {
    int p = 0;
    int d = 0;
    std::vector<double> gamma;
    std::vector<double> beta;
    std::optional<std::vector<double>> gamma_prime;

    bool has_gamma_prime() const noexcept { return gamma_prime.has_value(); }

    /// Throws InvalidParameter when any invariant is broken.
    void validate() const;

    /// Angles packed as [gamma..., beta...] or [gamma..., gamma'..., beta...].
    std::vector<double> pack() const;

    /// Inverse of pack(). `with_gamma_prime` selects the 3p layout.
    static ParamSet unpack(int p, int d, std::span<const double> packed,
                           bool with_gamma_prime);

    static ParamSet zeros(int p, int d, bool with_gamma_prime = false);
};

} // namespace treeqaoa
