#pragma once

// Dense statevector QAOA on explicit small graphs. Independent of the tree
// contraction in engine.hpp and used as its oracle.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "treeqaoa/graph.hpp"
#include "treeqaoa/graph_algorithms.hpp"
#include "treeqaoa/params.hpp"

namespace treeqaoa {

inline constexpr int kDefaultQubitCap = 26;

/// Amplitudes over n qubits; qubit q is bit q of the basis index and
/// Z|b> = (1 - 2b)|b>.
class Statevector {
  public:
    Statevector(int qubits, int qubit_cap = kDefaultQubitCap);

    /// |+>^n
    static Statevector uniform(int qubits, int qubit_cap = kDefaultQubitCap);
    static Statevector basis(int qubits, std::uint64_t index, int qubit_cap = kDefaultQubitCap);

    int qubits() const noexcept { return n_; }
    std::span<std::complex<double>> amplitudes() noexcept { return amp_; }
    std::span<const std::complex<double>> amplitudes() const noexcept { return amp_; }

    double norm() const;

    /// exp(i (gamma sum_E Z_u Z_v + gamma_prime sum_V Z_v)), one fused sweep.
    void apply_cost_layer(const Graph &g, double gamma, double gamma_prime);
    /// exp(-i beta X) on every qubit.
    void apply_mixer(double beta);

  private:
    int n_;
    std::vector<std::complex<double>> amp_;
};

/// Edge neighbourhood tree: roots 0 and 1 joined by an edge, each growing a
/// (d-1)-ary tree of depth p. Throws ResourceError when the vertex count
/// 2((d-1)^(p+1) - 1)/(d-2) exceeds `vertex_cap`.
Graph tree_graph(int d, int p, int vertex_cap = kDefaultQubitCap);

/// Vertex count of tree_graph(d, p) without building it.
std::uint64_t tree_vertex_count(int d, int p);

/// QAOA state on G. params.d is ignored; the graph supplies the structure.
Statevector qaoa_state(const Graph &g, const ParamSet &params, int qubit_cap = kDefaultQubitCap);

namespace observable {
struct ZZ {
    int i, j;
};
struct Z {
    int i;
};
/// sum over edges of (1 - Z_u Z_v)/2
struct Cut {
    const Graph *graph;
};
/// I_1 = sum b_i - sum_E b_u b_v with b = (1 - Z)/2
struct Mis {
    const Graph *graph;
};
} // namespace observable

using Observable = std::variant<observable::ZZ, observable::Z, observable::Cut, observable::Mis>;

/// Throws InvalidParameter for out-of-range qubit indices.
double expectation(const Statevector &state, const Observable &obs);

/// i.i.d. computational-basis draws by inverse CDF. Deterministic for a seed.
std::vector<std::uint64_t> sample(const Statevector &state, std::uint64_t seed, std::size_t count);

Bits bits_of(std::uint64_t index, int qubits);

struct SampleReport {
    std::uint64_t seed = 0;
    int p = 0;
    std::size_t samples = 0;
    int edges = 0;
    int best_cut = 0;
    std::vector<int> cuts;
    std::string best_bitstring;
    double c_edge = 0.0;
    int threshold = 0;            ///< floor(|E| c_edge)
    bool success = false;         ///< best_cut >= threshold
    bool guarantee_applies = false; ///< girth >= 2p+2
    std::optional<std::string> warning;
};

/// Best-of-`repetitions` sampled cut against floor(|E| c_edge(params)).
/// G must be regular; params.d is taken from G.
SampleReport sampling_experiment(const Graph &g, const ParamSet &params, int repetitions,
                                 std::uint64_t seed, int qubit_cap = kDefaultQubitCap);

/// Variant reusing a prepared state and a known c_edge.
SampleReport sampling_experiment(const Graph &g, const Statevector &state, int p, double c_edge,
                                 int repetitions, std::uint64_t seed);

} // namespace treeqaoa
