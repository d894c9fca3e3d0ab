#include "treeqaoa/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <type_traits>

#include "treeqaoa/engine.hpp"
#include "treeqaoa/errors.hpp"
#include "treeqaoa/graph_algorithms.hpp"

namespace treeqaoa {

namespace {

using cplx = std::complex<double>;

constexpr std::int64_t kParallelThreshold = std::int64_t{1} << 12;
constexpr std::size_t kSumChunk = std::size_t{1} << 12;

void check_cap(std::uint64_t qubits, int cap) {
    if (qubits > static_cast<std::uint64_t>(cap))
        throw ResourceError("statevector needs " + std::to_string(qubits) +
                            " qubits, cap is " + std::to_string(cap));
}

int cut_of(std::uint64_t x, const std::vector<Edge> &edges) {
    int cut = 0;
    for (const auto &[u, v] : edges)
        cut += static_cast<int>(((x >> u) ^ (x >> v)) & 1u);
    return cut;
}

// Fixed chunking keeps the result independent of the thread count.
template <typename F> double diagonal_sum(const Statevector &state, F &&f) {
    const auto amp = state.amplitudes();
    const std::size_t n = amp.size();
    const std::size_t chunks = (n + kSumChunk - 1) / kSumChunk;
    std::vector<double> partial(chunks, 0.0);
    const auto nchunks = static_cast<std::int64_t>(chunks);
#pragma omp parallel for schedule(static) if (nchunks > 1)
    for (std::int64_t c = 0; c < nchunks; ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * kSumChunk;
        const std::size_t hi = std::min(n, lo + kSumChunk);
        double acc = 0.0;
        for (std::size_t i = lo; i < hi; ++i)
            acc += std::norm(amp[i]) * f(static_cast<std::uint64_t>(i));
        partial[static_cast<std::size_t>(c)] = acc;
    }
    double total = 0.0;
    for (double v : partial)
        total += v;
    return total;
}

void check_qubit(const Statevector &s, int q) {
    if (q < 0 || q >= s.qubits())
        throw InvalidParameter("qubit index " + std::to_string(q) + " out of range 0.." +
                               std::to_string(s.qubits() - 1));
}

} // namespace

Statevector::Statevector(int qubits, int qubit_cap) : n_(qubits) {
    if (qubits < 1)
        throw InvalidParameter("statevector needs at least one qubit");
    check_cap(static_cast<std::uint64_t>(qubits), qubit_cap);
    amp_.assign(std::size_t{1} << qubits, cplx{0.0, 0.0});
}

Statevector Statevector::uniform(int qubits, int qubit_cap) {
    Statevector s(qubits, qubit_cap);
    const double a = std::pow(2.0, -0.5 * qubits);
    std::fill(s.amp_.begin(), s.amp_.end(), cplx{a, 0.0});
    return s;
}

Statevector Statevector::basis(int qubits, std::uint64_t index, int qubit_cap) {
    Statevector s(qubits, qubit_cap);
    if (index >= s.amp_.size())
        throw InvalidParameter("basis index out of range");
    s.amp_[index] = 1.0;
    return s;
}

double Statevector::norm() const {
    return std::sqrt(diagonal_sum(*this, [](std::uint64_t) { return 1.0; }));
}

void Statevector::apply_cost_layer(const Graph &g, double gamma, double gamma_prime) {
    if (g.vertex_count() != n_)
        throw InvalidParameter("graph size does not match the statevector");
    const auto &edges = g.edges();
    const int m = static_cast<int>(edges.size());
    // Phase depends only on (cut, popcount); tabulate it once per layer.
    std::vector<cplx> table(static_cast<std::size_t>((m + 1) * (n_ + 1)));
    for (int cut = 0; cut <= m; ++cut)
        for (int ones = 0; ones <= n_; ++ones) {
            const double zz = m - 2.0 * cut;
            const double z = n_ - 2.0 * ones;
            const double phi = gamma * zz + gamma_prime * z;
            table[static_cast<std::size_t>(cut * (n_ + 1) + ones)] = {std::cos(phi), std::sin(phi)};
        }
    const auto size = static_cast<std::int64_t>(amp_.size());
    cplx *amp = amp_.data();
    const int stride = n_ + 1;
#pragma omp parallel for schedule(static) if (size > kParallelThreshold)
    for (std::int64_t i = 0; i < size; ++i) {
        const auto x = static_cast<std::uint64_t>(i);
        amp[i] *= table[static_cast<std::size_t>(cut_of(x, edges) * stride + std::popcount(x))];
    }
}

void Statevector::apply_mixer(double beta) {
    const double c = std::cos(beta);
    const double s = std::sin(beta);
    const auto half = static_cast<std::int64_t>(amp_.size() / 2);
    cplx *amp = amp_.data();
    for (int q = 0; q < n_; ++q) {
        const std::uint64_t bit = std::uint64_t{1} << q;
        const std::uint64_t low = bit - 1;
#pragma omp parallel for schedule(static) if (half > kParallelThreshold)
        for (std::int64_t j = 0; j < half; ++j) {
            const auto k = static_cast<std::uint64_t>(j);
            const std::uint64_t i0 = ((k & ~low) << 1) | (k & low);
            const std::uint64_t i1 = i0 | bit;
            const cplx a0 = amp[i0];
            const cplx a1 = amp[i1];
            amp[i0] = c * a0 + cplx{0.0, -s} * a1;
            amp[i1] = cplx{0.0, -s} * a0 + c * a1;
        }
    }
}

std::uint64_t tree_vertex_count(int d, int p) {
    if (d < 2 || p < 0)
        throw InvalidParameter("tree_graph needs d >= 2 and p >= 0");
    if (d == 2)
        return 2 * static_cast<std::uint64_t>(p + 1);
    std::uint64_t level = 1, total = 0;
    for (int depth = 0; depth <= p; ++depth) {
        total += level;
        if (total > (std::uint64_t{1} << 40))
            return total * 2;
        level *= static_cast<std::uint64_t>(d - 1);
    }
    return 2 * total;
}

Graph tree_graph(int d, int p, int vertex_cap) {
    const std::uint64_t count = tree_vertex_count(d, p);
    if (count > static_cast<std::uint64_t>(vertex_cap))
        throw ResourceError("tree_graph(" + std::to_string(d) + "," + std::to_string(p) +
                            ") has " + std::to_string(count) + " vertices, cap is " +
                            std::to_string(vertex_cap));
    std::vector<Edge> edges{{0, 1}};
    std::vector<int> frontier{0, 1};
    int next = 2;
    for (int depth = 1; depth <= p; ++depth) {
        std::vector<int> grown;
        for (int parent : frontier)
            for (int c = 0; c < d - 1; ++c) {
                edges.emplace_back(parent, next);
                grown.push_back(next++);
            }
        frontier = std::move(grown);
    }
    return Graph(next, edges);
}

Statevector qaoa_state(const Graph &g, const ParamSet &params, int qubit_cap) {
    ParamSet checked = params;
    checked.d = std::max(checked.d, 2);
    checked.validate();
    Statevector state = Statevector::uniform(g.vertex_count(), qubit_cap);
    for (int t = 0; t < params.p; ++t) {
        const auto ut = static_cast<std::size_t>(t);
        const double gp = params.gamma_prime ? (*params.gamma_prime)[ut] : 0.0;
        state.apply_cost_layer(g, params.gamma[ut], gp);
        state.apply_mixer(params.beta[ut]);
    }
    return state;
}

double expectation(const Statevector &state, const Observable &obs) {
    auto zsign = [](std::uint64_t x, int q) { return ((x >> q) & 1u) ? -1.0 : 1.0; };
    return std::visit(
        [&](const auto &o) -> double {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, observable::ZZ>) {
                check_qubit(state, o.i);
                check_qubit(state, o.j);
                return diagonal_sum(state, [&](std::uint64_t x) { return zsign(x, o.i) * zsign(x, o.j); });
            } else if constexpr (std::is_same_v<T, observable::Z>) {
                check_qubit(state, o.i);
                return diagonal_sum(state, [&](std::uint64_t x) { return zsign(x, o.i); });
            } else if constexpr (std::is_same_v<T, observable::Cut>) {
                if (o.graph->vertex_count() != state.qubits())
                    throw InvalidParameter("graph size does not match the statevector");
                const auto &edges = o.graph->edges();
                return diagonal_sum(state, [&](std::uint64_t x) { return double(cut_of(x, edges)); });
            } else {
                if (o.graph->vertex_count() != state.qubits())
                    throw InvalidParameter("graph size does not match the statevector");
                const auto &edges = o.graph->edges();
                return diagonal_sum(state, [&](std::uint64_t x) {
                    int violations = 0;
                    for (const auto &[u, v] : edges)
                        violations += static_cast<int>((x >> u) & (x >> v) & 1u);
                    return double(std::popcount(x) - violations);
                });
            }
        },
        obs);
}

std::vector<std::uint64_t> sample(const Statevector &state, std::uint64_t seed, std::size_t count) {
    if (count < 1)
        throw InvalidParameter("sample count must be >= 1");
    const auto amp = state.amplitudes();
    std::vector<double> cdf(amp.size());
    double running = 0.0;
    for (std::size_t i = 0; i < amp.size(); ++i) {
        running += std::norm(amp[i]);
        cdf[i] = running;
    }
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> out;
    out.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        // 53 random mantissa bits; std::uniform_real_distribution is not
        // specified bit-for-bit across standard libraries.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * running;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        if (it == cdf.end())
            --it;
        out.push_back(static_cast<std::uint64_t>(it - cdf.begin()));
    }
    return out;
}

Bits bits_of(std::uint64_t index, int qubits) {
    Bits out(static_cast<std::size_t>(qubits));
    for (int q = 0; q < qubits; ++q)
        out[static_cast<std::size_t>(q)] = static_cast<std::uint8_t>((index >> q) & 1u);
    return out;
}

SampleReport sampling_experiment(const Graph &g, const Statevector &state, int p, double c_edge,
                                 int repetitions, std::uint64_t seed) {
    if (repetitions < 1)
        throw InvalidParameter("repetitions must be >= 1");
    if (g.vertex_count() != state.qubits())
        throw InvalidParameter("graph size does not match the statevector");
    SampleReport rep;
    rep.seed = seed;
    rep.p = p;
    rep.samples = static_cast<std::size_t>(repetitions);
    rep.edges = static_cast<int>(g.edge_count());
    rep.c_edge = c_edge;
    rep.threshold = static_cast<int>(std::floor(rep.edges * c_edge));

    const auto gth = girth(g);
    rep.guarantee_applies = !gth || *gth >= 2 * p + 2;
    if (!rep.guarantee_applies)
        rep.warning = "girth " + std::to_string(*gth) + " < 2p+2 = " + std::to_string(2 * p + 2) +
                      ": edge neighbourhoods are not trees, the threshold is not guaranteed";

    const auto draws = sample(state, seed, rep.samples);
    std::uint64_t best_index = draws.front();
    rep.best_cut = -1;
    for (auto x : draws) {
        const int cut = cut_of(x, g.edges());
        rep.cuts.push_back(cut);
        if (cut > rep.best_cut) {
            rep.best_cut = cut;
            best_index = x;
        }
    }
    for (int q = 0; q < state.qubits(); ++q)
        rep.best_bitstring.push_back(((best_index >> q) & 1u) ? '1' : '0');
    rep.success = rep.best_cut >= rep.threshold;
    return rep;
}

SampleReport sampling_experiment(const Graph &g, const ParamSet &params, int repetitions,
                                 std::uint64_t seed, int qubit_cap) {
    const auto d = g.regular_degree();
    if (!d || *d < 2)
        throw InvalidParameter("sampling threshold needs a d-regular graph with d >= 2");
    ParamSet tree_params = params;
    tree_params.d = *d;
    const double c = edge_expectation(tree_params).c_edge;
    const Statevector state = qaoa_state(g, tree_params, qubit_cap);
    return sampling_experiment(g, state, params.p, c, repetitions, seed);
}

} // namespace treeqaoa
