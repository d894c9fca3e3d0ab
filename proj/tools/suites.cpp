#include "suites.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "treeqaoa/engine.hpp"
#include "treeqaoa/errors.hpp"
#include "treeqaoa/json_io.hpp"
#include "treeqaoa/schedule.hpp"
#include "treeqaoa/statevector.hpp"

namespace treeqaoa::cli {

namespace {

void record(Check &c, double err, const ParamSet &params) {
    ++c.cases;
    // A NaN error sticks, so passed() stays false.
    if (std::isnan(err) || err > c.max_error) {
        c.max_error = err;
        c.worst = to_json(params);
    }
}

std::uint64_t case_seed(std::uint64_t seed, int tag, int i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(tag), static_cast<std::uint32_t>(i)};
    std::uint32_t w[2];
    seq.generate(w, w + 2);
    return (std::uint64_t{w[0]} << 32) | w[1];
}

std::vector<Check> oracle_suite(const SuiteSpec &spec) {
    std::vector<std::pair<int, int>> pairs{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}};
    if (spec.d != 0 || spec.p != 0) {
        if (spec.d < 2 || spec.p < 1)
            throw InvalidParameter("oracle suite needs both --d >= 2 and --p >= 1");
        pairs = {{spec.d, spec.p}};
    }
    Check zz{"oracle <ZZ> engine vs statevector", 0, 0.0, 1e-10, {}};
    Check z{"oracle <Z> engine vs statevector", 0, 0.0, 1e-10, {}};
    int tag = 0;
    for (const auto &[d, p] : pairs) {
        const Graph tree = tree_graph(d, p);
        for (int i = 0; i < spec.cases; ++i) {
            const ParamSet params = random_init(p, d, true, case_seed(spec.seed, tag, i));
            const EdgeExpectation ev = edge_expectation(params);
            const Statevector psi = qaoa_state(tree, params);
            record(zz, std::abs(ev.zz - expectation(psi, observable::ZZ{0, 1})), params);
            record(z, std::abs(ev.z_single - expectation(psi, observable::Z{0})), params);
        }
        ++tag;
    }
    return {zz, z};
}

std::vector<Check> symmetry_suite(const SuiteSpec &spec) {
    constexpr double pi = std::numbers::pi;
    Check linear{"<Z> = 0 without field term", 0, 0.0, 1e-12, {}};
    Check collapse{"beta = 0 gives c_edge = 1/2", 0, 0.0, 1e-12, {}};
    Check period{"gamma_t and beta_t period pi", 0, 0.0, 1e-12, {}};
    Check sign{"c_edge(-gamma, -beta) = c_edge(gamma, beta)", 0, 0.0, 1e-12, {}};
    for (int i = 0; i < spec.cases; ++i) {
        const int p = 1 + i % 5;
        const int d = 2 + (i / 5) % 4;
        const ParamSet params = random_init(p, d, false, case_seed(spec.seed, 10, i));
        const EdgeExpectation ev = edge_expectation(params);
        record(linear, std::abs(ev.z_single), params);

        ParamSet flat = random_init(p, d, true, case_seed(spec.seed, 11, i));
        std::fill(flat.beta.begin(), flat.beta.end(), 0.0);
        record(collapse, std::abs(edge_expectation(flat).c_edge - 0.5), flat);

        const auto t = static_cast<std::size_t>(i % p);
        ParamSet shifted = params;
        shifted.gamma[t] += pi;
        record(period, std::abs(edge_expectation(shifted).c_edge - ev.c_edge), params);
        shifted = params;
        shifted.beta[t] += pi;
        record(period, std::abs(edge_expectation(shifted).c_edge - ev.c_edge), params);

        ParamSet mirrored = params;
        for (double &g : mirrored.gamma)
            g = -g;
        for (double &b : mirrored.beta)
            b = -b;
        record(sign, std::abs(edge_expectation(mirrored).c_edge - ev.c_edge), params);
    }
    return {linear, collapse, period, sign};
}

std::vector<Check> identity_suite(const SuiteSpec &spec) {
    Check norm{"|<I> - 1|", 0, 0.0, 1e-10, {}};
    Check imag{"discarded imaginary parts", 0, 0.0, 1e-10, {}};
    for (int i = 0; i < spec.cases; ++i) {
        const int p = 1 + i % 6;
        const int d = 2 + (i / 6) % 4;
        const ParamSet params = random_init(p, d, i % 2 == 1, case_seed(spec.seed, 20, i));
        const EdgeExpectation ev = edge_expectation(params);
        record(norm, std::abs(ev.norm - 1.0), params);
        record(imag, ev.max_imag, params);
    }
    return {norm, imag};
}

} // namespace

std::vector<Check> run_suite(const SuiteSpec &spec) {
    if (spec.cases < 1)
        throw InvalidParameter("--cases must be >= 1");
    if (spec.suite == "oracle")
        return oracle_suite(spec);
    if (spec.suite == "symmetry")
        return symmetry_suite(spec);
    if (spec.suite == "identity")
        return identity_suite(spec);
    throw InvalidParameter("unknown suite '" + spec.suite + "' (oracle, symmetry, identity)");
}

nlohmann::json to_json(const Check &c) {
    return {{"name", c.name},     {"cases", c.cases},   {"max_error", c.max_error},
            {"tolerance", c.tolerance}, {"passed", c.passed()}, {"worst_case", c.worst}};
}

} // namespace treeqaoa::cli
