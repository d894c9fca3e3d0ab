// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "random_graphs.hpp"
#include "suites.hpp"
#include "treeqaoa/engine.hpp"
#include "treeqaoa/errors.hpp"
#include "treeqaoa/graph.hpp"
#include "treeqaoa/graph_algorithms.hpp"
#include "treeqaoa/independent_set.hpp"
#include "treeqaoa/schedule.hpp"
#include "treeqaoa/statevector.hpp"

using namespace treeqaoa;

namespace {

constexpr double kTableTol = 1e-4;
constexpr std::array<double, 8> kCutTable{0.6924, 0.7559, 0.7923, 0.8168,
                                          0.8363, 0.8498, 0.8597, 0.8673};
constexpr std::array<double, 8> kMisTwoTable{0.2693, 0.3169, 0.3442, 0.3626,
                                             0.3772, 0.3874, 0.3948, 0.4005};
constexpr std::array<double, 8> kMisThreeTable{0.2852, 0.3324, 0.3591, 0.3749,
                                               0.3861, 0.3942, 0.4005, 0.4054};
constexpr double kCutCeiling = 0.9351;

int failures = 0;

void report(int id, bool ok, const std::string &what, double seconds) {
    std::printf("[%s] criterion %d: %s (%.1f s)\n", ok ? "PASS" : "FAIL", id, what.c_str(), seconds);
    std::fflush(stdout);
    if (!ok)
        ++failures;
}

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char *f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

bool table_matches(const std::vector<OptimizationResult> &rows, const std::array<double, 8> &want,
                   const char *label) {
    bool ok = rows.size() == want.size();
    for (std::size_t i = 0; i < rows.size() && i < want.size(); ++i) {
        const double err = std::abs(rows[i].value - want[i]);
        std::printf("    %s p=%zu value=%.6f table=%.4f err=%.1e\n", label, i + 1, rows[i].value,
                    want[i], err);
        ok = ok && err <= kTableTol;
    }
    return ok;
}

} // namespace

int main() {
    OptimizerConfig cfg;
    // One core: the interpolated and user starts carry p >= 5, random draws
    // stay on the small depths.
    const TableSchedule schedule{4, 10, 0};
    auto t0 = std::chrono::steady_clock::now();

    // 1
    const auto cut_rows = optimize_table(8, 3, Mode::maxcut, cfg, schedule);
    report(1, table_matches(cut_rows, kCutTable, "maxcut"),
           "cut table p=1..8, d=3 within 1e-4", since(t0));

    // 2
    t0 = std::chrono::steady_clock::now();
    std::vector<OptimizationResult> two;
    for (const auto &r : cut_rows)
        two.push_back(as_mis_two_param(r));
    double identity_err = 0.0;
    for (std::size_t i = 0; i < two.size(); ++i)
        identity_err = std::max(identity_err,
                                std::abs(two[i].value - ir_from_cut_fraction(cut_rows[i].value)));
    const bool two_ok = table_matches(two, kMisTwoTable, "mis2") && identity_err <= 1e-6;
    const auto three = mis_table_from_cut(cut_rows, cfg, schedule);
    const bool three_ok = table_matches(three, kMisThreeTable, "mis3");
    report(2, two_ok && three_ok, "independence-ratio tables p=1..8 within 1e-4", since(t0));

    // 3
    t0 = std::chrono::steady_clock::now();
    {
        bool ok = true;
        for (const auto &c : cli::run_suite({"oracle", 1, 20, 0, 0})) {
            std::printf("    %s: %d cases, max error %.2e (tol %.0e)\n", c.name.c_str(), c.cases,
                        c.max_error, c.tolerance);
            ok = ok && c.passed() && c.cases == 100;
        }
        report(3, ok, "engine matches statevector on 5 (d,p) pairs to 1e-10", since(t0));
    }

    // 4
    t0 = std::chrono::steady_clock::now();
    const ParamSet p2 = cut_rows[1].params;
    {
        const Graph g = named_graph("heawood");
        const Statevector psi = qaoa_state(g, p2);
        double lo = 1e9, hi = -1e9, sum_zz = 0.0;
        for (const auto &[u, v] : g.edges()) {
            const double zz = expectation(psi, observable::ZZ{u, v});
            lo = std::min(lo, zz);
            hi = std::max(hi, zz);
            sum_zz += zz;
        }
        const double total = expectation(psi, observable::Cut{&g});
        const double per_edge = (1.0 - sum_zz / 21.0) / 2.0;
        const double frac = total / 21.0;
        std::printf("    spread %.2e, cut fraction %.6f, total - 21 x per-edge %.2e\n", hi - lo, frac,
                    total - 21.0 * per_edge);
        report(4,
               hi - lo <= 1e-10 && std::abs(frac - 0.7559) <= kTableTol &&
                   std::abs(total - 21.0 * per_edge) <= 1e-9,
               "Heawood p=2 per-edge uniformity and cut fraction", since(t0));
    }

    // 5
    t0 = std::chrono::steady_clock::now();
    {
        bool ok = true;
        auto all = cli::run_suite({"identity", 7, 200, 0, 0});
        for (auto &c : cli::run_suite({"symmetry", 7, 200, 0, 0}))
            all.push_back(c);
        for (const auto &c : all) {
            std::printf("    %s: %d cases, max error %.2e (tol %.0e)\n", c.name.c_str(), c.cases,
                        c.max_error, c.tolerance);
            ok = ok && c.passed();
        }
        double worst_drop = 0.0, top = 0.0;
        for (std::size_t i = 0; i < cut_rows.size(); ++i) {
            top = std::max(top, cut_rows[i].value);
            if (i > 0)
                worst_drop = std::max(worst_drop, cut_rows[i - 1].value - cut_rows[i].value);
        }
        std::printf("    largest decrease in p %.2e, largest value %.6f\n", worst_drop, top);
        ok = ok && worst_drop <= 1e-6 && top < kCutCeiling;
        report(5, ok, "invariants, monotonicity and the 0.9351 ceiling", since(t0));
    }

    // 6
    t0 = std::chrono::steady_clock::now();
    {
        const Graph g = named_graph("heawood");
        const Statevector psi = qaoa_state(g, p2);
        const double c = cut_rows[1].value;
        constexpr int experiments = 300;
        int wins = 0, threshold = 0;
        for (int e = 0; e < experiments; ++e) {
            const SampleReport r = sampling_experiment(g, psi, 2, c, 21, 1000 + static_cast<std::uint64_t>(e));
            threshold = r.threshold;
            wins += r.success ? 1 : 0;
        }
        const double frac = static_cast<double>(wins) / experiments;
        const double floor = 2.0 / 3.0 - 3.0 * std::sqrt((2.0 / 3.0) * (1.0 / 3.0) / experiments);
        std::printf("    threshold %d, success fraction %.4f, required %.4f\n", threshold, frac, floor);
        report(6, threshold == 15 && frac >= floor, "sampling guarantee on Heawood, 21 repetitions",
               since(t0));
    }

    // 7
    t0 = std::chrono::steady_clock::now();
    {
        std::mt19937_64 rng(2024);
        int bad = 0;
        for (int i = 0; i < 500; ++i) {
            const int n = 2 + static_cast<int>(rng() % 15);
            const Graph g = testing::random_graph(rng, n, 0.35, n);
            const Bits b = testing::random_bits(rng, n);
            const auto set = repair_independent(g, b);
            const auto [a, c] = two_independent_sets(g, b);
            std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
            bool disjoint = true;
            for (int v : a)
                seen[static_cast<std::size_t>(v)] = 1;
            for (int v : c)
                disjoint = disjoint && !seen[static_cast<std::size_t>(v)];
            const bool ok = is_independent(g, set) && static_cast<int>(set.size()) >= i1_value(g, b) &&
                            disjoint && is_independent(g, a) && is_independent(g, c) &&
                            static_cast<int>(a.size() + c.size()) >= i2_value(g, b) &&
                            i2_value(g, b) == i2_via_cut(g, b);
            bad += ok ? 0 : 1;
        }
        std::printf("    500 cases, %d violations\n", bad);
        report(7, bad == 0, "independent-set repair and I_2 identity", since(t0));
    }

    // 8
    t0 = std::chrono::steady_clock::now();
    {
        bool ok = true;
        for (int n = 3; n <= 20; ++n)
            ok = ok && girth(cycle_graph(n)) == n;
        ok = ok && girth(named_graph("petersen")) == 5 && girth(named_graph("heawood")) == 6 &&
             girth(named_graph("mcgee")) == 7;
        std::mt19937_64 rng(77);
        int bad = 0;
        for (int i = 0; i < 200; ++i) {
            const int n = 2 + static_cast<int>(rng() % 30);
            const Graph g = testing::random_graph(rng, n, 0.3, n);
            const auto colors = edge_coloring(g);
            if (!is_proper_edge_coloring(g, colors) || color_count(colors) > g.max_degree() + 1)
                ++bad;
        }
        std::printf("    girths checked, %d bad colourings of 200\n", bad);
        report(8, ok && bad == 0, "girth and edge colouring", since(t0));
    }

    // 9
    t0 = std::chrono::steady_clock::now();
    {
        bool refused = false;
        try {
            edge_expectation(ParamSet::zeros(13, 3));
        } catch (const ResourceError &e) {
            refused = std::string(e.what()).find("4^13") != std::string::npos;
            std::printf("    p=13 refused: %s\n", e.what());
        }
        std::printf("    %3s %16s %14s %14s\n", "p", "entries", "message GB", "working GB");
        for (int p = 8; p <= 17; ++p) {
            const double entries = std::ldexp(1.0, 2 * p);
            std::printf("    %3d %16.0f %14.3f %14.3f\n", p, entries, entries * 16 / 1e9,
                        static_cast<double>(working_set_bytes(p)) / 1e9);
        }
        const bool p17 = std::abs(std::ldexp(1.0, 34) * 16 / 1e9 - 274.9) < 0.1;
        report(9, refused && p17, "p > 12 refused with a ResourceError; scaling table printed",
               since(t0));
    }

    std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
