#include "treeqaoa/schedule.hpp"

#include <cmath>
#include <exception>
#include <numbers>
#include <random>
#include <string>

#include "treeqaoa/errors.hpp"

namespace treeqaoa {

namespace {

double uniform(std::mt19937_64 &rng, double lo, double hi) {
    // 53 random mantissa bits; the distribution classes are not portable.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

std::uint64_t restart_seed(std::uint64_t seed, int p, Mode mode, int index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(mode),
                      static_cast<std::uint32_t>(index)};
    std::uint32_t words[2];
    seq.generate(words, words + 2);
    return (std::uint64_t{words[0]} << 32) | words[1];
}

std::vector<double> resample(const std::vector<double> &prev) {
    const std::size_t m = prev.size();
    std::vector<double> out(m + 1);
    if (m == 1) {
        out[0] = out[1] = prev[0];
        return out;
    }
    // Position of output slot j on the input grid: j (m-1) / m.
    for (std::size_t j = 0; j <= m; ++j) {
        const double pos = static_cast<double>(j * (m - 1)) / static_cast<double>(m);
        const auto lo = static_cast<std::size_t>(std::floor(pos));
        if (lo + 1 >= m) {
            out[j] = prev[m - 1];
            continue;
        }
        const double frac = pos - static_cast<double>(lo);
        out[j] = (1.0 - frac) * prev[lo] + frac * prev[lo + 1];
    }
    return out;
}

double wrap(double x, double period) {
    // Into [-period/2, period/2).
    return x - period * std::floor(x / period + 0.5);
}

bool uses_gamma_prime(Mode mode) { return mode == Mode::mis_three_param; }

Mode search_mode(Mode mode) { return mode == Mode::mis_two_param ? Mode::maxcut : mode; }

} // namespace

std::string_view to_string(Mode m) noexcept {
    switch (m) {
    case Mode::maxcut:
        return "maxcut";
    case Mode::mis_two_param:
        return "mis2";
    case Mode::mis_three_param:
        return "mis3";
    }
    return "unknown";
}

std::string_view to_string(InitStrategy s) noexcept {
    switch (s) {
    case InitStrategy::random:
        return "random";
    case InitStrategy::interpolated:
        return "interpolated";
    case InitStrategy::user:
        return "user";
    }
    return "unknown";
}

Mode parse_mode(std::string_view text) {
    if (text == "maxcut")
        return Mode::maxcut;
    if (text == "mis2" || text == "mis_two_param")
        return Mode::mis_two_param;
    if (text == "mis3" || text == "mis_three_param")
        return Mode::mis_three_param;
    throw InvalidParameter("unknown mode '" + std::string(text) +
                           "' (expected maxcut, mis2 or mis3)");
}

double objective(Mode mode, const ParamSet &params, const EngineOptions &opts) {
    if (mode == Mode::mis_three_param)
        return mis_edge_objective(params, opts);
    return edge_expectation(params, opts).c_edge;
}

double reported_value(Mode mode, const ParamSet &params, const EngineOptions &opts) {
    const double v = objective(mode, params, opts);
    return mode == Mode::mis_two_param ? ir_from_cut_fraction(v) : v;
}

ParamSet canonical_angles(const ParamSet &params) {
    params.validate();
    constexpr double pi = std::numbers::pi;
    ParamSet out = params;
    const std::size_t p = out.gamma.size();
    auto flip = [](std::vector<double> &v, std::size_t from, std::size_t to) {
        for (std::size_t s = from; s < to; ++s)
            v[s] = -v[s];
    };
    // gamma_t + pi/2 multiplies the layer by prod_E Z_u Z_v = prod_V Z_v^d. For
    // odd d that is Z^n, which commutes to the end while negating later betas.
    for (std::size_t t = 0; t < p; ++t) {
        const double shifted = wrap(out.gamma[t], pi / 2);
        const long turns = std::lround((out.gamma[t] - shifted) / (pi / 2));
        out.gamma[t] = shifted;
        if (out.d % 2 == 1 && turns % 2 != 0)
            flip(out.beta, t, p);
    }
    // beta_t + pi/2 inserts X^n, which commutes back to |+>^n while negating
    // the field angles of layers 1..t.
    for (std::size_t t = 0; t < p; ++t) {
        const double shifted = wrap(out.beta[t], pi / 2);
        const long turns = std::lround((out.beta[t] - shifted) / (pi / 2));
        out.beta[t] = shifted;
        if (out.gamma_prime && turns % 2 != 0)
            flip(*out.gamma_prime, 0, t + 1);
    }
    if (out.gamma_prime)
        for (double &g : *out.gamma_prime)
            g = wrap(g, pi);
    if (out.gamma[0] < 0.0) {
        flip(out.gamma, 0, p);
        flip(out.beta, 0, p);
        if (out.gamma_prime)
            flip(*out.gamma_prime, 0, p);
    }
    return out;
}

ParamSet interpolate_init(const ParamSet &prev) {
    if (prev.p < 1)
        throw InvalidParameter("interpolation needs a depth >= 1 predecessor; depth 1 has none");
    prev.validate();
    ParamSet next;
    next.p = prev.p + 1;
    next.d = prev.d;
    next.gamma = resample(prev.gamma);
    next.beta = resample(prev.beta);
    if (prev.gamma_prime)
        next.gamma_prime = resample(*prev.gamma_prime);
    return next;
}

ParamSet random_init(int p, int d, bool with_gamma_prime, std::uint64_t seed) {
    constexpr double half_pi = std::numbers::pi / 2;
    constexpr double quarter_pi = std::numbers::pi / 4;
    std::mt19937_64 rng(seed);
    ParamSet ps = ParamSet::zeros(p, d, with_gamma_prime);
    for (double &g : ps.gamma)
        g = uniform(rng, -half_pi, half_pi);
    if (ps.gamma_prime)
        for (double &g : *ps.gamma_prime)
            g = uniform(rng, -half_pi, half_pi);
    for (double &b : ps.beta)
        b = uniform(rng, -quarter_pi, quarter_pi);
    return ps;
}

OptimizationResult optimize_depth(int p, int d, Mode mode, std::vector<Start> starts,
                                  int random_restarts, const OptimizerConfig &cfg,
                                  const EngineOptions &opts) {
    cfg.validate();
    check_budget(p, opts);
    if (random_restarts < 0)
        throw InvalidParameter("random restart count must be >= 0");
    const bool gp = uses_gamma_prime(mode);
    for (const Start &s : starts) {
        if (s.params.p != p || s.params.d != d || s.params.has_gamma_prime() != gp)
            throw InvalidParameter("start does not match depth, degree or mode");
        s.params.validate();
    }
    const auto first_random = static_cast<int>(starts.size());
    for (int i = 0; i < random_restarts; ++i)
        starts.push_back(
            {random_init(p, d, gp, restart_seed(cfg.seed, p, mode, first_random + i)),
             InitStrategy::random});
    if (starts.empty())
        throw InvalidParameter("no starting points");

    const Mode inner = search_mode(mode);
    const Objective f = [&](std::span<const double> x) {
        return objective(inner, ParamSet::unpack(p, d, x, gp), opts);
    };

    const auto n = static_cast<int>(starts.size());
    std::vector<MaximizeResult> runs(starts.size());
    std::vector<std::exception_ptr> failures(starts.size());
#pragma omp parallel for schedule(dynamic, 1) if (n > 1)
    for (int i = 0; i < n; ++i) {
        try {
            runs[static_cast<std::size_t>(i)] =
                maximize(f, starts[static_cast<std::size_t>(i)].params.pack(), cfg);
        } catch (...) {
            failures[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto &e : failures)
        if (e)
            std::rethrow_exception(e);

    OptimizationResult best;
    best.mode = mode;
    best.seed = cfg.seed;
    best.restarts_used = n;
    std::size_t winner = 0;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        best.evaluations += runs[i].evaluations;
        if (runs[i].value > runs[winner].value)
            winner = i;
    }
    const MaximizeResult &w = runs[winner];
    best.params = canonical_angles(ParamSet::unpack(p, d, w.x, gp));
    best.value = reported_value(mode, best.params, opts);
    best.gradient_norm = w.gradient_norm;
    best.iterations = w.iterations;
    best.best_restart = static_cast<int>(winner);
    best.init_strategy = starts[winner].strategy;
    best.status = w.status;
    return best;
}

OptimizationResult as_mis_two_param(const OptimizationResult &cut) {
    if (cut.mode != Mode::maxcut)
        throw InvalidParameter("expected a maxcut result");
    if (cut.params.d != 3)
        throw InvalidParameter("independent-set values are defined for d = 3");
    OptimizationResult row = cut;
    row.mode = Mode::mis_two_param;
    row.value = ir_from_cut_fraction(cut.value);
    return row;
}

std::vector<OptimizationResult>
optimize_table(int p_max, int d, Mode mode, const OptimizerConfig &cfg,
               const TableSchedule &schedule, const EngineOptions &opts,
               const std::function<void(const OptimizationResult &)> &on_result) {
    if (p_max < 1)
        throw InvalidParameter("p_max must be >= 1, got " + std::to_string(p_max));
    check_budget(p_max, opts);
    if (mode != Mode::maxcut && d != 3)
        throw InvalidParameter("independent-set tables are defined for d = 3");

    std::vector<OptimizationResult> cut_rows;
    for (int p = 1; p <= p_max; ++p) {
        std::vector<Start> starts;
        if (!cut_rows.empty())
            starts.push_back({interpolate_init(cut_rows.back().params), InitStrategy::interpolated});
        cut_rows.push_back(optimize_depth(p, d, Mode::maxcut, std::move(starts),
                                          schedule.random_restarts(p), cfg, opts));
        if (on_result && mode != Mode::mis_three_param)
            on_result(mode == Mode::maxcut ? cut_rows.back() : as_mis_two_param(cut_rows.back()));
    }
    if (mode == Mode::maxcut)
        return cut_rows;
    if (mode == Mode::mis_two_param) {
        std::vector<OptimizationResult> rows;
        for (const auto &r : cut_rows)
            rows.push_back(as_mis_two_param(r));
        return rows;
    }
    return mis_table_from_cut(cut_rows, cfg, schedule, opts, on_result);
}

std::vector<OptimizationResult>
mis_table_from_cut(const std::vector<OptimizationResult> &cut_rows, const OptimizerConfig &cfg,
                   const TableSchedule &schedule, const EngineOptions &opts,
                   const std::function<void(const OptimizationResult &)> &on_result) {
    std::vector<OptimizationResult> rows;
    for (std::size_t i = 0; i < cut_rows.size(); ++i) {
        const OptimizationResult &cut = cut_rows[i];
        const int p = static_cast<int>(i) + 1;
        if (cut.mode != Mode::maxcut || cut.params.p != p)
            throw InvalidParameter("cut rows must be maxcut results for p = 1, 2, ...");
        if (cut.params.d != 3)
            throw InvalidParameter("independent-set tables are defined for d = 3");
        std::vector<Start> starts;
        ParamSet seeded = cut.params;
        seeded.gamma_prime = std::vector<double>(static_cast<std::size_t>(p), 0.0);
        starts.push_back({std::move(seeded), InitStrategy::user});
        if (!rows.empty())
            starts.push_back({interpolate_init(rows.back().params), InitStrategy::interpolated});
        rows.push_back(optimize_depth(p, 3, Mode::mis_three_param, std::move(starts),
                                      schedule.random_restarts(p), cfg, opts));
        if (on_result)
            on_result(rows.back());
    }
    return rows;
}

} // namespace treeqaoa
