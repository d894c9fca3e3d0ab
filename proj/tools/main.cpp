// treeqaoa: bound certificates, tables, invariant suites, graph tools and
// sampling experiments.
//
// Exit codes: 0 success, 1 verification failure or numeric error, 2 usage or
// input error, 3 resource limit.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "manifest.hpp"
#include "suites.hpp"
#include "treeqaoa/certificate.hpp"
#include "treeqaoa/errors.hpp"
#include "treeqaoa/graph.hpp"
#include "treeqaoa/graph_algorithms.hpp"
#include "treeqaoa/json_io.hpp"
#include "treeqaoa/schedule.hpp"
#include "treeqaoa/statevector.hpp"

namespace tq = treeqaoa;
using nlohmann::json;

namespace {

enum Exit { ok = 0, failed = 1, usage = 2, resource = 3 };

struct Globals {
    std::uint64_t seed = 1;
    int threads = 0;
    int max_depth = 12;
    bool quiet = false;
};

struct OptArgs {
    int max_iterations = 500;
    double gradient_tolerance = 1e-8;
    double fd_step = 1e-6;
    int small_depth = 4;
    int restarts_small = 10;
    int restarts_large = 4;

    tq::OptimizerConfig config(std::uint64_t seed) const {
        tq::OptimizerConfig cfg;
        cfg.max_iterations = max_iterations;
        cfg.gradient_tolerance = gradient_tolerance;
        cfg.finite_difference_step = fd_step;
        cfg.restart_count = std::max(1, std::max(restarts_small, restarts_large));
        cfg.seed = seed;
        return cfg;
    }
    tq::TableSchedule schedule() const { return {small_depth, restarts_small, restarts_large}; }
    json to_json() const {
        return {{"max_iterations", max_iterations}, {"gradient_tolerance", gradient_tolerance},
                {"fd_step", fd_step},               {"small_depth", small_depth},
                {"restarts_small", restarts_small}, {"restarts_large", restarts_large}};
    }
};

void add_opt_args(CLI::App *cmd, OptArgs &o) {
    cmd->add_option("--max-iterations", o.max_iterations, "L-BFGS iteration cap per start")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--gradient-tolerance", o.gradient_tolerance, "Convergence threshold")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--fd-step", o.fd_step, "Central-difference step")->check(CLI::PositiveNumber);
    cmd->add_option("--small-depth", o.small_depth, "Depths up to this use --restarts-small");
    cmd->add_option("--restarts-small", o.restarts_small, "Random restarts for small depths")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--restarts-large", o.restarts_large,
                    "Random restarts beyond --small-depth (plus the interpolated start)")
        ->check(CLI::NonNegativeNumber);
}

struct GraphArgs {
    std::string file;
    std::string named;
    int size = 0;

    tq::Graph load() const {
        if (file.empty() == named.empty())
            throw tq::InvalidParameter("give exactly one of --file and --named");
        if (!named.empty())
            return tq::named_graph(named, size > 0 ? std::optional<int>(size) : std::nullopt);
        std::ifstream in(file);
        if (!in)
            throw tq::InvalidParameter("cannot open graph file '" + file + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        return tq::parse_graph(ss.str());
    }
    json to_json() const { return {{"file", file}, {"named", named}, {"size", size}}; }
};

void add_graph_args(CLI::App *cmd, GraphArgs &g) {
    cmd->add_option("--file", g.file, "Edge-list file");
    cmd->add_option("--named", g.named,
                    "cycle, path, complete_bipartite, petersen, heawood, pappus, "
                    "moebius_kantor, mcgee, tutte_coxeter");
    cmd->add_option("--size", g.size, "Size for cycle, path and complete_bipartite");
}

void write_text(const std::string &path, const std::string &text) {
    std::ofstream out(path);
    if (!out)
        throw tq::InvalidParameter("cannot write '" + path + "'");
    out << text;
}

json wrap(const tq::cli::Manifest &m, json body) {
    body["manifest"] = m.to_json();
    body["manifest_hash"] = m.hash();
    return body;
}

void emit(const tq::cli::Manifest &m, json body, const std::string &out) {
    const std::string text = wrap(m, std::move(body)).dump(2) + "\n";
    if (out.empty())
        std::cout << text;
    else
        write_text(out, text);
}

tq::EngineOptions engine_options(const Globals &g) {
    tq::EngineOptions opts;
    opts.max_depth = g.max_depth;
    return opts;
}

// ---- bound ----------------------------------------------------------------

struct BoundArgs {
    int p = 0;
    int d = 3;
    std::string mode = "maxcut";
    std::string out;
    OptArgs opt;
};

int cmd_bound(const Globals &g, const BoundArgs &a) {
    if (a.p < 1)
        throw tq::InvalidParameter("--p must be >= 1");
    const tq::Mode mode = tq::parse_mode(a.mode);
    const tq::EngineOptions opts = engine_options(g);
    tq::check_budget(a.p, opts);
    tq::cli::Manifest manifest("bound",
                               {{"p", a.p}, {"d", a.d}, {"mode", a.mode}, {"optimizer", a.opt.to_json()},
                                {"max_depth", g.max_depth}},
                               g.seed);
    if (!a.out.empty())
        manifest.add_output(a.out);

    const auto cfg = a.opt.config(g.seed);
    auto progress = [&](const tq::OptimizationResult &r) {
        if (!g.quiet)
            std::cerr << "  p=" << r.params.p << " " << tq::to_string(r.mode) << " value "
                      << r.value << "\n";
    };
    auto cut_rows = tq::optimize_table(a.p, a.d, tq::Mode::maxcut, cfg, a.opt.schedule(), opts, progress);
    std::optional<tq::OptimizationResult> mis;
    if (mode == tq::Mode::mis_three_param)
        mis = tq::mis_table_from_cut(cut_rows, cfg, a.opt.schedule(), opts, progress).back();
    const tq::BoundCertificate cert = tq::make_certificate(cut_rows.back(), mis, opts);

    json body{{"certificate", tq::to_json(cert)},
              {"optimization", tq::to_json(mis ? *mis : cut_rows.back())}};
    if (mode == tq::Mode::mis_two_param)
        body["optimization"] = tq::to_json(tq::as_mis_two_param(cut_rows.back()));
    manifest.finish();
    emit(manifest, body, a.out);
    std::cout << tq::describe(cert);
    return ok;
}

// ---- table ----------------------------------------------------------------

struct TableArgs {
    int p_max = 0;
    int d = 3;
    std::vector<std::string> modes;
    std::string out = "table.csv";
    std::string plot_out;
    std::string json_out;
    OptArgs opt;
};

int cmd_table(const Globals &g, const TableArgs &a) {
    if (a.p_max < 1)
        throw tq::InvalidParameter("--p-max must be >= 1");
    std::vector<std::string> names;
    for (const auto &m : a.modes)
        if (!m.empty())
            names.push_back(m);
    if (names.empty())
        throw tq::InvalidParameter("--modes needs at least one of maxcut, mis2, mis3");
    std::vector<tq::Mode> modes;
    for (const auto &m : names)
        modes.push_back(tq::parse_mode(m));
    const tq::EngineOptions opts = engine_options(g);
    tq::check_budget(a.p_max, opts);

    const std::string plot_out = a.plot_out.empty() ? a.out + ".plot.csv" : a.plot_out;
    const std::string manifest_out = a.out + ".manifest.json";
    tq::cli::Manifest manifest("table",
                               {{"p_max", a.p_max}, {"d", a.d}, {"modes", a.modes},
                                {"optimizer", a.opt.to_json()}, {"max_depth", g.max_depth}},
                               g.seed);
    manifest.add_output(a.out);
    manifest.add_output(plot_out);
    manifest.add_output(manifest_out);
    if (!a.json_out.empty())
        manifest.add_output(a.json_out);

    struct Row {
        tq::OptimizationResult result;
        double seconds;
    };
    std::vector<Row> rows;
    const auto cfg = a.opt.config(g.seed);
    auto clock = std::chrono::steady_clock::now();
    auto timed = [&](const tq::OptimizationResult &r) {
        const auto now = std::chrono::steady_clock::now();
        rows.push_back({r, std::chrono::duration<double>(now - clock).count()});
        clock = now;
        if (!g.quiet)
            std::cerr << "  p=" << r.params.p << " " << tq::to_string(r.mode) << " value "
                      << r.value << " (" << rows.back().seconds << " s)\n";
    };

    const auto cut_rows = tq::optimize_table(a.p_max, a.d, tq::Mode::maxcut, cfg, a.opt.schedule(), opts, timed);
    std::vector<Row> cut_timed = rows;
    rows.clear();
    std::vector<Row> table;
    for (tq::Mode m : modes) {
        if (m == tq::Mode::maxcut) {
            table.insert(table.end(), cut_timed.begin(), cut_timed.end());
        } else if (m == tq::Mode::mis_two_param) {
            for (const Row &r : cut_timed)
                table.push_back({tq::as_mis_two_param(r.result), r.seconds});
        } else {
            clock = std::chrono::steady_clock::now();
            tq::mis_table_from_cut(cut_rows, cfg, a.opt.schedule(), opts, timed);
            table.insert(table.end(), rows.begin(), rows.end());
            rows.clear();
        }
    }
    manifest.finish();
    const std::string hash = manifest.hash();

    std::ostringstream csv;
    csv.precision(12);
    csv << "p,mode,value,truncated_bound,seconds,evaluations,manifest_hash\n";
    for (const Row &r : table)
        csv << r.result.params.p << ',' << tq::to_string(r.result.mode) << ',' << r.result.value
            << ',' << tq::truncate_bound(r.result.value) << ',' << r.seconds << ','
            << r.result.evaluations << ',' << hash << '\n';
    write_text(a.out, csv.str());

    std::ostringstream plot;
    plot.precision(12);
    plot << "series,p,inv_p,value,label,manifest_hash\n";
    for (const Row &r : table)
        plot << tq::to_string(r.result.mode) << ',' << r.result.params.p << ','
             << 1.0 / r.result.params.p << ',' << r.result.value << ",computed," << hash << '\n';
    const std::pair<double, const char *> refs[] = {
        {0.8918, "reference_cut_tpm"},
        {0.912, "reference_cut_limit_lower_bound"},
        {0.9351, "reference_cut_random_cubic_upper_bound"},
        {0.4453, "reference_independence_ratio"},
    };
    for (const auto &[v, label] : refs)
        plot << "reference,,," << v << ',' << label << ',' << hash << '\n';
    write_text(plot_out, plot.str());

    write_text(manifest_out, wrap(manifest, json::object()).dump(2) + "\n");
    if (!a.json_out.empty()) {
        json results = json::array();
        for (const Row &r : table)
            results.push_back(tq::to_json(r.result));
        write_text(a.json_out, wrap(manifest, {{"results", results}}).dump(2) + "\n");
    }
    std::cout << csv.str();
    return ok;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
    tq::cli::SuiteSpec spec;
    std::string out;
};

int cmd_verify(const Globals &g, VerifyArgs a) {
    a.spec.seed = g.seed;
    tq::cli::Manifest manifest("verify",
                               {{"suite", a.spec.suite}, {"cases", a.spec.cases}, {"d", a.spec.d},
                                {"p", a.spec.p}},
                               g.seed);
    if (!a.out.empty())
        manifest.add_output(a.out);
    const auto checks = tq::cli::run_suite(a.spec);
    bool all = true;
    json list = json::array();
    for (const auto &c : checks) {
        all = all && c.passed();
        list.push_back(tq::cli::to_json(c));
        std::cerr << (c.passed() ? "PASS " : "FAIL ") << c.name << "  max error " << c.max_error
                  << " (tolerance " << c.tolerance << ", " << c.cases << " cases)\n";
    }
    manifest.finish();
    emit(manifest, {{"suite", a.spec.suite}, {"passed", all}, {"checks", list}}, a.out);
    return all ? ok : failed;
}

// ---- graph ----------------------------------------------------------------

struct GraphCmdArgs {
    GraphArgs graph;
    std::string action;
    int brute_cap = 28;
};

int cmd_graph(const Globals &g, const GraphCmdArgs &a) {
    const tq::Graph graph = a.graph.load();
    tq::cli::Manifest manifest("graph", {{"graph", a.graph.to_json()}, {"action", a.action}}, g.seed);
    json body{{"vertex_count", graph.vertex_count()}, {"edge_count", graph.edge_count()}};
    if (auto d = graph.regular_degree())
        body["regular_degree"] = *d;
    else
        body["regular_degree"] = nullptr;

    if (a.action == "girth") {
        const auto gth = tq::girth(graph);
        body["girth"] = gth ? json(*gth) : json(nullptr);
    } else if (a.action == "color") {
        const auto colors = tq::edge_coloring(graph);
        body["colors"] = colors;
        body["color_count"] = tq::color_count(colors);
        body["max_degree"] = graph.max_degree();
        body["proper"] = tq::is_proper_edge_coloring(graph, colors);
    } else if (a.action == "maxdepth") {
        const auto depth = tq::max_certified_depth(graph);
        body["max_certified_depth"] = depth ? json(*depth) : json("unbounded");
    } else if (a.action == "brute") {
        const auto best = tq::brute_force_maxcut(graph, a.brute_cap);
        body["max_cut"] = best.value;
        body["cut_fraction"] =
            graph.edge_count() ? static_cast<double>(best.value) / graph.edge_count() : 0.0;
        std::string bits;
        for (auto b : best.assignment)
            bits.push_back(b ? '1' : '0');
        body["assignment"] = bits;
    } else {
        throw tq::InvalidParameter("unknown action '" + a.action + "'");
    }
    manifest.finish();
    emit(manifest, body, "");
    return ok;
}

// ---- sample ---------------------------------------------------------------

struct SampleArgs {
    GraphArgs graph;
    int p = 0;
    std::string params_file;
    int repetitions = 0;
    int experiments = 1;
    int qubit_cap = tq::kDefaultQubitCap;
    std::string out;
    OptArgs opt;
};

int cmd_sample(const Globals &g, const SampleArgs &a) {
    if (a.repetitions < 1)
        throw tq::InvalidParameter("--repetitions must be >= 1");
    if (a.experiments < 1)
        throw tq::InvalidParameter("--experiments must be >= 1");
    const tq::Graph graph = a.graph.load();
    const auto d = graph.regular_degree();
    if (!d || *d < 2)
        throw tq::InvalidParameter("sampling needs a d-regular graph with d >= 2");
    const tq::EngineOptions opts = engine_options(g);

    tq::ParamSet params;
    std::string source;
    if (!a.params_file.empty()) {
        std::ifstream in(a.params_file);
        if (!in)
            throw tq::InvalidParameter("cannot open '" + a.params_file + "'");
        json doc;
        try {
            doc = json::parse(in);
        } catch (const json::parse_error &e) {
            throw tq::ParseError(0, std::string("parameter file: ") + e.what());
        }
        params = tq::params_from_json(doc);
        if (params.gamma_prime)
            throw tq::InvalidParameter("sampling uses the cut driver; drop gamma_prime");
        if (a.p != 0 && a.p != params.p)
            throw tq::InvalidParameter("--p disagrees with the parameter file");
        params.d = *d;
        source = "file";
    } else {
        if (a.p < 1)
            throw tq::InvalidParameter("--p must be >= 1 when no --params file is given");
        params = tq::optimize_table(a.p, *d, tq::Mode::maxcut, a.opt.config(g.seed),
                                    a.opt.schedule(), opts)
                     .back()
                     .params;
        source = "optimized";
    }

    tq::cli::Manifest manifest("sample",
                               {{"graph", a.graph.to_json()}, {"p", params.p},
                                {"params", a.params_file}, {"repetitions", a.repetitions},
                                {"experiments", a.experiments}, {"qubit_cap", a.qubit_cap},
                                {"optimizer", a.opt.to_json()}},
                               g.seed);
    if (!a.out.empty())
        manifest.add_output(a.out);

    const double c_edge = tq::edge_expectation(params, opts).c_edge;
    const tq::Statevector state = tq::qaoa_state(graph, params, a.qubit_cap);
    json reports = json::array();
    int successes = 0;
    std::optional<std::string> warning;
    for (int e = 0; e < a.experiments; ++e) {
        const auto rep = tq::sampling_experiment(graph, state, params.p, c_edge, a.repetitions,
                                                 g.seed + static_cast<std::uint64_t>(e));
        successes += rep.success;
        warning = rep.warning;
        reports.push_back(tq::to_json(rep));
    }
    if (warning)
        std::cerr << "warning: " << *warning << "\n";
    manifest.finish();
    const double fraction = static_cast<double>(successes) / a.experiments;
    emit(manifest,
         {{"params", tq::to_json(params)},
          {"params_source", source},
          {"threshold", reports[0]["threshold"]},
          {"success_fraction", fraction},
          {"reports", reports}},
         a.out);
    std::cerr << "threshold " << reports[0]["threshold"].get<int>() << ", success fraction "
              << fraction << " over " << a.experiments << " experiment(s)\n";
    return ok;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Certified QAOA lower bounds for MaxCut and independent sets on "
                 "large-girth regular graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "Flat key = value configuration file");
    app.option_defaults()->always_capture_default();

    Globals g;
    app.add_option("--seed", g.seed, "Seed for every random choice");
    app.add_option("--threads", g.threads, "Worker threads (0 = OpenMP default)")
        ->envname("TREEQAOA_THREADS")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--max-depth", g.max_depth,
                   "Largest p whose 4^p message is allowed (12 is about 268 MB)")
        ->check(CLI::PositiveNumber);
    app.add_flag("--quiet", g.quiet, "No progress on stderr");

    BoundArgs bound;
    auto *b = app.add_subcommand("bound", "Optimize depth p and write a bound certificate");
    b->add_option("--p", bound.p, "QAOA depth")->required();
    b->add_option("--d", bound.d, "Degree");
    b->add_option("--mode", bound.mode, "maxcut, mis2 or mis3");
    b->add_option("--out", bound.out, "Certificate JSON path (stdout if empty)");
    add_opt_args(b, bound.opt);

    TableArgs table;
    auto *t = app.add_subcommand("table", "Optimize p = 1..p_max and write CSV tables");
    t->add_option("--p-max", table.p_max, "Largest depth")->required();
    t->add_option("--d", table.d, "Degree");
    t->add_option("--modes", table.modes, "Any of maxcut, mis2, mis3")->delimiter(',');
    t->add_option("--out", table.out, "Table CSV path");
    t->add_option("--plot-out", table.plot_out, "Plot-data CSV path (default <out>.plot.csv)");
    t->add_option("--json-out", table.json_out, "Optimization results as JSON");
    add_opt_args(t, table.opt);

    VerifyArgs verify;
    auto *v = app.add_subcommand("verify", "Run an invariant suite");
    v->add_option("--suite", verify.spec.suite, "oracle, symmetry or identity")->required();
    v->add_option("--cases", verify.spec.cases, "Random cases per check");
    v->add_option("--d", verify.spec.d, "oracle: restrict to this degree");
    v->add_option("--p", verify.spec.p, "oracle: restrict to this depth");
    v->add_option("--out", verify.out, "Report JSON path (stdout if empty)");

    GraphCmdArgs graph;
    auto *gr = app.add_subcommand("graph", "Girth, edge colouring, certified depth, exact max cut");
    add_graph_args(gr, graph.graph);
    gr->add_option("--action", graph.action, "girth, color, maxdepth or brute")->required();
    gr->add_option("--brute-cap", graph.brute_cap, "Vertex cap for brute");

    SampleArgs sample;
    auto *s = app.add_subcommand("sample", "Best-of-k sampled cuts against the certified threshold");
    add_graph_args(s, sample.graph);
    s->add_option("--p", sample.p, "Depth (optimized when --params is absent)");
    s->add_option("--params", sample.params_file, "JSON with p, d, gamma, beta");
    s->add_option("--repetitions", sample.repetitions, "Samples per experiment")->required();
    s->add_option("--experiments", sample.experiments, "Independent experiments");
    s->add_option("--qubit-cap", sample.qubit_cap, "Largest statevector");
    s->add_option("--out", sample.out, "Report JSON path (stdout if empty)");
    add_opt_args(s, sample.opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return usage;
    }

    if (g.threads > 0)
        omp_set_num_threads(g.threads);

    try {
        if (*b)
            return cmd_bound(g, bound);
        if (*t)
            return cmd_table(g, table);
        if (*v)
            return cmd_verify(g, verify);
        if (*gr)
            return cmd_graph(g, graph);
        if (*s)
            return cmd_sample(g, sample);
    } catch (const tq::ResourceError &e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return resource;
    } catch (const tq::ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return usage;
    } catch (const tq::InvalidParameter &e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const tq::NumericError &e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return failed;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return failed;
    }
    return usage;
}
