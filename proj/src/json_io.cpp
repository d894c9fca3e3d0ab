#include "treeqaoa/json_io.hpp"

#include <string>

#include "treeqaoa/errors.hpp"
#include "treeqaoa/engine.hpp"

namespace treeqaoa {

using nlohmann::json;

json to_json(const ParamSet &params) {
    json j{{"p", params.p}, {"d", params.d}, {"gamma", params.gamma}, {"beta", params.beta}};
    if (params.gamma_prime)
        j["gamma_prime"] = *params.gamma_prime;
    return j;
}

json to_json(const OptimizationResult &r) {
    json j{{"p", r.params.p},
           {"d", r.params.d},
           {"mode", to_string(r.mode)},
           {"gamma", r.params.gamma},
           {"beta", r.params.beta},
           {"value", r.value},
           {"truncated_bound", truncate_bound(r.value)},
           {"seed", r.seed},
           {"engine_version", kEngineVersion},
           {"gradient_norm", r.gradient_norm},
           {"evaluations", r.evaluations},
           {"iterations", r.iterations},
           {"restarts_used", r.restarts_used},
           {"best_restart", r.best_restart},
           {"init_strategy", to_string(r.init_strategy)},
           {"status", to_string(r.status)}};
    if (r.params.gamma_prime)
        j["gamma_prime"] = *r.params.gamma_prime;
    return j;
}

json to_json(const BoundCertificate &c) {
    json j{{"p", c.p},
           {"d", c.d},
           {"girth_requirement", c.girth_requirement},
           {"c_edge", c.c_edge},
           {"c_edge_bound", c.c_edge_bound},
           {"m_g_bound", c.m_g_bound},
           {"params", to_json(c.params)},
           {"provenance", {{"engine_version", c.engine_version}, {"seed", c.seed}}}};
    if (c.ir_two_param_bound)
        j["ir_two_param_bound"] = *c.ir_two_param_bound;
    if (c.ir_three_param_bound)
        j["ir_three_param_bound"] = *c.ir_three_param_bound;
    if (c.mis_params)
        j["mis_params"] = to_json(*c.mis_params);
    return j;
}

json to_json(const SampleReport &r) {
    json j{{"seed", r.seed},
           {"p", r.p},
           {"samples", r.samples},
           {"edges", r.edges},
           {"best_cut", r.best_cut},
           {"cuts", r.cuts},
           {"best_bitstring", r.best_bitstring},
           {"c_edge", r.c_edge},
           {"threshold", r.threshold},
           {"success", r.success},
           {"guarantee_applies", r.guarantee_applies}};
    if (r.warning)
        j["warning"] = *r.warning;
    return j;
}

namespace {

std::vector<double> angles(const json &doc, const char *key) {
    if (!doc.contains(key) || !doc[key].is_array())
        throw ParseError(0, std::string("parameter document lacks an array '") + key + "'");
    std::vector<double> out;
    for (const auto &v : doc[key]) {
        if (!v.is_number())
            throw ParseError(0, std::string("'") + key + "' holds a non-number");
        out.push_back(v.get<double>());
    }
    return out;
}

int integer(const json &doc, const char *key) {
    if (!doc.contains(key) || !doc[key].is_number_integer())
        throw ParseError(0, std::string("parameter document lacks an integer '") + key + "'");
    return doc[key].get<int>();
}

} // namespace

ParamSet params_from_json(const json &doc) {
    const json &src = doc.contains("params") ? doc["params"] : doc;
    if (!src.is_object())
        throw ParseError(0, "parameter document is not an object");
    ParamSet ps;
    ps.p = integer(src, "p");
    ps.d = integer(src, "d");
    ps.gamma = angles(src, "gamma");
    ps.beta = angles(src, "beta");
    if (src.contains("gamma_prime"))
        ps.gamma_prime = angles(src, "gamma_prime");
    ps.validate();
    return ps;
}

} // namespace treeqaoa
