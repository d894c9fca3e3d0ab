#pragma once

// Invariant suites behind `treeqaoa verify`.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace treeqaoa::cli {

struct Check {
    std::string name;
    int cases = 0;
    double max_error = 0.0;
    double tolerance = 0.0;
    nlohmann::json worst; ///< inputs of the worst case
    bool passed() const { return max_error <= tolerance; }
};

struct SuiteSpec {
    std::string suite; ///< oracle | symmetry | identity
    std::uint64_t seed = 1;
    int cases = 20;
    /// oracle only: restrict to one (d, p); 0 means all default pairs.
    int d = 0;
    int p = 0;
};

/// Throws InvalidParameter for an unknown suite name.
std::vector<Check> run_suite(const SuiteSpec &spec);

nlohmann::json to_json(const Check &c);

} // namespace treeqaoa::cli
