#pragma once

// Run manifest embedded in every CLI output.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace treeqaoa::cli {

class Manifest {
  public:
    Manifest(std::string subcommand, nlohmann::json config, std::uint64_t seed);

    void add_output(const std::string &path);
    void finish();

    /// Hex SHA-256 of the manifest without its timestamps, so reruns with the
    /// same arguments hash identically.
    std::string hash() const;

    nlohmann::json to_json() const;

  private:
    nlohmann::json hashed_part() const;

    std::string subcommand_;
    nlohmann::json config_;
    std::uint64_t seed_;
    std::string started_at_;
    std::string finished_at_;
    std::vector<std::string> outputs_;
};

std::string sha256_hex(const std::string &bytes);

} // namespace treeqaoa::cli
