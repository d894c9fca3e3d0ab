#include "manifest.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "treeqaoa/engine.hpp"

namespace treeqaoa::cli {

namespace {

std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

} // namespace

std::string sha256_hex(const std::string &bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i)
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return os.str();
}

Manifest::Manifest(std::string subcommand, nlohmann::json config, std::uint64_t seed)
    : subcommand_(std::move(subcommand)), config_(std::move(config)), seed_(seed),
      started_at_(utc_now()) {}

void Manifest::add_output(const std::string &path) { outputs_.push_back(path); }

void Manifest::finish() { finished_at_ = utc_now(); }

nlohmann::json Manifest::hashed_part() const {
    return {{"subcommand", subcommand_},
            {"config", config_},
            {"seed", seed_},
            {"engine_version", kEngineVersion},
            {"outputs", outputs_}};
}

std::string Manifest::hash() const { return sha256_hex(hashed_part().dump()); }

nlohmann::json Manifest::to_json() const {
    nlohmann::json j = hashed_part();
    j["started_at"] = started_at_;
    j["finished_at"] = finished_at_.empty() ? utc_now() : finished_at_;
    return j;
}

} // namespace treeqaoa::cli
