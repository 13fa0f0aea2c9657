#include "trispec/manifest.hpp"

#include <cstdio>

namespace trispec {

namespace {
constexpr std::uint64_t kOffset = 14695981039346656037ULL;
constexpr std::uint64_t kPrime = 1099511628211ULL;
}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = kOffset;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= kPrime;
    }
    return h;
}

std::string hex64(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
    return buf;
}

RunManifest::RunManifest(std::vector<std::string> argv)
    : argv_(std::move(argv)), input_hash_(kOffset), start_(std::chrono::steady_clock::now()) {}

void RunManifest::add_input(std::string_view bytes) {
    // Chain: hash of the previous hash's hex digits followed by the new bytes.
    std::string chained = hex64(input_hash_);
    chained.append(bytes);
    input_hash_ = fnv1a64(chained);
    has_input_ = true;
}

void RunManifest::set_tolerance(const std::string& name, double value) { tolerances_[name] = value; }

void RunManifest::add_output(const std::string& name) { outputs_.push_back(name); }

nlohmann::json RunManifest::to_json() const {
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    nlohmann::json j;
    j["manifest"] = "trispec-run";
    j["version"] = std::string(kVersion);
    j["command_line"] = argv_;
    j["input_hash"] = has_input_ ? nlohmann::json("fnv1a64:" + hex64(input_hash_)) : nlohmann::json(nullptr);
    j["tolerances"] = tolerances_;
    j["outputs"] = outputs_;
    j["exit_code"] = exit_code_;
    j["timing"] = {{"wall_seconds", elapsed}};
    return j;
}

}  // namespace trispec
