#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace trispec {

inline constexpr std::string_view kVersion = "1.0.0";

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t value);

/// One record per run. Everything except `timing` is a function of the
/// command line and the inputs.
class RunManifest {
public:
    explicit RunManifest(std::vector<std::string> argv);

    void add_input(std::string_view bytes);
    void set_tolerance(const std::string& name, double value);
    void add_output(const std::string& name);
    void set_exit_code(int code) { exit_code_ = code; }

    [[nodiscard]] nlohmann::json to_json() const;

private:
    std::vector<std::string> argv_;
    std::uint64_t input_hash_;
    bool has_input_ = false;
    std::map<std::string, double> tolerances_;
    std::vector<std::string> outputs_;
    int exit_code_ = 0;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace trispec
