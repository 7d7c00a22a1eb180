#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace casesweep::cli {

/// What every subcommand reports in JSON mode.
struct CommandReport {
    std::string command;
    nlohmann::json parameters = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::array();
    std::optional<bool> passed; ///< set only by verification commands
    std::int64_t duration_ms = 0;

    friend bool operator==(const CommandReport&, const CommandReport&) = default;
};

inline void to_json(nlohmann::json& j, const CommandReport& r) {
    j = nlohmann::json{{"command", r.command},
                       {"parameters", r.parameters},
                       {"results", r.results},
                       {"duration_ms", r.duration_ms}};
    if (r.passed) j["passed"] = *r.passed;
}

inline void from_json(const nlohmann::json& j, CommandReport& r) {
    j.at("command").get_to(r.command);
    r.parameters = j.at("parameters");
    r.results = j.at("results");
    j.at("duration_ms").get_to(r.duration_ms);
    r.passed = j.contains("passed") ? std::optional<bool>(j.at("passed").get<bool>()) : std::nullopt;
}

} // namespace casesweep::cli
