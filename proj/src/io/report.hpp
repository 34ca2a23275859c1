#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace tatehh {

// Machine- and human-readable run report. The JSON rendering has stable key
// order; `elapsed_ms` is the only nondeterministic field.
struct RunReport {
    std::string command;
    std::string input_name;
    std::string input_digest;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    nlohmann::ordered_json result = nlohmann::ordered_json::object();
    std::vector<std::string> notes;
    int exit_code = 0;
    double elapsed_ms = 0.0;

    std::string json_text() const;
    std::string text() const;
};

} // namespace tatehh
