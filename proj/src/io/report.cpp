#include "io/report.hpp"

#include <sstream>

namespace tatehh {

std::string RunReport::json_text() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["input"] = input_name;
    j["digest"] = input_digest;
    j["params"] = params;
    j["result"] = result;
    j["notes"] = notes;
    j["exit_code"] = exit_code;
    j["elapsed_ms"] = elapsed_ms;
    return j.dump(2) + "\n";
}

namespace {

void render(std::ostringstream& os, const nlohmann::ordered_json& j, int indent) {
    std::string pad(indent, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || (v.is_array() && !v.empty() && v[0].is_structured())) {
                os << pad << k << ":\n";
                render(os, v, indent + 2);
            } else {
                os << pad << k << ": " << v.dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_structured()) {
                render(os, v, indent + 2);
            } else {
                os << pad << "- " << v.dump() << "\n";
            }
        }
    } else {
        os << pad << j.dump() << "\n";
    }
}

} // namespace

std::string RunReport::text() const {
    std::ostringstream os;
    os << "== " << command << " : " << input_name << " (digest " << input_digest << ") ==\n";
    if (!params.empty()) {
        os << "parameters:\n";
        render(os, params, 2);
    }
    render(os, result, 0);
    for (const auto& n : notes) os << "note: " << n << "\n";
    os << "elapsed: " << elapsed_ms << " ms\n";
    return os.str();
}

} // namespace tatehh
