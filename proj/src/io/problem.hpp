#pragma once

#include "dg/resolution.hpp"

#include <optional>
#include <string>

namespace tatehh {

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

// A parsed and fully validated problem: the algebra and module satisfy
// every axiom, and the resolution (when present) is verified against the
// algebra.
struct ProblemSpec {
    std::string name;
    uint32_t characteristic = 2;
    bool expected_smooth = false;
    DgAlgebra algebra;
    DgBimodule module;
    bool module_is_algebra = true;
    std::optional<VerifiedResolution> resolution;
    std::string digest; // of the canonicalized input text
};

// parse the JSON input schema; throws ParseError listing every violation
ProblemSpec parse_problem(const std::string& json_text);
ProblemSpec parse_problem_file(const std::string& path);

// FNV-1a of a string, hex-encoded (used for input digests)
std::string fnv1a_hex(const std::string& data);

} // namespace tatehh
