#pragma once

#include "io/problem.hpp"
#include "io/report.hpp"

#include <optional>

namespace tatehh {

struct RunOptions {
    std::optional<uint32_t> group_prime; // defaults to the field characteristic
    int max_degree = 6;
    std::optional<std::pair<int, int>> window;
    int r_max = -1; // auto
    bool strict = false;
    bool verbose = false;
};

// commands: hh | tate | ss | d1check | degeneration | subdivision-selftest | selftest
// selftest runs over the built-in corpus and ignores `spec`.
RunReport run_command(const std::string& command, const ProblemSpec* spec,
                      const RunOptions& opt);

} // namespace tatehh
