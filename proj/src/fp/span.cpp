#include "fp/span.hpp"

namespace tatehh {

std::vector<uint32_t> IncrementalSpan::residue(std::vector<uint32_t> v) const {
    for (const auto& [pc, row] : rows_) {
        uint32_t c = v[pc];
        if (!c) continue;
        for (const auto& [j, w] : row) v[j] = F_.sub(v[j], F_.mul(c, w));
    }
    return v;
}

bool IncrementalSpan::contains(std::vector<uint32_t> v) const {
    v = residue(std::move(v));
    for (uint32_t x : v)
        if (x) return false;
    return true;
}

bool IncrementalSpan::add(std::vector<uint32_t> v) {
    v = residue(std::move(v));
    uint32_t lead = 0;
    bool found = false;
    for (uint32_t j = 0; j < v.size(); ++j)
        if (v[j]) {
            lead = j;
            found = true;
            break;
        }
    if (!found) return false;
    uint32_t inv = F_.inv(v[lead]);
    std::vector<std::pair<uint32_t, uint32_t>> row;
    for (uint32_t j = lead; j < v.size(); ++j)
        if (v[j]) row.push_back({j, F_.mul(v[j], inv)});
    rows_.emplace(lead, std::move(row));
    return true;
}

} // namespace tatehh
