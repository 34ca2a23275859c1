#pragma once

#include "fp/prime_field.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace tatehh {

// sparse vector over F_p: (index, value) pairs, indices ascending, values nonzero
using SparseVec = std::vector<std::pair<uint32_t, uint32_t>>;

// accumulator for building sparse vectors
class SparseAcc {
public:
    explicit SparseAcc(PrimeField F) : F_(F) {}
    void add(uint32_t idx, uint32_t val) {
        if (!val) return;
        uint32_t& slot = acc_[idx];
        slot = F_.add(slot, val);
        if (!slot) acc_.erase(idx);
    }
    void add_scaled(const SparseVec& v, uint32_t c) {
        if (!c) return;
        for (const auto& [i, x] : v) add(i, F_.mul(x, c));
    }
    SparseVec take() {
        SparseVec out(acc_.begin(), acc_.end());
        acc_.clear();
        return out;
    }

private:
    PrimeField F_;
    std::map<uint32_t, uint32_t> acc_;
};

} // namespace tatehh
