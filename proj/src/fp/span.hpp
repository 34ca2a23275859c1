#pragma once

#include "fp/matrix.hpp"

#include <map>
#include <vector>

namespace tatehh {

// Incrementally maintained row space in reduced form; used for building
// bases one candidate vector at a time without re-eliminating.
class IncrementalSpan {
public:
    explicit IncrementalSpan(PrimeField F, size_t ambient) : F_(F), ambient_(ambient) {}

    size_t rank() const { return rows_.size(); }
    size_t ambient() const { return ambient_; }

    // reduce v against the current rows; returns the residue (dense)
    std::vector<uint32_t> residue(std::vector<uint32_t> v) const;
    bool contains(std::vector<uint32_t> v) const;
    // add v to the span; returns true if the rank grew
    bool add(std::vector<uint32_t> v);

private:
    PrimeField F_;
    size_t ambient_;
    // pivot column -> reduced sparse row (cols ascending, leading col = key)
    std::map<uint32_t, std::vector<std::pair<uint32_t, uint32_t>>> rows_;
};

} // namespace tatehh
