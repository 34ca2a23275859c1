#pragma once

#include "cx/chain.hpp"

#include <map>
#include <optional>
#include <vector>

namespace tatehh {

// Doubly graded space with horizontal d_h : (s,t) -> (s-1,t) and vertical
// d_v : (s,t) -> (s,t-1). Stored maps square to zero and commute; the sign
// (-1)^s making them anticommute is folded into the vertical maps when
// totalizing.
class Bicomplex {
public:
    using Key = std::pair<int, int>; // (s, t)

    Bicomplex(PrimeField F, std::map<Key, size_t> dims, std::map<Key, FpMat> dh,
              std::map<Key, FpMat> dv, bool verify = true);

    const PrimeField& field() const { return F_; }
    size_t dim(int s, int t) const;
    FpMat dh(int s, int t) const;
    FpMat dv(int s, int t) const;
    const std::map<Key, size_t>& dims() const { return dims_; }

    // stored support is always finite; a bicomplex may declare that it
    // continues beyond the stored window in the s direction, in which case
    // Sum-totalization demands an s-periodicity certificate.
    void declare_unbounded_s(std::optional<int> periodicity_certificate);
    bool unbounded_s() const { return unbounded_s_; }
    std::optional<int> s_period() const { return s_period_; }

private:
    PrimeField F_;
    std::map<Key, size_t> dims_;
    std::map<Key, FpMat> dh_, dv_;
    bool unbounded_s_ = false;
    std::optional<int> s_period_;
};

enum class TotalConvention { Sum, Prod, TateMixed };

struct TotalBlock {
    int s, t;
    size_t offset, dim;
};

// Totalization of a bicomplex restricted to a window of total degrees,
// with per-degree block bookkeeping (ascending s within each degree).
struct TotalComplex {
    ChainComplex complex;
    std::map<int, std::vector<TotalBlock>> blocks;

    const TotalBlock* find_block(int n, int s) const;
    // assemble a degreewise map from per-block components: block (s,t) of
    // degree n maps by `component(s, t)` into block (s, t) of the target
    // (same shape); used for levelwise-defined operators.
};

TotalComplex totalize(const Bicomplex& b, TotalConvention conv, int lo, int hi);

} // namespace tatehh
