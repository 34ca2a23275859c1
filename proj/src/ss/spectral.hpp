#pragma once

#include "tate/tate.hpp"

namespace tatehh {

// Spectral sequence of the W-degree filtration of a Tate complex, computed
// by exact subspace chains: Z_r(s,t) = F_s ∩ d^{-1} F_{s-r} in total degree
// s + t, E_r = Z_r / (Z_{r-1}(s-1,t+1) + d Z_{r-1}(s+r-1,t-r+2)).
struct SpectralSequence {
    size_t p = 2;
    size_t period = 1;
    int degeneration_page = 2; // all differentials vanish from this page on
    int r_reported = 2;        // pages stored: r = 1 .. r_reported
    std::map<int, std::map<std::pair<int, int>, size_t>> pages;   // r -> (s,t) -> dim
    std::map<int, std::map<std::pair<int, int>, size_t>> d_ranks; // r -> (s,t) -> rank out
    std::map<std::pair<int, int>, size_t> e_infty;
    int safe_s_lo = 0, safe_s_hi = 0; // spots trusted (window edges excluded)
    int t_lo = 0, t_hi = 0;
    std::vector<std::string> warnings;

    size_t page_dim(int r, int s, int t) const;
    size_t e_infty_dim(int s, int t) const;
};

// r_max < 0 means: compute up to the forced degeneration page
SpectralSequence spectral_sequence(const TateComplexData& tc, int r_max = -1);

struct ConvergenceReport {
    struct Line {
        int degree;
        size_t e_infty_total;
        size_t homology_dim;
        bool ok;
    };
    std::vector<Line> lines;
    int checked_lo = 0, checked_hi = 0;
    bool ok() const {
        for (const auto& l : lines)
            if (!l.ok) return false;
        return true;
    }
};
// E_infinity antidiagonal totals against the homology of the Tate complex
ConvergenceReport convergence_check(const SpectralSequence& ss, const TateComplexData& tc);

} // namespace tatehh
