#include "ss/spectral.hpp"

namespace tatehh {

namespace {

// prefix dimension of the filtration F_s inside the totalized degree n
size_t prefix_dim(const TotalComplex& total, int n, int s) {
    auto it = total.blocks.find(n);
    if (it == total.blocks.end()) return 0;
    size_t d = 0;
    for (const auto& blk : it->second)
        if (blk.s <= s) d = std::max(d, blk.offset + blk.dim);
    return d;
}

} // namespace

size_t SpectralSequence::page_dim(int r, int s, int t) const {
    auto pit = pages.find(std::min(r, r_reported));
    if (pit == pages.end()) return 0;
    auto it = pit->second.find({s, t});
    return it == pit->second.end() ? 0 : it->second;
}

size_t SpectralSequence::e_infty_dim(int s, int t) const {
    auto it = e_infty.find({s, t});
    return it == e_infty.end() ? 0 : it->second;
}

SpectralSequence spectral_sequence(const TateComplexData& tc, int r_max) {
    const ChainComplex& T = tc.total.complex;
    const PrimeField& F = T.field();
    SpectralSequence ss;
    ss.p = tc.p;
    ss.period = tc.period;

    auto csup = tc.coefficients.complex.support();
    if (!csup) {
        ss.warnings.push_back("zero coefficient complex");
        return ss;
    }
    auto [q0, q1] = *csup;
    ss.t_lo = q0;
    ss.t_hi = q1;
    int rstar = (q1 - q0) + 2; // d_r lands outside the t-support from here on
    ss.degeneration_page = rstar;
    int r_top = r_max < 0 ? rstar : std::max(2, r_max);
    if (r_max >= 0 && r_max < rstar)
        ss.warnings.push_back("r_max below the forced degeneration page " +
                              std::to_string(rstar) + "; E_infinity still reported at " +
                              std::to_string(rstar));
    ss.r_reported = std::max(r_top, rstar);
    ss.safe_s_lo = tc.s_lo + rstar;
    ss.safe_s_hi = tc.s_hi - rstar;

    std::map<int, FpMat> dcache;
    auto dof = [&](int n) -> const FpMat& {
        auto it = dcache.find(n);
        if (it != dcache.end()) return it->second;
        return dcache.emplace(n, T.d(n)).first->second;
    };

    // Z_r(s,t) = ker( proj_{> s-r} o d restricted to F_s(T_{s+t}) ), as
    // columns in the full coordinates of degree s+t. The result depends only
    // on the two prefix boundaries, which collapses the cache near the
    // window edges.
    std::map<std::tuple<int, size_t, size_t>, FpMat> zcache;
    auto z_basis = [&](int r, int s, int t) -> const FpMat& {
        int n = s + t;
        size_t full = T.dim(n);
        size_t cols = prefix_dim(tc.total, n, s);
        size_t keep_from = prefix_dim(tc.total, n - 1, s - r); // rows to kill: >= keep_from
        auto key = std::make_tuple(n, cols, keep_from);
        auto it = zcache.find(key);
        if (it != zcache.end()) return it->second;
        const FpMat& d = dof(n);
        // submatrix rows > prefix(s-r), cols <= prefix(s)
        FpMat sub(F, T.dim(n - 1) - keep_from, cols);
        for (size_t j = 0; j < cols; ++j) {
            std::vector<FpMat::Entry> col;
            for (const auto& [i, v] : d.col(j))
                if (i >= keep_from) col.push_back({static_cast<uint32_t>(i - keep_from), v});
            sub.set_col(j, std::move(col));
        }
        FpMat ker = sub.kernel_basis(); // columns live in the F_s prefix
        FpMat embedded(F, full, ker.cols());
        for (size_t j = 0; j < ker.cols(); ++j) embedded.set_col(j, ker.col(j));
        return zcache.emplace(key, std::move(embedded)).first->second;
    };

    auto denominator = [&](int r, int s, int t) {
        // Z_{r-1}(s-1, t+1) + d Z_{r-1}(s+r-1, t-r+2)
        int n = s + t;
        const FpMat& zin = z_basis(r - 1, s - 1, t + 1);
        const FpMat& zsrc = z_basis(r - 1, s + r - 1, t - r + 2);
        FpMat img = dof(n + 1) * zsrc;
        return zin.hstack(img);
    };

    for (int r = 1; r <= ss.r_reported; ++r) {
        std::map<std::pair<int, int>, size_t>& page = ss.pages[r];
        for (int s = tc.s_lo; s <= tc.s_hi; ++s) {
            for (int t = q0; t <= q1; ++t) {
                const FpMat& z = z_basis(r, s, t);
                FpMat den = denominator(r, s, t);
                size_t den_dim = subspace_dim(den);
                size_t dim = z.cols() - den_dim;
                if (dim) page[{s, t}] = dim;
                // rank of d_r out of (s,t): dim E_r - dim ker(d_r on E_r)
                const FpMat& znext = z_basis(r + 1, s, t);
                size_t ker_dim = subspace_sum_dim(znext, den) - den_dim;
                size_t rank = dim - ker_dim;
                if (rank) ss.d_ranks[r][{s, t}] = rank;
            }
        }
    }
    // degeneration sanity: no d_r ranks at or beyond the forced page
    for (int r = rstar; r <= ss.r_reported; ++r)
        if (ss.d_ranks.count(r) && !ss.d_ranks.at(r).empty())
            ss.warnings.push_back("unexpected nonzero differential on page " + std::to_string(r));
    ss.e_infty = ss.pages.at(ss.r_reported);

    // page recurrence: dim E_{r+1} = dim E_r - rank(out) - rank(in), checked
    // on the safe region
    for (int r = 1; r + 1 <= ss.r_reported; ++r) {
        for (int s = ss.safe_s_lo; s <= ss.safe_s_hi; ++s)
            for (int t = q0; t <= q1; ++t) {
                size_t er = ss.page_dim(r, s, t);
                size_t er1 = ss.page_dim(r + 1, s, t);
                size_t out_rank = 0, in_rank = 0;
                auto rit = ss.d_ranks.find(r);
                if (rit != ss.d_ranks.end()) {
                    auto o = rit->second.find({s, t});
                    if (o != rit->second.end()) out_rank = o->second;
                    auto i = rit->second.find({s + r, t - r + 1});
                    if (i != rit->second.end()) in_rank = i->second;
                }
                if (er1 != er - out_rank - in_rank)
                    throw Error("page recurrence fails at r=" + std::to_string(r) + ", (s,t)=(" +
                                std::to_string(s) + "," + std::to_string(t) + ")");
            }
    }

    // E_1 identification: dim E_1(s,t) = dim H_t(coefficients) on the safe region
    for (int s = ss.safe_s_lo; s <= ss.safe_s_hi; ++s)
        for (int t = q0; t <= q1; ++t)
            if (ss.page_dim(1, s, t) != homology_dim(tc.coefficients.complex, t))
                throw Error("E_1 does not match W_s (x)_G H_t at (" + std::to_string(s) + "," +
                            std::to_string(t) + ")");

    // s-periodicity of every page on the safe region
    int per = static_cast<int>(ss.period);
    for (int r = 1; r <= ss.r_reported; ++r)
        for (int s = ss.safe_s_lo; s + per <= ss.safe_s_hi; ++s)
            for (int t = q0; t <= q1; ++t)
                if (ss.page_dim(r, s, t) != ss.page_dim(r, s + per, t))
                    throw Error("page " + std::to_string(r) + " is not s-periodic at (" +
                                std::to_string(s) + "," + std::to_string(t) + ")");
    return ss;
}

ConvergenceReport convergence_check(const SpectralSequence& ss, const TateComplexData& tc) {
    ConvergenceReport rep;
    // total degrees whose antidiagonal lies inside the safe s-region
    int lo = ss.safe_s_lo + ss.t_hi, hi = ss.safe_s_hi + ss.t_lo;
    lo = std::max(lo, tc.safe_lo + 1);
    hi = std::min(hi, tc.safe_hi - 1);
    rep.checked_lo = lo;
    rep.checked_hi = hi;
    for (int n = lo; n <= hi; ++n) {
        size_t total = 0;
        for (int t = ss.t_lo; t <= ss.t_hi; ++t) total += ss.e_infty_dim(n - t, t);
        size_t h = homology_dim(tc.total.complex, n);
        rep.lines.push_back({n, total, h, total == h});
    }
    return rep;
}

} // namespace tatehh
