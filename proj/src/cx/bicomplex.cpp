#include "cx/bicomplex.hpp"

namespace tatehh {

Bicomplex::Bicomplex(PrimeField F, std::map<Key, size_t> dims, std::map<Key, FpMat> dh,
                     std::map<Key, FpMat> dv, bool verify)
    : F_(F), dims_(std::move(dims)), dh_(std::move(dh)), dv_(std::move(dv)) {
    for (auto it = dims_.begin(); it != dims_.end();)
        it = it->second == 0 ? dims_.erase(it) : std::next(it);
    for (const auto& [k, m] : dh_) {
        auto [s, t] = k;
        if (m.rows() != dim(s - 1, t) || m.cols() != dim(s, t))
            throw Error("bicomplex horizontal map shape mismatch at (" + std::to_string(s) + "," +
                        std::to_string(t) + ")");
    }
    for (const auto& [k, m] : dv_) {
        auto [s, t] = k;
        if (m.rows() != dim(s, t - 1) || m.cols() != dim(s, t))
            throw Error("bicomplex vertical map shape mismatch at (" + std::to_string(s) + "," +
                        std::to_string(t) + ")");
    }
    if (verify) {
        for (const auto& [k, d] : dims_) {
            auto [s, t] = k;
            if (!(this->dh(s - 1, t) * this->dh(s, t)).is_zero())
                throw Error("bicomplex: d_h^2 != 0 at (" + std::to_string(s) + "," +
                            std::to_string(t) + ")");
            if (!(this->dv(s, t - 1) * this->dv(s, t)).is_zero())
                throw Error("bicomplex: d_v^2 != 0 at (" + std::to_string(s) + "," +
                            std::to_string(t) + ")");
            if (this->dh(s, t - 1) * this->dv(s, t) != this->dv(s - 1, t) * this->dh(s, t))
                throw Error("bicomplex: d_h and d_v do not commute at (" + std::to_string(s) +
                            "," + std::to_string(t) + ")");
        }
    }
}

size_t Bicomplex::dim(int s, int t) const {
    auto it = dims_.find({s, t});
    return it == dims_.end() ? 0 : it->second;
}

FpMat Bicomplex::dh(int s, int t) const {
    auto it = dh_.find({s, t});
    if (it != dh_.end()) return it->second;
    return FpMat(F_, dim(s - 1, t), dim(s, t));
}

FpMat Bicomplex::dv(int s, int t) const {
    auto it = dv_.find({s, t});
    if (it != dv_.end()) return it->second;
    return FpMat(F_, dim(s, t - 1), dim(s, t));
}

void Bicomplex::declare_unbounded_s(std::optional<int> cert) {
    unbounded_s_ = true;
    s_period_ = cert;
}

const TotalBlock* TotalComplex::find_block(int n, int s) const {
    auto it = blocks.find(n);
    if (it == blocks.end()) return nullptr;
    for (const auto& b : it->second)
        if (b.s == s) return &b;
    return nullptr;
}

TotalComplex totalize(const Bicomplex& b, TotalConvention conv, int lo, int hi) {
    if (lo > hi) throw Error("totalize: empty window");
    if (b.unbounded_s() && !b.s_period().has_value()) {
        if (conv == TotalConvention::Sum)
            throw Error("unbounded antidiagonal: Sum convention on an s-unbounded bicomplex "
                        "requires a periodicity certificate");
        if (conv == TotalConvention::TateMixed)
            throw Error("unbounded antidiagonal: mixed convention requires a periodicity "
                        "certificate beyond the stored window");
        // Prod of finitely many stored cells is still computable on the
        // stored support; fall through.
    }

    const PrimeField& F = b.field();
    TotalComplex out{ChainComplex(GradedSpace(F), {}, false), {}};

    std::map<int, std::vector<TotalBlock>> blocks;
    for (int n = lo; n <= hi; ++n) {
        std::vector<TotalBlock> bl;
        size_t off = 0;
        for (const auto& [k, d] : b.dims()) {
            auto [s, t] = k;
            if (s + t != n) continue;
            bl.push_back(TotalBlock{s, t, off, d});
            off += d;
        }
        if (!bl.empty()) blocks.emplace(n, std::move(bl));
    }

    GradedSpace space(F);
    for (const auto& [n, bl] : blocks) {
        size_t d = 0;
        for (const auto& blk : bl) d += blk.dim;
        space.dims[n] = d;
    }

    std::map<int, FpMat> diff;
    for (const auto& [n, bl] : blocks) {
        if (blocks.find(n - 1) == blocks.end()) continue;
        size_t rows = space.dim(n - 1);
        FpMat m(F, rows, space.dim(n));
        const auto& target = blocks.at(n - 1);
        auto target_block = [&](int s) -> const TotalBlock* {
            for (const auto& tb : target)
                if (tb.s == s) return &tb;
            return nullptr;
        };
        for (const auto& blk : bl) {
            // horizontal into (s-1, t)
            if (const TotalBlock* tb = target_block(blk.s - 1)) {
                FpMat h = b.dh(blk.s, blk.t);
                for (size_t j = 0; j < h.cols(); ++j)
                    for (const auto& [i, v] : h.col(j))
                        m.add_at(tb->offset + i, blk.offset + j, v);
            }
            // vertical into (s, t-1) with the folded sign (-1)^s
            if (const TotalBlock* tb = target_block(blk.s)) {
                FpMat v = b.dv(blk.s, blk.t);
                uint32_t sgn = F.sign(blk.s);
                for (size_t j = 0; j < v.cols(); ++j)
                    for (const auto& [i, w] : v.col(j))
                        m.add_at(tb->offset + i, blk.offset + j,
                                 static_cast<long long>(F.mul(sgn, w)));
            }
        }
        if (!m.is_zero()) diff.emplace(n, std::move(m));
    }

    out.complex = ChainComplex(std::move(space), std::move(diff), true);
    out.blocks = std::move(blocks);
    return out;
}

} // namespace tatehh
