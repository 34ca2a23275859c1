#include "dg/tuple_basis.hpp"

#include <algorithm>

namespace tatehh {

TupleBasis::TupleBasis(std::vector<std::vector<int>> factor_degrees)
    : degs_(std::move(factor_degrees)) {
    radix_.resize(degs_.size());
    stride_.resize(degs_.size());
    count_ = 1;
    for (size_t j = 0; j < degs_.size(); ++j) radix_[j] = degs_[j].size();
    for (size_t j = degs_.size(); j-- > 0;) {
        stride_[j] = count_;
        count_ *= radix_[j];
    }
    if (degs_.empty()) count_ = 1;
    for (size_t r = 0; r < count_; ++r) by_degree_[degree_of_linear(r)].push_back(r);
}

size_t TupleBasis::dim(int degree) const {
    auto it = by_degree_.find(degree);
    return it == by_degree_.end() ? 0 : it->second.size();
}

std::vector<uint32_t> TupleBasis::tuple(size_t linear) const {
    std::vector<uint32_t> t(degs_.size());
    for (size_t j = 0; j < degs_.size(); ++j) {
        t[j] = static_cast<uint32_t>(linear / stride_[j]);
        linear %= stride_[j];
    }
    return t;
}

size_t TupleBasis::linear(const std::vector<uint32_t>& t) const {
    size_t r = 0;
    for (size_t j = 0; j < degs_.size(); ++j) r += t[j] * stride_[j];
    return r;
}

int TupleBasis::degree_of_linear(size_t linear) const {
    int d = 0;
    for (size_t j = 0; j < degs_.size(); ++j) {
        size_t i = linear / stride_[j];
        linear %= stride_[j];
        d += degs_[j][i];
    }
    return d;
}

int TupleBasis::degree_of(const std::vector<uint32_t>& t) const {
    int d = 0;
    for (size_t j = 0; j < degs_.size(); ++j) d += degs_[j][t[j]];
    return d;
}

std::pair<int, size_t> TupleBasis::locate(size_t linear) const {
    int d = degree_of_linear(linear);
    const auto& v = by_degree_.at(d);
    auto it = std::lower_bound(v.begin(), v.end(), linear);
    return {d, static_cast<size_t>(it - v.begin())};
}

size_t TupleBasis::index_in_degree(const std::vector<uint32_t>& t) const {
    return locate(linear(t)).second;
}

TupleComplex tensor_complex(PrimeField F, const std::vector<TensorFactor>& factors,
                            bool with_labels) {
    std::vector<std::vector<int>> degs;
    degs.reserve(factors.size());
    for (const auto& f : factors) degs.push_back(f.degrees);
    TupleBasis basis(std::move(degs));

    GradedSpace space(F);
    for (const auto& [d, v] : basis.by_degree()) space.dims[d] = v.size();
    if (with_labels) {
        for (const auto& [d, v] : basis.by_degree()) {
            std::vector<std::string> ls;
            ls.reserve(v.size());
            for (size_t r : v) {
                auto t = basis.tuple(r);
                std::string s;
                for (size_t j = 0; j < t.size(); ++j) {
                    if (j) s += "|";
                    s += (j < factors.size() && t[j] < factors[j].labels.size())
                             ? factors[j].labels[t[j]]
                             : std::to_string(t[j]);
                }
                ls.push_back(s);
            }
            space.labels[d] = std::move(ls);
        }
    }

    // Koszul differential: sum over slots with sign (-1)^{deg of earlier slots}
    std::map<int, FpMat> diff;
    for (const auto& [d, v] : basis.by_degree()) {
        size_t rows = basis.dim(d - 1);
        if (rows == 0) continue;
        FpMat m(F, rows, v.size());
        for (size_t col = 0; col < v.size(); ++col) {
            auto t = basis.tuple(v[col]);
            long long parity = 0;
            for (size_t j = 0; j < factors.size(); ++j) {
                uint32_t sgn = F.sign(parity);
                for (const auto& [k, c] : factors[j].diff.col(t[j])) {
                    auto t2 = t;
                    t2[j] = k;
                    m.add_at(basis.index_in_degree(t2), col,
                             static_cast<long long>(F.mul(sgn, c)));
                }
                parity += factors[j].degrees[t[j]];
            }
        }
        if (!m.is_zero()) diff.emplace(d, std::move(m));
    }
    return TupleComplex{ChainComplex(std::move(space), std::move(diff), false), std::move(basis)};
}

std::map<int, FpMat> tuple_map_components(const PrimeField& F, const TupleBasis& src,
                                          const TupleBasis& dst, const TupleImageFn& image) {
    std::map<int, FpMat> out;
    for (const auto& [d, v] : src.by_degree()) out.emplace(d, FpMat(F, dst.dim(d), v.size()));
    std::vector<std::pair<std::vector<uint32_t>, uint32_t>> buf;
    for (const auto& [d, v] : src.by_degree()) {
        FpMat& m = out.at(d);
        for (size_t col = 0; col < v.size(); ++col) {
            buf.clear();
            auto t = src.tuple(v[col]);
            image(t, buf);
            for (const auto& [t2, c] : buf) {
                if (dst.degree_of(t2) != d)
                    throw Error("tuple map image does not preserve the degree");
                m.add_at(dst.index_in_degree(t2), col, c);
            }
        }
    }
    return out;
}

} // namespace tatehh
