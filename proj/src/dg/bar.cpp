#include "dg/bar.hpp"

namespace tatehh {

ChainComplex complex_from_flat(PrimeField F, const std::vector<int>& degrees, const FpMat& diff,
                               const std::vector<std::string>& labels) {
    GradedIndex gi = graded_index(degrees);
    GradedSpace space(F);
    for (const auto& [d, v] : gi.flat_by_degree) space.dims[d] = v.size();
    if (!labels.empty())
        for (const auto& [d, v] : gi.flat_by_degree) {
            std::vector<std::string> ls;
            for (size_t f : v) ls.push_back(labels[f]);
            space.labels[d] = std::move(ls);
        }
    std::map<int, FpMat> dd;
    for (const auto& [d, v] : gi.flat_by_degree) {
        auto lower = gi.flat_by_degree.find(d - 1);
        if (lower == gi.flat_by_degree.end()) continue;
        FpMat m(F, lower->second.size(), v.size());
        for (size_t col = 0; col < v.size(); ++col)
            for (const auto& [r, c] : diff.col(v[col])) m.add_at(gi.locate[r].second, col, c);
        if (!m.is_zero()) dd.emplace(d, std::move(m));
    }
    return ChainComplex(std::move(space), std::move(dd), false);
}

namespace {

struct AlgebraSlots {
    std::vector<uint32_t> index; // slot index -> A basis index
    std::vector<int> degrees;
    FpMat diff;                  // slot-indexed
    std::vector<std::string> labels;
    std::vector<int32_t> back;   // A index -> slot index or -1
};

AlgebraSlots algebra_slots(const DgAlgebra& a, bool reduced) {
    AlgebraSlots s{{}, {}, FpMat(a.F, 0, 0), {}, std::vector<int32_t>(a.dim(), -1)};
    for (size_t i = 0; i < a.dim(); ++i) {
        if (reduced && i == a.unit) continue;
        s.back[i] = static_cast<int32_t>(s.index.size());
        s.index.push_back(static_cast<uint32_t>(i));
        s.degrees.push_back(a.degree[i]);
        s.labels.push_back(a.labels[i]);
    }
    size_t k = s.index.size();
    FpMat d(a.F, k, k);
    for (size_t j = 0; j < k; ++j)
        for (const auto& [r, c] : a.diff.col(s.index[j]))
            if (s.back[r] >= 0) d.add_at(static_cast<size_t>(s.back[r]), j, c);
    s.diff = std::move(d);
    return s;
}

} // namespace

BarObject two_sided_bar(const DgBimodule& m, const DgAlgebra& a, const DgBimodule& n, int L,
                        bool reduced) {
    if (m.F != a.F || n.F != a.F) throw Error("two_sided_bar: modulus mismatch");
    if (L < 0) throw Error("two_sided_bar: negative truncation");
    const PrimeField& F = a.F;
    AlgebraSlots slots = algebra_slots(a, reduced);

    TensorFactor mf{m.degree, m.diff, m.labels};
    TensorFactor af{slots.degrees, slots.diff, slots.labels};
    TensorFactor nf{n.degree, n.diff, n.labels};

    BarObject bar;
    bar.reduced = reduced;
    bar.alg_index = slots.index;
    bar.object.truncation = L;
    bar.object.provenance = "B(" + m.name + ", " + a.name + ", " + n.name + ")";

    std::vector<TupleComplex> levels;
    for (int k = 0; k <= L; ++k) {
        std::vector<TensorFactor> factors;
        factors.push_back(mf);
        for (int j = 0; j < k; ++j) factors.push_back(af);
        factors.push_back(nf);
        bool labels_ok = m.dim() * n.dim() <= 64 && slots.index.size() <= 8 && k <= 4;
        levels.push_back(tensor_complex(F, factors, labels_ok));
    }
    for (auto& lc : levels) {
        bar.object.level.push_back(lc.complex);
        bar.bases.push_back(lc.basis);
    }

    bar.object.face.resize(L + 1);
    for (int k = 1; k <= L; ++k) {
        for (int i = 0; i <= k; ++i) {
            TupleImageFn image = [&, k, i](const std::vector<uint32_t>& t, auto& out) {
                // slots: 0 = M, 1..k = algebra, k+1 = N
                if (i == 0) {
                    uint32_t a1 = slots.index[t[1]];
                    for (const auto& [mm, c] : m.right[a1].col(t[0])) {
                        std::vector<uint32_t> t2;
                        t2.push_back(mm);
                        for (int j = 2; j <= k + 1; ++j) t2.push_back(t[j]);
                        out.push_back({std::move(t2), c});
                    }
                } else if (i < k) {
                    uint32_t x = slots.index[t[i]], y = slots.index[t[i + 1]];
                    for (const auto& [prod, c] : a.mul(x, y)) {
                        if (slots.back[prod] < 0) continue; // degenerate in reduced mode
                        std::vector<uint32_t> t2;
                        for (int j = 0; j < i; ++j) t2.push_back(t[j]);
                        t2.push_back(static_cast<uint32_t>(slots.back[prod]));
                        for (int j = i + 2; j <= k + 1; ++j) t2.push_back(t[j]);
                        out.push_back({std::move(t2), c});
                    }
                } else {
                    uint32_t ak = slots.index[t[k]];
                    for (const auto& [nn, c] : n.left[ak].col(t[k + 1])) {
                        std::vector<uint32_t> t2;
                        for (int j = 0; j < k; ++j) t2.push_back(t[j]);
                        t2.push_back(nn);
                        out.push_back({std::move(t2), c});
                    }
                }
            };
            auto comps = tuple_map_components(F, bar.bases[k], bar.bases[k - 1], image);
            bar.object.face[k].push_back(
                ChainMap(bar.object.level[k], bar.object.level[k - 1], std::move(comps), false));
        }
    }

    if (!reduced) {
        bar.object.degeneracy.resize(L);
        uint32_t unit_slot = static_cast<uint32_t>(slots.back[a.unit]);
        for (int k = 0; k < L; ++k) {
            for (int i = 0; i <= k; ++i) {
                TupleImageFn image = [&, k, i, unit_slot](const std::vector<uint32_t>& t,
                                                          auto& out) {
                    std::vector<uint32_t> t2;
                    for (int j = 0; j <= i; ++j) t2.push_back(t[j]);
                    t2.push_back(unit_slot);
                    for (int j = i + 1; j <= k + 1; ++j) t2.push_back(t[j]);
                    out.push_back({std::move(t2), 1});
                };
                auto comps = tuple_map_components(F, bar.bases[k], bar.bases[k + 1], image);
                bar.object.degeneracy[k].push_back(
                    ChainMap(bar.object.level[k], bar.object.level[k + 1], std::move(comps),
                             false));
            }
        }
    }
    return bar;
}

ChainMap bar_augmentation(const Realization& realized_bar, const BarObject& bar,
                          const DgAlgebra& a, const DgBimodule& n) {
    ChainComplex target = complex_from_flat(a.F, n.degree, n.diff, n.labels);
    GradedIndex gi = graded_index(n.degree);
    const ChainComplex& src = realized_bar.total.complex;

    std::map<int, FpMat> comps;
    for (const auto& [deg, dim] : src.space().dims) {
        FpMat mat(a.F, target.dim(deg), dim);
        const TotalBlock* blk = realized_bar.total.find_block(deg, 0);
        if (blk) {
            // level 0 of the bar is A (x) N; collapse by the left action
            const TupleBasis& b0 = bar.bases[0];
            const auto& v = b0.by_degree().at(deg);
            for (size_t col = 0; col < v.size(); ++col) {
                auto t = b0.tuple(v[col]);
                for (const auto& [nn, c] : n.left[t[0]].col(t[1]))
                    mat.add_at(gi.locate[nn].second, blk->offset + col, c);
            }
        }
        if (!mat.is_zero()) comps.emplace(deg, std::move(mat));
    }
    return ChainMap(src, target, std::move(comps), true);
}

DerivedTensor derived_tensor(const DgBimodule& m, const DgAlgebra& a, const DgBimodule& n,
                             int D) {
    for (size_t i = 0; i < a.dim(); ++i)
        if (a.degree[i] < 0)
            throw Error("derived_tensor: algebra degrees must be nonnegative");
    int L = D + 1;
    BarObject bar = two_sided_bar(m, a, n, L, true);
    Realization r = realize(bar.object);
    DerivedTensor out{r, {}, D};
    for (int q = 0; q <= D; ++q) out.tor_dims[q] = homology_dim(r.total.complex, q);
    return out;
}

DgBimodule realized_bar_bimodule(const DgBimodule& m, const DgAlgebra& a, const DgBimodule& n,
                                 int L) {
    BarObject bar = two_sided_bar(m, a, n, L, true);
    Realization r = realize(bar.object);
    const ChainComplex& c = r.total.complex;

    // flat basis: concatenate degrees ascending, blocks by level within a degree
    std::vector<int> degrees;
    std::vector<std::pair<int, size_t>> where; // (total degree, offset)
    for (const auto& [deg, dim] : c.space().dims)
        for (size_t i = 0; i < dim; ++i) {
            degrees.push_back(deg);
            where.push_back({deg, i});
        }
    GradedIndex gi = graded_index(degrees);

    DgBimodule out(a.F, degrees.size(), a.dim());
    out.name = "(" + m.name + " (x)L " + n.name + ")@" + std::to_string(L);
    out.degree = degrees;
    for (size_t f = 0; f < degrees.size(); ++f)
        out.labels[f] = out.name + "#" + std::to_string(f);

    auto flat_of = [&](int deg, size_t idx) -> size_t {
        // inverse of `where`: flat indices are grouped by ascending degree
        size_t base = 0;
        for (const auto& [d, dim] : c.space().dims) {
            if (d == deg) return base + idx;
            base += dim;
        }
        throw Error("realized_bar_bimodule: degree lookup failed");
    };

    // differential
    for (size_t f = 0; f < degrees.size(); ++f) {
        auto [deg, idx] = where[f];
        FpMat d = c.d(deg);
        for (const auto& [row, v] : d.col(idx)) out.diff.add_at(flat_of(deg - 1, row), f, v);
    }

    // Actions are levelwise on the outer slots. Against the total
    // differential (vertical part carries (-1)^level) the Leibniz rule forces
    // the twist (-1)^{level*|e|} on the left action; the right action on the
    // last slot needs no twist.
    for (size_t e = 0; e < a.dim(); ++e) {
        for (size_t f = 0; f < degrees.size(); ++f) {
            auto [deg, idx] = where[f];
            auto blocks_it = r.total.blocks.find(deg);
            if (blocks_it == r.total.blocks.end()) continue;
            const TotalBlock* blk = nullptr;
            for (const auto& b : blocks_it->second)
                if (idx >= b.offset && idx < b.offset + b.dim) blk = &b;
            if (!blk) throw Error("realized_bar_bimodule: block lookup failed");
            int level = blk->s;
            const TupleBasis& tb = bar.bases[level];
            auto t = tb.tuple(tb.by_degree().at(blk->t)[idx - blk->offset]);
            const TotalBlock* blk2 = r.total.find_block(deg + a.degree[e], level);
            uint32_t twist =
                a.F.sign(static_cast<long long>(level) * a.degree[e]);
            for (const auto& [mm, cc] : m.left[e].col(t[0])) {
                auto t2 = t;
                t2[0] = mm;
                if (!blk2) throw Error("realized_bar_bimodule: action leaves the truncation");
                out.left[e].add_at(flat_of(deg + a.degree[e], blk2->offset + tb.index_in_degree(t2)),
                                   f, a.F.mul(twist, cc));
            }
            for (const auto& [nn, cc] : n.right[e].col(t[t.size() - 1])) {
                auto t2 = t;
                t2[t2.size() - 1] = nn;
                if (!blk2) throw Error("realized_bar_bimodule: action leaves the truncation");
                out.right[e].add_at(flat_of(deg + a.degree[e], blk2->offset + tb.index_in_degree(t2)),
                                    f, cc);
            }
        }
    }
    return out;
}

} // namespace tatehh
