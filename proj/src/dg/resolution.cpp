#include "dg/resolution.hpp"

#include "dg/bar.hpp"

namespace tatehh {

namespace {

// generic: per homological degree q, an ambient coordinate space with
// degrees, an idempotent, horizontal maps and vertical (internal)
// differentials on the ambient; build the total complex of the restricted
// bicomplex together with the chosen per-cell bases.
struct RestrictedComplex {
    TotalComplex total;
    std::vector<std::map<int, FpMat>> cell_basis; // [q][t] -> ambient columns
};

RestrictedComplex build_restricted(PrimeField F,
                                   const std::vector<std::vector<int>>& coord_degrees,
                                   const std::vector<FpMat>& idem,
                                   const std::vector<FpMat>& hor,
                                   const std::vector<FpMat>& vert) {
    size_t len = coord_degrees.size();
    std::vector<std::map<int, FpMat>> basis(len);
    for (size_t q = 0; q < len; ++q) {
        FpMat im = idem[q].image_basis();
        for (size_t j = 0; j < im.cols(); ++j) {
            if (im.col(j).empty()) continue;
            int deg = coord_degrees[q][im.col(j).front().first];
            for (const auto& [i, c] : im.col(j))
                if (coord_degrees[q][i] != deg)
                    throw Error("resolution: idempotent image mixes internal degrees");
            auto it = basis[q].find(deg);
            if (it == basis[q].end())
                basis[q].emplace(deg, im.col_slice(j, j + 1));
            else
                it->second = it->second.hstack(im.col_slice(j, j + 1));
        }
    }

    std::map<Bicomplex::Key, size_t> dims;
    std::map<Bicomplex::Key, FpMat> dh, dv;
    for (size_t q = 0; q < len; ++q)
        for (const auto& [t, b] : basis[q]) dims[{static_cast<int>(q), t}] = b.cols();
    for (size_t q = 0; q < len; ++q) {
        for (const auto& [t, b] : basis[q]) {
            if (q >= 1) {
                auto it = basis[q - 1].find(t);
                if (it != basis[q - 1].end())
                    dh.emplace(Bicomplex::Key{static_cast<int>(q), t},
                               express_in_basis(it->second, hor[q - 1] * b));
                else if (!(hor[q - 1] * b).is_zero())
                    throw Error("resolution: horizontal map leaves the chosen bases");
            }
            auto lower = basis[q].find(t - 1);
            FpMat img = vert[q] * b;
            if (lower != basis[q].end())
                dv.emplace(Bicomplex::Key{static_cast<int>(q), t},
                           express_in_basis(lower->second, img));
            else if (!img.is_zero())
                throw Error("resolution: internal differential leaves the chosen bases");
        }
    }
    Bicomplex bc(F, std::move(dims), std::move(dh), std::move(dv), true);
    int lo = 0, hi = 0;
    bool first = true;
    for (const auto& [k, d] : bc.dims()) {
        int n = k.first + k.second;
        lo = first ? n : std::min(lo, n);
        hi = first ? n : std::max(hi, n);
        first = false;
    }
    TotalComplex tc = first ? TotalComplex{ChainComplex(GradedSpace(F), {}, false), {}}
                            : totalize(bc, TotalConvention::Sum, lo, hi);
    return RestrictedComplex{std::move(tc), std::move(basis)};
}

} // namespace

VerifiedResolution verify_resolution(const DgAlgebra& a, const BimodResolutionData& data) {
    const PrimeField& F = a.F;
    size_t dA = a.dim(), sq = dA * dA;
    if (data.rank.empty()) throw Error("resolution: no components");
    size_t len = data.rank.size();
    if (data.idem.size() != len || data.diff.size() + 1 != len)
        throw Error("resolution: component/map count mismatch");
    if (data.aug.size() != data.rank[0]) throw Error("resolution: augmentation arity mismatch");

    DgAlgebra E = enveloping(a);
    auto coord = [&](size_t g, size_t e_idx) { return g * sq + e_idx; };

    // expand a generator-image map to an F-matrix on ambient coordinates
    auto expand = [&](const FreeBimodMap& g, size_t src_rank, size_t dst_rank) {
        FpMat m(F, dst_rank * sq, src_rank * sq);
        for (size_t s = 0; s < src_rank; ++s) {
            const SparseVec& img = s < g.gen_image.size() ? g.gen_image[s] : SparseVec{};
            for (size_t e_idx = 0; e_idx < sq; ++e_idx) {
                // basis element (s, e_idx) = e . gen_s
                for (const auto& [w, c] : img) {
                    size_t g2 = w / sq, e2 = w % sq;
                    if (g2 >= dst_rank) throw Error("resolution: generator image out of range");
                    for (const auto& [prod, c2] : E.mul(e_idx, e2))
                        m.add_at(coord(g2, prod), coord(s, e_idx), F.mul(c, c2));
                }
            }
        }
        return m;
    };
    auto expand_idem = [&](size_t q) {
        if (data.idem[q].gen_image.empty()) return FpMat::identity(F, data.rank[q] * sq);
        if (data.idem[q].gen_image.size() != data.rank[q])
            throw Error("resolution: idempotent arity mismatch");
        return expand(data.idem[q], data.rank[q], data.rank[q]);
    };

    // entry degrees must be 0 (degree-0 generators and degree-0 maps)
    auto check_degree0 = [&](const FreeBimodMap& g, const std::string& what) {
        for (const auto& img : g.gen_image)
            for (const auto& [w, c] : img) {
                size_t e_idx = w % sq;
                if (a.degree[e_idx / dA] + a.degree[e_idx % dA] != 0)
                    throw Error("resolution: " + what + " has an entry of nonzero degree");
            }
    };
    for (size_t q = 0; q < len; ++q) check_degree0(data.idem[q], "idempotent");
    for (size_t q = 0; q + 1 < len; ++q) check_degree0(data.diff[q], "differential");
    for (const auto& v : data.aug)
        for (const auto& [k, c] : v)
            if (a.degree[k] != 0) throw Error("resolution: augmentation entry of nonzero degree");

    VerifiedResolution out;
    out.data = data;
    out.length = static_cast<int>(len) - 1;
    for (size_t q = 0; q < len; ++q) out.ambient_idem.push_back(expand_idem(q));
    for (size_t q = 1; q < len; ++q) {
        if (data.diff[q - 1].gen_image.size() != data.rank[q])
            throw Error("resolution: differential arity mismatch");
        out.ambient_diff.push_back(expand(data.diff[q - 1], data.rank[q], data.rank[q - 1]));
    }

    // idempotency and compatibility
    for (size_t q = 0; q < len; ++q)
        if (out.ambient_idem[q] * out.ambient_idem[q] != out.ambient_idem[q])
            throw Error("resolution: endomorphism of component " + std::to_string(q) +
                        " is not idempotent");
    for (size_t q = 1; q < len; ++q) {
        FpMat de = out.ambient_diff[q - 1] * out.ambient_idem[q];
        if (out.ambient_idem[q - 1] * de != de)
            throw Error("resolution: differential does not respect the components at " +
                        std::to_string(q));
        if (q >= 2 &&
            !(out.ambient_diff[q - 2] * (out.ambient_diff[q - 1] * out.ambient_idem[q])).is_zero())
            throw Error("resolution: d^2 != 0 at " + std::to_string(q));
    }

    // internal differential of the ambient frees: blockdiag of d_E
    std::vector<FpMat> vert;
    std::vector<std::vector<int>> coord_degrees;
    for (size_t q = 0; q < len; ++q) {
        FpMat v(F, data.rank[q] * sq, data.rank[q] * sq);
        for (size_t g = 0; g < data.rank[q]; ++g)
            for (size_t j = 0; j < sq; ++j)
                for (const auto& [i, c] : E.diff.col(j)) v.add_at(coord(g, i), coord(g, j), c);
        vert.push_back(std::move(v));
        std::vector<int> degs(data.rank[q] * sq);
        for (size_t g = 0; g < data.rank[q]; ++g)
            for (size_t j = 0; j < sq; ++j)
                degs[coord(g, j)] = a.degree[j / dA] + a.degree[j % dA];
        coord_degrees.push_back(std::move(degs));
    }
    for (size_t q = 0; q < len; ++q) {
        FpMat lhs = out.ambient_idem[q] * vert[q];
        FpMat rhs = vert[q] * out.ambient_idem[q];
        if (lhs != rhs)
            throw Error("resolution: idempotent does not commute with the internal differential");
    }
    for (size_t q = 1; q < len; ++q) {
        FpMat lhs = out.ambient_diff[q - 1] * vert[q];
        FpMat rhs = vert[q - 1] * out.ambient_diff[q - 1];
        if (lhs * out.ambient_idem[q] != rhs * out.ambient_idem[q])
            throw Error("resolution: differential does not commute with the internal one");
    }

    // augmentation
    FpMat aug(F, dA, data.rank[0] * sq);
    for (size_t g = 0; g < data.rank[0]; ++g)
        for (size_t j = 0; j < sq; ++j) {
            // (x (x) y) . gen_g maps to x * aug_g * y
            size_t x = j / dA, y = j % dA;
            SparseAcc acc(F);
            for (const auto& [k, c] : data.aug[g])
                acc.add_scaled(a.mul_vec(a.mul(x, k), SparseVec{{static_cast<uint32_t>(y), 1}}),
                               c);
            for (const auto& [k, c] : acc.take()) aug.add_at(k, coord(g, j), c);
        }
    out.aug_matrix = std::move(aug);

    if (len >= 2 &&
        !(out.aug_matrix * (out.ambient_diff[0] * out.ambient_idem[1])).is_zero())
        throw Error("resolution: augmentation does not kill the image of d_1");
    // aug is a chain map: aug ∘ D_int = d_A ∘ aug
    if (out.aug_matrix * vert[0] != a.diff * out.aug_matrix)
        throw Error("resolution: augmentation is not a chain map");

    // quasi-isomorphism onto A: homology of the cone vanishes
    RestrictedComplex rc = build_restricted(F, coord_degrees, out.ambient_idem,
                                            out.ambient_diff, vert);
    ChainComplex target = complex_from_flat(F, a.degree, a.diff, a.labels);
    GradedIndex gi = graded_index(a.degree);
    std::map<int, FpMat> comps;
    for (const auto& [deg, dim] : rc.total.complex.space().dims) {
        FpMat m(F, target.dim(deg), dim);
        const TotalBlock* blk = rc.total.find_block(deg, 0);
        if (blk) {
            auto it = rc.cell_basis[0].find(deg);
            if (it == rc.cell_basis[0].end()) throw Error("resolution: basis bookkeeping");
            FpMat collapsed = out.aug_matrix * it->second;
            for (size_t j = 0; j < collapsed.cols(); ++j)
                for (const auto& [i, c] : collapsed.col(j))
                    m.add_at(gi.locate[i].second, blk->offset + j, c);
        }
        if (!m.is_zero()) comps.emplace(deg, std::move(m));
    }
    ChainMap aug_map(rc.total.complex, target, std::move(comps), true);
    ChainComplex cn = cone(aug_map).cone;
    for (const auto& [n, d] : homology_dims(cn))
        if (d != 0)
            throw Error("resolution: not a resolution of the algebra (cone homology of dim " +
                        std::to_string(d) + " in degree " + std::to_string(n) + ")");
    return out;
}

TorResult hh_via_resolution(const DgAlgebra& a, const VerifiedResolution& w,
                            const DgBimodule& x) {
    const PrimeField& F = a.F;
    size_t dA = a.dim(), sq = dA * dA, dX = x.dim();
    DgBimodule xe = bimodule_over_enveloping(a, x);

    // expand a generator-image map to the X-side: coordinates (g, m)
    auto expand = [&](const FreeBimodMap& g, size_t src_rank, size_t dst_rank, bool is_identity) {
        if (is_identity) return FpMat::identity(F, src_rank * dX);
        FpMat out(F, dst_rank * dX, src_rank * dX);
        for (size_t s = 0; s < src_rank; ++s) {
            const SparseVec& img = s < g.gen_image.size() ? g.gen_image[s] : SparseVec{};
            for (const auto& [wc, c] : img) {
                size_t g2 = wc / sq, e_idx = wc % sq;
                const FpMat& act = xe.right[e_idx];
                for (size_t mcol = 0; mcol < dX; ++mcol)
                    for (const auto& [mrow, c2] : act.col(mcol))
                        out.add_at(g2 * dX + mrow, s * dX + mcol, F.mul(c, c2));
            }
        }
        return out;
    };

    size_t len = w.data.rank.size();
    std::vector<FpMat> idem, hor, vert;
    std::vector<std::vector<int>> coord_degrees;
    for (size_t q = 0; q < len; ++q) {
        idem.push_back(expand(w.data.idem[q], w.data.rank[q], w.data.rank[q],
                              w.data.idem[q].gen_image.empty()));
        FpMat v(F, w.data.rank[q] * dX, w.data.rank[q] * dX);
        for (size_t g = 0; g < w.data.rank[q]; ++g)
            for (size_t j = 0; j < dX; ++j)
                for (const auto& [i, c] : x.diff.col(j)) v.add_at(g * dX + i, g * dX + j, c);
        vert.push_back(std::move(v));
        std::vector<int> degs(w.data.rank[q] * dX);
        for (size_t g = 0; g < w.data.rank[q]; ++g)
            for (size_t j = 0; j < dX; ++j) degs[g * dX + j] = x.degree[j];
        coord_degrees.push_back(std::move(degs));
    }
    for (size_t q = 1; q < len; ++q)
        hor.push_back(expand(w.data.diff[q - 1], w.data.rank[q], w.data.rank[q - 1], false));

    RestrictedComplex rc = build_restricted(F, coord_degrees, idem, hor, vert);
    TorResult out;
    auto sup = rc.total.complex.support();
    if (!sup) return out;
    out.support_lo = sup->first;
    out.support_hi = sup->second;
    for (int n = sup->first; n <= sup->second; ++n) {
        size_t d = homology_dim(rc.total.complex, n);
        if (d) out.dims[n] = d;
    }
    return out;
}

DgBimodule sandwich_bimodule(const DgAlgebra& a, const VerifiedResolution& w,
                             const DgBimodule& m, const DgBimodule& n) {
    const PrimeField& F = a.F;
    size_t dA = a.dim(), sq = dA * dA, dm = m.dim(), dn = n.dim(), cell = dm * dn;

    // coordinates (g, i, j) = m_i (x) gen_g (x) n_j
    auto expand = [&](const FreeBimodMap& g, size_t src_rank, size_t dst_rank, bool is_identity) {
        if (is_identity) return FpMat::identity(F, src_rank * cell);
        FpMat out(F, dst_rank * cell, src_rank * cell);
        for (size_t s = 0; s < src_rank; ++s) {
            const SparseVec& img = s < g.gen_image.size() ? g.gen_image[s] : SparseVec{};
            for (const auto& [wc, c] : img) {
                size_t g2 = wc / sq, x = (wc % sq) / dA, y = (wc % sq) % dA;
                // (i, j) -> (m_i . x) (x) (y . n_j), no sign
                for (size_t i = 0; i < dm; ++i)
                    for (const auto& [i2, ci] : m.right[x].col(i))
                        for (size_t j = 0; j < dn; ++j)
                            for (const auto& [j2, cj] : n.left[y].col(j))
                                out.add_at(g2 * cell + i2 * dn + j2, s * cell + i * dn + j,
                                           F.mul(c, F.mul(ci, cj)));
            }
        }
        return out;
    };

    size_t len = w.data.rank.size();
    std::vector<FpMat> idem, hor, vert;
    std::vector<std::vector<int>> coord_degrees;
    for (size_t q = 0; q < len; ++q) {
        idem.push_back(expand(w.data.idem[q], w.data.rank[q], w.data.rank[q],
                              w.data.idem[q].gen_image.empty()));
        // internal differential of M (x) N slotwise (Koszul)
        FpMat v(F, w.data.rank[q] * cell, w.data.rank[q] * cell);
        for (size_t g = 0; g < w.data.rank[q]; ++g)
            for (size_t i = 0; i < dm; ++i)
                for (size_t j = 0; j < dn; ++j) {
                    size_t col = g * cell + i * dn + j;
                    for (const auto& [i2, c] : m.diff.col(i))
                        v.add_at(g * cell + i2 * dn + j, col, c);
                    uint32_t sgn = F.sign(m.degree[i]);
                    for (const auto& [j2, c] : n.diff.col(j))
                        v.add_at(g * cell + i * dn + j2, col,
                                 static_cast<long long>(F.mul(sgn, c)));
                }
        vert.push_back(std::move(v));
        std::vector<int> degs(w.data.rank[q] * cell);
        for (size_t g = 0; g < w.data.rank[q]; ++g)
            for (size_t i = 0; i < dm; ++i)
                for (size_t j = 0; j < dn; ++j)
                    degs[g * cell + i * dn + j] = m.degree[i] + n.degree[j];
        coord_degrees.push_back(std::move(degs));
    }
    for (size_t q = 1; q < len; ++q)
        hor.push_back(expand(w.data.diff[q - 1], w.data.rank[q], w.data.rank[q - 1], false));

    RestrictedComplex rc = build_restricted(F, coord_degrees, idem, hor, vert);
    const ChainComplex& c = rc.total.complex;

    // flatten the total complex into a DgBimodule
    std::vector<int> degrees;
    std::vector<std::pair<int, size_t>> where;
    for (const auto& [deg, dim] : c.space().dims)
        for (size_t i = 0; i < dim; ++i) {
            degrees.push_back(deg);
            where.push_back({deg, i});
        }
    DgBimodule out(F, degrees.size(), dA);
    out.name = m.name + "(x)W(x)" + n.name;
    out.degree = degrees;
    for (size_t f = 0; f < degrees.size(); ++f)
        out.labels[f] = out.name + "#" + std::to_string(f);
    auto flat_of = [&](int deg, size_t idx) -> size_t {
        size_t base = 0;
        for (const auto& [d, dim] : c.space().dims) {
            if (d == deg) return base + idx;
            base += dim;
        }
        throw Error("sandwich_bimodule: degree lookup failed");
    };
    for (size_t f = 0; f < degrees.size(); ++f) {
        auto [deg, idx] = where[f];
        FpMat d = c.d(deg);
        for (const auto& [row, v] : d.col(idx)) out.diff.add_at(flat_of(deg - 1, row), f, v);
    }

    // actions: left on the m-slot twisted by (-1)^{q|e|}, right on the n-slot
    // untwisted (Leibniz against the folded total differential)
    for (size_t e = 0; e < dA; ++e) {
        for (size_t f = 0; f < degrees.size(); ++f) {
            auto [deg, idx] = where[f];
            const TotalBlock* blk = nullptr;
            for (const auto& b : rc.total.blocks.at(deg))
                if (idx >= b.offset && idx < b.offset + b.dim) blk = &b;
            if (!blk) throw Error("sandwich_bimodule: block lookup failed");
            int q = blk->s, t = blk->t;
            const FpMat& basis = rc.cell_basis[q].at(t);
            // ambient action on coordinates (g, i, j)
            auto act = [&](bool leftside) {
                FpMat amb(F, w.data.rank[q] * cell, 1);
                const auto& bcol = basis.col(idx - blk->offset);
                for (const auto& [coord_i, cv] : bcol) {
                    size_t g = coord_i / cell, i = (coord_i % cell) / dn, j = coord_i % dn;
                    if (leftside) {
                        uint32_t twist = F.sign(static_cast<long long>(q) * a.degree[e]);
                        for (const auto& [i2, c] : m.left[e].col(i))
                            amb.add_at(g * cell + i2 * dn + j, 0,
                                       F.mul(twist, F.mul(cv, c)));
                    } else {
                        for (const auto& [j2, c] : n.right[e].col(j))
                            amb.add_at(g * cell + i * dn + j2, 0, F.mul(cv, c));
                    }
                }
                return amb;
            };
            int deg2 = deg + a.degree[e];
            const TotalBlock* blk2 = rc.total.find_block(deg2, q);
            for (bool leftside : {true, false}) {
                FpMat amb = act(leftside);
                if (amb.is_zero()) continue;
                auto it = rc.cell_basis[q].find(t + a.degree[e]);
                if (it == rc.cell_basis[q].end() || !blk2)
                    throw Error("sandwich_bimodule: action leaves the complex");
                FpMat coords = express_in_basis(it->second, amb);
                for (const auto& [r, c] : coords.col(0)) {
                    size_t dst = flat_of(deg2, blk2->offset + r);
                    if (leftside)
                        out.left[e].add_at(dst, f, c);
                    else
                        out.right[e].add_at(dst, f, c);
                }
            }
        }
    }
    return out;
}

} // namespace tatehh
