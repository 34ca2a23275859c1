#include "cx/simplicial.hpp"

#include "fp/span.hpp"

namespace tatehh {

namespace {

std::string loc(int k, int i, int j, const char* kind) {
    return std::string(kind) + " identity at level " + std::to_string(k) + " (i=" +
           std::to_string(i) + ", j=" + std::to_string(j) + ")";
}

} // namespace

void verify_simplicial_identities(const SimplicialObject& s, size_t dim_cap) {
    int L = s.truncation;
    auto small_enough = [&](int k) { return s.level[k].total_dim() <= dim_cap; };

    // d_i d_j = d_{j-1} d_i  for i < j
    for (int k = 2; k <= L; ++k) {
        if (!small_enough(k)) continue;
        for (int j = 1; j <= k; ++j)
            for (int i = 0; i < j; ++i)
                if (!(s.face[k - 1][i].compose(s.face[k][j]) ==
                      s.face[k - 1][j - 1].compose(s.face[k][i])))
                    throw Error(loc(k, i, j, "face-face"));
    }
    if (!s.has_degeneracies()) return;

    // s_i s_j = s_{j+1} s_i  for i <= j
    for (int k = 0; k + 1 < L; ++k) {
        if (!small_enough(k)) continue;
        for (int j = 0; j <= k; ++j)
            for (int i = 0; i <= j; ++i)
                if (!(s.degeneracy[k + 1][i].compose(s.degeneracy[k][j]) ==
                      s.degeneracy[k + 1][j + 1].compose(s.degeneracy[k][i])))
                    throw Error(loc(k, i, j, "degeneracy-degeneracy"));
    }
    // d_i s_j relations
    for (int k = 0; k < L; ++k) {
        if (!small_enough(k + 1)) continue;
        for (int j = 0; j <= k; ++j) {
            for (int i = 0; i <= k + 1; ++i) {
                ChainMap lhs = s.face[k + 1][i].compose(s.degeneracy[k][j]);
                if (i == j || i == j + 1) {
                    if (!(lhs == ChainMap::identity(s.level[k])))
                        throw Error(loc(k, i, j, "face-degeneracy (identity case)"));
                } else if (i < j) {
                    if (!(lhs == s.degeneracy[k - 1][j - 1].compose(s.face[k][i])))
                        throw Error(loc(k, i, j, "face-degeneracy (i<j)"));
                } else {
                    if (!(lhs == s.degeneracy[k - 1][j].compose(s.face[k][i - 1])))
                        throw Error(loc(k, i, j, "face-degeneracy (i>j+1)"));
                }
            }
        }
    }
}

NormalizedObject normalize(const SimplicialObject& s) {
    if (!s.has_degeneracies()) {
        NormalizedObject out;
        out.reduced = s;
        out.incl.resize(s.level.size());
        out.proj.resize(s.level.size());
        for (size_t k = 0; k < s.level.size(); ++k)
            for (const auto& [n, d] : s.level[k].space().dims) {
                out.incl[k].emplace(n, FpMat::identity(s.level[k].field(), d));
                out.proj[k].emplace(n, FpMat::identity(s.level[k].field(), d));
            }
        return out;
    }

    const PrimeField F = s.level[0].field();
    int L = s.truncation;
    NormalizedObject out;
    out.incl.resize(L + 1);
    out.proj.resize(L + 1);

    std::vector<ChainComplex> reduced;
    // level 0 has no degeneracies into it
    for (int k = 0; k <= L; ++k) {
        if (k == 0) {
            reduced.push_back(s.level[0]);
            for (const auto& [n, d] : s.level[0].space().dims) {
                out.incl[0].emplace(n, FpMat::identity(F, d));
                out.proj[0].emplace(n, FpMat::identity(F, d));
            }
            continue;
        }
        GradedSpace space(F);
        std::map<int, FpMat> diff;
        std::map<int, FpMat> incl_k, proj_k;
        // degenerate subspace per internal degree: span of all s_i images
        for (const auto& [n, dn] : s.level[k].space().dims) {
            FpMat degen(F, dn, 0);
            for (int i = 0; i < k; ++i) degen = degen.hstack(s.degeneracy[k - 1][i].at(n));
            FpMat reps = quotient_reps(degen, dn);
            if (reps.cols() == 0) continue;
            space.dims[n] = reps.cols();
            // projection: express v in [reps | degen-basis], keep the reps part
            FpMat basis = reps.hstack(degen.image_basis());
            FpMat coords = express_in_basis(basis, FpMat::identity(F, dn));
            FpMat proj(F, reps.cols(), dn);
            for (size_t j = 0; j < dn; ++j)
                for (const auto& [i, v] : coords.col(j))
                    if (i < reps.cols()) proj.add_at(i, j, v);
            incl_k.emplace(n, std::move(reps));
            proj_k.emplace(n, std::move(proj));
        }
        // induced internal differential
        for (const auto& [n, dn] : space.dims) {
            if (space.dim(n - 1) == 0) continue;
            diff.emplace(n, proj_k.at(n - 1) * s.level[k].d(n) * incl_k.at(n));
        }
        reduced.push_back(ChainComplex(std::move(space), std::move(diff), true));
        out.incl[k] = std::move(incl_k);
        out.proj[k] = std::move(proj_k);
    }

    std::vector<std::vector<ChainMap>> faces(L + 1);
    for (int k = 1; k <= L; ++k) {
        for (int i = 0; i <= k; ++i) {
            std::map<int, FpMat> comp;
            for (const auto& [n, dn] : reduced[k].space().dims) {
                if (reduced[k - 1].dim(n) == 0) continue;
                comp.emplace(n, out.proj[k - 1].at(n) * s.face[k][i].at(n) * out.incl[k].at(n));
            }
            faces[k].push_back(ChainMap(reduced[k], reduced[k - 1], std::move(comp), false));
        }
    }

    out.reduced.level = std::move(reduced);
    out.reduced.face = std::move(faces);
    out.reduced.truncation = L;
    out.reduced.provenance = s.provenance + " (normalized)";
    return out;
}

Realization realize(const SimplicialObject& s) {
    SimplicialObject obj = s.has_degeneracies() ? normalize(s).reduced : s;
    const PrimeField F = obj.level[0].field();
    int L = obj.truncation;

    std::map<Bicomplex::Key, size_t> dims;
    std::map<Bicomplex::Key, FpMat> dh, dv;
    for (int k = 0; k <= L; ++k) {
        for (const auto& [t, d] : obj.level[k].space().dims) dims[{k, t}] = d;
        for (const auto& [t, d] : obj.level[k].space().dims) {
            FpMat dvk = obj.level[k].d(t);
            if (!dvk.is_zero()) dv.emplace(Bicomplex::Key{k, t}, std::move(dvk));
        }
        if (k == 0) continue;
        for (const auto& [t, d] : obj.level[k].space().dims) {
            if (obj.level[k - 1].dim(t) == 0) continue;
            FpMat h(F, obj.level[k - 1].dim(t), d);
            for (int i = 0; i <= k; ++i) {
                FpMat f = obj.face[k][i].at(t);
                h = (i & 1) ? h - f : h + f;
            }
            if (!h.is_zero()) dh.emplace(Bicomplex::Key{k, t}, std::move(h));
        }
    }
    Bicomplex bc(F, std::move(dims), std::move(dh), std::move(dv), false);
    int lo = 0, hi = 0;
    bool first = true;
    for (const auto& [k, d] : bc.dims()) {
        int n = k.first + k.second;
        if (first) lo = hi = n;
        lo = std::min(lo, n);
        hi = std::max(hi, n);
        first = false;
    }
    TotalComplex tc = first ? TotalComplex{ChainComplex(GradedSpace(F), {}, false), {}}
                            : totalize(bc, TotalConvention::Sum, lo, hi);
    return Realization{std::move(tc), L, obj.provenance + " (truncated at " + std::to_string(L) + ")"};
}

FpMat realized_levelwise_map(const Realization& r, const std::vector<ChainMap>& ops, int n) {
    const ChainComplex& c = r.total.complex;
    FpMat m(c.field(), c.dim(n), c.dim(n));
    auto it = r.total.blocks.find(n);
    if (it == r.total.blocks.end()) return m;
    for (const auto& blk : it->second) {
        FpMat op = ops[blk.s].at(blk.t);
        for (size_t j = 0; j < op.cols(); ++j)
            for (const auto& [i, v] : op.col(j)) m.add_at(blk.offset + i, blk.offset + j, v);
    }
    return m;
}

} // namespace tatehh
