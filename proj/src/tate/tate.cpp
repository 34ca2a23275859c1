#include "tate/tate.hpp"

namespace tatehh {

namespace {

std::vector<uint32_t> t_minus_one(const PrimeField& F, size_t p) {
    std::vector<uint32_t> e(p, 0);
    e[0] = F.neg(1);
    e[1 % p] = F.add(e[1 % p], 1);
    return e;
}

std::vector<uint32_t> norm_elt(const PrimeField& F, size_t p) {
    (void)F;
    return std::vector<uint32_t>(p, 1);
}

// antipode: t^j -> t^{-j}
std::vector<uint32_t> antipode(const std::vector<uint32_t>& e, size_t p) {
    std::vector<uint32_t> out(p, 0);
    for (size_t j = 0; j < p; ++j) out[(p - j) % p] = e[j];
    return out;
}

std::vector<uint32_t> gr_mul(const PrimeField& F, const std::vector<uint32_t>& a,
                             const std::vector<uint32_t>& b, size_t p) {
    std::vector<uint32_t> out(p, 0);
    for (size_t i = 0; i < p; ++i)
        for (size_t j = 0; j < p; ++j)
            out[(i + j) % p] = F.add(out[(i + j) % p], F.mul(a[i], b[j]));
    return out;
}

bool is_zero_elt(const std::vector<uint32_t>& e) {
    for (uint32_t x : e)
        if (x) return false;
    return true;
}

} // namespace

GComplex standard_complete_resolution(PrimeField F, size_t p, int lo, int hi) {
    if (lo > hi) throw Error("complete resolution: empty window");
    GComplex w{F, p, lo, hi, {}};
    for (int s = lo + 1; s <= hi; ++s)
        w.diff[s] = (s % 2 != 0) ? t_minus_one(F, p) : norm_elt(F, p);
    return w;
}

GComplex positive_half(PrimeField F, size_t p, int hi) {
    GComplex w = standard_complete_resolution(F, p, 0, hi);
    return w;
}

GComplex dual_half(PrimeField F, size_t p, int lo) {
    if (lo > 0) throw Error("dual_half: window must reach degree 0");
    GComplex e = positive_half(F, p, -lo);
    GComplex d{F, p, lo, 0, {}};
    // (E^dual)_s = (E_{-s})^dual; d_s is the antipode of the transpose of
    // d_{E, -s+1}
    for (int s = lo + 1; s <= 0; ++s) d.diff[s] = antipode(e.diff.at(-s + 1), p);
    return d;
}

GComplex cone_resolution(PrimeField F, size_t p, int lo, int hi) {
    if (lo > 0 || hi < 1) throw Error("cone_resolution: window must contain degrees 0 and 1");
    GComplex e = positive_half(F, p, hi - 1);
    GComplex ed = dual_half(F, p, lo);
    GComplex w{F, p, lo, hi, {}};
    // degrees >= 2: shifted E with negated differential
    for (int s = 2; s <= hi; ++s) {
        auto elt = e.diff.at(s - 1);
        for (auto& c : elt) c = F.neg(c);
        w.diff[s] = std::move(elt);
    }
    // degree 1: the transfer E_0 -> (E^dual)_0, the norm
    w.diff[1] = norm_elt(F, p);
    // degrees <= 0: the dual half
    for (int s = lo + 1; s <= 0; ++s) w.diff[s] = ed.diff.at(s);
    return w;
}

void verify_complete_resolution(const GComplex& w) {
    for (int s = w.lo + 2; s <= w.hi; ++s) {
        if (!is_zero_elt(gr_mul(w.F, w.diff.at(s - 1), w.diff.at(s), w.p)))
            throw Error("complete resolution: d^2 != 0 at degree " + std::to_string(s));
    }
    // exactness of W (x)_G F_p[C_p] on the interior: rank(d_s) + rank(d_{s+1}) = p
    FpMat perm(w.F, w.p, w.p);
    for (size_t j = 0; j < w.p; ++j) perm.add_at((j + 1) % w.p, j, 1);
    auto rank_of = [&](int s) {
        if (s <= w.lo || s > w.hi) return size_t{0};
        return induced_on_coinvariants(w.diff.at(s), perm, w.F, w.p).rank();
    };
    for (int s = w.lo + 1; s < w.hi; ++s)
        if (rank_of(s) + rank_of(s + 1) != w.p)
            throw Error("complete resolution: not exact on the free module at degree " +
                        std::to_string(s));
}

FpMat induced_on_coinvariants(const std::vector<uint32_t>& elt, const FpMat& action,
                              const PrimeField& F, size_t p) {
    FpMat out(F, action.rows(), action.cols());
    // T^{-j} = T^{p-j}
    std::vector<FpMat> powers;
    powers.push_back(FpMat::identity(F, action.rows()));
    for (size_t j = 1; j < p; ++j) powers.push_back(action * powers.back());
    for (size_t j = 0; j < p; ++j) {
        if (!elt[j]) continue;
        out = out + powers[(p - j) % p].scaled(static_cast<long long>(elt[j]));
    }
    return out;
}

TateComplexData tensor_over_group(const GComplex& w, const EquivariantComplex& m,
                                  TotalConvention conv) {
    const PrimeField& F = m.complex.field();
    auto sup = m.complex.support();
    TateComplexData out{TotalComplex{ChainComplex(GradedSpace(F), {}, false), {}},
                        w.lo,
                        w.hi,
                        w.p,
                        w.p == 2 ? size_t{1} : size_t{2},
                        0,
                        0,
                        m};
    if (!sup) return out;
    auto [q0, q1] = *sup;

    std::map<Bicomplex::Key, size_t> dims;
    std::map<Bicomplex::Key, FpMat> dh, dv;
    for (int s = w.lo; s <= w.hi; ++s)
        for (int q = q0; q <= q1; ++q) {
            size_t d = m.complex.dim(q);
            if (!d) continue;
            dims[{s, q}] = d;
            if (s > w.lo) {
                FpMat h = induced_on_coinvariants(w.diff.at(s), m.action_at(q), F, w.p);
                if (!h.is_zero()) dh.emplace(Bicomplex::Key{s, q}, std::move(h));
            }
            FpMat v = m.complex.d(q);
            if (!v.is_zero()) dv.emplace(Bicomplex::Key{s, q}, std::move(v));
        }
    Bicomplex bc(F, std::move(dims), std::move(dh), std::move(dv), true);
    bc.declare_unbounded_s(static_cast<int>(out.period));
    out.total = totalize(bc, conv, w.lo + q0, w.hi + q1);
    out.safe_lo = w.lo + q1 + 1;
    out.safe_hi = w.hi + q0 - 1;
    return out;
}

TateComplexData tate_complex(const EquivariantComplex& m, TotalConvention conv, int s_lo,
                             int s_hi) {
    GComplex w = standard_complete_resolution(m.complex.field(), m.order, s_lo, s_hi);
    return tensor_over_group(w, m, conv);
}

void verify_periodicity(const TateComplexData& tc) {
    const ChainComplex& c = tc.total.complex;
    const PrimeField& F = c.field();
    int per = static_cast<int>(tc.period);
    // shift map on blocks: (s, t) -> (s + per, t), identity coordinates
    auto shift_at = [&](int n) {
        FpMat mshift(F, c.dim(n + per), c.dim(n));
        auto it = tc.total.blocks.find(n);
        if (it == tc.total.blocks.end()) return mshift;
        for (const auto& blk : it->second) {
            const TotalBlock* dst = tc.total.find_block(n + per, blk.s + per);
            if (!dst) continue;
            for (size_t j = 0; j < blk.dim; ++j) mshift.add_at(dst->offset + j, blk.offset + j, 1);
        }
        return mshift;
    };
    // chain-map property wherever both sides are fully inside the window
    auto sup = tc.coefficients.complex.support();
    if (!sup) return;
    for (int n = tc.safe_lo; n + per <= tc.safe_hi; ++n) {
        FpMat lhs = shift_at(n - 1) * c.d(n);
        FpMat rhs = c.d(n + per) * shift_at(n);
        if (lhs != rhs)
            throw Error("periodicity shift does not commute with d at degree " +
                        std::to_string(n));
    }
    for (int n = tc.safe_lo; n + per + 1 <= tc.safe_hi; ++n) {
        if (homology_dim(c, n) != homology_dim(c, n + per))
            throw Error("periodicity fails: H_" + std::to_string(n) + " and H_" +
                        std::to_string(n + per) + " have different dims");
        // the shift induces an isomorphism on homology
        Homology h = homology(c, n);
        Homology h2 = homology(c, n + per);
        FpMat sh = shift_at(n);
        FpMat induced(F, h2.dim, h.dim);
        for (size_t j = 0; j < h.reps.cols(); ++j) {
            std::vector<uint32_t> v(c.dim(n), 0);
            for (const auto& [i, val] : h.reps.col(j)) v[i] = val;
            auto w = sh.apply(v);
            auto coords = homology_coordinates(c, n + per, h2.reps, w);
            if (!coords) throw Error("periodicity shift does not preserve cycles");
            for (size_t i = 0; i < coords->size(); ++i)
                if ((*coords)[i]) induced.add_at(i, j, (*coords)[i]);
        }
        if (induced.rank() != h.dim)
            throw Error("periodicity shift is not an isomorphism on H_" + std::to_string(n));
    }
}

std::map<int, size_t> tate_homology(const EquivariantComplex& m, int deg_lo, int deg_hi) {
    if (deg_lo > deg_hi) throw Error("tate_homology: empty range");
    auto sup = m.complex.support();
    std::map<int, size_t> out;
    if (!sup) {
        for (int n = deg_lo; n <= deg_hi; ++n) out[n] = 0;
        return out;
    }
    auto [q0, q1] = *sup;
    int s_lo = deg_lo - q1 - 2, s_hi = deg_hi - q0 + 2;
    TateComplexData tc = tate_complex(m, TotalConvention::TateMixed, s_lo, s_hi);
    if (tc.safe_lo > deg_lo - 1 || tc.safe_hi < deg_hi + 1)
        throw Error("tate_homology: window margin violation");
    verify_periodicity(tc);
    for (int n = deg_lo; n <= deg_hi; ++n) out[n] = homology_dim(tc.total.complex, n);
    return out;
}

OrbitsFixedTransfer orbits_fixed_transfer(const EquivariantComplex& m, int s_lo, int s_hi) {
    if (s_lo > 0 || s_hi < 0) throw Error("orbits_fixed_transfer: window must contain 0");
    const PrimeField& F = m.complex.field();
    GComplex e = positive_half(F, m.order, s_hi);
    GComplex ed = dual_half(F, m.order, s_lo);
    TateComplexData orbits = tensor_over_group(e, m, TotalConvention::Sum);
    TateComplexData fixed = tensor_over_group(ed, m, TotalConvention::Sum);

    // transfer: norm on the s = 0 cells
    std::map<int, FpMat> comps;
    std::vector<uint32_t> nelt = norm_elt(F, m.order);
    for (const auto& [n, dim] : orbits.total.complex.space().dims) {
        FpMat mat(F, fixed.total.complex.dim(n), dim);
        const TotalBlock* src = orbits.total.find_block(n, 0);
        const TotalBlock* dst = fixed.total.find_block(n, 0);
        if (src && dst) {
            FpMat nm = induced_on_coinvariants(nelt, m.action_at(src->t), F, m.order);
            for (size_t j = 0; j < nm.cols(); ++j)
                for (const auto& [i, v] : nm.col(j))
                    mat.add_at(dst->offset + i, src->offset + j, v);
        }
        if (!mat.is_zero()) comps.emplace(n, std::move(mat));
    }
    ChainMap tr(orbits.total.complex, fixed.total.complex, std::move(comps), true);
    return OrbitsFixedTransfer{std::move(orbits), std::move(fixed), std::move(tr)};
}

} // namespace tatehh
