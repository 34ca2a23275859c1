#include "dg/cyclic_power.hpp"

namespace tatehh {

FpMat rotation_matrix(PrimeField F, const std::vector<int>& degrees, size_t n) {
    std::vector<std::vector<int>> degs(n, degrees);
    TupleBasis basis(degs);
    FpMat rot(F, basis.count(), basis.count());
    for (size_t r = 0; r < basis.count(); ++r) {
        auto t = basis.tuple(r);
        long long cross = 0;
        int last = degrees[t[n - 1]];
        for (size_t j = 0; j + 1 < n; ++j) cross += degrees[t[j]];
        uint32_t sgn = F.sign(static_cast<long long>(last) * cross);
        std::vector<uint32_t> t2(n);
        t2[0] = t[n - 1];
        for (size_t j = 0; j + 1 < n; ++j) t2[j + 1] = t[j];
        rot.add_at(basis.linear(t2), r, sgn);
    }
    return rot;
}

CyclicPowerAlgebra cyclic_power(const DgAlgebra& a, size_t n, bool verify) {
    if (n < 1) throw Error("cyclic_power: power must be >= 1");
    DgAlgebra b = a;
    for (size_t j = 1; j < n; ++j) b = tensor_algebra(b, a);
    b.name = a.name + "^(x)" + std::to_string(n);
    CyclicPowerAlgebra out{std::move(b), rotation_matrix(a.F, a.degree, n), n};
    if (verify) {
        const FpMat& tau = out.rotation;
        FpMat power = FpMat::identity(a.F, tau.rows());
        for (size_t j = 0; j < n; ++j) power = tau * power;
        if (power != FpMat::identity(a.F, tau.rows()))
            throw Error("cyclic_power: rotation does not have order dividing n");
        if (tau * out.algebra.diff != out.algebra.diff * tau)
            throw Error("cyclic_power: rotation does not commute with the differential");
        // algebra map on basis pairs
        size_t dim = out.algebra.dim();
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < dim; ++j) {
                SparseAcc lhs(a.F);
                for (const auto& [k, c] : out.algebra.mul(i, j)) lhs.add_scaled(tau.col(k), c);
                SparseAcc rhs(a.F);
                for (const auto& [ti, ci] : tau.col(i))
                    for (const auto& [tj, cj] : tau.col(j))
                        rhs.add_scaled(out.algebra.mul(ti, tj), a.F.mul(ci, cj));
                if (lhs.take() != rhs.take())
                    throw Error("cyclic_power: rotation is not an algebra map at (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
            }
    }
    return out;
}

TwistedPower twisted_power(const DgBimodule& m, const DgAlgebra& a, size_t n, bool verify) {
    if (n < 1) throw Error("twisted_power: power must be >= 1");
    const PrimeField& F = a.F;
    CyclicPowerAlgebra cp = cyclic_power(a, n, false);
    const DgAlgebra& B = cp.algebra;

    std::vector<std::vector<int>> mdegs(n, m.degree);
    TupleBasis mb(mdegs);
    std::vector<std::vector<int>> adegs(n, a.degree);
    TupleBasis ab(adegs);

    DgBimodule out(F, mb.count(), B.dim());
    out.name = m.name + "^tw" + std::to_string(n);
    for (size_t r = 0; r < mb.count(); ++r) {
        auto t = mb.tuple(r);
        int deg = 0;
        std::string label;
        for (size_t j = 0; j < n; ++j) {
            deg += m.degree[t[j]];
            if (j) label += "(x)";
            label += m.labels[t[j]];
        }
        out.degree[r] = deg;
        out.labels[r] = label;
    }

    // differential: Koszul tensor rule
    for (size_t r = 0; r < mb.count(); ++r) {
        auto t = mb.tuple(r);
        long long parity = 0;
        for (size_t j = 0; j < n; ++j) {
            uint32_t sgn = F.sign(parity);
            for (const auto& [k, c] : m.diff.col(t[j])) {
                auto t2 = t;
                t2[j] = k;
                out.diff.add_at(mb.linear(t2), r, static_cast<long long>(F.mul(sgn, c)));
            }
            parity += m.degree[t[j]];
        }
    }

    // ordinary factorwise right action of b = (f_0 ... f_{n-1}):
    // sign = sum_{k<l} |f_k||m_l| (each f_k crosses the later module factors)
    auto ordinary_right = [&](const std::vector<uint32_t>& f) {
        FpMat op(F, mb.count(), mb.count());
        for (size_t r = 0; r < mb.count(); ++r) {
            auto t = mb.tuple(r);
            long long cross = 0;
            for (size_t k = 0; k < n; ++k)
                for (size_t l = k + 1; l < n; ++l)
                    cross += static_cast<long long>(a.degree[f[k]]) * m.degree[t[l]];
            uint32_t sgn = F.sign(cross);
            // product over slots of single-slot actions
            std::vector<std::pair<std::vector<uint32_t>, uint32_t>> frontier{{t, sgn}};
            for (size_t j = 0; j < n; ++j) {
                std::vector<std::pair<std::vector<uint32_t>, uint32_t>> next;
                for (const auto& [tt, cc] : frontier)
                    for (const auto& [mm, c2] : m.right[f[j]].col(tt[j])) {
                        auto t2 = tt;
                        t2[j] = mm;
                        next.push_back({std::move(t2), F.mul(cc, c2)});
                    }
                frontier = std::move(next);
            }
            for (const auto& [tt, cc] : frontier) op.add_at(mb.linear(tt), r, cc);
        }
        return op;
    };
    // ordinary factorwise left action: sign = sum_{k<l} |f_l||m_k|
    auto ordinary_left = [&](const std::vector<uint32_t>& f) {
        FpMat op(F, mb.count(), mb.count());
        for (size_t r = 0; r < mb.count(); ++r) {
            auto t = mb.tuple(r);
            long long cross = 0;
            for (size_t k = 0; k < n; ++k)
                for (size_t l = k + 1; l < n; ++l)
                    cross += static_cast<long long>(a.degree[f[l]]) * m.degree[t[k]];
            uint32_t sgn = F.sign(cross);
            std::vector<std::pair<std::vector<uint32_t>, uint32_t>> frontier{{t, sgn}};
            for (size_t j = 0; j < n; ++j) {
                std::vector<std::pair<std::vector<uint32_t>, uint32_t>> next;
                for (const auto& [tt, cc] : frontier)
                    for (const auto& [mm, c2] : m.left[f[j]].col(tt[j])) {
                        auto t2 = tt;
                        t2[j] = mm;
                        next.push_back({std::move(t2), F.mul(cc, c2)});
                    }
                frontier = std::move(next);
            }
            for (const auto& [tt, cc] : frontier) op.add_at(mb.linear(tt), r, cc);
        }
        return op;
    };

    for (size_t bi = 0; bi < B.dim(); ++bi) {
        auto f = ab.tuple(bi);
        out.right[bi] = ordinary_right(f);
        // left action twisted: act by tau(b)
        FpMat op(F, mb.count(), mb.count());
        for (const auto& [bj, c] : cp.rotation.col(bi)) {
            FpMat part = ordinary_left(ab.tuple(bj));
            op = op + part.scaled(static_cast<long long>(c));
        }
        out.left[bi] = std::move(op);
    }

    FpMat twist = rotation_matrix(F, m.degree, n);
    if (verify) {
        FpMat power = FpMat::identity(F, twist.rows());
        for (size_t j = 0; j < n; ++j) power = twist * power;
        if (power != FpMat::identity(F, twist.rows()))
            throw Error("twisted_power: twist does not have order dividing n");
        if (twist * out.diff != out.diff * twist)
            throw Error("twisted_power: twist does not commute with the differential");
        // equivariance: twist ∘ (action of x) = (action of tau x) ∘ twist
        for (size_t bi = 0; bi < B.dim(); ++bi) {
            FpMat lhs_l = twist * out.left[bi];
            FpMat rhs_l(F, mb.count(), mb.count());
            FpMat lhs_r = twist * out.right[bi];
            FpMat rhs_r(F, mb.count(), mb.count());
            for (const auto& [bj, c] : cp.rotation.col(bi)) {
                rhs_l = rhs_l + (out.left[bj] * twist).scaled(static_cast<long long>(c));
                rhs_r = rhs_r + (out.right[bj] * twist).scaled(static_cast<long long>(c));
            }
            if (lhs_l != rhs_l)
                throw Error("twisted_power: twist is not equivariant for the left action");
            if (lhs_r != rhs_r)
                throw Error("twisted_power: twist is not equivariant for the right action");
        }
    }
    return TwistedPower{std::move(out), std::move(twist), n};
}

} // namespace tatehh
