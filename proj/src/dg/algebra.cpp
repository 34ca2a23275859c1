#include "dg/algebra.hpp"

#include <sstream>

namespace tatehh {

SparseVec DgAlgebra::mul_vec(const SparseVec& x, const SparseVec& y) const {
    SparseAcc acc(F);
    for (const auto& [i, cx] : x)
        for (const auto& [j, cy] : y) acc.add_scaled(mult[i][j], F.mul(cx, cy));
    return acc.take();
}

SparseVec DgAlgebra::d_vec(const SparseVec& x) const {
    SparseAcc acc(F);
    for (const auto& [i, c] : x)
        for (const auto& [k, v] : diff.col(i)) acc.add(k, F.mul(v, c));
    return acc.take();
}

std::string ValidationReport::summary() const {
    if (ok()) return "valid";
    std::ostringstream os;
    os << violations.size() << " violation(s):";
    for (const auto& v : violations) os << "\n  - " << v;
    return os.str();
}

namespace {

bool vec_eq(const SparseVec& a, const SparseVec& b) { return a == b; }

SparseVec unit_vec(size_t i) { return SparseVec{{static_cast<uint32_t>(i), 1}}; }

} // namespace

FpMat degree_sign_operator(const PrimeField& F, const std::vector<int>& degrees) {
    FpMat s(F, degrees.size(), degrees.size());
    for (size_t i = 0; i < degrees.size(); ++i) s.add_at(i, i, F.sign(degrees[i]));
    return s;
}

ValidationReport validate(const DgAlgebra& a) {
    ValidationReport rep;
    auto bad = [&](const std::string& s) { rep.violations.push_back(s); };
    size_t n = a.dim();
    if (a.unit >= n) {
        bad("unit index out of range");
        return rep;
    }
    if (a.degree[a.unit] != 0) bad("unit has nonzero degree");
    for (size_t i = 0; i < n; ++i)
        if (a.degree[i] < 0)
            bad("basis element " + a.labels[i] + " has negative degree");

    // unit is two-sided
    for (size_t j = 0; j < n; ++j) {
        if (!vec_eq(a.mul(a.unit, j), unit_vec(j)))
            bad("unit fails on the left of " + a.labels[j]);
        if (!vec_eq(a.mul(j, a.unit), unit_vec(j)))
            bad("unit fails on the right of " + a.labels[j]);
    }
    // grading of products and differential
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (const auto& [k, c] : a.mul(i, j))
                if (a.degree[k] != a.degree[i] + a.degree[j]) {
                    bad("product " + a.labels[i] + "*" + a.labels[j] + " breaks the grading");
                    break;
                }
    for (size_t i = 0; i < n; ++i)
        for (const auto& [k, c] : a.diff.col(i))
            if (a.degree[k] != a.degree[i] - 1) {
                bad("differential of " + a.labels[i] + " is not of degree -1");
                break;
            }
    // associativity on basis triples
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                SparseVec lhs = a.mul_vec(a.mul(i, j), unit_vec(k));
                SparseVec rhs = a.mul_vec(unit_vec(i), a.mul(j, k));
                if (!vec_eq(lhs, rhs))
                    bad("associativity fails on (" + a.labels[i] + ", " + a.labels[j] + ", " +
                        a.labels[k] + ")");
            }
    // Leibniz on basis pairs
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            SparseVec lhs = a.d_vec(a.mul(i, j));
            SparseAcc acc(a.F);
            for (const auto& [k, c] : a.diff.col(i)) acc.add_scaled(a.mul(k, j), c);
            uint32_t sgn = a.F.sign(a.degree[i]);
            for (const auto& [k, c] : a.diff.col(j))
                acc.add_scaled(a.mul(i, k), a.F.mul(sgn, c));
            if (!vec_eq(lhs, acc.take()))
                bad("Leibniz fails on (" + a.labels[i] + ", " + a.labels[j] + ")");
        }
    if (!(a.diff * a.diff).is_zero()) bad("d^2 != 0 on the algebra");
    return rep;
}

ValidationReport validate(const DgAlgebra& a, const DgBimodule& m) {
    ValidationReport rep;
    auto bad = [&](const std::string& s) { rep.violations.push_back(s); };
    size_t n = a.dim(), dm = m.dim();
    if (m.left.size() != n || m.right.size() != n) {
        bad("action tables do not match the algebra dimension");
        return rep;
    }
    if (m.F != a.F) {
        bad("modulus mismatch between algebra and module");
        return rep;
    }
    FpMat id = FpMat::identity(m.F, dm);
    if (m.left[a.unit] != id) bad("unit does not act as identity on the left");
    if (m.right[a.unit] != id) bad("unit does not act as identity on the right");

    // gradings
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < dm; ++j) {
            for (const auto& [k, c] : m.left[i].col(j))
                if (m.degree[k] != m.degree[j] + a.degree[i]) {
                    bad("left action of " + a.labels[i] + " breaks the grading");
                    break;
                }
            for (const auto& [k, c] : m.right[i].col(j))
                if (m.degree[k] != m.degree[j] + a.degree[i]) {
                    bad("right action of " + a.labels[i] + " breaks the grading");
                    break;
                }
        }
    for (size_t j = 0; j < dm; ++j)
        for (const auto& [k, c] : m.diff.col(j))
            if (m.degree[k] != m.degree[j] - 1) {
                bad("module differential is not of degree -1");
                break;
            }

    // module axioms: L_{e_i} L_{e_j} = L_{e_i e_j}, R_{e_j} R_{e_i} = R_{e_i e_j}
    auto combo = [&](const std::vector<FpMat>& ops, const SparseVec& v) {
        FpMat out(m.F, dm, dm);
        for (const auto& [k, c] : v) out = out + ops[k].scaled(c);
        return out;
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (m.left[i] * m.left[j] != combo(m.left, a.mul(i, j)))
                bad("left action fails associativity on (" + a.labels[i] + ", " + a.labels[j] + ")");
            if (m.right[j] * m.right[i] != combo(m.right, a.mul(i, j)))
                bad("right action fails associativity on (" + a.labels[i] + ", " + a.labels[j] +
                    ")");
            if (m.left[i] * m.right[j] != m.right[j] * m.left[i])
                bad("left and right actions of (" + a.labels[i] + ", " + a.labels[j] +
                    ") do not commute");
        }
    // Leibniz: d(am) = (da)m + (-1)^{|a|} a dm ; d(ma) = (dm)a + (-1)^{|m|} m (da)
    FpMat sigma = degree_sign_operator(m.F, m.degree);
    for (size_t i = 0; i < n; ++i) {
        FpMat lhs = m.diff * m.left[i];
        FpMat rhs = combo(m.left, a.diff.col(i)) +
                    (m.left[i] * m.diff).scaled(a.degree[i] % 2 ? -1 : 1);
        if (lhs != rhs) bad("left Leibniz fails for " + a.labels[i]);
        FpMat lhs2 = m.diff * m.right[i];
        FpMat rhs2 = m.right[i] * m.diff + combo(m.right, a.diff.col(i)) * sigma;
        if (lhs2 != rhs2) bad("right Leibniz fails for " + a.labels[i]);
    }
    if (!(m.diff * m.diff).is_zero()) bad("d^2 != 0 on the module");
    return rep;
}

DgBimodule bimodule_from_algebra(const DgAlgebra& a) {
    size_t n = a.dim();
    DgBimodule m(a.F, n, n);
    m.name = a.name;
    m.labels = a.labels;
    m.degree = a.degree;
    m.diff = a.diff;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            for (const auto& [k, c] : a.mul(i, j)) m.left[i].add_at(k, j, c);
            for (const auto& [k, c] : a.mul(j, i)) m.right[i].add_at(k, j, c);
        }
    return m;
}

DgAlgebra opposite(const DgAlgebra& a) {
    size_t n = a.dim();
    DgAlgebra op(a.F, n);
    op.name = a.name + "^op";
    op.labels = a.labels;
    op.degree = a.degree;
    op.unit = a.unit;
    op.diff = a.diff;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            SparseVec v = a.mul(j, i);
            uint32_t sgn = a.F.sign(static_cast<long long>(a.degree[i]) * a.degree[j]);
            if (sgn != 1)
                for (auto& [k, c] : v) c = a.F.mul(c, sgn);
            op.mult[i][j] = std::move(v);
        }
    return op;
}

DgAlgebra tensor_algebra(const DgAlgebra& a, const DgAlgebra& b) {
    if (a.F != b.F) throw Error("tensor_algebra: modulus mismatch");
    size_t na = a.dim(), nb = b.dim(), n = na * nb;
    DgAlgebra t(a.F, n);
    t.name = a.name + "(x)" + b.name;
    auto idx = [&](size_t i, size_t j) { return i * nb + j; };
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < nb; ++j) {
            t.labels[idx(i, j)] = a.labels[i] + "(x)" + b.labels[j];
            t.degree[idx(i, j)] = a.degree[i] + b.degree[j];
        }
    t.unit = idx(a.unit, b.unit);
    // (x0 (x) x1)(y0 (x) y1) = (-1)^{|x1||y0|} x0 y0 (x) x1 y1
    for (size_t i0 = 0; i0 < na; ++i0)
        for (size_t i1 = 0; i1 < nb; ++i1)
            for (size_t j0 = 0; j0 < na; ++j0)
                for (size_t j1 = 0; j1 < nb; ++j1) {
                    uint32_t sgn =
                        a.F.sign(static_cast<long long>(b.degree[i1]) * a.degree[j0]);
                    SparseAcc acc(a.F);
                    for (const auto& [k0, c0] : a.mul(i0, j0))
                        for (const auto& [k1, c1] : b.mul(i1, j1))
                            acc.add(idx(k0, k1), a.F.mul(sgn, a.F.mul(c0, c1)));
                    t.mult[idx(i0, i1)][idx(j0, j1)] = acc.take();
                }
    // d(x (x) y) = dx (x) y + (-1)^{|x|} x (x) dy
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < nb; ++j) {
            for (const auto& [k, c] : a.diff.col(i)) t.diff.add_at(idx(k, j), idx(i, j), c);
            uint32_t sgn = a.F.sign(a.degree[i]);
            for (const auto& [k, c] : b.diff.col(j))
                t.diff.add_at(idx(i, k), idx(i, j), static_cast<long long>(a.F.mul(sgn, c)));
        }
    return t;
}

DgAlgebra enveloping(const DgAlgebra& a) {
    DgAlgebra e = tensor_algebra(a, opposite(a));
    e.name = a.name + "^e";
    return e;
}

DgBimodule bimodule_over_enveloping(const DgAlgebra& a, const DgBimodule& m) {
    size_t na = a.dim(), dm = m.dim();
    DgBimodule out(a.F, dm, na * na);
    out.name = m.name + " over " + a.name + "^e";
    out.labels = m.labels;
    out.degree = m.degree;
    out.diff = m.diff;
    FpMat sigma = degree_sign_operator(m.F, m.degree);
    auto idx = [&](size_t i, size_t j) { return i * na + j; };
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < na; ++j) {
            // (x (x) y) . m = (-1)^{|y||m|} x m y
            FpMat l = m.left[i] * m.right[j];
            if (a.degree[j] % 2) l = l * sigma;
            out.left[idx(i, j)] = std::move(l);
            // m . (x (x) y) = (-1)^{|y|(|m|+|x|)} y m x
            FpMat r = (m.left[j] * m.right[i]);
            if (a.degree[j] % 2) r = r * sigma;
            uint32_t sgn = a.F.sign(static_cast<long long>(a.degree[j]) * a.degree[i]);
            out.right[idx(i, j)] = r.scaled(static_cast<long long>(sgn));
        }
    return out;
}

DgBimodule outer_product(const DgAlgebra& a, const DgBimodule& n, const DgBimodule& m) {
    size_t dn = n.dim(), dm = m.dim();
    DgBimodule out(a.F, dn * dm, a.dim());
    out.name = n.name + "(x)" + m.name;
    auto idx = [&](size_t i, size_t j) { return i * dm + j; };
    for (size_t i = 0; i < dn; ++i)
        for (size_t j = 0; j < dm; ++j) {
            out.labels[idx(i, j)] = n.labels[i] + "(x)" + m.labels[j];
            out.degree[idx(i, j)] = n.degree[i] + m.degree[j];
        }
    for (size_t e = 0; e < a.dim(); ++e) {
        // a(n (x) m) = (an) (x) m
        for (size_t i = 0; i < dn; ++i)
            for (const auto& [k, c] : n.left[e].col(i))
                for (size_t j = 0; j < dm; ++j) out.left[e].add_at(idx(k, j), idx(i, j), c);
        // (n (x) m)a = n (x) (ma): the action enters at the last slot, no sign
        for (size_t j = 0; j < dm; ++j)
            for (const auto& [k, c] : m.right[e].col(j))
                for (size_t i = 0; i < dn; ++i) out.right[e].add_at(idx(i, k), idx(i, j), c);
    }
    // d(n (x) m) = dn (x) m + (-1)^{|n|} n (x) dm
    for (size_t i = 0; i < dn; ++i)
        for (size_t j = 0; j < dm; ++j) {
            for (const auto& [k, c] : n.diff.col(i)) out.diff.add_at(idx(k, j), idx(i, j), c);
            uint32_t sgn = a.F.sign(n.degree[i]);
            for (const auto& [k, c] : m.diff.col(j))
                out.diff.add_at(idx(i, k), idx(i, j), static_cast<long long>(a.F.mul(sgn, c)));
        }
    return out;
}

DgBimodule restrict_bimodule(const DgAlgebra& a, const DgBimodule& m, const FpMat& basis) {
    size_t k = basis.cols();
    DgBimodule out(a.F, k, a.dim());
    out.name = m.name + " (restricted)";
    for (size_t j = 0; j < k; ++j) {
        // degree of a basis column: degree of its first nonzero coordinate
        if (basis.col(j).empty()) throw Error("restrict_bimodule: zero basis column");
        int deg = m.degree[basis.col(j).front().first];
        for (const auto& [i, c] : basis.col(j))
            if (m.degree[i] != deg)
                throw Error("restrict_bimodule: basis column mixes degrees");
        out.degree[j] = deg;
        out.labels[j] = m.name + "[" + std::to_string(j) + "]";
    }
    auto restricted = [&](const FpMat& op) { return express_in_basis(basis, op * basis); };
    for (size_t e = 0; e < a.dim(); ++e) {
        out.left[e] = restricted(m.left[e]);
        out.right[e] = restricted(m.right[e]);
    }
    out.diff = restricted(m.diff);
    return out;
}

GradedIndex graded_index(const std::vector<int>& degrees) {
    GradedIndex gi;
    gi.locate.resize(degrees.size());
    for (size_t i = 0; i < degrees.size(); ++i) {
        auto& v = gi.flat_by_degree[degrees[i]];
        gi.locate[i] = {degrees[i], v.size()};
        v.push_back(i);
    }
    return gi;
}

} // namespace tatehh
