#include "fp/matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tatehh {

namespace {
double g_dense_threshold = 0.25;
constexpr size_t kDenseCap = 1u << 22; // entries; beyond this stay sparse
} // namespace

void FpMat::set_dense_threshold(double t) { g_dense_threshold = t; }
double FpMat::dense_threshold() { return g_dense_threshold; }

FpMat::FpMat(PrimeField F, size_t rows, size_t cols)
    : F_(F), rows_(rows), cols_(cols), cols_data_(cols) {}

FpMat FpMat::identity(PrimeField F, size_t n) {
    FpMat m(F, n, n);
    for (size_t i = 0; i < n; ++i) m.cols_data_[i] = {{static_cast<uint32_t>(i), 1}};
    return m;
}

FpMat FpMat::from_rows(PrimeField F, const std::vector<std::vector<long long>>& rows) {
    size_t r = rows.size();
    size_t c = r == 0 ? 0 : rows[0].size();
    FpMat m(F, r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged row data");
        for (size_t j = 0; j < c; ++j) m.add_at(i, j, rows[i][j]);
    }
    return m;
}

FpMat FpMat::from_triplets(PrimeField F, size_t rows, size_t cols,
                           const std::vector<Triplet>& ts) {
    FpMat m(F, rows, cols);
    for (const auto& t : ts) m.add_at(t.row, t.col, t.val);
    return m;
}

uint32_t FpMat::at(size_t r, size_t c) const {
    const auto& col = cols_data_[c];
    auto it = std::lower_bound(col.begin(), col.end(), Entry{static_cast<uint32_t>(r), 0},
                               [](const Entry& a, const Entry& b) { return a.first < b.first; });
    if (it != col.end() && it->first == r) return it->second;
    return 0;
}

void FpMat::add_at(size_t r, size_t c, long long v) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
    uint32_t val = F_.reduce(v);
    if (val == 0 && at(r, c) == 0) return;
    auto& col = cols_data_[c];
    auto it = std::lower_bound(col.begin(), col.end(), Entry{static_cast<uint32_t>(r), 0},
                               [](const Entry& a, const Entry& b) { return a.first < b.first; });
    if (it != col.end() && it->first == r) {
        it->second = F_.add(it->second, val);
        if (it->second == 0) col.erase(it);
    } else if (val != 0) {
        col.insert(it, {static_cast<uint32_t>(r), val});
    }
}

void FpMat::set_col(size_t j, std::vector<Entry> entries) { cols_data_[j] = std::move(entries); }

size_t FpMat::nnz() const {
    size_t n = 0;
    for (const auto& c : cols_data_) n += c.size();
    return n;
}

double FpMat::density() const {
    size_t total = rows_ * cols_;
    return total == 0 ? 0.0 : static_cast<double>(nnz()) / static_cast<double>(total);
}

bool FpMat::is_zero() const { return nnz() == 0; }

bool FpMat::operator==(const FpMat& o) const {
    return F_ == o.F_ && rows_ == o.rows_ && cols_ == o.cols_ && cols_data_ == o.cols_data_;
}

FpMat FpMat::operator*(const FpMat& o) const {
    if (F_ != o.F_) throw std::invalid_argument("modulus mismatch");
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in product");
    FpMat r(F_, rows_, o.cols_);
    std::vector<uint32_t> acc(rows_, 0);
    for (size_t j = 0; j < o.cols_; ++j) {
        std::fill(acc.begin(), acc.end(), 0);
        bool any = false;
        for (const auto& [k, v] : o.cols_data_[j]) {
            for (const auto& [i, w] : cols_data_[k]) {
                acc[i] = F_.add(acc[i], F_.mul(v, w));
                any = true;
            }
        }
        if (!any) continue;
        std::vector<Entry> col;
        for (size_t i = 0; i < rows_; ++i)
            if (acc[i]) col.push_back({static_cast<uint32_t>(i), acc[i]});
        r.cols_data_[j] = std::move(col);
    }
    return r;
}

FpMat FpMat::operator+(const FpMat& o) const {
    if (F_ != o.F_ || rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("shape mismatch in sum");
    FpMat r(F_, rows_, cols_);
    for (size_t j = 0; j < cols_; ++j) {
        std::vector<Entry> merged;
        const auto& a = cols_data_[j];
        const auto& b = o.cols_data_[j];
        size_t ia = 0, ib = 0;
        while (ia < a.size() || ib < b.size()) {
            if (ib == b.size() || (ia < a.size() && a[ia].first < b[ib].first)) {
                merged.push_back(a[ia++]);
            } else if (ia == a.size() || b[ib].first < a[ia].first) {
                merged.push_back(b[ib++]);
            } else {
                uint32_t s = F_.add(a[ia].second, b[ib].second);
                if (s) merged.push_back({a[ia].first, s});
                ++ia, ++ib;
            }
        }
        r.cols_data_[j] = std::move(merged);
    }
    return r;
}

FpMat FpMat::operator-(const FpMat& o) const { return *this + o.scaled(-1); }

FpMat FpMat::scaled(long long c) const {
    uint32_t v = F_.reduce(c);
    FpMat r(F_, rows_, cols_);
    if (v == 0) return r;
    for (size_t j = 0; j < cols_; ++j) {
        auto col = cols_data_[j];
        for (auto& e : col) e.second = F_.mul(e.second, v);
        r.cols_data_[j] = std::move(col);
    }
    return r;
}

FpMat FpMat::transpose() const {
    FpMat r(F_, cols_, rows_);
    for (size_t j = 0; j < cols_; ++j)
        for (const auto& [i, v] : cols_data_[j])
            r.cols_data_[i].push_back({static_cast<uint32_t>(j), v});
    return r;
}

FpMat FpMat::hstack(const FpMat& o) const {
    if (F_ != o.F_ || rows_ != o.rows_) throw std::invalid_argument("hstack shape mismatch");
    FpMat r(F_, rows_, cols_ + o.cols_);
    for (size_t j = 0; j < cols_; ++j) r.cols_data_[j] = cols_data_[j];
    for (size_t j = 0; j < o.cols_; ++j) r.cols_data_[cols_ + j] = o.cols_data_[j];
    return r;
}

FpMat FpMat::vstack(const FpMat& o) const {
    if (F_ != o.F_ || cols_ != o.cols_) throw std::invalid_argument("vstack shape mismatch");
    FpMat r(F_, rows_ + o.rows_, cols_);
    for (size_t j = 0; j < cols_; ++j) {
        auto col = cols_data_[j];
        for (const auto& [i, v] : o.cols_data_[j])
            col.push_back({static_cast<uint32_t>(i + rows_), v});
        r.cols_data_[j] = std::move(col);
    }
    return r;
}

FpMat FpMat::col_slice(size_t c0, size_t c1) const {
    if (c0 > c1 || c1 > cols_) throw std::out_of_range("col_slice");
    FpMat r(F_, rows_, c1 - c0);
    for (size_t j = c0; j < c1; ++j) r.cols_data_[j - c0] = cols_data_[j];
    return r;
}

std::vector<uint32_t> FpMat::apply(std::span<const uint32_t> v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: length mismatch");
    std::vector<uint32_t> out(rows_, 0);
    for (size_t j = 0; j < cols_; ++j) {
        if (v[j] == 0) continue;
        for (const auto& [i, w] : cols_data_[j]) out[i] = F_.add(out[i], F_.mul(w, v[j]));
    }
    return out;
}

std::vector<FpMat::Entry> FpMat::apply_sparse(const std::vector<Entry>& v) const {
    std::map<uint32_t, uint32_t> acc;
    for (const auto& [j, c] : v) {
        for (const auto& [i, w] : cols_data_[j]) {
            uint32_t& slot = acc[i];
            slot = F_.add(slot, F_.mul(w, c));
        }
    }
    std::vector<Entry> out;
    for (const auto& [i, val] : acc)
        if (val) out.push_back({i, val});
    return out;
}

// ---- elimination ----

namespace {

using Row = std::vector<std::pair<uint32_t, uint32_t>>; // (col, val), cols ascending

// row -= c * pivot, merging sorted entries
Row row_axpy(const PrimeField& F, const Row& row, uint32_t c, const Row& pivot) {
    Row out;
    out.reserve(row.size() + pivot.size());
    size_t ia = 0, ib = 0;
    while (ia < row.size() || ib < pivot.size()) {
        if (ib == pivot.size() || (ia < row.size() && row[ia].first < pivot[ib].first)) {
            out.push_back(row[ia++]);
        } else if (ia == row.size() || pivot[ib].first < row[ia].first) {
            uint32_t v = F.neg(F.mul(c, pivot[ib].second));
            if (v) out.push_back({pivot[ib].first, v});
            ++ib;
        } else {
            uint32_t v = F.sub(row[ia].second, F.mul(c, pivot[ib].second));
            if (v) out.push_back({row[ia].first, v});
            ++ia, ++ib;
        }
    }
    return out;
}

struct EchelonResult {
    std::vector<Row> pivot_rows;       // normalized, sorted by pivot column
    std::vector<size_t> pivot_cols;    // strictly increasing
};

EchelonResult sparse_rref_rows(const PrimeField& F, std::vector<Row> rows, bool reduced = true) {
    std::map<uint32_t, Row> pivots; // pivot col -> normalized row
    for (auto& row : rows) {
        while (!row.empty()) {
            uint32_t lead = row[0].first;
            auto it = pivots.find(lead);
            if (it == pivots.end()) {
                uint32_t inv = F.inv(row[0].second);
                for (auto& e : row) e.second = F.mul(e.second, inv);
                pivots.emplace(lead, std::move(row));
                break;
            }
            row = row_axpy(F, row, row[0].second, it->second);
        }
    }
    if (!reduced) {
        EchelonResult out;
        for (auto& [pc, row] : pivots) {
            out.pivot_cols.push_back(pc);
            out.pivot_rows.push_back(std::move(row));
        }
        return out;
    }
    // back-eliminate to reach the reduced form
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        uint32_t pc = it->first;
        for (auto jt = pivots.begin(); jt != pivots.end() && jt->first < pc; ++jt) {
            auto& row = jt->second;
            auto e = std::lower_bound(row.begin(), row.end(), std::pair<uint32_t, uint32_t>{pc, 0},
                                      [](const auto& a, const auto& b) { return a.first < b.first; });
            if (e != row.end() && e->first == pc) jt->second = row_axpy(F, row, e->second, it->second);
        }
    }
    EchelonResult out;
    for (auto& [pc, row] : pivots) {
        out.pivot_cols.push_back(pc);
        out.pivot_rows.push_back(std::move(row));
    }
    return out;
}

EchelonResult dense_rref_rows(const PrimeField& F, size_t nrows, size_t ncols,
                              std::vector<uint32_t> a /* row-major */) {
    std::vector<size_t> pivot_cols;
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < nrows; ++c) {
        size_t sel = r;
        while (sel < nrows && a[sel * ncols + c] == 0) ++sel;
        if (sel == nrows) continue;
        if (sel != r)
            for (size_t j = c; j < ncols; ++j) std::swap(a[sel * ncols + j], a[r * ncols + j]);
        uint32_t inv = F.inv(a[r * ncols + c]);
        for (size_t j = c; j < ncols; ++j) a[r * ncols + j] = F.mul(a[r * ncols + j], inv);
        for (size_t i = 0; i < nrows; ++i) {
            if (i == r) continue;
            uint32_t f = a[i * ncols + c];
            if (!f) continue;
            for (size_t j = c; j < ncols; ++j)
                a[i * ncols + j] = F.sub(a[i * ncols + j], F.mul(f, a[r * ncols + j]));
        }
        pivot_cols.push_back(c);
        ++r;
    }
    EchelonResult out;
    out.pivot_cols = pivot_cols;
    for (size_t i = 0; i < pivot_cols.size(); ++i) {
        Row row;
        for (size_t j = 0; j < ncols; ++j)
            if (a[i * ncols + j]) row.push_back({static_cast<uint32_t>(j), a[i * ncols + j]});
        out.pivot_rows.push_back(std::move(row));
    }
    return out;
}

EchelonResult echelon(const FpMat& m, bool reduced = true) {
    size_t total = m.rows() * m.cols();
    if (total > 0 && total <= kDenseCap && m.density() > FpMat::dense_threshold()) {
        std::vector<uint32_t> a(total, 0);
        for (size_t j = 0; j < m.cols(); ++j)
            for (const auto& [i, v] : m.col(j)) a[i * m.cols() + j] = v;
        return dense_rref_rows(m.field(), m.rows(), m.cols(), std::move(a));
    }
    std::vector<Row> rows(m.rows());
    for (size_t j = 0; j < m.cols(); ++j)
        for (const auto& [i, v] : m.col(j)) rows[i].push_back({static_cast<uint32_t>(j), v});
    return sparse_rref_rows(m.field(), std::move(rows), reduced);
}

} // namespace

FpMat::Rref FpMat::rref() const {
    EchelonResult e = echelon(*this);
    FpMat r(F_, rows_, cols_);
    for (size_t i = 0; i < e.pivot_rows.size(); ++i)
        for (const auto& [j, v] : e.pivot_rows[i])
            r.cols_data_[j].push_back({static_cast<uint32_t>(i), v});
    return {std::move(r), std::move(e.pivot_cols)};
}

size_t FpMat::rank() const { return echelon(*this, /*reduced=*/false).pivot_cols.size(); }

FpMat FpMat::kernel_basis() const {
    EchelonResult e = echelon(*this);
    std::vector<bool> is_pivot(cols_, false);
    std::vector<size_t> pivot_index(cols_, 0);
    for (size_t i = 0; i < e.pivot_cols.size(); ++i) {
        is_pivot[e.pivot_cols[i]] = true;
        pivot_index[e.pivot_cols[i]] = i;
    }
    size_t k = cols_ - e.pivot_cols.size();
    FpMat ker(F_, cols_, k);
    size_t out = 0;
    for (size_t fc = 0; fc < cols_; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Entry> col;
        // x_fc = 1, x_{pivot col of row i} = -R[i][fc]
        for (size_t i = 0; i < e.pivot_rows.size(); ++i) {
            const auto& row = e.pivot_rows[i];
            auto it = std::lower_bound(row.begin(), row.end(),
                                       std::pair<uint32_t, uint32_t>{static_cast<uint32_t>(fc), 0},
                                       [](const auto& a, const auto& b) { return a.first < b.first; });
            if (it != row.end() && it->first == fc)
                col.push_back({static_cast<uint32_t>(e.pivot_cols[i]), F_.neg(it->second)});
        }
        col.push_back({static_cast<uint32_t>(fc), 1});
        std::sort(col.begin(), col.end());
        ker.cols_data_[out++] = std::move(col);
    }
    return ker;
}

FpMat FpMat::image_basis() const {
    auto piv = echelon(*this, /*reduced=*/false).pivot_cols;
    FpMat im(F_, rows_, piv.size());
    for (size_t j = 0; j < piv.size(); ++j) im.cols_data_[j] = cols_data_[piv[j]];
    return im;
}

std::optional<std::vector<uint32_t>> FpMat::solve(std::span<const uint32_t> b) const {
    if (b.size() != rows_) throw std::invalid_argument("solve: rhs length mismatch");
    FpMat rhs(F_, rows_, 1);
    for (size_t i = 0; i < rows_; ++i)
        if (b[i] % F_.modulus()) rhs.cols_data_[0].push_back({static_cast<uint32_t>(i), b[i] % F_.modulus()});
    FpMat aug = hstack(rhs);
    EchelonResult e = echelon(aug);
    std::vector<uint32_t> x(cols_, 0);
    for (size_t i = 0; i < e.pivot_cols.size(); ++i) {
        if (e.pivot_cols[i] == cols_) return std::nullopt; // pivot in the rhs column
        const auto& row = e.pivot_rows[i];
        // value of the pivot variable = entry in the rhs column
        if (!row.empty() && row.back().first == cols_) x[e.pivot_cols[i]] = row.back().second;
    }
    return x;
}

// ---- subspace helpers ----

size_t subspace_dim(const FpMat& gens) { return gens.rank(); }

size_t subspace_sum_dim(const FpMat& a, const FpMat& b) { return a.hstack(b).rank(); }

bool in_span(const FpMat& gens, std::span<const uint32_t> v) {
    return gens.solve(v).has_value();
}

FpMat quotient_reps(const FpMat& sub, size_t ambient_dim) {
    // pivot rows of the column space of `sub` are the leading coordinates;
    // the complementary coordinates represent a basis of the quotient
    auto e = sub.transpose().rref();
    std::vector<bool> leading(ambient_dim, false);
    for (size_t c : e.pivots) leading[c] = true;
    size_t k = ambient_dim - e.pivots.size();
    FpMat reps(sub.field(), ambient_dim, k);
    size_t out = 0;
    for (size_t i = 0; i < ambient_dim; ++i)
        if (!leading[i]) reps.set_col(out++, {{static_cast<uint32_t>(i), 1}});
    return reps;
}

FpMat solve_columns(const FpMat& a, const FpMat& rhs) {
    if (a.rows() != rhs.rows()) throw std::invalid_argument("solve_columns: shape mismatch");
    FpMat aug = a.hstack(rhs);
    auto e = aug.rref();
    FpMat out(a.field(), a.cols(), rhs.cols());
    for (size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] >= a.cols())
            throw std::invalid_argument("solve_columns: column " +
                                        std::to_string(e.pivots[i] - a.cols()) +
                                        " outside the image");
    }
    // row i of the rref corresponds to pivot variable pivots[i]; its entries
    // in the rhs block are the solution coordinates
    FpMat rt = e.mat.transpose(); // rows as columns for easy scanning
    for (size_t i = 0; i < e.pivots.size(); ++i) {
        for (const auto& [col, v] : rt.col(i))
            if (col >= a.cols()) out.add_at(e.pivots[i], col - a.cols(), v);
    }
    return out;
}

FpMat express_in_basis(const FpMat& basis, const FpMat& inside) {
    return solve_columns(basis, inside);
}

FpMat extend_basis(const FpMat& base, const FpMat& extra) {
    FpMat acc = base;
    size_t r = acc.rank();
    FpMat chosen(base.field(), base.rows(), 0);
    for (size_t j = 0; j < extra.cols(); ++j) {
        FpMat cand = acc.hstack(extra.col_slice(j, j + 1));
        size_t r2 = cand.rank();
        if (r2 > r) {
            chosen = chosen.hstack(extra.col_slice(j, j + 1));
            acc = std::move(cand);
            r = r2;
        }
    }
    return chosen;
}

} // namespace tatehh
