#pragma once

#include "fp/prime_field.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tatehh {

struct Triplet {
    size_t row, col;
    long long val;
};

// Exact matrix over F_p. Storage is sparse column-major; operations that
// benefit from it (elimination on small dense inputs) switch to a dense
// working copy when the density exceeds a configurable threshold.
class FpMat {
public:
    using Entry = std::pair<uint32_t, uint32_t>; // (row, value), rows ascending

    FpMat() : F_(2), rows_(0), cols_(0) {} // empty placeholder
    FpMat(PrimeField F, size_t rows, size_t cols);
    static FpMat identity(PrimeField F, size_t n);
    static FpMat from_rows(PrimeField F, const std::vector<std::vector<long long>>& rows);
    static FpMat from_triplets(PrimeField F, size_t rows, size_t cols,
                               const std::vector<Triplet>& ts);

    const PrimeField& field() const { return F_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    uint32_t at(size_t r, size_t c) const;
    void add_at(size_t r, size_t c, long long v); // accumulate during construction
    const std::vector<Entry>& col(size_t j) const { return cols_data_[j]; }
    void set_col(size_t j, std::vector<Entry> entries); // sorted, reduced, nonzero

    size_t nnz() const;
    double density() const;
    bool is_zero() const;
    bool operator==(const FpMat& o) const;
    bool operator!=(const FpMat& o) const { return !(*this == o); }

    FpMat operator*(const FpMat& o) const;
    FpMat operator+(const FpMat& o) const;
    FpMat operator-(const FpMat& o) const;
    FpMat scaled(long long c) const;
    FpMat transpose() const;
    FpMat hstack(const FpMat& o) const;
    FpMat vstack(const FpMat& o) const;
    // columns [c0, c1) as a new matrix
    FpMat col_slice(size_t c0, size_t c1) const;

    std::vector<uint32_t> apply(std::span<const uint32_t> v) const;
    // sparse column vector in, sparse out
    std::vector<Entry> apply_sparse(const std::vector<Entry>& v) const;

    struct Rref;
    // the unique reduced row echelon form
    Rref rref() const;
    size_t rank() const;
    // columns form a basis of ker; count = cols - rank
    FpMat kernel_basis() const;
    // columns form a basis of the column space (subset of original columns)
    FpMat image_basis() const;
    // some x with this*x = b, or nullopt if b is not in the image.
    // Dimension mismatch throws std::invalid_argument.
    std::optional<std::vector<uint32_t>> solve(std::span<const uint32_t> b) const;

    // density above which elimination uses a dense working copy (default 0.25)
    static void set_dense_threshold(double t);
    static double dense_threshold();

private:
    PrimeField F_;
    size_t rows_, cols_;
    std::vector<std::vector<Entry>> cols_data_;
};

struct FpMat::Rref {
    FpMat mat;
    std::vector<size_t> pivots; // strictly increasing pivot columns
};

// ---- subspace helpers (columns of a matrix = generating vectors) ----

// dim of span of columns
size_t subspace_dim(const FpMat& gens);
// dim of span(A) + span(B)
size_t subspace_sum_dim(const FpMat& a, const FpMat& b);
// is v in the column span?
bool in_span(const FpMat& gens, std::span<const uint32_t> v);
// coordinate vectors completing span(sub) to the whole ambient space F^n;
// returns an n x k matrix whose columns are standard basis vectors
FpMat quotient_reps(const FpMat& sub, size_t ambient_dim);
// solve a·X = rhs for all columns at once (single elimination); throws if
// any column is not in the image
FpMat solve_columns(const FpMat& a, const FpMat& rhs);
// columns of `inside` expressed in the basis given by columns of `basis`
// (throws if not solvable)
FpMat express_in_basis(const FpMat& basis, const FpMat& inside);
// greedily extend span(base) by columns of extra to a basis of span(base)+span(extra);
// returns the chosen columns of extra
FpMat extend_basis(const FpMat& base, const FpMat& extra);

} // namespace tatehh
