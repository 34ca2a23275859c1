#pragma once

#include "common.hpp"
#include "fp/matrix.hpp"
#include "fp/sparsevec.hpp"

#include <map>
#include <string>
#include <vector>

namespace tatehh {

// Finite-dimensional DG algebra over F_p given by structure constants.
// The unit is a designated basis vector; internal degrees are >= 0 and the
// differential has degree -1.
struct DgAlgebra {
    PrimeField F;
    std::string name;
    std::vector<std::string> labels;
    std::vector<int> degree;
    size_t unit = 0;
    // mult[i][j] = coefficients of e_i * e_j
    std::vector<std::vector<SparseVec>> mult;
    FpMat diff;

    DgAlgebra(PrimeField field, size_t dim)
        : F(field), labels(dim), degree(dim, 0),
          mult(dim, std::vector<SparseVec>(dim)), diff(field, dim, dim) {}

    size_t dim() const { return degree.size(); }
    const SparseVec& mul(size_t i, size_t j) const { return mult[i][j]; }
    SparseVec mul_vec(const SparseVec& x, const SparseVec& y) const;
    SparseVec d_vec(const SparseVec& x) const;
};

// DG bimodule over a DgAlgebra, stored as action operators per algebra
// basis element: left[i] : m -> e_i m, right[i] : m -> m e_i.
struct DgBimodule {
    PrimeField F;
    std::string name;
    std::vector<std::string> labels;
    std::vector<int> degree;
    std::vector<FpMat> left;
    std::vector<FpMat> right;
    FpMat diff;

    DgBimodule(PrimeField field, size_t dim, size_t algebra_dim)
        : F(field), labels(dim), degree(dim, 0),
          left(algebra_dim, FpMat(field, dim, dim)),
          right(algebra_dim, FpMat(field, dim, dim)), diff(field, dim, dim) {}

    size_t dim() const { return degree.size(); }
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

ValidationReport validate(const DgAlgebra& a);
ValidationReport validate(const DgAlgebra& a, const DgBimodule& m);

// grading sign operator m -> (-1)^{|m|} m
FpMat degree_sign_operator(const PrimeField& F, const std::vector<int>& degrees);

// A as a bimodule over itself
DgBimodule bimodule_from_algebra(const DgAlgebra& a);
// A^op (reversed multiplication with the Koszul sign)
DgAlgebra opposite(const DgAlgebra& a);
// A (x) B with the tensor-algebra sign rule; basis index = i*dim(B)+j
DgAlgebra tensor_algebra(const DgAlgebra& a, const DgAlgebra& b);
// A (x) A^op
DgAlgebra enveloping(const DgAlgebra& a);
// a bimodule M over A viewed as a bimodule over A^e; the right action is
// m.(x (x) y) = (-1)^{|y|(|m|+|x|)} y m x and the left (x (x) y).m = (-1)^{|y||m|} x m y
DgBimodule bimodule_over_enveloping(const DgAlgebra& a, const DgBimodule& m);
// N (x) M with outer actions a(n (x) m)b = (an) (x) (mb) and Koszul signs
DgBimodule outer_product(const DgAlgebra& a, const DgBimodule& n, const DgBimodule& m);

// restrict a bimodule to an action-stable subspace spanned by the columns
// of `basis` (stability is checked when expressing the restricted operators)
DgBimodule restrict_bimodule(const DgAlgebra& a, const DgBimodule& m, const FpMat& basis);

// flat basis indices grouped by degree
struct GradedIndex {
    std::map<int, std::vector<size_t>> flat_by_degree;
    std::vector<std::pair<int, size_t>> locate; // flat -> (degree, position within degree)
};
GradedIndex graded_index(const std::vector<int>& degrees);

} // namespace tatehh
