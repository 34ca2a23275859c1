#pragma once

#include "cx/chain.hpp"
#include "fp/sparsevec.hpp"

#include <functional>
#include <vector>

namespace tatehh {

// Basis of a tensor product of graded factors: tuples (i_0, ..., i_{k-1})
// with i_j indexing factor j. Tuples are enumerated in mixed-radix order
// (factor 0 most significant) and grouped by total degree.
class TupleBasis {
public:
    explicit TupleBasis(std::vector<std::vector<int>> factor_degrees);

    size_t factors() const { return radix_.size(); }
    size_t count() const { return count_; }
    const std::map<int, std::vector<size_t>>& by_degree() const { return by_degree_; }
    size_t dim(int degree) const;

    std::vector<uint32_t> tuple(size_t linear) const;
    size_t linear(const std::vector<uint32_t>& t) const;
    int degree_of_linear(size_t linear) const;
    int degree_of(const std::vector<uint32_t>& t) const;
    // (degree, index within that degree)
    std::pair<int, size_t> locate(size_t linear) const;
    size_t index_in_degree(const std::vector<uint32_t>& t) const;

private:
    std::vector<std::vector<int>> degs_;
    std::vector<size_t> radix_;   // sizes of the factors
    std::vector<size_t> stride_;
    size_t count_;
    std::map<int, std::vector<size_t>> by_degree_; // ascending linear ranks
};

// chain complex of a tensor product of factors (each = degrees + differential),
// on the TupleBasis ordering, with the Koszul sign rule
struct TensorFactor {
    std::vector<int> degrees;
    FpMat diff;
    std::vector<std::string> labels; // optional; empty = generated
};
struct TupleComplex {
    ChainComplex complex;
    TupleBasis basis;
};
TupleComplex tensor_complex(PrimeField F, const std::vector<TensorFactor>& factors,
                            bool with_labels = false);

// emit images of one basis tuple: push (tuple, coefficient) pairs
using TupleImageFn =
    std::function<void(const std::vector<uint32_t>&, std::vector<std::pair<std::vector<uint32_t>, uint32_t>>&)>;

// degreewise matrices of a degree-0 map defined on basis tuples
std::map<int, FpMat> tuple_map_components(const PrimeField& F, const TupleBasis& src,
                                          const TupleBasis& dst, const TupleImageFn& image);

} // namespace tatehh
