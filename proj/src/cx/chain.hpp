#pragma once

#include "common.hpp"
#include "fp/matrix.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tatehh {

// Z-graded finite-dimensional F_p vector space with opaque basis labels.
struct GradedSpace {
    PrimeField F;
    std::map<int, size_t> dims;                          // only nonzero degrees stored
    std::map<int, std::vector<std::string>> labels;      // optional, per degree

    explicit GradedSpace(PrimeField field) : F(field) {}
    size_t dim(int n) const {
        auto it = dims.find(n);
        return it == dims.end() ? 0 : it->second;
    }
    // [lo, hi] of nonzero degrees; nullopt when the space is zero
    std::optional<std::pair<int, int>> support() const;
    std::string label(int n, size_t i) const;
};

// Chain complex with differential of degree -1; d^2 = 0 is enforced at
// construction. Immutable; cheap to copy.
class ChainComplex {
public:
    ChainComplex(GradedSpace space, std::map<int, FpMat> d, bool verify = true);

    const PrimeField& field() const { return impl_->space.F; }
    const GradedSpace& space() const { return impl_->space; }
    size_t dim(int n) const { return impl_->space.dim(n); }
    std::optional<std::pair<int, int>> support() const { return impl_->space.support(); }
    // d_n : C_n -> C_{n-1}; a zero matrix of the right shape when not stored
    FpMat d(int n) const;
    size_t d_rank(int n) const; // cached
    size_t total_dim() const;

    bool same_dims(const ChainComplex& o) const;

private:
    struct Impl {
        GradedSpace space;
        std::map<int, FpMat> d;
        mutable std::map<int, size_t> rank_cache;
        explicit Impl(GradedSpace s) : space(std::move(s)) {}
    };
    std::shared_ptr<const Impl> impl_;
};

// degreewise map of complexes commuting with the differentials
class ChainMap {
public:
    ChainMap(ChainComplex source, ChainComplex target, std::map<int, FpMat> comp,
             bool verify = true);

    const ChainComplex& source() const { return source_; }
    const ChainComplex& target() const { return target_; }
    FpMat at(int n) const; // zero matrix of the right shape when not stored

    static ChainMap identity(const ChainComplex& c);
    static ChainMap zero(const ChainComplex& source, const ChainComplex& target);

    ChainMap compose(const ChainMap& inner) const; // this ∘ inner
    ChainMap operator+(const ChainMap& o) const;
    ChainMap operator-(const ChainMap& o) const;
    ChainMap scaled(long long c) const;
    bool operator==(const ChainMap& o) const;

private:
    ChainComplex source_, target_;
    std::map<int, FpMat> comp_;
};

// ---- constructions ----

ChainComplex zero_complex(PrimeField F);
// one-dimensional complex F_p in the given degree
ChainComplex point_complex(PrimeField F, int degree);
ChainComplex shift(const ChainComplex& c, int k); // degree n of result = c_{n-k}
ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);

struct ConeResult {
    ChainComplex cone;             // cone(f)_n = target_n ⊕ source_{n-1}
    ChainMap from_target;          // target -> cone
    ChainMap to_shifted_source;    // cone -> source[1]
};
ConeResult cone(const ChainMap& f);

ChainComplex tensor(const ChainComplex& a, const ChainComplex& b);
ChainComplex dual(const ChainComplex& c);

// stupid truncation: keep degrees in [lo, hi]
ChainComplex window_truncate(const ChainComplex& c, int lo, int hi);

// ---- homology ----

size_t homology_dim(const ChainComplex& c, int n);
std::map<int, size_t> homology_dims(const ChainComplex& c);

struct Homology {
    size_t dim;
    FpMat reps; // columns: cycle representatives in C_n coordinates
};
Homology homology(const ChainComplex& c, int n);

// coordinates of the class of cycle v in the basis given by reps (mod boundaries);
// nullopt if v is not a cycle representative combination (should not happen for cycles)
std::optional<std::vector<uint32_t>> homology_coordinates(const ChainComplex& c, int n,
                                                          const FpMat& reps,
                                                          std::span<const uint32_t> v);

} // namespace tatehh
