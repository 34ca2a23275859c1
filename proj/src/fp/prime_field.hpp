#pragma once

#include <cstdint>

namespace tatehh {

// Arithmetic in the prime field F_p. Elements are residues in [0, p).
// p is checked for primality at construction (trial division; inputs are small).
class PrimeField {
public:
    explicit PrimeField(uint32_t p);

    uint32_t modulus() const { return p_; }

    uint32_t reduce(long long x) const {
        long long r = x % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<uint32_t>(r);
    }
    uint32_t add(uint32_t a, uint32_t b) const {
        uint64_t s = static_cast<uint64_t>(a) + b;
        return s >= p_ ? static_cast<uint32_t>(s - p_) : static_cast<uint32_t>(s);
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
    }
    uint32_t pow(uint32_t a, uint64_t e) const;
    uint32_t inv(uint32_t a) const;

    // (-1)^parity as a field element
    uint32_t sign(long long parity) const { return (parity & 1) ? neg(1 % p_) : 1 % p_; }

    static bool is_prime(uint32_t n);

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

private:
    uint32_t p_;
};

} // namespace tatehh
