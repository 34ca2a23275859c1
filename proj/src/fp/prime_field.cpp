#include "fp/prime_field.hpp"

#include <stdexcept>
#include <string>

namespace tatehh {

PrimeField::PrimeField(uint32_t p) : p_(p) {
    if (!is_prime(p))
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

bool PrimeField::is_prime(uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

uint32_t PrimeField::pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1 % p_, base = a % p_;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

uint32_t PrimeField::inv(uint32_t a) const {
    a %= p_;
    if (a == 0) throw std::domain_error("division by zero in F_p");
    return pow(a, p_ - 2);
}

} // namespace tatehh
