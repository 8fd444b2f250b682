#pragma once

#include <cstdint>
#include <utility>

// Arithmetic in Z/pZ for word-sized moduli. All inputs are expected reduced
// (< p) unless noted; products go through 128-bit intermediates.
namespace polyprime::modular {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    if (s >= p || s < a) s -= p;
    return s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + (p - b);
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp != 0) {
        if (exp & 1) result = mul(result, base, p);
        base = mul(base, base, p);
        exp >>= 1;
    }
    return result;
}

// Inverse of a != 0 modulo prime p, by the extended Euclidean algorithm
// (signed cofactors never exceed p < 2^63 in magnitude for prime p).
inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 63)) return pow(a % p, p - 2, p);
    std::int64_t t = 0, t_next = 1;
    std::uint64_t r = p, r_next = a % p;
    while (r_next != 0) {
        std::uint64_t q = r / r_next;
        std::int64_t t_tmp = t - static_cast<std::int64_t>(q) * t_next;
        t = t_next;
        t_next = t_tmp;
        r = std::exchange(r_next, r - q * r_next);
    }
    return t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(p))
                 : static_cast<std::uint64_t>(t);
}

} // namespace polyprime::modular
