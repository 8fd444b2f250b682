#pragma once

// Independent oracles and generators for the test suites. Everything here is
// deliberately naive (repeated division, exhaustive scans, trial division) so
// the library is checked against a second route, not against itself.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "polyprime/bigint.hpp"
#include "polyprime/poly.hpp"

namespace testing_oracles {

using polyprime::BigInt;

// v_p by repeated division.
inline unsigned valuation_by_division(const BigInt& p, BigInt d) {
    d = abs(d);
    unsigned e = 0;
    while (d != 0 && d % p == 0) {
        d /= p;
        ++e;
    }
    return e;
}

// Unique CRT solution by scanning 0..M-1; empty returns (0, 1).
inline std::optional<std::pair<BigInt, BigInt>> crt_by_scan(
    const std::vector<std::pair<BigInt, BigInt>>& congruences) {
    BigInt modulus = 1;
    for (const auto& [r, m] : congruences) modulus *= m;
    for (BigInt x = 0; x < modulus; ++x) {
        bool all = true;
        for (const auto& [r, m] : congruences) {
            if (polyprime::mod_into(x - r, m) != 0) {
                all = false;
                break;
            }
        }
        if (all) return std::make_pair(x, modulus);
    }
    return std::nullopt;
}

inline bool prime_by_trial_division(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline std::vector<std::uint64_t> primes_by_sieve(std::uint64_t bound) {
    std::vector<bool> composite(bound + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return primes;
}

// Root existence by evaluating P over every residue class of p. The zero
// polynomial reports true through its root at 0.
inline bool root_exists_by_scan(const polyprime::Polynomial& poly, std::uint64_t p) {
    for (std::uint64_t x = 0; x < p; ++x) {
        if (polyprime::mod_into(poly(BigInt(x)), BigInt(p)) == 0) return true;
    }
    return false;
}

inline BigInt random_bigint(std::mt19937_64& rng, unsigned bits) {
    BigInt value = 0;
    for (unsigned produced = 0; produced < bits; produced += 32) {
        value <<= 32;
        value += static_cast<std::uint32_t>(rng());
    }
    BigInt cap = BigInt(1) << bits;
    return value % cap;
}

inline polyprime::Polynomial random_polynomial(std::mt19937_64& rng, std::size_t max_degree,
                                               long coeff_bound, bool force_nonconstant = false) {
    std::uniform_int_distribution<std::size_t> degree_dist(force_nonconstant ? 1 : 0, max_degree);
    std::uniform_int_distribution<long> coeff_dist(-coeff_bound, coeff_bound);
    std::size_t degree = degree_dist(rng);
    std::vector<BigInt> coeffs(degree + 1);
    for (auto& c : coeffs) c = coeff_dist(rng);
    while (coeffs.back() == 0) coeffs.back() = coeff_dist(rng);
    return polyprime::Polynomial(std::move(coeffs));
}

} // namespace testing_oracles
