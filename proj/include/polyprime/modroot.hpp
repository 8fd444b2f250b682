#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polyprime/poly.hpp"
#include "polyprime/polymod.hpp"

namespace polyprime {

/// Primes up to this bound are decided by scanning every residue; larger
/// primes go through gcd(x^p - x, P mod p).
inline constexpr std::uint64_t kBruteForceRootBound = 4096;

/// Whether p divides P(n) for some integer n: true iff P mod p vanishes
/// identically or has a root in F_p. Throws NotPrime.
bool has_root_mod(const Polynomial& poly, std::uint64_t p);

/// A residue n with P(n) ≡ 0 (mod p), or nullopt when none exists. Smallest
/// root for p <= kBruteForceRootBound; above that the root comes from seeded
/// equal-degree splitting and is verified by evaluation, not smallest.
/// Throws NotPrime.
std::optional<std::uint64_t> find_root_mod(const Polynomial& poly, std::uint64_t p,
                                           std::uint64_t rng_seed);

// The two decision routes, exposed separately so they can be cross-checked.
bool has_root_brute(const PolyModP& f);
bool has_root_gcd(const PolyModP& f);

/// gcd(x^p - x, f), monic: the product of (x - r) over the distinct roots r
/// of f in F_p. deg(f) >= 1.
PolyModP distinct_root_radical(const PolyModP& f);

std::size_t count_roots_brute(const PolyModP& f);

/// All primes p <= bound with has_root_mod(poly, p), ascending. The segment
/// work is spread over `thread_count` threads (0 = hardware concurrency);
/// output is independent of the thread count.
std::vector<std::uint64_t> sieve_primes(const Polynomial& poly, std::uint64_t bound,
                                        unsigned thread_count = 1);

/// Primes in [2, bound] by a segmented sieve of Eratosthenes.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

std::uint64_t count_primes_up_to(std::uint64_t bound);

} // namespace polyprime
