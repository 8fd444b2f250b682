#pragma once

#include <cstdint>
#include <vector>

#include "polyprime/bigint.hpp"

namespace polyprime {

enum class Primality { Composite, ProbablePrime, Prime };

/// v_p(d) carried both ways: as the exponent e and as the power p^e.
struct Valuation {
    BigInt p;
    unsigned exponent = 0;
    BigInt power = 1;
};

/// Exact p-adic valuation of d != 0: the e with p^e | d and p^(e+1) ∤ d.
/// The sign of d is ignored. Throws NotPrime / ZeroValuation.
Valuation valuation(const BigInt& p, const BigInt& d);

/// Valuation exponent without the primality recheck; p >= 2 and d != 0
/// are the caller's responsibility.
unsigned valuation_exponent(const BigInt& p, const BigInt& d);

struct Congruence {
    BigInt residue;
    BigInt modulus;
};

/// Simultaneous congruences x ≡ residue_i (mod modulus_i) with pairwise
/// coprime moduli >= 2. Residues are normalized into [0, modulus).
struct CrtSystem {
    std::vector<Congruence> congruences;
};

struct CrtSolution {
    BigInt n0;      // unique solution in [0, modulus)
    BigInt modulus; // product of the moduli; 1 for the empty system
};

/// Garner-style accumulation with extended-gcd inverses; coprimality is
/// checked pairwise as the moduli fold in. Throws ModuliNotCoprime.
CrtSolution crt_combine(const CrtSystem& system);

/// Deterministic (Prime/Composite) below 2^64 via a fixed Miller-Rabin base
/// set; Baillie-PSW above, reporting ProbablePrime. 0 and 1 are Composite.
Primality is_prime(const BigInt& n);

/// Deterministic word-sized primality test.
bool is_prime_u64(std::uint64_t n);

inline constexpr std::uint64_t kTrialDivisionBound = 1'000'000;
inline constexpr std::uint64_t kDefaultRhoBudget = 1'500'000;

/// A verified prime factor of n >= 2: the least one whenever it lies below
/// the trial-division bound, otherwise some prime factor found by seeded
/// Brent-rho. `rho_budget` caps the total rho iterations for the call;
/// FactoringBudgetExceeded signals the caller to retry with another input.
BigInt smallest_prime_factor(const BigInt& n, std::uint64_t rng_seed,
                             std::uint64_t rho_budget = kDefaultRhoBudget);

} // namespace polyprime
