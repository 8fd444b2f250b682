#pragma once

#include <cstdint>
#include <vector>

#include "polyprime/arith.hpp"
#include "polyprime/poly.hpp"

namespace polyprime {

enum class EngineStatus {
    Extending, // nonconstant P: the prime set can always be grown
    FiniteSet, // nonzero constant P: exactly the primes dividing it
    AllPrimes, // zero P: every prime divides P(0)
};

/// One certified prime divisor of some value of P, together with the local
/// data the congruence step needs: v_p(P(k)) = e exactly, and p | P(witness).
struct PrimeRecord {
    BigInt p;
    BigInt k;
    unsigned e = 0;
    BigInt witness;
    int round = 0; // 0 = seed
};

struct LocalData {
    BigInt k;
    unsigned e = 0;
};

/// Counters for the proof-step checks extend() performs at every progression
/// point. Violations throw std::logic_error; these only count what was run.
struct EngineStats {
    std::uint64_t progression_points = 0;
    std::uint64_t congruence_checks = 0;
    std::uint64_t valuation_checks = 0;
    std::uint64_t unit_cofactors = 0;
    std::uint64_t factoring_retries = 0;
    std::uint64_t max_final_j = 0;
};

struct EngineState {
    Polynomial poly;
    std::vector<PrimeRecord> records; // pairwise distinct primes
    EngineStatus status = EngineStatus::Extending;
    std::uint64_t rng_seed = 0;
    EngineStats stats;
};

/// Triages degenerate inputs: zero polynomial -> AllPrimes; nonzero constant
/// c -> FiniteSet with one record per distinct prime factor of |c| (none for
/// |c| = 1); nonconstant -> Extending with no records.
EngineState init(const Polynomial& poly, std::uint64_t rng_seed);

/// Produces the first record for a nonconstant P: scans n = 0, 1, -1, 2, -2,…
/// for the first |P(n)| > 1 and takes its smallest prime factor.
PrimeRecord seed(EngineState& state);

/// A scan point k with minimal v_p(P(k)) among nonzero values of the window
/// k = 0..min(p, 4096)-1, ties to the smallest k. If every window value is a
/// root the window slides up until a nonzero value appears.
LocalData local_data(const Polynomial& poly, const BigInt& p);

/// One round of the congruence construction: solve x ≡ k_i (mod p_i^(e_i+1))
/// for all current records, walk n = n0 + j·M upward, check at every point
/// that P(n) is nonzero, congruent to P(n0) mod M, and has exactly valuation
/// e_i at each p_i, and split the first nontrivial cofactor
/// |P(n)| / ∏ p_i^(e_i) for a provably new prime. Appends and returns the new
/// record. Propagates FactoringBudgetExceeded after retrying later points.
PrimeRecord extend(EngineState& state);

/// init, then seed, then extend until `rounds` records exist (short-circuits
/// for constant and zero polynomials). rounds >= 0.
EngineState enumerate(const Polynomial& poly, int rounds, std::uint64_t rng_seed);

enum class RecordCheck { Ok, PrimeFailed, DivisibilityFailed, ValuationFailed };

/// First failing check, or Ok: p prime, p | P(witness), v_p(P(k)) = e.
RecordCheck check_record(const Polynomial& poly, const PrimeRecord& rec);

inline bool verify_record(const Polynomial& poly, const PrimeRecord& rec) {
    return check_record(poly, rec) == RecordCheck::Ok;
}

} // namespace polyprime
