#include "polyprime/schur.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "polyprime/errors.hpp"

namespace polyprime {

namespace {

constexpr std::uint64_t kLocalScanWindow = 4096;
constexpr unsigned kMaxFactoringRetries = 8;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic per (state seed, round, step) factoring seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t round, std::uint64_t step) {
    return splitmix64(splitmix64(seed ^ round) ^ step);
}

// Rho on huge cofactors is hopeless and each iteration is expensive, so the
// iteration budget shrinks quadratically with the operand size; bailing out
// early lets the caller move to the next progression point instead.
std::uint64_t budget_for(const BigInt& cofactor) {
    std::uint64_t chunks = static_cast<std::uint64_t>(bit_length(cofactor) / 512) + 1;
    std::uint64_t budget = kDefaultRhoBudget / (chunks * chunks);
    return std::max<std::uint64_t>(budget, 50'000);
}

BigInt power_of(const BigInt& base, unsigned exponent) {
    BigInt result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
    return result;
}

} // namespace

LocalData local_data(const Polynomial& poly, const BigInt& p) {
    if (poly.is_zero()) throw std::invalid_argument("local_data needs a nonzero polynomial");
    if (p < 2) throw NotPrime("local data requires a prime p");

    std::uint64_t window = kLocalScanWindow;
    if (p < kLocalScanWindow) window = to_u64(p);

    for (BigInt base = 0;; base += window) {
        bool found = false;
        LocalData best;
        for (std::uint64_t offset = 0; offset < window; ++offset) {
            BigInt k = base + offset;
            BigInt value = poly(k);
            if (value == 0) continue;
            unsigned e = valuation_exponent(p, value);
            if (!found || e < best.e) {
                best = {std::move(k), e};
                found = true;
                if (e == 0) break; // nothing in the window can beat this k
            }
        }
        if (found) return best;
        // Every window point was a root; slide up (P has finitely many roots).
    }
}

EngineState init(const Polynomial& poly, std::uint64_t rng_seed) {
    EngineState state;
    state.poly = poly;
    state.rng_seed = rng_seed;
    if (poly.is_zero()) {
        state.status = EngineStatus::AllPrimes;
        return state;
    }
    if (poly.is_constant()) {
        state.status = EngineStatus::FiniteSet;
        BigInt remaining = abs(poly.coeffs().front());
        int step = 0;
        while (remaining > 1) {
            BigInt p = smallest_prime_factor(remaining, derive_seed(rng_seed, 0, step++));
            LocalData local = local_data(poly, p);
            state.records.push_back({p, local.k, local.e, 0, 0});
            BigInt stripped;
            mpz_remove(stripped.get_mpz_t(), remaining.get_mpz_t(), p.get_mpz_t());
            remaining = std::move(stripped);
        }
        return state;
    }
    state.status = EngineStatus::Extending;
    return state;
}

PrimeRecord seed(EngineState& state) {
    if (state.status != EngineStatus::Extending || !state.records.empty())
        throw std::invalid_argument("seed needs an Extending state with no records");

    // n = 0, 1, -1, 2, -2, ...; terminates since |P(n)| -> infinity.
    for (std::uint64_t step = 0;; ++step) {
        BigInt n = step % 2 ? BigInt((step + 1) / 2) : -BigInt(step / 2);
        BigInt value = abs(state.poly(n));
        if (value <= 1) continue;
        BigInt p = smallest_prime_factor(value, derive_seed(state.rng_seed, 0, step));
        LocalData local = local_data(state.poly, p);
        state.records.push_back({std::move(p), std::move(local.k), local.e, std::move(n), 0});
        return state.records.back();
    }
}

PrimeRecord extend(EngineState& state) {
    if (state.status != EngineStatus::Extending)
        throw std::invalid_argument("extend needs an Extending state");
    if (state.records.empty()) throw std::invalid_argument("extend needs a seeded state");

    const Polynomial& poly = state.poly;
    const std::size_t degree = *poly.degree();
    const int round = static_cast<int>(state.records.size());

    // x ≡ k_i (mod p_i^(e_i+1)) for every known prime.
    CrtSystem system;
    BigInt known_part = 1; // ∏ p_i^(e_i), the exact known divisor of every P(n)
    for (const PrimeRecord& rec : state.records) {
        BigInt modulus = power_of(rec.p, rec.e + 1);
        system.congruences.push_back({mod_into(rec.k, modulus), modulus});
        known_part *= power_of(rec.p, rec.e);
    }
    auto [n0, big_modulus] = crt_combine(system);

    BigInt value_at_n0;
    std::uint64_t unit_cofactors = 0;
    unsigned retries = 0;
    for (std::uint64_t j = 0;; ++j) {
        BigInt n = n0 + BigInt(j) * big_modulus;
        BigInt value = poly(n);
        ++state.stats.progression_points;

        // Proof-step checks; none of these can fail for a correct engine.
        if (value == 0)
            throw std::logic_error("proof violation: P vanished at a progression point");
        if (j == 0) {
            value_at_n0 = value;
        } else {
            ++state.stats.congruence_checks;
            if (mod_into(value - value_at_n0, big_modulus) != 0)
                throw std::logic_error("proof violation: P(n) not congruent to P(n0) mod M");
        }
        for (const PrimeRecord& rec : state.records) {
            ++state.stats.valuation_checks;
            if (valuation_exponent(rec.p, value) != rec.e)
                throw std::logic_error("proof violation: valuation drifted at a progression point");
        }

        BigInt cofactor = abs(value);
        mpz_divexact(cofactor.get_mpz_t(), cofactor.get_mpz_t(), known_part.get_mpz_t());
        if (cofactor == 1) {
            // |P(n)| = ∏ p_i^(e_i) has at most 2·deg(P) solutions.
            ++unit_cofactors;
            ++state.stats.unit_cofactors;
            if (unit_cofactors > 2 * degree)
                throw std::logic_error("proof violation: unit cofactor count exceeded 2*deg(P)");
            continue;
        }

        BigInt p;
        try {
            p = smallest_prime_factor(cofactor, derive_seed(state.rng_seed, round, j),
                                      budget_for(cofactor));
        } catch (const FactoringBudgetExceeded&) {
            ++retries;
            ++state.stats.factoring_retries;
            if (retries > kMaxFactoringRetries) throw;
            continue; // the next progression point has a different cofactor
        }

        // The exact-valuation checks make the cofactor coprime to every known
        // prime, so p must be new.
        for (const PrimeRecord& rec : state.records) {
            if (rec.p == p) throw std::logic_error("proof violation: extracted prime not new");
        }

        LocalData local = local_data(poly, p);
        state.stats.max_final_j = std::max(state.stats.max_final_j, j);
        state.records.push_back({std::move(p), std::move(local.k), local.e, std::move(n), round});
        return state.records.back();
    }
}

EngineState enumerate(const Polynomial& poly, int rounds, std::uint64_t rng_seed) {
    if (rounds < 0) throw std::invalid_argument("rounds must be >= 0");
    EngineState state = init(poly, rng_seed);
    if (state.status != EngineStatus::Extending || rounds == 0) return state;
    seed(state);
    while (static_cast<int>(state.records.size()) < rounds) extend(state);
    return state;
}

RecordCheck check_record(const Polynomial& poly, const PrimeRecord& rec) {
    if (rec.p < 2 || is_prime(rec.p) == Primality::Composite) return RecordCheck::PrimeFailed;
    if (mod_into(poly(rec.witness), rec.p) != 0) return RecordCheck::DivisibilityFailed;
    BigInt value = poly(rec.k);
    if (value == 0) return RecordCheck::ValuationFailed; // v_p infinite, never equal to e
    if (valuation_exponent(rec.p, value) != rec.e) return RecordCheck::ValuationFailed;
    return RecordCheck::Ok;
}

} // namespace polyprime
