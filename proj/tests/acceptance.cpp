// Acceptance suite: every criterion prints one [PASS]/[FAIL] line; the exit
// code is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "helpers.hpp"
#include "polyprime/arith.hpp"
#include "polyprime/modroot.hpp"
#include "polyprime/poly.hpp"
#include "polyprime/report.hpp"
#include "polyprime/schur.hpp"

using polyprime::BigInt;
using polyprime::Polynomial;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail; // appended to the printed line either way
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    out << s << " s";
    return out.str();
}

// Shared corpus: the 100-polynomial engine run feeds three criteria.
struct EngineRun {
    std::vector<polyprime::EngineState> states;
    std::string failure; // first structural failure, empty if clean
    double elapsed = 0.0;
    std::uint64_t progression_points = 0;
    std::uint64_t valuation_checks = 0;
    std::uint64_t congruence_checks = 0;
    std::uint64_t retries = 0;
    bool bound_violation = false;
};

const EngineRun& engine_run() {
    static const EngineRun run = [] {
        EngineRun r;
        std::mt19937_64 rng(0x5eedc0de);
        auto start = std::chrono::steady_clock::now();
        for (int trial = 0; trial < 100 && r.failure.empty(); ++trial) {
            Polynomial poly =
                testing_oracles::random_polynomial(rng, 5, 50, /*force_nonconstant=*/true);
            polyprime::EngineState state;
            try {
                state = polyprime::enumerate(poly, 15, 0);
            } catch (const std::exception& error) {
                r.failure = poly.to_string() + ": " + error.what();
                break;
            }
            if (state.records.size() != 15) {
                r.failure = poly.to_string() + ": produced " +
                            std::to_string(state.records.size()) + " records";
                break;
            }
            std::set<BigInt> primes;
            for (const auto& rec : state.records) {
                if (!primes.insert(rec.p).second) {
                    r.failure = poly.to_string() + ": repeated prime " + rec.p.get_str();
                    break;
                }
                if (!polyprime::verify_record(poly, rec)) {
                    r.failure = poly.to_string() + ": record for " + rec.p.get_str() +
                                " failed verification";
                    break;
                }
                // Independent membership route for every prime the oracle's
                // word-sized domain can express.
                if (polyprime::fits_u64(rec.p) &&
                    !polyprime::has_root_mod(poly, polyprime::to_u64(rec.p))) {
                    r.failure = poly.to_string() + ": oracle rejects emitted prime " +
                                rec.p.get_str();
                    break;
                }
            }
            r.progression_points += state.stats.progression_points;
            r.valuation_checks += state.stats.valuation_checks;
            r.congruence_checks += state.stats.congruence_checks;
            r.retries += state.stats.factoring_retries;
            std::uint64_t degree = *poly.degree();
            if (state.stats.max_final_j > 2 * degree + state.stats.factoring_retries)
                r.bound_violation = true;
            r.states.push_back(std::move(state));
        }
        r.elapsed = seconds_since(start);
        return r;
    }();
    return run;
}

Outcome worked_valuation() {
    auto v = polyprime::valuation(2, 12);
    if (v.exponent != 2 || v.power != 4)
        return {false, "got e=" + std::to_string(v.exponent) + ", power=" + v.power.get_str()};
    return {true, "e=2, power=4"};
}

Outcome constructive_infinitude() {
    const EngineRun& run = engine_run();
    if (!run.failure.empty()) return {false, run.failure};
    if (run.elapsed >= 60.0) return {false, "took " + fmt_seconds(run.elapsed)};
    return {true, "100 polynomials x 15 rounds, all distinct and verified, " +
                      fmt_seconds(run.elapsed)};
}

Outcome proof_step_invariants() {
    // The nonvanishing, congruence-preservation, exact-valuation, and
    // cofactor-count checks run inside extend() and throw on violation, so a
    // clean engine run means zero violations at every progression point.
    const EngineRun& run = engine_run();
    if (!run.failure.empty()) return {false, run.failure};
    if (run.bound_violation) return {false, "a round needed more than 2*deg(P) skips"};

    // Quantified congruence preservation on independent random triples.
    std::mt19937_64 rng(0xc049);
    std::uniform_int_distribution<long> m_dist(-1'000'000, 1'000'000);
    std::uniform_int_distribution<long> modulus_dist(2, 1'000'000);
    std::uniform_int_distribution<long> t_dist(1, 1'000);
    for (int trial = 0; trial < 1'000; ++trial) {
        Polynomial poly = testing_oracles::random_polynomial(rng, 6, 100);
        BigInt modulus = modulus_dist(rng);
        BigInt m = m_dist(rng);
        BigInt n = m + modulus * t_dist(rng);
        if (polyprime::mod_into(poly(m) - poly(n), modulus) != 0)
            return {false, "congruence failed for " + poly.to_string()};
    }

    std::ostringstream note;
    note << run.valuation_checks << " valuation checks, " << run.congruence_checks
         << " congruence checks, " << run.progression_points
         << " progression points, 0 violations";
    return {true, note.str()};
}

Outcome oracle_equivalence() {
    auto start = std::chrono::steady_clock::now();
    auto primes = testing_oracles::primes_by_sieve(4095);
    std::mt19937_64 rng(0x02ac1e);
    std::uint64_t compared = 0;
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial poly = testing_oracles::random_polynomial(rng, 6, 100);
        for (std::uint64_t p : primes) {
            auto f = polyprime::reduce_mod(poly, p);
            if (f.coeffs.size() < 2) continue; // both routes need a root problem to decide
            bool brute = polyprime::has_root_brute(f);
            bool gcd = polyprime::has_root_gcd(f);
            ++compared;
            if (brute != gcd) {
                return {false, poly.to_string() + " mod " + std::to_string(p) + ": brute=" +
                                   (brute ? "true" : "false") + " gcd=" + (gcd ? "true" : "false")};
            }
        }
    }
    double elapsed = seconds_since(start);
    if (elapsed >= 30.0) return {false, "took " + fmt_seconds(elapsed)};
    return {true, std::to_string(compared) + " comparisons agree, " + fmt_seconds(elapsed)};
}

Outcome engine_within_oracle() {
    const EngineRun& run = engine_run();
    if (!run.failure.empty()) return {false, run.failure};
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::uint64_t checked = 0;
    for (const auto& state : run.states) {
        std::vector<std::uint64_t> small_primes;
        for (const auto& rec : state.records) {
            if (rec.p <= 1'000'000) small_primes.push_back(polyprime::to_u64(rec.p));
        }
        if (small_primes.empty()) continue;
        auto sieved = polyprime::sieve_primes(state.poly, 1'000'000, threads);
        for (std::uint64_t p : small_primes) {
            ++checked;
            if (!std::binary_search(sieved.begin(), sieved.end(), p)) {
                return {false, state.poly.to_string() + ": emitted prime " + std::to_string(p) +
                                   " missing from the sieve"};
            }
        }
    }
    return {true, std::to_string(checked) + " emitted primes <= 10^6 all present"};
}

Outcome golden_sieve() {
    auto start = std::chrono::steady_clock::now();
    Polynomial circle = Polynomial::parse("x^2+1");
    auto got = polyprime::sieve_primes(circle, 100'000, 1);
    double elapsed = seconds_since(start);

    std::vector<std::uint64_t> expected;
    for (std::uint64_t p : testing_oracles::primes_by_sieve(100'000)) {
        if (p == 2 || p % 4 == 1) expected.push_back(p);
    }
    if (got != expected) {
        return {false, "sieve disagrees with {2} u {p = 1 mod 4} (" +
                           std::to_string(got.size()) + " vs " + std::to_string(expected.size()) +
                           " primes)"};
    }
    if (elapsed >= 5.0) return {false, "took " + fmt_seconds(elapsed)};
    if (polyprime::sieve_primes(circle, 100'000, 4) != got)
        return {false, "4-thread output differs from single-threaded"};
    return {true, std::to_string(got.size()) + " primes, " + fmt_seconds(elapsed) +
                      ", thread-count independent"};
}

Outcome golden_density() {
    auto report = polyprime::density(Polynomial::parse("x^2+1"), 100, 1);
    if (report.primes_total != 25 || report.primes_dividing != 12 ||
        report.ratio != 12.0 / 25.0) {
        std::ostringstream detail;
        detail << "got " << report.primes_dividing << "/" << report.primes_total << " = "
               << report.ratio;
        return {false, detail.str()};
    }
    return {true, "12/25 = 0.48"};
}

Outcome golden_traces() {
    auto circle = polyprime::enumerate(Polynomial::parse("x^2+1"), 3, 0);
    const std::vector<std::pair<long, long>> expected_circle = {{2, 1}, {5, 2}, {101, 10}};
    if (circle.records.size() != 3) return {false, "x^2+1 produced wrong record count"};
    for (std::size_t i = 0; i < 3; ++i) {
        if (circle.records[i].p != expected_circle[i].first ||
            circle.records[i].witness != expected_circle[i].second) {
            return {false, "x^2+1 record " + std::to_string(i) + " is (" +
                               circle.records[i].p.get_str() + ", witness " +
                               circle.records[i].witness.get_str() + ")"};
        }
    }

    auto even = polyprime::enumerate(Polynomial::parse("x^2+x+2"), 2, 0);
    if (even.records.size() != 2 || even.records[0].p != 2 || even.records[0].witness != 0 ||
        even.records[1].p != 11 || even.records[1].witness != 4) {
        return {false, "x^2+x+2 trace mismatch"};
    }
    return {true, "[2,5,101]@[1,2,10] and [2,11]@[0,4]"};
}

Outcome certificate_tampering() {
    auto state = polyprime::enumerate(Polynomial::parse("x^2+1"), 3, 0);
    auto cert = polyprime::emit_certificate(state);
    auto reparsed = polyprime::parse_certificate(polyprime::serialize_certificate(cert));
    if (!(reparsed == cert)) return {false, "serialize/parse round trip changed the certificate"};
    if (!polyprime::check_certificate(reparsed).valid)
        return {false, "genuine certificate rejected"};

    // Witness 3 would leave the p=5 record valid (5 divides P(3) = 10);
    // 4 breaks divisibility, since 5 does not divide P(4) = 17.
    auto tampered = cert;
    tampered.records[1].witness = "4";
    auto witness_result = polyprime::check_certificate(tampered);
    if (witness_result.valid || witness_result.failures.size() != 1 ||
        witness_result.failures[0].reason != "p does not divide P(witness)")
        return {false, "witness tampering not reported as \"p does not divide P(witness)\""};

    tampered = cert;
    tampered.records[1].e = 1;
    auto e_result = polyprime::check_certificate(tampered);
    if (e_result.valid || e_result.failures.size() != 1 ||
        e_result.failures[0].reason != "valuation mismatch")
        return {false, "exponent tampering not reported as \"valuation mismatch\""};

    tampered = cert;
    tampered.records[1].p = "4";
    auto p_result = polyprime::check_certificate(tampered);
    if (p_result.valid || p_result.failures.empty() ||
        p_result.failures[0].reason != "p is not prime")
        return {false, "prime tampering not reported as \"p is not prime\""};

    return {true, "round trip valid; witness/e/p tamperings each pinned to their reason"};
}

Outcome degenerate_totality() {
    auto zero = polyprime::enumerate(Polynomial(), 5, 0);
    if (zero.status != polyprime::EngineStatus::AllPrimes || !zero.records.empty())
        return {false, "zero polynomial not triaged to AllPrimes"};

    auto six = polyprime::enumerate(Polynomial::parse("6"), 5, 0);
    if (six.status != polyprime::EngineStatus::FiniteSet || six.records.size() != 2 ||
        six.records[0].p != 2 || six.records[1].p != 3)
        return {false, "P = 6 did not produce FiniteSet {2, 3}"};

    auto unit = polyprime::enumerate(Polynomial::parse("1"), 5, 0);
    if (unit.status != polyprime::EngineStatus::FiniteSet || !unit.records.empty())
        return {false, "P = 1 did not produce the empty FiniteSet"};

    return {true, "0 -> all primes; 6 -> {2, 3}; 1 -> {}"};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"worked value: valuation(2, 12) = (e=2, power=4)", worked_valuation},
        {"constructive infinitude: 100 polynomials, 15 distinct verified primes each, < 60 s",
         constructive_infinitude},
        {"proof-step invariants: zero violations at every progression point",
         proof_step_invariants},
        {"oracle equivalence: brute force = gcd route for all p < 4096, 200 polynomials, < 30 s",
         oracle_equivalence},
        {"engine within oracle: emitted primes <= 10^6 appear in sieve_primes(P, 10^6)",
         engine_within_oracle},
        {"golden sieve: sieve_primes(x^2+1, 10^5) = {2} u {p = 1 mod 4}, < 5 s, thread-stable",
         golden_sieve},
        {"golden density: density(x^2+1, 100) = 12/25 = 0.48", golden_density},
        {"golden engine traces: x^2+1 -> [2,5,101]; x^2+x+2 -> [2,11]", golden_traces},
        {"certificate round trip and tamper detection", certificate_tampering},
        {"degenerate totality: zero/constant polynomials", degenerate_totality},
    };

    int failures = 0;
    for (const auto& [name, run] : criteria) {
        Outcome outcome;
        try {
            outcome = run();
        } catch (const std::exception& error) {
            outcome = {false, std::string("exception: ") + error.what()};
        }
        if (outcome.passed) {
            std::cout << "[PASS] " << name;
            if (!outcome.detail.empty()) std::cout << " — " << outcome.detail;
            std::cout << '\n';
        } else {
            ++failures;
            std::cout << "[FAIL] " << name << " — " << outcome.detail << '\n';
        }
    }
    if (failures != 0) std::cout << failures << " criterion(s) failed\n";
    return failures;
}
