#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyprime/poly.hpp"
#include "polyprime/schur.hpp"

namespace polyprime {

/// Serializable proof object. All integers travel as decimal strings so no
/// precision is lost in JSON.
struct CertificateRecord {
    std::string p;
    unsigned e = 0;
    std::string k;
    std::string witness;
    int round = 0;
    std::string primality; // "proven" | "probable"

    bool operator==(const CertificateRecord& other) const = default;
};

struct Certificate {
    std::string polynomial; // canonical printer output
    std::string status;     // "extending" | "finite" | "all_primes"
    std::uint64_t rng_seed = 0;
    std::string engine_version;
    std::vector<CertificateRecord> records;

    bool operator==(const Certificate& other) const = default;
};

Certificate emit_certificate(const EngineState& state);

std::string serialize_certificate(const Certificate& cert);

/// Throws MalformedCertificate on any schema violation (missing or mistyped
/// field, non-canonical decimal string, unknown status or primality tag).
Certificate parse_certificate(const std::string& json_text);

struct RecordFailure {
    std::size_t index = 0;
    std::string reason;
};

struct CheckResult {
    bool valid = false;
    std::vector<RecordFailure> failures; // first failure per bad record
};

/// Re-parses the polynomial and re-verifies every record against it.
/// Throws MalformedCertificate when the polynomial or a number fails to parse.
CheckResult check_certificate(const Certificate& cert);

struct DensityReport {
    std::string polynomial;
    std::uint64_t bound = 0;
    std::uint64_t primes_total = 0;
    std::uint64_t primes_dividing = 0;
    double ratio = 0.0;
};

/// How many primes <= bound divide some value of P, over the prime count.
DensityReport density(const Polynomial& poly, std::uint64_t bound, unsigned thread_count = 1);

std::string serialize_density(const DensityReport& report);

/// One prime per line under a "p" header.
std::string sieve_csv(const std::vector<std::uint64_t>& primes);

} // namespace polyprime
