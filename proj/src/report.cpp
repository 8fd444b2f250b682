#include "polyprime/report.hpp"

#include <limits>
#include <sstream>

#include <json.hpp>

#include "polyprime/errors.hpp"
#include "polyprime/modroot.hpp"
#include "polyprime/version.hpp"

namespace polyprime {

namespace {

using OrderedJson = nlohmann::ordered_json;

std::string status_string(EngineStatus status) {
    switch (status) {
        case EngineStatus::Extending: return "extending";
        case EngineStatus::FiniteSet: return "finite";
        case EngineStatus::AllPrimes: return "all_primes";
    }
    throw std::logic_error("unknown engine status");
}

const nlohmann::json& require_field(const nlohmann::json& object, const char* key) {
    auto it = object.find(key);
    if (it == object.end())
        throw MalformedCertificate(std::string("missing field \"") + key + '"');
    return *it;
}

std::string require_string(const nlohmann::json& object, const char* key) {
    const auto& field = require_field(object, key);
    if (!field.is_string())
        throw MalformedCertificate(std::string("field \"") + key + "\" must be a string");
    return field.get<std::string>();
}

std::string require_decimal(const nlohmann::json& object, const char* key) {
    std::string text = require_string(object, key);
    if (!is_canonical_decimal(text))
        throw MalformedCertificate(std::string("field \"") + key +
                                   "\" is not a canonical decimal string: \"" + text + '"');
    return text;
}

std::int64_t require_integer(const nlohmann::json& object, const char* key, std::int64_t lo,
                             std::int64_t hi) {
    const auto& field = require_field(object, key);
    if (!field.is_number_integer())
        throw MalformedCertificate(std::string("field \"") + key + "\" must be an integer");
    auto value = field.get<std::int64_t>();
    if (value < lo || value > hi)
        throw MalformedCertificate(std::string("field \"") + key + "\" out of range");
    return value;
}

} // namespace

Certificate emit_certificate(const EngineState& state) {
    Certificate cert;
    cert.polynomial = state.poly.to_string();
    cert.status = status_string(state.status);
    cert.rng_seed = state.rng_seed;
    cert.engine_version = kEngineVersion;
    cert.records.reserve(state.records.size());
    for (const PrimeRecord& rec : state.records) {
        Primality primality = is_prime(rec.p);
        if (primality == Primality::Composite)
            throw std::logic_error("engine state carries a composite prime record");
        cert.records.push_back({to_decimal(rec.p), rec.e, to_decimal(rec.k),
                                to_decimal(rec.witness), rec.round,
                                primality == Primality::Prime ? "proven" : "probable"});
    }
    return cert;
}

std::string serialize_certificate(const Certificate& cert) {
    OrderedJson doc;
    doc["polynomial"] = cert.polynomial;
    doc["status"] = cert.status;
    doc["rng_seed"] = cert.rng_seed;
    doc["engine_version"] = cert.engine_version;
    doc["records"] = OrderedJson::array();
    for (const CertificateRecord& rec : cert.records) {
        OrderedJson entry;
        entry["p"] = rec.p;
        entry["e"] = rec.e;
        entry["k"] = rec.k;
        entry["witness"] = rec.witness;
        entry["round"] = rec.round;
        entry["primality"] = rec.primality;
        doc["records"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

Certificate parse_certificate(const std::string& json_text) {
    nlohmann::json doc = nlohmann::json::parse(json_text, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded() || !doc.is_object())
        throw MalformedCertificate("certificate is not a JSON object");

    Certificate cert;
    cert.polynomial = require_string(doc, "polynomial");
    cert.status = require_string(doc, "status");
    if (cert.status != "extending" && cert.status != "finite" && cert.status != "all_primes")
        throw MalformedCertificate("unknown status \"" + cert.status + '"');
    const auto& seed_field = require_field(doc, "rng_seed");
    if (!seed_field.is_number_unsigned())
        throw MalformedCertificate("field \"rng_seed\" must be a nonnegative integer");
    cert.rng_seed = seed_field.get<std::uint64_t>();
    cert.engine_version = require_string(doc, "engine_version");

    const auto& records = require_field(doc, "records");
    if (!records.is_array()) throw MalformedCertificate("field \"records\" must be an array");
    for (const auto& entry : records) {
        if (!entry.is_object()) throw MalformedCertificate("record entries must be objects");
        CertificateRecord rec;
        rec.p = require_decimal(entry, "p");
        if (rec.p[0] == '-') throw MalformedCertificate("field \"p\" must be positive");
        rec.e = static_cast<unsigned>(
            require_integer(entry, "e", 0, std::numeric_limits<unsigned>::max()));
        rec.k = require_decimal(entry, "k");
        rec.witness = require_decimal(entry, "witness");
        rec.round = static_cast<int>(
            require_integer(entry, "round", 0, std::numeric_limits<int>::max()));
        rec.primality = require_string(entry, "primality");
        if (rec.primality != "proven" && rec.primality != "probable")
            throw MalformedCertificate("unknown primality tag \"" + rec.primality + '"');
        cert.records.push_back(std::move(rec));
    }
    return cert;
}

CheckResult check_certificate(const Certificate& cert) {
    Polynomial poly;
    try {
        poly = Polynomial::parse(cert.polynomial);
    } catch (const Error& error) {
        throw MalformedCertificate(std::string("polynomial does not parse: ") + error.what());
    }

    CheckResult result;
    for (std::size_t i = 0; i < cert.records.size(); ++i) {
        const CertificateRecord& entry = cert.records[i];
        if (!is_canonical_decimal(entry.p) || !is_canonical_decimal(entry.k) ||
            !is_canonical_decimal(entry.witness))
            throw MalformedCertificate("record carries a non-canonical decimal string");
        PrimeRecord rec{from_decimal(entry.p), from_decimal(entry.k), entry.e,
                        from_decimal(entry.witness), entry.round};
        switch (check_record(poly, rec)) {
            case RecordCheck::Ok: break;
            case RecordCheck::PrimeFailed:
                result.failures.push_back({i, "p is not prime"});
                break;
            case RecordCheck::DivisibilityFailed:
                result.failures.push_back({i, "p does not divide P(witness)"});
                break;
            case RecordCheck::ValuationFailed:
                result.failures.push_back({i, "valuation mismatch"});
                break;
        }
    }
    result.valid = result.failures.empty();
    return result;
}

DensityReport density(const Polynomial& poly, std::uint64_t bound, unsigned thread_count) {
    if (bound < 2) throw std::invalid_argument("density bound must be >= 2");
    DensityReport report;
    report.polynomial = poly.to_string();
    report.bound = bound;
    report.primes_dividing = sieve_primes(poly, bound, thread_count).size();
    report.primes_total = count_primes_up_to(bound);
    report.ratio = report.primes_total == 0
                       ? 0.0
                       : static_cast<double>(report.primes_dividing) /
                             static_cast<double>(report.primes_total);
    return report;
}

std::string serialize_density(const DensityReport& report) {
    OrderedJson doc;
    doc["polynomial"] = report.polynomial;
    doc["bound"] = report.bound;
    doc["primes_total"] = report.primes_total;
    doc["primes_dividing"] = report.primes_dividing;
    doc["ratio"] = report.ratio;
    return doc.dump(2) + "\n";
}

std::string sieve_csv(const std::vector<std::uint64_t>& primes) {
    std::ostringstream out;
    out << "p\n";
    for (std::uint64_t p : primes) out << p << '\n';
    return out.str();
}

} // namespace polyprime
