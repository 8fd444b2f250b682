#include "polyprime/modroot.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include "polyprime/arith.hpp"
#include "polyprime/errors.hpp"
#include "polyprime/mod64.hpp"

namespace polyprime {

namespace {

constexpr std::uint64_t kSegmentSpan = 1 << 16;

// Odd primes <= limit by plain sieving; used as the base for segments.
std::vector<std::uint64_t> base_primes(std::uint64_t limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 3; i <= limit; i += 2) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += 2 * i) composite[j] = true;
    }
    return primes;
}

std::uint64_t integer_sqrt(std::uint64_t n) {
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Odd primes in [lo, hi]; lo, hi odd and base covers sqrt(hi).
void odd_primes_in_segment(std::uint64_t lo, std::uint64_t hi,
                           const std::vector<std::uint64_t>& base,
                           std::vector<std::uint64_t>& out) {
    std::vector<bool> composite((hi - lo) / 2 + 1, false);
    for (std::uint64_t p : base) {
        if (p * p > hi) break;
        std::uint64_t first = std::max(p * p, ((lo + p - 1) / p) * p);
        if (first % 2 == 0) first += p;
        for (std::uint64_t m = first; m <= hi; m += 2 * p) composite[(m - lo) / 2] = true;
    }
    for (std::uint64_t n = lo; n <= hi; n += 2) {
        if (!composite[(n - lo) / 2] && n > 1) out.push_back(n);
    }
}

bool has_root_dispatch(const PolyModP& f) {
    if (f.is_zero()) return true;        // P vanishes identically mod p
    if (f.coeffs.size() == 1) return false; // nonzero constant has no root
    return f.p <= kBruteForceRootBound ? has_root_brute(f) : has_root_gcd(f);
}

unsigned resolve_threads(unsigned thread_count) {
    if (thread_count != 0) return thread_count;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Applies fn to every prime in [2, bound] from worker threads. Segments are
// claimed through an atomic counter; fn(segment_index, prime) must cope with
// concurrent calls on different segments.
template <typename Fn>
std::size_t for_each_prime_segment(std::uint64_t bound, unsigned thread_count, Fn&& fn) {
    if (bound < 2) return 0;
    const std::vector<std::uint64_t> base = base_primes(integer_sqrt(bound));
    const std::size_t segments =
        static_cast<std::size_t>((bound - 1) / kSegmentSpan) + 1; // covers [2, bound]
    unsigned workers = std::min<unsigned>(resolve_threads(thread_count),
                                          static_cast<unsigned>(segments));

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        std::vector<std::uint64_t> primes;
        while (true) {
            std::size_t seg = next.fetch_add(1);
            if (seg >= segments) return;
            std::uint64_t lo = 2 + static_cast<std::uint64_t>(seg) * kSegmentSpan;
            std::uint64_t hi = std::min(bound, lo + kSegmentSpan - 1);
            primes.clear();
            if (seg == 0) primes.push_back(2);
            std::uint64_t odd_lo = std::max<std::uint64_t>(lo | 1, 3);
            std::uint64_t odd_hi = hi % 2 ? hi : hi - 1;
            if (odd_lo <= odd_hi) odd_primes_in_segment(odd_lo, odd_hi, base, primes);
            for (std::uint64_t p : primes) fn(seg, p);
        }
    };

    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return segments;
}

} // namespace

bool has_root_brute(const PolyModP& f) {
    for (std::uint64_t x = 0; x < f.p; ++x) {
        if (evaluate_mod(f, x) == 0) return true;
    }
    return false;
}

PolyModP distinct_root_radical(const PolyModP& f) {
    if (f.coeffs.size() < 2) throw std::invalid_argument("radical needs deg(f) >= 1");
    PolyModP x{f.p, {0, 1}};
    PolyModP h = polymod_sub(frobenius_power(f), polymod_rem(x, f)); // x^p - x in F_p[x]/(f)
    if (h.is_zero()) return polymod_gcd(f, PolyModP{f.p, {}});       // f splits into distinct linears
    return polymod_gcd(h, f);
}

bool has_root_gcd(const PolyModP& f) { return distinct_root_radical(f).coeffs.size() >= 2; }

std::size_t count_roots_brute(const PolyModP& f) {
    std::size_t count = 0;
    for (std::uint64_t x = 0; x < f.p; ++x) {
        if (evaluate_mod(f, x) == 0) ++count;
    }
    return count;
}

bool has_root_mod(const Polynomial& poly, std::uint64_t p) {
    return has_root_dispatch(reduce_mod(poly, p));
}

std::optional<std::uint64_t> find_root_mod(const Polynomial& poly, std::uint64_t p,
                                           std::uint64_t rng_seed) {
    PolyModP f = reduce_mod(poly, p);
    if (f.is_zero()) return 0; // every residue works; report the smallest
    if (f.coeffs.size() == 1) return std::nullopt;

    if (p <= kBruteForceRootBound) {
        for (std::uint64_t x = 0; x < p; ++x) {
            if (evaluate_mod(f, x) == 0) return x;
        }
        return std::nullopt;
    }

    PolyModP g = distinct_root_radical(f);
    if (g.coeffs.size() < 2) return std::nullopt;

    // g is a product of distinct linear factors; split it down to one of them
    // with gcd((x + a)^((p-1)/2) - 1, g) for random a. p is odd here (> 4096).
    std::mt19937_64 rng(rng_seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, p - 1);
    const PolyModP one{p, {1}};
    while (g.coeffs.size() > 2) {
        PolyModP shifted{p, {pick(rng), 1}};
        PolyModP h = polymod_sub(polymod_powmod(shifted, (p - 1) / 2, g), one);
        if (h.is_zero()) continue; // all roots on the same character side; retry
        PolyModP d = polymod_gcd(h, g);
        if (d.coeffs.size() < 2 || d.coeffs.size() == g.coeffs.size()) continue;
        PolyModP quotient = polymod_divmod(g, d).first;
        g = quotient.coeffs.size() < d.coeffs.size() ? std::move(quotient) : std::move(d);
    }

    std::uint64_t root =
        modular::mul(modular::sub(0, g.coeffs[0], p), modular::inv(g.coeffs[1], p), p);
    if (evaluate_mod(f, root) != 0)
        throw std::logic_error("splitting produced an unverified root");
    return root;
}

std::vector<std::uint64_t> sieve_primes(const Polynomial& poly, std::uint64_t bound,
                                        unsigned thread_count) {
    std::vector<std::vector<std::uint64_t>> hits;
    if (bound >= 2) hits.resize(static_cast<std::size_t>((bound - 1) / kSegmentSpan) + 1);
    for_each_prime_segment(bound, thread_count, [&](std::size_t seg, std::uint64_t p) {
        if (has_root_dispatch(reduce_mod_trusted(poly, p))) hits[seg].push_back(p);
    });
    std::vector<std::uint64_t> result;
    for (const auto& segment_hits : hits) {
        result.insert(result.end(), segment_hits.begin(), segment_hits.end());
    }
    return result;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::vector<std::uint64_t>> hits;
    if (bound >= 2) hits.resize(static_cast<std::size_t>((bound - 1) / kSegmentSpan) + 1);
    for_each_prime_segment(bound, 1, [&](std::size_t seg, std::uint64_t p) {
        hits[seg].push_back(p);
    });
    std::vector<std::uint64_t> result;
    for (const auto& segment_hits : hits) {
        result.insert(result.end(), segment_hits.begin(), segment_hits.end());
    }
    return result;
}

std::uint64_t count_primes_up_to(std::uint64_t bound) {
    std::atomic<std::uint64_t> count{0};
    for_each_prime_segment(bound, 0, [&](std::size_t, std::uint64_t) {
        count.fetch_add(1, std::memory_order_relaxed);
    });
    return count.load();
}

} // namespace polyprime
