#include "polyprime/arith.hpp"

#include <array>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <utility>

#include "polyprime/errors.hpp"
#include "polyprime/mod64.hpp"

namespace polyprime {

namespace {

// Primes below the trial-division bound, plus block products so a single gcd
// can rule out thousands of candidate divisors at once.
struct TrialTables {
    std::vector<std::uint64_t> primes;
    std::vector<BigInt> block_products; // product of each kBlock-sized run of primes
    static constexpr std::size_t kBlock = 4096;
};

const TrialTables& trial_tables() {
    static const TrialTables tables = [] {
        TrialTables t;
        const std::uint64_t n = kTrialDivisionBound;
        std::vector<bool> composite(n + 1, false);
        for (std::uint64_t i = 2; i * i <= n; ++i) {
            if (composite[i]) continue;
            for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
        }
        for (std::uint64_t i = 2; i <= n; ++i) {
            if (!composite[i]) t.primes.push_back(i);
        }
        for (std::size_t start = 0; start < t.primes.size(); start += TrialTables::kBlock) {
            BigInt product = 1;
            std::size_t stop = std::min(start + TrialTables::kBlock, t.primes.size());
            for (std::size_t i = start; i < stop; ++i) product *= t.primes[i];
            t.block_products.push_back(std::move(product));
        }
        return t;
    }();
    return tables;
}

bool miller_rabin_u64(std::uint64_t n, std::uint64_t base) {
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    std::uint64_t x = modular::pow(base % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = modular::mul(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Strong probable-prime test to base `base` for odd n >= 3.
bool miller_rabin_mpz(const BigInt& n, unsigned long base) {
    BigInt d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    BigInt b = base;
    BigInt x;
    mpz_powm(x.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

// Strong Lucas probable-prime test with Selfridge's parameter choice:
// first D in 5, -7, 9, -11, ... with (D|n) = -1, P = 1, Q = (1-D)/4.
// Callers have already excluded even n, small factors, and perfect squares.
bool strong_lucas_mpz(const BigInt& n) {
    long d_abs = 5;
    int d_sign = 1;
    BigInt d;
    while (true) {
        d = d_sign > 0 ? BigInt(d_abs) : BigInt(-d_abs);
        int jac = mpz_jacobi(d.get_mpz_t(), n.get_mpz_t());
        if (jac == -1) break;
        if (jac == 0) return false; // shares a factor with n
        d_abs += 2;
        d_sign = -d_sign;
    }
    BigInt q = (1 - d) / 4;

    BigInt m = n + 1;
    unsigned long s = mpz_scan1(m.get_mpz_t(), 0);
    BigInt odd_part;
    mpz_tdiv_q_2exp(odd_part.get_mpz_t(), m.get_mpz_t(), s);

    auto mod_n = [&n](const BigInt& x) { return mod_into(x, n); };
    auto halve = [&n](BigInt x) { // division by 2 mod odd n
        if (mpz_odd_p(x.get_mpz_t())) x += n;
        x >>= 1;
        return x;
    };

    // Left-to-right ladder over the bits of odd_part: U_1 = 1, V_1 = P = 1.
    BigInt u = 1, v = 1, qk = mod_n(q);
    std::size_t bits = mpz_sizeinbase(odd_part.get_mpz_t(), 2);
    for (std::size_t i = bits - 1; i-- > 0;) {
        // (U, V, Q^k) -> (U_{2k}, V_{2k}, Q^{2k})
        u = mod_n(u * v);
        v = mod_n(v * v - 2 * qk);
        qk = mod_n(qk * qk);
        if (mpz_tstbit(odd_part.get_mpz_t(), i)) {
            BigInt u_next = halve(mod_n(u + v));
            BigInt v_next = halve(mod_n(d * u + v));
            u = std::move(u_next);
            v = std::move(v_next);
            qk = mod_n(qk * q);
        }
    }

    if (u == 0 || v == 0) return true;
    for (unsigned long r = 1; r < s; ++r) {
        v = mod_n(v * v - 2 * qk);
        if (v == 0) return true;
        qk = mod_n(qk * qk);
    }
    return false;
}

class GmpRand {
public:
    explicit GmpRand(std::uint64_t seed) {
        gmp_randinit_mt(state_);
        gmp_randseed_ui(state_, seed);
    }
    ~GmpRand() { gmp_randclear(state_); }
    GmpRand(const GmpRand&) = delete;
    GmpRand& operator=(const GmpRand&) = delete;

    // Uniform in [0, n).
    BigInt below(const BigInt& n) {
        BigInt r;
        mpz_urandomm(r.get_mpz_t(), state_, n.get_mpz_t());
        return r;
    }

private:
    gmp_randstate_t state_;
};

void consume_budget(std::uint64_t& budget, std::uint64_t amount) {
    if (budget < amount) throw FactoringBudgetExceeded("Pollard-rho iteration budget exhausted");
    budget -= amount;
}

// Brent's cycle-finding variant of Pollard rho with batched gcds. Returns a
// nontrivial (possibly composite) divisor of odd composite n. Every squaring
// counts against the shared budget.
BigInt brent_rho(const BigInt& n, GmpRand& rng, std::uint64_t& budget) {
    const BigInt n_minus_3 = n - 3;
    while (true) {
        BigInt y = rng.below(n_minus_3) + 2; // [2, n-2]
        BigInt c = rng.below(n_minus_3) + 1; // [1, n-3]
        const std::uint64_t batch = 128;
        BigInt g = 1, q = 1, x, ys;
        std::uint64_t r = 1;
        while (g == 1) {
            x = y;
            consume_budget(budget, r);
            for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
            std::uint64_t k = 0;
            while (k < r && g == 1) {
                ys = y;
                std::uint64_t steps = std::min(batch, r - k);
                consume_budget(budget, steps);
                for (std::uint64_t i = 0; i < steps; ++i) {
                    y = (y * y + c) % n;
                    q = (q * abs(x - y)) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += steps;
            }
            r *= 2;
        }
        if (g == n) {
            // The batch overshot; replay one step at a time from ys.
            do {
                ys = (ys * ys + c) % n;
                consume_budget(budget, 1);
                BigInt diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
        // Degenerate cycle; retry with fresh parameters (budget still ticking).
    }
}

} // namespace

Valuation valuation(const BigInt& p, const BigInt& d) {
    if (p < 2 || is_prime(p) == Primality::Composite)
        throw NotPrime("valuation requires a prime p, got " + to_decimal(p));
    if (d == 0) throw ZeroValuation("v_p(0) is infinite");
    Valuation result;
    result.p = p;
    result.exponent = valuation_exponent(p, d);
    mpz_pow_ui(result.power.get_mpz_t(), p.get_mpz_t(), result.exponent);
    return result;
}

unsigned valuation_exponent(const BigInt& p, const BigInt& d) {
    BigInt reduced;
    BigInt magnitude = abs(d);
    mp_bitcnt_t count =
        mpz_remove(reduced.get_mpz_t(), magnitude.get_mpz_t(), p.get_mpz_t());
    return static_cast<unsigned>(count);
}

CrtSolution crt_combine(const CrtSystem& system) {
    BigInt x = 0, modulus = 1;
    for (const Congruence& congruence : system.congruences) {
        const BigInt& m = congruence.modulus;
        if (m < 2) throw std::invalid_argument("CRT modulus must be >= 2");
        BigInt residue = mod_into(congruence.residue, m);
        BigInt g, u, v;
        mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t(),
                   m.get_mpz_t());
        if (g != 1)
            throw ModuliNotCoprime("moduli " + to_decimal(modulus) + " and " + to_decimal(m) +
                                   " share the factor " + to_decimal(g));
        // u inverts the accumulated modulus mod m, so x + modulus*t hits the
        // new residue while staying fixed mod the old modulus.
        BigInt t = mod_into((residue - x) * u, m);
        x += modulus * t;
        modulus *= m;
    }
    return {std::move(x), std::move(modulus)};
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    // Bases 2..37 decide every n < 2^64; trying them as divisors first also
    // settles membership for the bases themselves.
    static constexpr std::array<std::uint64_t, 12> kBases = {2,  3,  5,  7,  11, 13,
                                                             17, 19, 23, 29, 31, 37};
    for (std::uint64_t p : kBases) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    for (std::uint64_t base : kBases) {
        if (!miller_rabin_u64(n, base)) return false;
    }
    return true;
}

Primality is_prime(const BigInt& n) {
    if (n < 2) return Primality::Composite;
    if (fits_u64(n)) return is_prime_u64(to_u64(n)) ? Primality::Prime : Primality::Composite;

    // Baillie-PSW: small trial division, base-2 Miller-Rabin, strong Lucas.
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return Primality::Composite;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) return Primality::Composite;
    if (!miller_rabin_mpz(n, 2)) return Primality::Composite;
    if (!strong_lucas_mpz(n)) return Primality::Composite;
    return Primality::ProbablePrime;
}

BigInt smallest_prime_factor(const BigInt& n, std::uint64_t rng_seed, std::uint64_t rho_budget) {
    if (n < 2) throw std::invalid_argument("smallest_prime_factor requires n >= 2");

    const TrialTables& tables = trial_tables();
    for (std::size_t block = 0; block < tables.block_products.size(); ++block) {
        BigInt g;
        mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), tables.block_products[block].get_mpz_t());
        if (g == 1) continue;
        std::size_t start = block * TrialTables::kBlock;
        std::size_t stop = std::min(start + TrialTables::kBlock, tables.primes.size());
        for (std::size_t i = start; i < stop; ++i) {
            if (mpz_divisible_ui_p(n.get_mpz_t(), tables.primes[i])) return BigInt(tables.primes[i]);
        }
    }

    // No factor below the trial bound, so anything up to its square is prime.
    const BigInt trial_bound_sq = BigInt(kTrialDivisionBound) * kTrialDivisionBound;
    if (n <= trial_bound_sq) return n;
    if (is_prime(n) != Primality::Composite) return n;

    GmpRand rng(rng_seed);
    std::uint64_t budget = rho_budget;
    BigInt m = n;
    while (true) {
        BigInt divisor = brent_rho(m, rng, budget);
        BigInt other = m / divisor;
        m = std::min(divisor, other);
        // Factors of m inherited "no divisor <= trial bound" from n.
        if (m <= trial_bound_sq) return m;
        if (is_prime(m) != Primality::Composite) return m;
    }
}

} // namespace polyprime
