#include "polyprime/polymod.hpp"

#include <stdexcept>

#include "polyprime/arith.hpp"
#include "polyprime/errors.hpp"
#include "polyprime/mod64.hpp"

namespace polyprime {

namespace {

void normalize(PolyModP& f) {
    while (!f.coeffs.empty() && f.coeffs.back() == 0) f.coeffs.pop_back();
}

void require_same_prime(const PolyModP& a, const PolyModP& b) {
    if (a.p != b.p) throw std::invalid_argument("mixed moduli in F_p[x] arithmetic");
}

// Scales f by the inverse of its leading coefficient.
PolyModP make_monic(PolyModP f) {
    if (f.is_zero() || f.coeffs.back() == 1) return f;
    std::uint64_t scale = modular::inv(f.coeffs.back(), f.p);
    for (auto& c : f.coeffs) c = modular::mul(c, scale, f.p);
    return f;
}

// Montgomery arithmetic mod an odd p < 2^63: REDC trades the 128/64 division
// in every coefficient product for three word multiplies, which is what makes
// the bulk sieve's frobenius computations cheap.
struct Montgomery {
    std::uint64_t p;
    std::uint64_t neg_inv; // -p^{-1} mod 2^64
    std::uint64_t r2;      // 2^128 mod p

    explicit Montgomery(std::uint64_t prime) : p(prime) {
        std::uint64_t inv = p; // Newton lifts a mod-2 inverse to mod 2^64
        for (int i = 0; i < 5; ++i) inv *= 2 - p * inv;
        neg_inv = ~inv + 1;
        std::uint64_t r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) % p);
        r2 = modular::mul(r, r, p);
    }

    std::uint64_t redc(unsigned __int128 t) const {
        std::uint64_t m = static_cast<std::uint64_t>(t) * neg_inv;
        std::uint64_t r = static_cast<std::uint64_t>(
            (t + static_cast<unsigned __int128>(m) * p) >> 64);
        return r >= p ? r - p : r;
    }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return redc(static_cast<unsigned __int128>(a) * b);
    }
    std::uint64_t to(std::uint64_t x) const { return mul(x, r2); }
    std::uint64_t from(std::uint64_t x) const { return redc(x); }
};

// Square-and-multiply in F_p[x]/(g) on preallocated buffers, all coefficients
// kept in Montgomery form.
PolyModP powmod_montgomery(const PolyModP& base, std::uint64_t exp, const PolyModP& g) {
    const Montgomery mont(g.p);
    const std::size_t degree = g.coeffs.size() - 1;

    std::vector<std::uint64_t> modulus(g.coeffs.size());
    for (std::size_t i = 0; i <= degree; ++i) modulus[i] = mont.to(g.coeffs[i]);
    const std::uint64_t lead_inv = mont.to(modular::inv(g.coeffs.back(), g.p));

    // Eliminates terms of degree >= deg(g); `a` holds a raw product.
    auto reduce = [&](std::vector<std::uint64_t>& a) {
        for (std::size_t i = a.size(); i-- > degree;) {
            std::uint64_t factor = mont.mul(a[i], lead_inv);
            if (factor == 0) continue;
            std::size_t shift = i - degree;
            for (std::size_t j = 0; j < degree; ++j) {
                a[shift + j] = modular::sub(a[shift + j], mont.mul(factor, modulus[j]), g.p);
            }
            a[i] = 0;
        }
        a.resize(std::min(a.size(), degree));
    };

    std::vector<std::uint64_t> result(1, mont.to(1));
    std::vector<std::uint64_t> running(base.coeffs.size());
    for (std::size_t i = 0; i < base.coeffs.size(); ++i) running[i] = mont.to(base.coeffs[i]);
    reduce(running);

    std::vector<std::uint64_t> product;
    auto multiply_into = [&](const std::vector<std::uint64_t>& u,
                             const std::vector<std::uint64_t>& v,
                             std::vector<std::uint64_t>& out) {
        out.assign(u.empty() || v.empty() ? 0 : u.size() + v.size() - 1, 0);
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (u[i] == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j) {
                out[i + j] = modular::add(out[i + j], mont.mul(u[i], v[j]), g.p);
            }
        }
        reduce(out);
    };
    auto square_into = [&](const std::vector<std::uint64_t>& u, std::vector<std::uint64_t>& out) {
        out.assign(u.empty() ? 0 : 2 * u.size() - 1, 0);
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (u[i] == 0) continue;
            out[2 * i] = modular::add(out[2 * i], mont.mul(u[i], u[i]), g.p);
            for (std::size_t j = i + 1; j < u.size(); ++j) {
                std::uint64_t cross = mont.mul(u[i], u[j]);
                out[i + j] = modular::add(out[i + j], modular::add(cross, cross, g.p), g.p);
            }
        }
        reduce(out);
    };

    while (exp != 0) {
        if (exp & 1) {
            multiply_into(result, running, product);
            result.swap(product);
        }
        exp >>= 1;
        if (exp == 0) break;
        square_into(running, product);
        running.swap(product);
    }

    PolyModP out;
    out.p = g.p;
    out.coeffs.reserve(result.size());
    for (std::uint64_t c : result) out.coeffs.push_back(mont.from(c));
    normalize(out);
    return out;
}

} // namespace

PolyModP reduce_mod_trusted(const Polynomial& poly, std::uint64_t p) {
    PolyModP f;
    f.p = p;
    f.coeffs.reserve(poly.coeffs().size());
    for (const BigInt& c : poly.coeffs()) {
        f.coeffs.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
    }
    normalize(f);
    return f;
}

PolyModP reduce_mod(const Polynomial& poly, std::uint64_t p) {
    if (!is_prime_u64(p)) throw NotPrime("reduction modulus " + std::to_string(p) + " is not prime");
    return reduce_mod_trusted(poly, p);
}

std::uint64_t evaluate_mod(const PolyModP& f, std::uint64_t x) {
    std::uint64_t acc = 0;
    x %= f.p;
    for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) {
        acc = modular::add(modular::mul(acc, x, f.p), *it, f.p);
    }
    return acc;
}

PolyModP polymod_add(const PolyModP& a, const PolyModP& b) {
    require_same_prime(a, b);
    PolyModP sum;
    sum.p = a.p;
    sum.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) sum.coeffs[i] = a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i)
        sum.coeffs[i] = modular::add(sum.coeffs[i], b.coeffs[i], a.p);
    normalize(sum);
    return sum;
}

PolyModP polymod_sub(const PolyModP& a, const PolyModP& b) {
    require_same_prime(a, b);
    PolyModP diff;
    diff.p = a.p;
    diff.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) diff.coeffs[i] = a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i)
        diff.coeffs[i] = modular::sub(diff.coeffs[i], b.coeffs[i], a.p);
    normalize(diff);
    return diff;
}

PolyModP polymod_mul(const PolyModP& a, const PolyModP& b) {
    require_same_prime(a, b);
    PolyModP product;
    product.p = a.p;
    if (a.is_zero() || b.is_zero()) return product;
    product.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
            product.coeffs[i + j] = modular::add(
                product.coeffs[i + j], modular::mul(a.coeffs[i], b.coeffs[j], a.p), a.p);
        }
    }
    normalize(product);
    return product;
}

std::pair<PolyModP, PolyModP> polymod_divmod(PolyModP a, const PolyModP& g) {
    require_same_prime(a, g);
    if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    PolyModP quotient;
    quotient.p = a.p;
    if (a.coeffs.size() < g.coeffs.size()) return {quotient, std::move(a)};
    quotient.coeffs.assign(a.coeffs.size() - g.coeffs.size() + 1, 0);
    std::uint64_t lead_inv = modular::inv(g.coeffs.back(), g.p);
    std::size_t g_degree = g.coeffs.size() - 1;
    for (std::size_t shift = quotient.coeffs.size(); shift-- > 0;) {
        std::uint64_t factor = modular::mul(a.coeffs[shift + g_degree], lead_inv, g.p);
        if (factor == 0) continue;
        quotient.coeffs[shift] = factor;
        for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
            a.coeffs[shift + j] =
                modular::sub(a.coeffs[shift + j], modular::mul(factor, g.coeffs[j], g.p), g.p);
        }
    }
    normalize(quotient);
    normalize(a);
    return {std::move(quotient), std::move(a)};
}

PolyModP polymod_rem(PolyModP a, const PolyModP& g) {
    return polymod_divmod(std::move(a), g).second;
}

PolyModP polymod_mulmod(const PolyModP& a, const PolyModP& b, const PolyModP& g) {
    require_same_prime(a, g);
    if (g.coeffs.size() < 2) throw std::invalid_argument("mulmod modulus must have degree >= 1");
    return polymod_rem(polymod_mul(a, b), g);
}

PolyModP polymod_powmod(const PolyModP& base, std::uint64_t exp, const PolyModP& g) {
    require_same_prime(base, g);
    if (g.coeffs.size() < 2) throw std::invalid_argument("powmod modulus must have degree >= 1");
    if (g.p % 2 == 1 && g.p < (std::uint64_t{1} << 63)) return powmod_montgomery(base, exp, g);

    PolyModP result{g.p, {1}};
    PolyModP b = polymod_rem(base, g);
    while (exp != 0) {
        if (exp & 1) result = polymod_mulmod(result, b, g);
        b = polymod_mulmod(b, b, g);
        exp >>= 1;
    }
    return result;
}

PolyModP frobenius_power(const PolyModP& g) {
    if (g.coeffs.size() < 2) throw std::invalid_argument("frobenius_power needs deg(g) >= 1");
    PolyModP x{g.p, {0, 1}};
    return polymod_powmod(x, g.p, g);
}

PolyModP polymod_gcd(PolyModP a, PolyModP b) {
    require_same_prime(a, b);
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("gcd of two zero polynomials is undefined");
    while (!b.is_zero()) {
        PolyModP r = polymod_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(std::move(a));
}

} // namespace polyprime
