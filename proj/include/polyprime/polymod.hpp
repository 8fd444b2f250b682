#pragma once

#include <cstdint>
#include <vector>

#include "polyprime/poly.hpp"

namespace polyprime {

/// Polynomial over F_p for a word-sized prime p. Residues ascend by degree,
/// all < p, with no trailing zero (leading) entries; the zero polynomial is
/// the empty sequence.
struct PolyModP {
    std::uint64_t p = 2;
    std::vector<std::uint64_t> coeffs;

    bool is_zero() const noexcept { return coeffs.empty(); }
    bool operator==(const PolyModP& other) const = default;
};

/// Reduces each coefficient into [0, p) and strips vanished leading terms.
/// Throws NotPrime unless p is prime.
PolyModP reduce_mod(const Polynomial& poly, std::uint64_t p);

/// Same, for callers that have already certified p prime.
PolyModP reduce_mod_trusted(const Polynomial& poly, std::uint64_t p);

std::uint64_t evaluate_mod(const PolyModP& f, std::uint64_t x);

PolyModP polymod_add(const PolyModP& a, const PolyModP& b);
PolyModP polymod_sub(const PolyModP& a, const PolyModP& b);
PolyModP polymod_mul(const PolyModP& a, const PolyModP& b);

/// Remainder of a modulo g (g nonzero, not necessarily monic).
PolyModP polymod_rem(PolyModP a, const PolyModP& g);

/// Quotient and remainder of a divided by g.
std::pair<PolyModP, PolyModP> polymod_divmod(PolyModP a, const PolyModP& g);

/// (a * b) mod g; deg(g) >= 1.
PolyModP polymod_mulmod(const PolyModP& a, const PolyModP& b, const PolyModP& g);

/// base^exp mod g by square-and-multiply.
PolyModP polymod_powmod(const PolyModP& base, std::uint64_t exp, const PolyModP& g);

/// x^p mod g; the Frobenius image of x in F_p[x]/(g). deg(g) >= 1.
PolyModP frobenius_power(const PolyModP& g);

/// Monic gcd by Euclid's algorithm; a and b must not both be zero.
PolyModP polymod_gcd(PolyModP a, PolyModP b);

} // namespace polyprime
