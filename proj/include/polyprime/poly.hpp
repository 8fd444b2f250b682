#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyprime/bigint.hpp"

namespace polyprime {

/// Univariate integer polynomial. Coefficients are stored in ascending degree
/// order with a nonzero leading coefficient; the zero polynomial is the empty
/// sequence and has no degree. Values are immutable after construction and
/// safe to share across threads.
class Polynomial {
public:
    static constexpr std::size_t kDefaultDegreeCap = 512;

    Polynomial() = default;

    /// Takes coefficients in ascending degree order; leading zeros are stripped.
    explicit Polynomial(std::vector<BigInt> coeffs);

    /// Parses an expression such as "x^3 - 2x + 7" or "3*x^2 - 5".
    ///
    ///   poly    := term { ("+"|"-") term }
    ///   term    := integer [ "*"? var ] | var
    ///   var     := "x" [ "^" uint ]
    ///
    /// Whitespace is allowed between tokens; a unary minus is accepted on the
    /// first term. Like terms are combined, so the result is canonical.
    /// Throws EmptyInput, SyntaxError, or DegreeCapExceeded.
    static Polynomial parse(std::string_view text, std::size_t degree_cap = kDefaultDegreeCap);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }

    /// Degree, or nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    /// Coefficient of x^i (zero beyond the degree).
    const BigInt& coeff(std::size_t i) const;

    /// Exact value at `point` by Horner's rule.
    BigInt operator()(const BigInt& point) const;

    /// Canonical printer: descending degree, "x^k" powers, coefficient 1 and
    /// exponent 1 omitted, e.g. "x^3 - 2x + 7". The zero polynomial is "0".
    std::string to_string() const;

    friend Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs);

    bool operator==(const Polynomial& other) const { return coeffs_ == other.coeffs_; }

private:
    std::vector<BigInt> coeffs_;
};

} // namespace polyprime
