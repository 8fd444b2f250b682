#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace polyprime {

using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& value) { return value.get_str(10); }

// True for sign-prefixed base-10 strings with no leading zeros ("-12", "0",
// but not "-0", "007" or "").
inline bool is_canonical_decimal(const std::string& text) {
    std::size_t i = (!text.empty() && text[0] == '-') ? 1 : 0;
    if (i == text.size()) return false;
    if (text[i] == '0') return text.size() == i + 1 && i == 0;
    for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') return false;
    }
    return true;
}

inline BigInt from_decimal(const std::string& text) { return BigInt(text, 10); }

// x mod m brought into [0, m); m > 0.
inline BigInt mod_into(const BigInt& x, const BigInt& m) {
    BigInt r = x % m;
    if (r < 0) r += m;
    return r;
}

inline std::size_t bit_length(const BigInt& value) {
    return value == 0 ? 0 : mpz_sizeinbase(value.get_mpz_t(), 2);
}

inline bool fits_u64(const BigInt& value) {
    return value >= 0 && value.fits_ulong_p();
}

inline std::uint64_t to_u64(const BigInt& value) { return value.get_ui(); }

} // namespace polyprime
