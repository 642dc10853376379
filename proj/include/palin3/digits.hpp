#pragma once
// digits.hpp - arbitrary-precision base-g integers stored as digit vectors.
//
// Digits are little-endian: digits[i] is the coefficient of g^i, so index i
// matches the subscript in the usual d_{l-1}...d_1 d_0 notation. The value
// zero is canonically a single 0 digit. Bases up to 2^16 are supported.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace palin3 {

struct Base {
    uint32_t g;

    explicit Base(uint32_t radix) : g(radix) {
        if (g < 2 || g > (1u << 16))
            throw std::invalid_argument("base must be in [2, 2^16]");
    }
    friend bool operator==(Base a, Base b) { return a.g == b.g; }
    friend bool operator!=(Base a, Base b) { return a.g != b.g; }
};

namespace detail {

// Unsigned bignum in base 2^32, little-endian, used only for radix conversion.
using Limbs = std::vector<uint32_t>;

inline void limbs_trim(Limbs& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

inline void limbs_mul_add_small(Limbs& v, uint64_t mul, uint64_t add) {
    uint64_t carry = add;
    for (auto& limb : v) {
        uint64_t t = static_cast<uint64_t>(limb) * mul + carry;
        limb = static_cast<uint32_t>(t);
        carry = t >> 32;
    }
    while (carry) {
        v.push_back(static_cast<uint32_t>(carry));
        carry >>= 32;
    }
}

// Divides in place, returns the remainder.
inline uint32_t limbs_divmod_small(Limbs& v, uint32_t div) {
    uint64_t rem = 0;
    for (size_t i = v.size(); i-- > 0;) {
        uint64_t t = (rem << 32) | v[i];
        v[i] = static_cast<uint32_t>(t / div);
        rem = t % div;
    }
    limbs_trim(v);
    return static_cast<uint32_t>(rem);
}

inline int digit_of_char(char ch) {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'z') return ch - 'a' + 10;
    if (ch >= 'A' && ch <= 'Z') return ch - 'A' + 10;
    return -1;
}

inline char char_of_digit(uint32_t d) {
    return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10);
}

} // namespace detail

struct DigitString {
    std::vector<uint32_t> digits;  // little-endian, no leading zeros except [0]
    Base base;

    DigitString(std::vector<uint32_t> ds, Base b) : digits(std::move(ds)), base(b) {
        if (digits.empty()) digits.push_back(0);
        while (digits.size() > 1 && digits.back() == 0) digits.pop_back();
        for (uint32_t d : digits)
            if (d >= base.g) throw std::invalid_argument("digit out of range for base");
    }

    static DigitString zero(Base b) { return DigitString({0}, b); }

    static DigitString from_value(uint64_t v, Base b) {
        std::vector<uint32_t> ds;
        do {
            ds.push_back(static_cast<uint32_t>(v % b.g));
            v /= b.g;
        } while (v);
        return DigitString(std::move(ds), b);
    }

    size_t length() const { return digits.size(); }
    bool is_zero() const { return digits.size() == 1 && digits[0] == 0; }

    // Most significant digit.
    uint32_t lead() const { return digits.back(); }

    // Fits-in-u64 check and conversion; throws std::overflow_error otherwise.
    uint64_t to_value() const {
        uint64_t v = 0;
        const uint64_t max = std::numeric_limits<uint64_t>::max();
        for (size_t i = digits.size(); i-- > 0;) {
            if (v > (max - digits[i]) / base.g) throw std::overflow_error("value exceeds 64 bits");
            v = v * base.g + digits[i];
        }
        return v;
    }

    friend bool operator==(const DigitString& a, const DigitString& b) {
        return a.base == b.base && a.digits == b.digits;
    }
    friend bool operator!=(const DigitString& a, const DigitString& b) { return !(a == b); }
};

// Comparison of values in the same base: -1, 0, +1.
inline int compare(const DigitString& a, const DigitString& b) {
    if (a.base != b.base) throw std::invalid_argument("base mismatch");
    if (a.length() != b.length()) return a.length() < b.length() ? -1 : 1;
    for (size_t i = a.length(); i-- > 0;) {
        if (a.digits[i] != b.digits[i]) return a.digits[i] < b.digits[i] ? -1 : 1;
    }
    return 0;
}

// D(a): the unique digit in [0, g-1] congruent to a modulo g.
inline uint32_t digit_residue(int64_t a, Base base) {
    int64_t g = base.g;
    int64_t r = a % g;
    if (r < 0) r += g;
    return static_cast<uint32_t>(r);
}

inline bool is_palindrome(const DigitString& ds) {
    const auto& d = ds.digits;
    for (size_t i = 0, j = d.size() - 1; i < j; ++i, --j)
        if (d[i] != d[j]) return false;
    return true;
}

// Parses `text` written in `text_radix` (10 or base.g) into a base-g value.
// Decimal input performs a full radix conversion and so has no length limit.
inline DigitString parse(const std::string& text, Base base, uint32_t text_radix = 10) {
    if (text_radix != 10 && text_radix != base.g)
        throw std::invalid_argument("text radix must be 10 or the target base");
    if (text.empty()) throw std::invalid_argument("empty number");
    if (text_radix > 36)
        throw std::invalid_argument("digit-string input supported for radix <= 36");
    std::vector<uint32_t> val;  // digits in text_radix, little-endian
    val.reserve(text.size());
    for (size_t i = 0; i < text.size(); ++i) {
        int d = detail::digit_of_char(text[i]);
        if (d < 0)
            throw std::invalid_argument("invalid character '" + std::string(1, text[i]) +
                                        "' at position " + std::to_string(i));
        if (static_cast<uint32_t>(d) >= text_radix)
            throw std::invalid_argument("digit '" + std::string(1, text[i]) +
                                        "' out of range at position " + std::to_string(i));
        val.push_back(static_cast<uint32_t>(d));
    }
    std::reverse(val.begin(), val.end());
    if (text_radix == base.g) return DigitString(std::move(val), base);
    detail::Limbs limbs;
    for (size_t i = val.size(); i-- > 0;) detail::limbs_mul_add_small(limbs, text_radix, val[i]);
    std::vector<uint32_t> ds;
    do {
        ds.push_back(detail::limbs_divmod_small(limbs, base.g));
    } while (!limbs.empty());
    return DigitString(std::move(ds), base);
}

inline std::string render(const DigitString& ds, uint32_t radix = 10) {
    if (radix != 10 && radix != ds.base.g)
        throw std::invalid_argument("render radix must be 10 or the base");
    if (radix == ds.base.g) {
        if (radix > 36) throw std::invalid_argument("digit-string output supported for radix <= 36");
        std::string out;
        out.reserve(ds.length());
        for (size_t i = ds.length(); i-- > 0;) out.push_back(detail::char_of_digit(ds.digits[i]));
        return out;
    }
    detail::Limbs limbs;
    for (size_t i = ds.length(); i-- > 0;) detail::limbs_mul_add_small(limbs, ds.base.g, ds.digits[i]);
    std::string out;
    do {
        out.push_back(detail::char_of_digit(detail::limbs_divmod_small(limbs, 10)));
    } while (!limbs.empty());
    std::reverse(out.begin(), out.end());
    return out;
}

// Exact base-g sum of three values; any of them may be zero.
inline DigitString add3(const DigitString& a, const DigitString& b, const DigitString& c) {
    if (a.base != b.base || a.base != c.base) throw std::invalid_argument("base mismatch");
    const uint32_t g = a.base.g;
    size_t n = std::max({a.length(), b.length(), c.length()});
    std::vector<uint32_t> out;
    out.reserve(n + 1);
    uint32_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
        uint32_t s = carry;
        if (i < a.length()) s += a.digits[i];
        if (i < b.length()) s += b.digits[i];
        if (i < c.length()) s += c.digits[i];
        out.push_back(s % g);
        carry = s / g;
    }
    while (carry) {
        out.push_back(carry % g);
        carry /= g;
    }
    return DigitString(std::move(out), a.base);
}

inline DigitString add(const DigitString& a, const DigitString& b) {
    return add3(a, b, DigitString::zero(a.base));
}

// Exact difference a - b; requires a >= b.
inline DigitString subtract(const DigitString& a, const DigitString& b) {
    if (a.base != b.base) throw std::invalid_argument("base mismatch");
    if (compare(a, b) < 0) throw std::underflow_error("subtract: minuend smaller than subtrahend");
    const uint32_t g = a.base.g;
    std::vector<uint32_t> out;
    out.reserve(a.length());
    int64_t borrow = 0;
    for (size_t i = 0; i < a.length(); ++i) {
        int64_t s = static_cast<int64_t>(a.digits[i]) - borrow - (i < b.length() ? b.digits[i] : 0);
        borrow = 0;
        if (s < 0) {
            s += g;
            borrow = 1;
        }
        out.push_back(static_cast<uint32_t>(s));
    }
    return DigitString(std::move(out), a.base);
}

// In-place +1, for odometer-style exhaustive loops.
inline void increment(DigitString& ds) {
    const uint32_t g = ds.base.g;
    for (auto& d : ds.digits) {
        if (++d < g) return;
        d = 0;
    }
    ds.digits.push_back(1);
}

} // namespace palin3
