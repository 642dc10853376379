#pragma once
// oracle.hpp - brute-force ground truth, independent of the constructive
// algorithms: palindrome enumeration, two/three-palindrome searches, the
// two-sum sieve, and the non-representable digit family.

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "palin3/digits.hpp"

namespace palin3 {

// |P_l| = (g-1) * g^(ceil(l/2) - 1)
inline uint64_t palindrome_count(uint32_t l, Base base) {
    if (l == 0) throw std::invalid_argument("palindrome_count: length must be >= 1");
    uint64_t c = base.g - 1;
    for (uint32_t i = 0; i + 1 < (l + 1) / 2; ++i) c *= base.g;
    return c;
}

// Ascending stream of all base-g palindromes with exactly `length` digits.
class PalindromeStream {
  public:
    PalindromeStream(uint32_t length, Base base)
        : base_(base), len_(length), half_((length + 1) / 2, 0), done_(length == 0) {
        if (length == 0) throw std::invalid_argument("PalindromeStream: length must be >= 1");
        half_.back() = 1;  // smallest half: 1 followed by zeros
    }

    std::optional<DigitString> next() {
        if (done_) return std::nullopt;
        DigitString out = materialize();
        // advance the half (it is the top half read most-significant-last)
        for (size_t i = 0;; ++i) {
            if (i == half_.size()) {
                done_ = true;
                break;
            }
            if (++half_[i] < base_.g) break;
            half_[i] = 0;
            if (i + 1 == half_.size()) {
                done_ = true;
                break;
            }
        }
        if (!done_ && half_.back() == 0) done_ = true;
        return out;
    }

  private:
    DigitString materialize() const {
        const uint32_t h = static_cast<uint32_t>(half_.size());
        std::vector<uint32_t> p(len_);
        for (uint32_t j = 0; j < len_; ++j) p[j] = half_[h - 1 - std::min(j, len_ - 1 - j)];
        return DigitString(std::move(p), base_);
    }

    Base base_;
    uint32_t len_;
    std::vector<uint32_t> half_;  // little-endian half digits
    bool done_;
};

inline std::vector<DigitString> enumerate_palindromes(uint32_t length, Base base) {
    std::vector<DigitString> out;
    PalindromeStream st(length, base);
    while (auto p = st.next()) out.push_back(*p);
    return out;
}

namespace detail {

// Descending enumeration of palindromes <= bound, ending (optionally) at 0.
// Used by the brute-force searches; deterministic largest-first order.
class DescendingPalindromes {
  public:
    DescendingPalindromes(const DigitString& bound, bool include_zero)
        : bound_(bound), base_(bound.base), include_zero_(include_zero),
          len_(static_cast<uint32_t>(bound.length())) {
        start_length();
    }

    std::optional<DigitString> next() {
        while (true) {
            if (len_ == 0) {
                if (include_zero_ && !zero_emitted_) {
                    zero_emitted_ = true;
                    return DigitString::zero(base_);
                }
                return std::nullopt;
            }
            if (!half_valid_) {
                --len_;
                start_length();
                continue;
            }
            DigitString out = materialize();
            decrement_half();
            if (compare(out, bound_) <= 0) return out;
        }
    }

  private:
    void start_length() {
        if (len_ == 0) return;
        const uint32_t h = (len_ + 1) / 2;
        half_.assign(h, 0);
        if (len_ == bound_.length()) {
            // top half of the bound; materialized value may still exceed the
            // bound, which the caller-side compare filters once
            for (uint32_t i = 0; i < h; ++i) half_[i] = bound_.digits[len_ - h + i];
        } else {
            half_.assign(h, base_.g - 1);
        }
        half_valid_ = true;
    }

    void decrement_half() {
        for (size_t i = 0;; ++i) {
            if (i == half_.size()) {
                half_valid_ = false;
                return;
            }
            if (half_[i] > 0) {
                --half_[i];
                break;
            }
            half_[i] = base_.g - 1;
        }
        if (half_.back() == 0) half_valid_ = false;
    }

    DigitString materialize() const {
        const uint32_t h = static_cast<uint32_t>(half_.size());
        std::vector<uint32_t> p(len_);
        for (uint32_t j = 0; j < len_; ++j) p[j] = half_[h - 1 - std::min(j, len_ - 1 - j)];
        return DigitString(std::move(p), base_);
    }

    DigitString bound_;
    Base base_;
    bool include_zero_;
    uint32_t len_;
    std::vector<uint32_t> half_;
    bool half_valid_ = false;
    bool zero_emitted_ = false;
};

} // namespace detail

// Some pair p >= q >= 0 of palindromes with p + q = n, or nullopt. The pair
// with the largest p is returned. With allow_zero = false both parts must be
// positive.
inline std::optional<std::pair<DigitString, DigitString>> brute_two(const DigitString& n,
                                                                    bool allow_zero = true) {
    if (n.is_zero())
        return allow_zero ? std::make_optional(std::make_pair(DigitString::zero(n.base),
                                                              DigitString::zero(n.base)))
                          : std::nullopt;
    detail::DescendingPalindromes stream(n, false);
    while (auto p = stream.next()) {
        DigitString q = subtract(n, *p);
        if (compare(*p, q) < 0) break;  // now p < n-p: every split already seen
        if (q.is_zero() && !allow_zero) continue;
        if (is_palindrome(q)) return std::make_pair(*p, q);
    }
    return std::nullopt;
}

// Some triple p >= q >= r of palindromes summing to n, or nullopt (possible
// only for g < 5). Deterministic: largest p, then largest q.
inline std::optional<std::array<DigitString, 3>> brute_three(const DigitString& n,
                                                             bool allow_zero = true) {
    if (n.is_zero()) return std::nullopt;
    detail::DescendingPalindromes stream(n, allow_zero);
    while (auto p = stream.next()) {
        if (!allow_zero && p->is_zero()) break;
        DigitString r = subtract(n, *p);
        if (r.is_zero()) {
            if (allow_zero)
                return std::array<DigitString, 3>{*p, DigitString::zero(n.base),
                                                  DigitString::zero(n.base)};
            continue;
        }
        if (auto two = brute_two(r, allow_zero)) {
            if (compare(two->first, *p) > 0) continue;  // keep p as the largest part
            return std::array<DigitString, 3>{*p, two->first, two->second};
        }
    }
    return std::nullopt;
}

// -- value-based sieve (bulk counting) --------------------------------------

inline bool is_palindrome_value(uint64_t v, Base base) {
    uint32_t d[64];
    int k = 0;
    do {
        d[k++] = static_cast<uint32_t>(v % base.g);
        v /= base.g;
    } while (v);
    for (int i = 0, j = k - 1; i < j; ++i, --j)
        if (d[i] != d[j]) return false;
    return true;
}

inline std::vector<uint64_t> palindrome_values_upto(uint64_t limit, Base base) {
    if (limit > std::numeric_limits<uint64_t>::max() / base.g / base.g)
        throw std::invalid_argument("palindrome_values_upto: limit too large");
    std::vector<uint64_t> out{0};
    uint64_t lo_half = 1;
    while (lo_half <= limit) {
        // halves of a fixed digit count generate one odd and one even length
        uint64_t hi_half = lo_half * base.g;
        bool produced = false;
        for (int parity = 0; parity < 2; ++parity) {
            for (uint64_t half = lo_half; half < hi_half; ++half) {
                // append the half's digits again in reverse; its last digit is
                // the center and is not repeated for the odd length
                uint64_t v = half;
                uint64_t m = parity == 0 ? half / base.g : half;
                while (m) {
                    v = v * base.g + m % base.g;
                    m /= base.g;
                }
                if (v > limit) break;
                produced = true;
                out.push_back(v);
            }
        }
        if (!produced) break;
        lo_half = hi_half;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Bit sieve of all n <= limit expressible as a sum of two palindromes.
class TwoSumSieve {
  public:
    TwoSumSieve(uint64_t limit, Base base, bool allow_zero = true)
        : limit_(limit), bits_((limit + 64) / 64, 0) {
        auto pals = palindrome_values_upto(limit, base);
        size_t lo = allow_zero ? 0 : 1;  // pals[0] == 0
        for (size_t i = lo; i < pals.size(); ++i) {
            for (size_t j = i; j < pals.size(); ++j) {
                uint64_t s = pals[i] + pals[j];
                if (s > limit) break;
                bits_[s >> 6] |= uint64_t{1} << (s & 63);
            }
        }
    }

    bool contains(uint64_t v) const {
        return v <= limit_ && (bits_[v >> 6] >> (v & 63)) & 1;
    }

    // how many n in [1, upto] are marked
    uint64_t count(uint64_t upto) const {
        uint64_t c = 0;
        for (uint64_t v = 1; v <= upto && v <= limit_; ++v) c += contains(v) ? 1 : 0;
        return c;
    }

  private:
    uint64_t limit_;
    std::vector<uint64_t> bits_;
};

inline uint64_t count_two_sums(uint64_t limit, Base base, bool allow_zero = true) {
    return TwoSumSieve(limit, base, allow_zero).count(limit);
}

inline uint64_t count_two_sums(const DigitString& limit, bool allow_zero = true) {
    return count_two_sums(limit.to_value(), limit.base, allow_zero);
}

// -- the provably non-representable family ----------------------------------
// Digit pattern (g-1)(g-1) free... free 0 (g-1): g^(l-4) members at length l.

inline void family_members(uint32_t length, Base base,
                           const std::function<void(const DigitString&)>& fn) {
    if (length < 4) throw std::invalid_argument("family_members: length must be >= 4");
    const uint32_t g = base.g;
    std::vector<uint32_t> digs(length, 0);
    digs[0] = g - 1;
    digs[1] = 0;
    digs[length - 1] = g - 1;
    digs[length - 2] = g - 1;
    const uint32_t free_lo = 2, free_hi = length - 2;  // positions [free_lo, free_hi)
    while (true) {
        fn(DigitString(std::vector<uint32_t>(digs), base));
        uint32_t i = free_lo;
        for (; i < free_hi; ++i) {
            if (++digs[i] < g) break;
            digs[i] = 0;
        }
        if (i == free_hi) break;
    }
}

inline std::vector<DigitString> family_members(uint32_t length, Base base) {
    std::vector<DigitString> out;
    family_members(length, base, [&](const DigitString& m) { out.push_back(m); });
    return out;
}

} // namespace palin3
