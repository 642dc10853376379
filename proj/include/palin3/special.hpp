#pragma once
// special.hpp - Algorithm V: numbers whose associated p1 has an even digit
// count 2m while one of the two middle digits of n is 0.
//
// Subtract k*(g^m + g^{m-1}) for the least k in {1,2} that makes both middle
// digits nonzero, decompose the reduced number with the even-length sweeps,
// then add k back onto the two central digits of p1, which stay small enough
// to remain valid digits.

#include <cstdint>
#include <string>

#include "palin3/classify.hpp"
#include "palin3/construct.hpp"
#include "palin3/digits.hpp"

namespace palin3 {

enum class ReducedCase : uint8_t { same_length, shrunk_104 };

struct SpecialReduction {
    int k = 0;
    DigitString s;        // g^m + g^{m-1}
    DigitString n_prime;  // n - k*s
    ReducedCase reduced_case = ReducedCase::same_length;
};

struct VResult {
    ThreeConfig config;       // final (restored) configuration
    SpecialReduction reduction;
    TypeTag inner_tag;        // type assigned to n'
    char inner_algorithm;     // '2' or '4'
};

namespace detail {

inline DigitString make_step_value(uint32_t m, Base b) {
    std::vector<uint32_t> ds(m + 1, 0);
    ds[m] = 1;
    ds[m - 1] = 1;
    return DigitString(std::move(ds), b);
}

} // namespace detail

inline SpecialReduction reduce_special(const DigitString& ds) {
    const auto sd = detail::classify_seed(ds);
    const auto flag = special_flag(ds, sd.tag);
    if (!flag.special) throw std::invalid_argument("reduce_special: number is not special");
    const uint32_t m = flag.m;
    DigitString step = detail::make_step_value(m, ds.base);
    SpecialReduction red{0, step, ds, ReducedCase::same_length};
    DigitString np = ds;
    for (int k = 1; k <= 2; ++k) {
        np = subtract(np, step);
        if (np.length() + 1 < ds.length())
            throw std::logic_error("reduce_special: lost more than one digit at " + render(ds, 10));
        if (np.digits[m - 1] != 0 && np.digits[m] != 0) {
            red.k = k;
            red.n_prime = np;
            return red;
        }
    }
    throw std::logic_error("reduce_special: neither k=1 nor k=2 normalizes " + render(ds, 10));
}

inline VResult run_V(const DigitString& ds) {
    if (ds.base.g < 5) throw std::invalid_argument("run_V: base must be >= 5");
    if (ds.length() < 7) throw std::invalid_argument("run_V: small numbers are handled elsewhere");
    SpecialReduction red = reduce_special(ds);
    const uint32_t m = special_flag(ds, detail::classify_seed(ds).tag).m;
    const DigitString& np = red.n_prime;

    Seed inner = detail::classify_seed_any(np);
    ThreeConfig cfg{DigitString::zero(ds.base), DigitString::zero(ds.base),
                    DigitString::zero(ds.base), "", {}};
    char inner_alg;
    if ((inner.tag == TypeTag::A5 || inner.tag == TypeTag::A6) && inner.len1 != 2 * m) {
        // The reduced number reads 1 0 3... (or 1 0 2...) after the borrow
        // ran through the middle zeros; its own table would hand back an
        // odd-length p1, so reseed it in the B1 shape, which stays valid here.
        red.reduced_case = ReducedCase::shrunk_104;
        if (np.length() != 2 * m)
            throw std::logic_error("run_V: unexpected reduced length at " + render(ds, 10));
        const uint32_t dl3 = np.digits[np.length() - 3];
        if (np.digits[np.length() - 2] != 0 || (dl3 != 2 && dl3 != 3))
            throw std::logic_error("run_V: unexpected reduced shape at " + render(ds, 10));
        const uint32_t z1 = digit_residue(static_cast<int64_t>(np.digits[0]) - dl3, np.base);
        if (z1 == 0) throw std::logic_error("run_V: reduced z1 vanished at " + render(ds, 10));
        Seed forced;
        forced.tag = TypeTag::B1;
        forced.x1 = 0;
        forced.y1 = dl3 - 1;
        forced.z1 = z1;
        forced.len1 = np.length();
        forced.len2 = np.length() - 2;
        forced.len3 = np.length() - 3;
        forced.leading_pair = std::array<uint32_t, 2>{1, 0};
        cfg = run_IV(np, forced);
        inner_alg = '4';
        inner.tag = TypeTag::B1;
    } else if (!is_type_b(inner.tag)) {
        if (inner.len1 != 2 * m)
            throw std::logic_error("run_V: reduced p1 length mismatch at " + render(ds, 10));
        cfg = run_II(np, inner);
        inner_alg = '2';
    } else {
        if (inner.len1 != 2 * m || np.length() != 2 * m)
            throw std::logic_error("run_V: reduced p1 length mismatch at " + render(ds, 10));
        cfg = run_IV(np, inner);
        inner_alg = '4';
    }

    // restore: add k to the two central digits of p1'
    if (cfg.p1.length() != 2 * m) throw std::logic_error("run_V: inner p1 has wrong length");
    auto digits = cfg.p1.digits;
    const uint32_t g = ds.base.g;
    if (digits[m - 1] != digits[m] || digits[m - 1] + red.k > g - 1)
        throw std::logic_error("run_V: central digits cannot absorb k at " + render(ds, 10));
    digits[m - 1] += static_cast<uint32_t>(red.k);
    digits[m] += static_cast<uint32_t>(red.k);
    cfg.p1 = DigitString(std::move(digits), ds.base);
    if (!is_palindrome(cfg.p1) || add3(cfg.p1, cfg.p2, cfg.p3) != ds)
        throw std::logic_error("run_V: restored configuration failed verification at " +
                               render(ds, 10));
    return VResult{std::move(cfg), std::move(red), inner.tag, inner_alg};
}

} // namespace palin3
