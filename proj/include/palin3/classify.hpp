#pragma once
// classify.hpp - type assignment for integers with at least 7 digits.
//
// Each integer gets one of thirteen labels (A1-A6, B1-B7) from its leading
// digits and a residue condition on the last digit. The label fixes the
// lengths and the first digits of the three palindromes. Rows are tested in
// table order and the first match wins; the only multi-matches are {B2,B7}
// (identical seeds) and {B4,B6} (both seeds valid), which is checked on
// every call.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "palin3/digits.hpp"

namespace palin3 {

enum class TypeTag : uint8_t { A1, A2, A3, A4, A5, A6, B1, B2, B3, B4, B5, B6, B7 };

inline const char* to_string(TypeTag t) {
    static constexpr std::array<const char*, 13> names = {
        "A1", "A2", "A3", "A4", "A5", "A6", "B1", "B2", "B3", "B4", "B5", "B6", "B7"};
    return names[static_cast<size_t>(t)];
}

inline bool is_type_b(TypeTag t) { return t >= TypeTag::B1; }

// Seed configuration: first digits and declared lengths of p1, p2, p3.
// For B types p1 has two fixed leading digits (1 and x1); leading_pair holds
// them most-significant first.
struct Seed {
    TypeTag tag;
    uint32_t x1 = 0, y1 = 0, z1 = 0;
    size_t len1 = 0, len2 = 0, len3 = 0;
    std::optional<std::array<uint32_t, 2>> leading_pair;
};

struct SpecialFlag {
    bool special = false;
    uint32_t m = 0;  // half-length when p1 has 2m digits, else 0
};

namespace detail {

// A1-A4 seed from the two leading digits and the last one; valid for any
// length >= 2 as long as the leading digit is not 1 when it lands in A3/A4.
inline Seed seed_a14(const DigitString& ds) {
    const uint32_t g = ds.base.g;
    const size_t l = ds.length();
    const uint32_t dl1 = ds.digits[l - 1], dl2 = ds.digits[l - 2], d0 = ds.digits[0];
    Seed s;
    s.len1 = l;
    s.len2 = l - 1;
    s.len3 = l - 2;
    if (dl2 > 2) {
        uint32_t z1 = digit_residue(static_cast<int64_t>(d0) - dl1 - dl2 + 1, ds.base);
        if (z1 != 0)
            s = {TypeTag::A1, dl1, dl2 - 1, z1, l, l - 1, l - 2, std::nullopt};
        else
            s = {TypeTag::A2, dl1, dl2 - 2, 1, l, l - 1, l - 2, std::nullopt};
    } else {
        if (dl1 == 1) throw std::logic_error("seed_a14: leading digit 1 needs the B/A5 tables");
        uint32_t z1 = digit_residue(static_cast<int64_t>(d0) - dl1 + 2, ds.base);
        if (z1 != 0)
            s = {TypeTag::A3, dl1 - 1, g - 1, z1, l, l - 1, l - 2, std::nullopt};
        else
            s = {TypeTag::A4, dl1 - 1, g - 2, 1, l, l - 1, l - 2, std::nullopt};
    }
    return s;
}

inline std::vector<Seed> all_matches(const DigitString& ds) {
    const uint32_t g = ds.base.g;
    const size_t l = ds.length();
    const uint32_t dl1 = ds.digits[l - 1], dl2 = ds.digits[l - 2], dl3 = ds.digits[l - 3];
    const uint32_t d0 = ds.digits[0];
    const auto D = [&](int64_t a) { return digit_residue(a, ds.base); };
    std::vector<Seed> out;
    const auto push = [&](TypeTag tag, uint32_t x1, uint32_t y1, uint32_t z1, size_t len1) {
        Seed s;
        s.tag = tag;
        s.x1 = x1;
        s.y1 = y1;
        s.z1 = z1;
        if (tag <= TypeTag::A6) {
            s.len1 = len1;
            s.len2 = len1 - 1;
            s.len3 = len1 - 2;
        } else {
            s.len1 = len1;
            s.len2 = len1 - 2;
            s.len3 = len1 - 3;
            s.leading_pair = std::array<uint32_t, 2>{1, x1};
        }
        out.push_back(s);
    };
    if (dl2 > 2) {
        if (uint32_t z1 = D(static_cast<int64_t>(d0) - dl1 - dl2 + 1); z1 != 0)
            push(TypeTag::A1, dl1, dl2 - 1, z1, l);
        else
            push(TypeTag::A2, dl1, dl2 - 2, 1, l);
    }
    if (dl2 <= 2 && dl1 != 1) {
        if (uint32_t z1 = D(static_cast<int64_t>(d0) - dl1 + 2); z1 != 0)
            push(TypeTag::A3, dl1 - 1, g - 1, z1, l);
        else
            push(TypeTag::A4, dl1 - 1, g - 2, 1, l);
    }
    if (dl1 == 1 && dl2 == 0 && dl3 <= 3 && D(static_cast<int64_t>(d0) - dl3) != 0)
        push(TypeTag::A5, g - 1, dl3 + 1, D(static_cast<int64_t>(d0) - dl3), l - 1);
    if (dl1 == 1 && dl2 == 0 && dl3 <= 2 && D(static_cast<int64_t>(d0) - dl3) == 0)
        push(TypeTag::A6, g - 1, dl3 + 2, g - 1, l - 1);
    if (dl1 == 1 && dl2 <= 2 && dl3 >= 4 && D(static_cast<int64_t>(d0) - dl3) != 0)
        push(TypeTag::B1, dl2, dl3 - 1, D(static_cast<int64_t>(d0) - dl3), l);
    if (dl1 == 1 && dl2 <= 2 && dl3 >= 3 && D(static_cast<int64_t>(d0) - dl3) == 0)
        push(TypeTag::B2, dl2, dl3 - 2, 1, l);
    if (dl1 == 1 && (dl2 == 1 || dl2 == 2)) {
        if (dl3 <= 1 && d0 == 0) push(TypeTag::B3, dl2 - 1, g - 2, 1, l);
        if ((dl3 == 2 || dl3 == 3) && d0 == 0) push(TypeTag::B4, dl2, 1, g - 2, l);
        if (dl3 <= 2 && d0 != 0) push(TypeTag::B5, dl2 - 1, g - 1, d0, l);
        if (dl3 == 3 && D(static_cast<int64_t>(d0) - 3) != 0) push(TypeTag::B6, dl2, 2, D(static_cast<int64_t>(d0) - 3), l);
        if (dl3 == 3 && d0 == 3) push(TypeTag::B7, dl2, 1, 1, l);
    }
    return out;
}

inline void check_match_set(const std::vector<Seed>& ms, const DigitString& ds) {
    if (ms.empty())
        throw std::logic_error("classification is not total at " + render(ds, 10) +
                               " base " + std::to_string(ds.base.g));
    if (ms.size() == 1) return;
    const auto pair_is = [&](TypeTag a, TypeTag b) {
        return ms.size() == 2 && ms[0].tag == a && ms[1].tag == b;
    };
    if (!pair_is(TypeTag::B2, TypeTag::B7) && !pair_is(TypeTag::B4, TypeTag::B6))
        throw std::logic_error("unexpected classification overlap at " + render(ds, 10) +
                               " base " + std::to_string(ds.base.g));
}

// Table lookup without the public length gate; the special reduction can
// hand back a number one digit shorter than its input.
inline Seed classify_seed_any(const DigitString& ds) {
    if (ds.base.g < 5) throw std::invalid_argument("classification requires base >= 5");
    auto ms = all_matches(ds);
    check_match_set(ms, ds);
    return ms.front();
}

inline Seed classify_seed(const DigitString& ds) {
    if (ds.length() < 7) throw std::invalid_argument("classification requires at least 7 digits");
    return classify_seed_any(ds);
}

} // namespace detail

inline TypeTag classify(const DigitString& ds) { return detail::classify_seed(ds).tag; }

// All matching labels, in table order. Exposed for totality/disjointness scans.
inline std::vector<TypeTag> classify_matches(const DigitString& ds) {
    if (ds.length() < 3) throw std::invalid_argument("need at least 3 digits");
    std::vector<TypeTag> tags;
    for (const auto& s : detail::all_matches(ds)) tags.push_back(s.tag);
    return tags;
}

inline Seed seed(TypeTag tag, const DigitString& ds) {
    auto s = detail::classify_seed(ds);
    if (s.tag != tag) {
        // accept the known benign overlaps, otherwise it is a caller bug
        for (const auto& alt : detail::all_matches(ds))
            if (alt.tag == tag) return alt;
        throw std::invalid_argument("type tag does not match the digit string");
    }
    return s;
}

inline SpecialFlag special_flag(const DigitString& ds, TypeTag tag) {
    const size_t p1len = (tag == TypeTag::A5 || tag == TypeTag::A6) ? ds.length() - 1 : ds.length();
    SpecialFlag f;
    if (p1len % 2 != 0) return f;
    f.m = static_cast<uint32_t>(p1len / 2);
    f.special = ds.digits[f.m - 1] == 0 || ds.digits[f.m] == 0;
    return f;
}

} // namespace palin3
