#pragma once
// small.hpp - closed-form decompositions for numbers with at most 6 digits.
//
// Lengths 1-3 come from the two-palindrome tables (with the two exceptional
// families picking up a third summand), length 4 reduces to those, length 5
// reuses the length-(2m+1) sweep with m = 2, and length 6 reuses the
// length-2m sweep with m = 3 extended to cover numbers whose middle digit
// is 0. Branch labels name the table row used.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "palin3/classify.hpp"
#include "palin3/construct.hpp"
#include "palin3/digits.hpp"

namespace palin3 {
namespace detail {

using u128 = unsigned __int128;

inline u128 value_of(const DigitString& ds) {
    u128 v = 0;
    for (size_t i = ds.length(); i-- > 0;) v = v * ds.base.g + ds.digits[i];
    return v;
}

inline DigitString from_value128(u128 v, Base b) {
    std::vector<uint32_t> ds;
    do {
        ds.push_back(static_cast<uint32_t>(v % b.g));
        v /= b.g;
    } while (v);
    return DigitString(std::move(ds), b);
}

// Two palindromes summing to r < g^3, or nullopt for the two exceptional
// shapes (the (d+1)d family and 201).
inline std::optional<std::pair<u128, u128>> two_pal(u128 r, uint32_t g) {
    if (r == 0) return std::make_pair<u128, u128>(0, 0);
    if (r < g) return std::make_pair(r, static_cast<u128>(0));
    if (r == g) return std::make_pair<u128, u128>(g - 1, 1);
    if (r < static_cast<u128>(g) * g) {
        uint32_t d1 = static_cast<uint32_t>(r / g), d0 = static_cast<uint32_t>(r % g);
        if (d1 <= d0) return std::make_pair(static_cast<u128>(d1) * g + d1, static_cast<u128>(d0 - d1));
        if (d1 > d0 + 1)
            return std::make_pair(static_cast<u128>(d1 - 1) * g + (d1 - 1),
                                  static_cast<u128>(g + d0 - d1 + 1));
        return std::nullopt;
    }
    uint32_t d2 = static_cast<uint32_t>(r / g / g);
    uint32_t d1 = static_cast<uint32_t>(r / g % g), d0 = static_cast<uint32_t>(r % g);
    const auto pal3 = [&](uint32_t a, uint32_t b) {
        return (static_cast<u128>(a) * g + b) * g + a;
    };
    if (d2 <= d0) return std::make_pair(pal3(d2, d1), static_cast<u128>(d0 - d2));
    if (d1 != 0) return std::make_pair(pal3(d2, d1 - 1), static_cast<u128>(g + d0 - d2));
    if ((d0 + 1) % g != d2 % g)
        return std::make_pair(pal3(d2 - 1, g - 1), static_cast<u128>(g + d0 - d2 + 1));
    if (d2 >= 3) return std::make_pair(pal3(d2 - 2, g - 1), pal3(1, 1));
    if (d2 == 1) return std::make_pair(static_cast<u128>(g - 1) * g + (g - 1), static_cast<u128>(1));
    return std::nullopt;  // 201
}

} // namespace detail

inline ThreeConfig decompose_small(const DigitString& ds) {
    using detail::u128;
    const uint32_t g = ds.base.g;
    if (g < 5) throw std::invalid_argument("decompose_small: base must be >= 5");
    const size_t l = ds.length();
    if (l > 6 || ds.is_zero()) throw std::invalid_argument("decompose_small: need 1 <= n < g^6");
    const auto& d = ds.digits;
    const auto D = [&](int64_t a) { return digit_residue(a, ds.base); };
    const u128 n = detail::value_of(ds);

    WorkState none;
    none.g = g;
    none.algorithm = 'S';
    const auto made = [&](u128 a, u128 b, u128 c, std::string branch) {
        ThreeConfig cfg{detail::from_value128(a, ds.base), detail::from_value128(b, ds.base),
                        detail::from_value128(c, ds.base), std::move(branch), none};
        if (!(is_palindrome(cfg.p1) && is_palindrome(cfg.p2) && is_palindrome(cfg.p3)) ||
            add3(cfg.p1, cfg.p2, cfg.p3) != ds)
            throw std::logic_error("decompose_small: branch " + cfg.adjustment +
                                   " failed verification at " + render(ds, 10) + " base " +
                                   std::to_string(g));
        return cfg;
    };
    // digit list given most-significant first; every cell is range-checked
    const auto val = [&](std::initializer_list<int64_t> digs) {
        u128 v = 0;
        for (int64_t t : digs) {
            if (t < 0 || t >= static_cast<int64_t>(g))
                throw std::logic_error("decompose_small: cell out of range at " + render(ds, 10) +
                                       " base " + std::to_string(g));
            v = v * g + static_cast<uint32_t>(t);
        }
        return v;
    };

    if (l == 1) return made(n, 0, 0, "L1");
    if (l == 2) {
        if (auto tp = detail::two_pal(n, g)) return made(tp->first, tp->second, 0, "L2.two");
        return made(val({d[0], d[0]}), g - 1, 1, "L2.exc");
    }
    if (l == 3) {
        if (auto tp = detail::two_pal(n, g)) return made(tp->first, tp->second, 0, "L3.two");
        return made(val({1, 0, 1}), val({g - 1, g - 1}), 1, "L3.201");
    }
    if (l == 4) {
        const uint32_t d3 = d[3], d0 = d[0];
        const u128 base4 = val({d3, 0, 0, d3});
        if (n >= base4) {
            const u128 r = n - base4;
            if (auto tp = detail::two_pal(r, g)) return made(base4, tp->first, tp->second, "L4.i");
            if (r == val({2, 0, 1})) {
                if (d3 != 1 && d3 != g - 1)
                    return made(val({d3 - 1, g - 1, g - 1, d3 - 1}), val({2, 1, 2}), 0, "L4.ii.a");
                if (d3 == 1) return made(val({1, 1, 1, 1}), val({g - 2, g - 2}), 3, "L4.ii.b");
                return made(val({g - 1, 1, 1, g - 1}), val({g - 2, g - 2}), 3, "L4.ii.c");
            }
            const uint32_t delta = static_cast<uint32_t>(r % g);
            if (d3 + delta <= g - 1) {
                if (d3 != 1)
                    return made(val({d3 - 1, g - 2, g - 2, d3 - 1}), val({1, 3, 1}),
                                val({delta, delta}), "L4.iii.a1");
                return made(val({g - 1, g - 1, g - 1}), val({delta + 1, delta + 1}), 1, "L4.iii.a2");
            }
            return made(val({d3 - 1, g - 2, g - 2, d3 - 1}), val({1, 3, 1}), val({delta, delta}),
                        "L4.iii.b");
        }
        if (d3 == 1) return made(val({g - 1, g - 1, g - 1}), 1, 0, "L4.v");
        return made(val({d3 - 1, g - 1, g - 1, d3 - 1}), g + d0 - d3, 1, "L4.iv");
    }
    if (l == 5) {
        const uint32_t d3 = d[3], d1 = d[1];
        if (d[4] != 1) {
            auto cfg = run_I(ds, detail::seed_a14(ds));
            cfg.adjustment = "L5.I." + cfg.adjustment;
            return cfg;
        }
        const u128 base1 = val({1, d3, 0, d3, 1});
        if (n >= base1) {
            const u128 r = n - base1;
            if (auto tp = detail::two_pal(r, g)) return made(base1, tp->first, tp->second, "L5.i");
            if (r == val({2, 0, 1}))
                return made(val({1, d3, 1, d3, 1}), val({1, 0, 1}), 0, "L5.ii");
            const uint32_t delta = static_cast<uint32_t>(r % g);
            if (d3 != 0) {
                const u128 p2 = val({g - 1, delta + 1, g - 1});
                const char* lab = (d3 + delta + 1 <= g - 1) ? "L5.iii.a" : "L5.iii.b";
                return made(val({1, d3 - 1, 1, d3 - 1, 1}), p2, delta + 1, lab);
            }
            return made(val({g - 1, g - 1, g - 1, g - 1}), val({delta + 1, delta + 1}), 1, "L5.iv");
        }
        if (d3 == 0) return made(val({g - 1, g - 1, g - 1, g - 1}), 1, 0, "L5.v");
        const u128 base2 = val({1, d3 - 1, g - 1, d3 - 1, 1});
        const u128 r = n - base2;
        if (auto tp = detail::two_pal(r, g)) return made(base2, tp->first, tp->second, "L5.vi");
        if (r == val({2, 0, 1}))
            throw std::logic_error("decompose_small: L5 +201 leftover is unreachable");
        const uint32_t delta = static_cast<uint32_t>(r % g);
        if (d3 + delta != g + d1)
            throw std::logic_error("decompose_small: L5.vii shape violated at " + render(ds, 10));
        return made(val({1, d3 - 1, g - 2, d3 - 1, 1}), val({1, delta + 1, 1}), delta - 1, "L5.vii");
    }

    // l == 6
    const uint32_t d4 = d[4], d3 = d[3], d2 = d[2], d1 = d[1], d0 = d[0];
    if (d[5] != 1) {
        auto cfg = run_II(ds, detail::seed_a14(ds));
        cfg.adjustment = "L6.II." + cfg.adjustment;
        return cfg;
    }
    // split S into two digits, largest first
    const auto split = [&](int64_t S, uint32_t& hi, uint32_t& lo, uint32_t hi_min) {
        if (S < hi_min || S > 2 * static_cast<int64_t>(g) - 2)
            throw std::logic_error("decompose_small: digit split out of range at " + render(ds, 10));
        hi = static_cast<uint32_t>(std::min<int64_t>(g - 1, S - hi_min));
        lo = static_cast<uint32_t>(S - hi);
    };
    if (D(static_cast<int64_t>(d0) - d4 + 1) != 0 && D(static_cast<int64_t>(d0) - d4 + 2) != 0) {
        const uint32_t z1 = D(static_cast<int64_t>(d0) - d4 + 1);
        uint32_t x1, y1, x2, y2, x3, y3;
        split(static_cast<int64_t>(g) + d4 - 1, x1, y1, 1);
        split(static_cast<int64_t>(g) + d3 - 1, x2, y2, 0);
        const uint32_t c1 = (x1 + y1 + z1 - d0) / g;
        const uint32_t z2 = D(static_cast<int64_t>(d1) - x2 - y2 - c1);
        const uint32_t c2 = (x2 + y2 + z2 + c1 - d1) / g;
        split(static_cast<int64_t>(g) + d2 - c2 - z1, x3, y3, 0);
        return made(val({x1, x2, x3, x2, x1}), val({y1, y2, y3, y2, y1}), val({z1, z2, z1}), "L6.i");
    }
    if (D(static_cast<int64_t>(d0) - d4 + 2) == 0 && d2 != 0) {
        const uint32_t z1 = g - 1;
        uint32_t x1, y1, x2, y2, x3, y3;
        split(static_cast<int64_t>(g) + d4 - 1, x1, y1, 1);
        split(static_cast<int64_t>(g) + d3 - 1, x2, y2, 0);
        const uint32_t c1 = (x1 + y1 + z1 - d0) / g;
        const uint32_t z2 = D(static_cast<int64_t>(d1) - x2 - y2 - c1);
        const uint32_t c2 = (x2 + y2 + z2 + c1 - d1) / g;
        split(1 + static_cast<int64_t>(d2) - c2, x3, y3, 0);
        return made(val({x1, x2, x3, x2, x1}), val({y1, y2, y3, y2, y1}), val({z1, z2, z1}), "L6.ii");
    }
    if (D(static_cast<int64_t>(d0) - d4 + 2) == 0) {  // d2 == 0
        if (d4 <= 2) {
            const uint32_t x1 = d4 == 0 ? g - 2 : g - 1;
            const uint32_t y1 = d4 == 2 ? 2 : 1;
            const uint32_t z1 = g - 1;
            const uint32_t c1 = (x1 + y1 + z1 - d0) / g;
            uint32_t x2, y2, x3, y3;
            split(d3, x2, y2, 0);
            const uint32_t z2 = D(static_cast<int64_t>(d1) - x2 - y2 - c1);
            const uint32_t c2 = (x2 + y2 + z2 + c1 - d1) / g;
            if (d4 == 2 && c2 == 2) {
                if (d3 != g - 1 || d1 != 0)
                    throw std::logic_error("decompose_small: L6.iii.c overflow shape");
                return made(val({1, 2, g - 2, g - 2, 2, 1}), val({1, g - 3, 1}), g - 2, "L6.iii.c.s");
            }
            if (c2 == 2) throw std::logic_error("decompose_small: L6.iii carry 2");
            split(static_cast<int64_t>(g) - c2 - z2, x3, y3, 0);
            const char* lab = d4 == 0 ? "L6.iii.a" : d4 == 1 ? "L6.iii.b" : "L6.iii.c";
            return made(val({x1, x2, x3, x2, x1}), val({y1, y2, y3, y2, y1}),
                        val({z1, z2, z2, z1}), lab);
        }
        // d4 >= 3, d0 = d4 - 2
        const uint32_t c4 = (D(static_cast<int64_t>(d3) - 1) + 1 - d3) / g;
        const uint32_t z = D(static_cast<int64_t>(d1) - d3 - 1 + c4);
        const uint32_t c2 = (2 - c4 + D(static_cast<int64_t>(d3) - 1) + z - d1) / g;
        return made(val({1, 1 - c4, 0, 0, 1 - c4, 1}),
                    val({d4 - 1, D(static_cast<int64_t>(d3) - 1), 2 - c2,
                         D(static_cast<int64_t>(d3) - 1), d4 - 1}),
                    val({g - 2, z, g - 2}), "L6.iii.d");
    }
    // D(d0 - d4 + 1) == 0
    if (d3 != 0) {
        if (d4 != g - 1) {
            const uint32_t z1 = g - 1;
            uint32_t x1, y1, x2, y2, x3, y3;
            split(static_cast<int64_t>(g) + d4, x1, y1, 1);
            split(static_cast<int64_t>(d3) - 1, x2, y2, 0);
            const uint32_t c1 = (x1 + y1 + z1 - d0) / g;
            const uint32_t z2 = D(static_cast<int64_t>(d1) - x2 - y2 - c1);
            const uint32_t c2 = (x2 + y2 + z2 + c1 - d1) / g;
            split(1 + static_cast<int64_t>(d2) - c2, x3, y3, 0);
            return made(val({x1, x2, x3, x2, x1}), val({y1, y2, y3, y2, y1}), val({z1, z2, z1}),
                        "L6.iv.a");
        }
        // d4 = g-1, d0 = g-2; pick y >= 1 minimal steering the p3 middle cell
        // away from {g-2, g-1}
        int64_t yy = 0;
        for (int64_t cand = 1; cand <= 3; ++cand) {
            uint32_t t = D(static_cast<int64_t>(d1) - 3 - cand);
            if (t != g - 2 && t != g - 1) {
                yy = cand;
                break;
            }
        }
        if (yy == 0) throw std::logic_error("decompose_small: L6.iv.b no y");
        const int64_t xx = D(static_cast<int64_t>(d3) - yy);
        const int64_t t1 = (3 + yy + D(static_cast<int64_t>(d1) - 3 - yy) - d1) / g;
        int64_t mu = 0;
        int64_t t2 = (xx - mu + D(static_cast<int64_t>(d2) - xx - 1 - t1 + mu) + 1 + t1 - d2) / g;
        if (t2 == 2) {
            mu = 1;
            t2 = (xx - mu + D(static_cast<int64_t>(d2) - xx - 1 - t1 + mu) + 1 + t1 - d2) / g;
        }
        if (t1 < 0 || t1 > 1 || t2 < 0 || t2 > 1)
            throw std::logic_error("decompose_small: L6.iv.b carries out of range");
        const int64_t t3 = (xx + yy - d3) / g;
        return made(val({1, 3 - t3, xx - mu, xx - mu, 3 - t3, 1}),
                    val({g - 4, yy - t2 + mu, D(static_cast<int64_t>(d2) - xx - 1 - t1 + mu),
                         yy - t2 + mu, g - 4}),
                    val({1, D(static_cast<int64_t>(d1) - 3 - yy) + t2 - mu + t3, 1}), "L6.iv.b");
    }
    // d3 == 0
    if (d4 == 0) {  // d0 = g-1
        if (d2 != 0 || (d1 != 0 && d1 != g - 1)) {
            const u128 b6 = val({1, 0, 0, 0, 0, 1});
            auto tp = detail::two_pal(n - b6, g);
            if (!tp) throw std::logic_error("decompose_small: L6.v.a remainder not two palindromes");
            return made(b6, tp->first, tp->second, d2 != 0 ? "L6.v.a1" : "L6.v.a2");
        }
        if (d1 == 0) return made(val({1, 0, 0, 0, 0, 1}), g - 2, 0, "L6.v.a3");
        return made(val({g - 1, 0, 1, 0, g - 1}), val({g - 1, g - 2, g - 2, g - 1}), val({1, 0, 1}),
                    "L6.v.a4");
    }
    if (d4 == 1) {  // d0 = 0
        if (d2 >= 2 || (d2 == 1 && d1 != 0 && d1 != 1)) {
            const u128 b6 = val({1, 1, 0, 0, 1, 1});
            auto tp = detail::two_pal(n - b6, g);
            if (!tp) throw std::logic_error("decompose_small: L6.v.b remainder not two palindromes");
            return made(b6, tp->first, tp->second, "L6.v.b1");
        }
        if (d2 == 1 && d1 == 0)
            return made(val({1, 0, g - 1, g - 1, 0, 1}), val({1, g - 1, 1}), g - 2, "L6.v.b2");
        if (d2 == 1) return made(val({1, 1, 0, 0, 1, 1}), val({g - 1, g - 1}), 0, "L6.v.b3");
        if (d1 >= 2)
            return made(val({1, 1, 0, 0, 1, 1}), val({d1 - 2, d1 - 2}), g - d1 + 1, "L6.v.b4");
        if (d1 == 1)
            return made(val({1, 0, 0, 0, 0, 1}), val({1, 0, 0, 0, 1}), g - 2, "L6.v.b5");
        return made(val({1, 0, 0, 0, 0, 1}), val({g - 1, g - 1, g - 1, g - 1}), 0, "L6.v.b6");
    }
    if (d4 == 2) {  // d0 = 1
        if (d2 >= 2 || (d2 == 1 && d1 != 0 && d1 != 1)) {
            const u128 b6 = val({1, 2, 0, 0, 2, 1});
            auto tp = detail::two_pal(n - b6, g);
            if (!tp) throw std::logic_error("decompose_small: L6.v.c remainder not two palindromes");
            return made(b6, tp->first, tp->second, "L6.v.c1");
        }
        if (d2 == 1 && d1 == 0)
            return made(val({1, 1, g - 1, g - 1, 1, 1}), val({1, g - 2, 1}), g - 1, "L6.v.c2");
        if (d2 == 1)
            return made(val({1, 1, g - 1, g - 1, 1, 1}), val({1, g - 1, 1}), g - 1, "L6.v.c3");
        if (d1 >= 3) {
            if (d1 == 3) return made(val({1, 2, 0, 0, 2, 1}), g - 1, 1, "L6.v.c4e");
            return made(val({1, 2, 0, 0, 2, 1}), val({d1 - 3, d1 - 3}), g - d1 + 3, "L6.v.c4");
        }
        if (d1 == 2)
            return made(val({1, 1, g - 1, g - 1, 1, 1}), val({1, 0, 1}), g - 1, "L6.v.c5");
        if (d1 == 1)
            return made(val({1, 0, 0, 0, 0, 1}), val({2, 0, 0, 0, 2}), g - 2, "L6.v.c6");
        return made(val({1, 1, g - 1, g - 1, 1, 1}), val({g - 2, g - 2}), 2, "L6.v.c7");
    }
    const auto pick_y = [&](int64_t off) -> int64_t {
        for (int64_t cand = 1; cand <= 3; ++cand) {
            uint32_t t = D(off - cand);
            if (t != 0 && t != g - 1) return cand;
        }
        throw std::logic_error("decompose_small: no valid y");
    };
    if (d4 == 3) {  // d0 = 2
        const int64_t yy = pick_y(static_cast<int64_t>(d1) - 1);
        const int64_t t1 = (1 + yy + D(static_cast<int64_t>(d1) - 1 - yy) - d1) / g;
        const int64_t t2 =
            (g - yy - 1 - t1 + D(static_cast<int64_t>(d2) + yy + 2) + g - 1 + t1 - d2) / g;
        if (t1 < 0 || t1 > 1 || t2 < 1 || t2 > 2)
            throw std::logic_error("decompose_small: L6.v.d carries out of range");
        return made(val({1, 0, g - yy - 1 - t1, g - yy - 1 - t1, 0, 1}),
                    val({2, yy - t2 + 1 + t1, D(static_cast<int64_t>(d2) + yy + 2),
                         yy - t2 + 1 + t1, 2}),
                    val({g - 1, D(static_cast<int64_t>(d1) - 1 - yy) + t2 - 1 - t1, g - 1}),
                    "L6.v.d");
    }
    // d4 >= 4, d0 = d4 - 1
    const int64_t yy = pick_y(static_cast<int64_t>(d1) - 1);
    const int64_t t1 = (2 + yy + D(static_cast<int64_t>(d1) - 2 - yy) - d1) / g;
    const int64_t t2 = (g - yy + 1 + D(static_cast<int64_t>(d2) + yy - 1) - d2) / g;
    if (t1 < 0 || t1 > 1 || t2 < 0 || t2 > 1)
        throw std::logic_error("decompose_small: L6.v.e carries out of range");
    return made(val({1, 2, g - yy - t1, g - yy - t1, 2, 1}),
                val({d4 - 3, yy - t2 + t1, D(static_cast<int64_t>(d2) + yy - 1), yy - t2 + t1,
                     d4 - 3}),
                val({1, D(static_cast<int64_t>(d1) - 2 - yy) + t2 - t1, 1}), "L6.v.e");
}

} // namespace palin3
