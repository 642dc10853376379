#pragma once
// construct.hpp - the digit-by-digit sweeps (Algorithms I-IV) and their
// adjustment steps.
//
// Each sweep walks the two sides of the target number at once: y_i fixes the
// digit seen from the left, z_i the digit seen from the right, and x_i
// absorbs the expected carry. The sweep result ("temporary configuration")
// is correct everywhere except possibly one collision column in the middle;
// the adjustment step rewrites a few central cells, keeping all three rows
// palindromic. Every run is verified (sum and palindromicity) before it is
// returned; a failure means a transcription bug and throws with a dump.

#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "palin3/classify.hpp"
#include "palin3/digits.hpp"

namespace palin3 {

// Sweep trace: x/y/z/c are 1-indexed (slot 0 unused) and record the values
// before adjustment. `algorithm` is one of 'I','2','3','4' mapped below.
struct WorkState {
    std::vector<uint32_t> x, y, z, c;
    uint32_t m = 0;
    uint32_t g = 0;
    char algorithm = '?';
};

struct ThreeConfig {
    DigitString p1, p2, p3;
    std::string adjustment;  // "none" or a case label such as "IV.5.iii.a"
    WorkState state;
};

inline const char* algorithm_name(char a) {
    switch (a) {
        case 'I': return "I";
        case '2': return "II";
        case '3': return "III";
        case '4': return "IV";
        case '5': return "V";
        case 'S': return "small";
        default: return "?";
    }
}

// Digit produced in every column (including final carry columns) when the
// three rows are summed with carry propagation.
inline std::vector<uint32_t> column_sums(const DigitString& p1, const DigitString& p2,
                                         const DigitString& p3) {
    const uint32_t g = p1.base.g;
    size_t n = std::max({p1.length(), p2.length(), p3.length()});
    std::vector<uint32_t> cols;
    cols.reserve(n + 1);
    uint32_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
        uint32_t s = carry;
        if (i < p1.length()) s += p1.digits[i];
        if (i < p2.length()) s += p2.digits[i];
        if (i < p3.length()) s += p3.digits[i];
        cols.push_back(s % g);
        carry = s / g;
    }
    while (carry) {
        cols.push_back(carry % g);
        carry /= g;
    }
    return cols;
}

namespace detail {

[[noreturn]] inline void construct_fail(const std::string& what, const WorkState& st,
                                        const DigitString& ds) {
    std::ostringstream os;
    os << "construct: " << what << " [algorithm " << algorithm_name(st.algorithm)
       << ", m=" << st.m << ", base " << ds.base.g << ", n=" << render(ds, 10) << "; x=";
    const auto row = [&os](const std::vector<uint32_t>& v) {
        for (size_t i = 1; i < v.size(); ++i) os << (i > 1 ? "," : "") << v[i];
    };
    row(st.x);
    os << " y=";
    row(st.y);
    os << " z=";
    row(st.z);
    os << " c=";
    row(st.c);
    os << "]";
    throw std::logic_error(os.str());
}

inline void construct_check(bool ok, const char* what, const WorkState& st,
                            const DigitString& ds) {
    if (!ok) construct_fail(what, st, ds);
}

// Exact carry out of a column: (sum - target) must be divisible by g.
inline uint32_t carry_out(uint32_t sum, uint32_t target, uint32_t g, const WorkState& st,
                          const DigitString& ds) {
    construct_check(sum % g == target % g, "column residue mismatch", st, ds);
    uint32_t c = (sum - target) / g;
    construct_check(c <= 2, "carry out of range", st, ds);
    return c;
}

// -- palindrome builders ---------------------------------------------------
// The builders realize the row layouts: distance d from either end selects
// x_{d+1} (or x_d with a fixed outer 1 for the B shapes).

inline DigitString build_p_I1(const std::vector<uint32_t>& x, uint32_t m, Base b) {
    std::vector<uint32_t> p(2 * m + 1);
    for (uint32_t j = 0; j <= 2 * m; ++j) p[j] = x[std::min(j, 2 * m - j) + 1];
    return DigitString(std::move(p), b);
}

inline DigitString build_half(const std::vector<uint32_t>& v, uint32_t len, Base b) {
    // generic row of `len` digits with v[d+1] at distance d from the ends
    std::vector<uint32_t> p(len);
    for (uint32_t j = 0; j < len; ++j) p[j] = v[std::min(j, len - 1 - j) + 1];
    return DigitString(std::move(p), b);
}

inline DigitString build_one_outer(const std::vector<uint32_t>& x, uint32_t len, Base b) {
    // B shapes: outer digit 1, then x_d at distance d
    std::vector<uint32_t> p(len);
    for (uint32_t j = 0; j < len; ++j) {
        uint32_t dist = std::min(j, len - 1 - j);
        p[j] = dist == 0 ? 1 : x[dist];
    }
    return DigitString(std::move(p), b);
}

} // namespace detail

// Temporary configuration (pre-adjustment rows) reconstructed from a sweep.
inline std::array<DigitString, 3> temporary_config(const WorkState& st) {
    Base b(st.g);
    const uint32_t m = st.m;
    switch (st.algorithm) {
        case 'I':
            return {detail::build_p_I1(st.x, m, b), detail::build_half(st.y, 2 * m, b),
                    detail::build_half(st.z, 2 * m - 1, b)};
        case '2':
            return {detail::build_half(st.x, 2 * m, b), detail::build_half(st.y, 2 * m - 1, b),
                    detail::build_half(st.z, 2 * m - 2, b)};
        case '3':
            return {detail::build_one_outer(st.x, 2 * m + 1, b),
                    detail::build_half(st.y, 2 * m - 1, b), detail::build_half(st.z, 2 * m - 2, b)};
        case '4':
            return {detail::build_one_outer(st.x, 2 * m, b),
                    detail::build_half(st.y, 2 * m - 2, b), detail::build_half(st.z, 2 * m - 3, b)};
        default: throw std::logic_error("temporary_config: not a sweep state");
    }
}

inline std::vector<uint32_t> column_sums(const WorkState& st) {
    auto rows = temporary_config(st);
    return column_sums(rows[0], rows[1], rows[2]);
}

namespace detail {

// Post-run verification shared by all four algorithms. `collision` is the
// column where the sweep may be off, `drift` the amount it is off by
// (c_m - 1, or x_{m-1} + c_{m-1} - 1 for Algorithm IV); both are rechecked
// against an actual column sum instead of trusting the carries alone.
inline void verify_run(const DigitString& ds, const ThreeConfig& cfg, uint32_t collision,
                       int drift) {
    const auto& st = cfg.state;
    auto cols = column_sums(st);
    for (uint32_t i = 0; i < collision; ++i)
        construct_check(cols[i] == ds.digits[i], "left-side digit mismatch", st, ds);
    construct_check(cols[collision] ==
                        digit_residue(static_cast<int64_t>(ds.digits[collision]) + drift, ds.base),
                    "collision column drift mismatch", st, ds);
    construct_check(is_palindrome(cfg.p1) && is_palindrome(cfg.p2) && is_palindrome(cfg.p3),
                    "adjusted row not palindromic", st, ds);
    construct_check(add3(cfg.p1, cfg.p2, cfg.p3) == ds, "final configuration sum mismatch", st, ds);
}

} // namespace detail

// -- Algorithm I: palindromes of 2m+1, 2m, 2m-1 digits ----------------------
inline ThreeConfig run_I(const DigitString& ds, const Seed& sd) {
    const uint32_t g = ds.base.g;
    if (g < 5) throw std::invalid_argument("run_I: base must be >= 5");
    if (sd.len1 % 2 == 0 || sd.len1 < 5) throw std::invalid_argument("run_I: p1 length must be odd >= 5");
    const uint32_t m = static_cast<uint32_t>((sd.len1 - 1) / 2);
    const auto& d = ds.digits;
    const auto D = [&](int64_t a) { return digit_residue(a, ds.base); };

    WorkState st;
    st.m = m;
    st.g = g;
    st.algorithm = 'I';
    st.x.assign(m + 2, 0);
    st.y.assign(m + 1, 0);
    st.z.assign(m + 1, 0);
    st.c.assign(m + 1, 0);
    auto& x = st.x;
    auto& y = st.y;
    auto& z = st.z;
    auto& c = st.c;
    x[1] = sd.x1;
    y[1] = sd.y1;
    z[1] = sd.z1;
    c[1] = detail::carry_out(x[1] + y[1] + z[1], d[0], g, st, ds);
    x[2] = D(static_cast<int64_t>(d[2 * m - 1]) - y[1] - (z[1] >= d[2 * m - 2] ? 1 : 0));
    y[2] = D(static_cast<int64_t>(d[2 * m - 2]) - z[1] - 1);
    z[2] = D(static_cast<int64_t>(d[1]) - x[2] - y[2] - c[1]);
    c[2] = detail::carry_out(x[2] + y[2] + z[2] + c[1], d[1], g, st, ds);
    for (uint32_t i = 3; i <= m; ++i) {
        x[i] = (z[i - 1] + 1 <= d[2 * m - i]) ? 1 : 0;  // z_{i-1} <= d_{2m-i} - 1
        y[i] = D(static_cast<int64_t>(d[2 * m - i]) - z[i - 1] - 1);
        z[i] = D(static_cast<int64_t>(d[i - 1]) - x[i] - y[i] - c[i - 1]);
        c[i] = detail::carry_out(x[i] + y[i] + z[i] + c[i - 1], d[i - 1], g, st, ds);
    }
    x[m + 1] = 0;

    auto xf = x;
    auto yf = y;
    auto zf = z;
    const uint32_t cm = c[m];
    std::string adj;
    if (cm == 1) {
        adj = "none";
    } else if (cm == 0) {
        xf[m + 1] = 1;
        adj = "I.2";
    } else if (z[m] == g - 1) {
        detail::construct_check(y[m] >= 1, "I.3 needs y_m >= 1", st, ds);
        xf[m + 1] = 1;
        yf[m] = y[m] - 1;
        zf[m] = 0;
        adj = "I.3";
    } else {
        // For m >= 3 the proposition forces z_m = g-1 whenever c_m = 2; the
        // m = 2 reuse (five-digit numbers) can land here and is repaired by
        // the same center rewrite the later algorithms use.
        detail::construct_check(m == 2, "I.3 needs z_m = g-1 for m >= 3", st, ds);
        detail::construct_check(y[m] >= 1 && z[m] <= g - 2, "I.3b guards", st, ds);
        yf[m] = y[m] - 1;
        zf[m] = z[m] + 1;
        adj = "I.3b";
    }
    ThreeConfig cfg{detail::build_p_I1(xf, m, ds.base), detail::build_half(yf, 2 * m, ds.base),
                    detail::build_half(zf, 2 * m - 1, ds.base), adj, st};
    detail::verify_run(ds, cfg, m, static_cast<int>(cm) - 1);
    return cfg;
}

// -- Algorithm II: palindromes of 2m, 2m-1, 2m-2 digits ---------------------
inline ThreeConfig run_II(const DigitString& ds, const Seed& sd) {
    const uint32_t g = ds.base.g;
    if (g < 5) throw std::invalid_argument("run_II: base must be >= 5");
    if (sd.len1 % 2 != 0 || sd.len1 < 6) throw std::invalid_argument("run_II: p1 length must be even >= 6");
    const uint32_t m = static_cast<uint32_t>(sd.len1 / 2);
    const auto& d = ds.digits;
    const auto D = [&](int64_t a) { return digit_residue(a, ds.base); };

    WorkState st;
    st.m = m;
    st.g = g;
    st.algorithm = '2';
    st.x.assign(m + 1, 0);
    st.y.assign(m + 1, 0);
    st.z.assign(m, 0);
    st.c.assign(m + 1, 0);
    auto& x = st.x;
    auto& y = st.y;
    auto& z = st.z;
    auto& c = st.c;
    x[1] = sd.x1;
    y[1] = sd.y1;
    z[1] = sd.z1;
    c[1] = detail::carry_out(x[1] + y[1] + z[1], d[0], g, st, ds);
    x[2] = D(static_cast<int64_t>(d[2 * m - 2]) - y[1] - (z[1] >= d[2 * m - 3] ? 1 : 0));
    y[2] = D(static_cast<int64_t>(d[2 * m - 3]) - z[1] - 1);
    uint32_t z2 = D(static_cast<int64_t>(d[1]) - x[2] - y[2] - c[1]);
    if (m >= 3) z[2] = z2;
    c[2] = detail::carry_out(x[2] + y[2] + z2 + c[1], d[1], g, st, ds);
    for (uint32_t i = 3; i < m; ++i) {
        x[i] = (z[i - 1] + 1 <= d[2 * m - i - 1]) ? 1 : 0;
        y[i] = D(static_cast<int64_t>(d[2 * m - i - 1]) - z[i - 1] - 1);
        z[i] = D(static_cast<int64_t>(d[i - 1]) - x[i] - y[i] - c[i - 1]);
        c[i] = detail::carry_out(x[i] + y[i] + z[i] + c[i - 1], d[i - 1], g, st, ds);
    }
    x[m] = 0;
    y[m] = D(static_cast<int64_t>(d[m - 1]) - z[m - 1] - c[m - 1]);
    c[m] = detail::carry_out(y[m] + z[m - 1] + c[m - 1], d[m - 1], g, st, ds);

    auto xf = x;
    auto yf = y;
    auto zf = z;
    const uint32_t cm = c[m];
    std::string adj;
    bool replaced = false;
    DigitString rep2 = DigitString::zero(ds.base), rep3 = DigitString::zero(ds.base);
    if (cm == 1) {
        adj = "none";
    } else if (cm == 0) {
        if (y[m] != 0) {
            xf[m] = 1;
            yf[m] = y[m] - 1;
            adj = "II.2.i";
        } else if (y[m - 1] != 0) {
            detail::construct_check(z[m - 1] != g - 1, "II.2.ii.a needs z_{m-1} != g-1", st, ds);
            xf[m] = 1;
            yf[m] = g - 2;
            yf[m - 1] = y[m - 1] - 1;
            zf[m - 1] = z[m - 1] + 1;
            adj = "II.2.ii.a";
        } else if (z[m - 1] != 0) {
            yf[m] = 1;
            yf[m - 1] = 1;
            zf[m - 1] = z[m - 1] - 1;
            adj = "II.2.ii.b";
        } else {
            detail::construct_check(m == 3, "II.2.ii.c requires m = 3", st, ds);
            if (c[2] == 1) {
                detail::construct_check(x[2] == g - 1 || x[2] == g - 2, "II.2.ii.c x_2 range", st, ds);
                xf[2] = x[2] - 1;
                xf[3] = 1;
                yf[2] = g - 1;
                yf[3] = g - 4;
                zf[2] = 2;
                adj = "II.2.ii.c";
            } else {
                // c_2 = 0 can only happen when the middle digit of a 6-digit
                // number is 0 (a special number): the six-digit extension.
                detail::construct_check(c[2] == 0 && ds.length() == 6, "II.2.ii.c carry", st, ds);
                if (x[2] != 0) {
                    xf[2] = x[2] - 1;
                    xf[3] = g - 1;
                    yf[2] = 1;
                    yf[3] = 1;
                    adj = "II.2.ii.c.x";
                } else if (x[1] == 1) {
                    detail::construct_check(y[1] == g - 1 && z[1] == g - 1, "II.2.ii.c.i shape", st, ds);
                    xf[1] = 2;
                    replaced = true;
                    rep2 = DigitString({1, 1}, ds.base);
                    rep3 = DigitString({g - 4}, ds.base);
                    adj = "II.2.ii.c.i";
                } else if (y[1] != g - 1) {
                    xf[1] = x[1] - 1;
                    xf[2] = g - 1;
                    yf[1] = y[1] + 1;
                    yf[2] = 0;
                    yf[3] = g - 2;
                    zf[2] = 1;
                    adj = "II.2.ii.c.ii";
                } else {
                    detail::construct_check(z[1] == g - 1, "II.2.ii.c.iii needs z_1 = g-1", st, ds);
                    detail::construct_check(x[1] != g - 1, "II.2.ii.c all-(g-1) unreachable", st, ds);
                    xf[1] = x[1] + 1;
                    replaced = true;
                    rep2 = DigitString({1, 1}, ds.base);
                    rep3 = DigitString({g - 4}, ds.base);
                    adj = "II.2.ii.c.iii";
                }
            }
        }
    } else {
        detail::construct_check(z[m - 1] == g - 1 && y[m] == g - 1, "II.3 shape", st, ds);
        detail::construct_check(y[m - 1] >= 1, "II.3 needs y_{m-1} >= 1", st, ds);
        xf[m] = 1;
        yf[m] = g - 2;
        yf[m - 1] = y[m - 1] - 1;
        zf[m - 1] = 0;
        adj = "II.3";
    }
    DigitString p1 = detail::build_half(xf, 2 * m, ds.base);
    DigitString p2 = replaced ? rep2 : detail::build_half(yf, 2 * m - 1, ds.base);
    DigitString p3 = replaced ? rep3 : detail::build_half(zf, 2 * m - 2, ds.base);
    ThreeConfig cfg{std::move(p1), std::move(p2), std::move(p3), adj, st};
    detail::verify_run(ds, cfg, m, static_cast<int>(cm) - 1);
    return cfg;
}

// -- Algorithm III: palindromes of 2m+1, 2m-1, 2m-2 digits ------------------
// p1 starts with two fixed digits (1 and x1), so the z update lags one x.
inline ThreeConfig run_III(const DigitString& ds, const Seed& sd) {
    const uint32_t g = ds.base.g;
    if (g < 5) throw std::invalid_argument("run_III: base must be >= 5");
    if (sd.len1 % 2 == 0 || sd.len1 < 7) throw std::invalid_argument("run_III: p1 length must be odd >= 7");
    const uint32_t m = static_cast<uint32_t>((sd.len1 - 1) / 2);
    const auto& d = ds.digits;
    const auto D = [&](int64_t a) { return digit_residue(a, ds.base); };

    WorkState st;
    st.m = m;
    st.g = g;
    st.algorithm = '3';
    st.x.assign(m + 1, 0);
    st.y.assign(m + 1, 0);
    st.z.assign(m, 0);
    st.c.assign(m + 1, 0);
    auto& x = st.x;
    auto& y = st.y;
    auto& z = st.z;
    auto& c = st.c;
    x[1] = sd.x1;
    y[1] = sd.y1;
    z[1] = sd.z1;
    c[1] = detail::carry_out(1 + y[1] + z[1], d[0], g, st, ds);
    x[2] = D(static_cast<int64_t>(d[2 * m - 2]) - y[1] - (z[1] >= d[2 * m - 3] ? 1 : 0));
    detail::construct_check(x[2] <= 3, "type-B x_2 exceeds 3", st, ds);
    y[2] = D(static_cast<int64_t>(d[2 * m - 3]) - z[1] - 1);
    uint32_t z2 = D(static_cast<int64_t>(d[1]) - x[1] - y[2] - c[1]);
    if (m >= 3) z[2] = z2;
    c[2] = detail::carry_out(x[1] + y[2] + z2 + c[1], d[1], g, st, ds);
    for (uint32_t i = 3; i < m; ++i) {
        x[i] = (z[i - 1] + 1 <= d[2 * m - i - 1]) ? 1 : 0;
        y[i] = D(static_cast<int64_t>(d[2 * m - i - 1]) - z[i - 1] - 1);
        z[i] = D(static_cast<int64_t>(d[i - 1]) - x[i - 1] - y[i] - c[i - 1]);
        c[i] = detail::carry_out(x[i - 1] + y[i] + z[i] + c[i - 1], d[i - 1], g, st, ds);
    }
    x[m] = 0;
    y[m] = D(static_cast<int64_t>(d[m - 1]) - z[m - 1] - x[m - 1] - c[m - 1]);
    c[m] = detail::carry_out(x[m - 1] + y[m] + z[m - 1] + c[m - 1], d[m - 1], g, st, ds);

    auto xf = x;
    auto yf = y;
    auto zf = z;
    const uint32_t cm = c[m];
    std::string adj;
    if (cm == 1) {
        adj = "none";
    } else if (cm == 0) {
        xf[m] = 1;
        adj = "III.2";
    } else {
        detail::construct_check(y[m] != 0, "III.3 needs y_m != 0", st, ds);
        if (y[m - 1] != 0 && z[m - 1] != g - 1) {
            yf[m - 1] = y[m - 1] - 1;
            yf[m] = y[m] - 1;
            zf[m - 1] = z[m - 1] + 1;
            adj = "III.3.i";
        } else if (y[m - 1] != 0) {
            xf[m] = 1;
            yf[m - 1] = y[m - 1] - 1;
            zf[m - 1] = 0;
            adj = "III.3.ii";
        } else if (z[m - 1] != g - 1) {
            detail::construct_check(x[m - 1] != 0, "III.3.iii needs x_{m-1} != 0", st, ds);
            xf[m - 1] = x[m - 1] - 1;
            yf[m - 1] = g - 1;
            yf[m] = y[m] - 1;
            zf[m - 1] = z[m - 1] + 1;
            adj = "III.3.iii";
        } else {
            detail::construct_check(x[m - 1] != 0, "III.3.iv needs x_{m-1} != 0", st, ds);
            xf[m - 1] = x[m - 1] - 1;
            xf[m] = 1;
            yf[m - 1] = g - 1;
            zf[m - 1] = 0;
            adj = "III.3.iv";
        }
    }
    ThreeConfig cfg{detail::build_one_outer(xf, 2 * m + 1, ds.base),
                    detail::build_half(yf, 2 * m - 1, ds.base),
                    detail::build_half(zf, 2 * m - 2, ds.base), adj, st};
    detail::verify_run(ds, cfg, m, static_cast<int>(cm) - 1);
    return cfg;
}

// -- Algorithm IV: palindromes of 2m, 2m-2, 2m-3 digits ---------------------
// Dispatch keys on x_{m-1} + c_{m-1} instead of a single carry.
inline ThreeConfig run_IV(const DigitString& ds, const Seed& sd) {
    const uint32_t g = ds.base.g;
    if (g < 5) throw std::invalid_argument("run_IV: base must be >= 5");
    if (sd.len1 % 2 != 0 || sd.len1 < 8) throw std::invalid_argument("run_IV: p1 length must be even >= 8");
    const uint32_t m = static_cast<uint32_t>(sd.len1 / 2);
    const auto& d = ds.digits;
    const auto D = [&](int64_t a) { return digit_residue(a, ds.base); };

    WorkState st;
    st.m = m;
    st.g = g;
    st.algorithm = '4';
    st.x.assign(m, 0);
    st.y.assign(m, 0);
    st.z.assign(m, 0);
    st.c.assign(m, 0);
    auto& x = st.x;
    auto& y = st.y;
    auto& z = st.z;
    auto& c = st.c;
    x[1] = sd.x1;
    y[1] = sd.y1;
    z[1] = sd.z1;
    c[1] = detail::carry_out(1 + y[1] + z[1], d[0], g, st, ds);
    x[2] = D(static_cast<int64_t>(d[2 * m - 3]) - y[1] - (z[1] >= d[2 * m - 4] ? 1 : 0));
    detail::construct_check(x[2] <= 3, "type-B x_2 exceeds 3", st, ds);
    y[2] = D(static_cast<int64_t>(d[2 * m - 4]) - z[1] - 1);
    z[2] = D(static_cast<int64_t>(d[1]) - x[1] - y[2] - c[1]);
    c[2] = detail::carry_out(x[1] + y[2] + z[2] + c[1], d[1], g, st, ds);
    for (uint32_t i = 3; i <= m - 2; ++i) {
        x[i] = (z[i - 1] + 1 <= d[2 * m - i - 2]) ? 1 : 0;
        y[i] = D(static_cast<int64_t>(d[2 * m - i - 2]) - z[i - 1] - 1);
        z[i] = D(static_cast<int64_t>(d[i - 1]) - x[i - 1] - y[i] - c[i - 1]);
        c[i] = detail::carry_out(x[i - 1] + y[i] + z[i] + c[i - 1], d[i - 1], g, st, ds);
    }
    x[m - 1] = (z[m - 2] + 1 <= d[m - 1]) ? 1 : 0;
    y[m - 1] = D(static_cast<int64_t>(d[m - 1]) - z[m - 2] - 1);
    z[m - 1] = D(static_cast<int64_t>(d[m - 2]) - x[m - 2] - y[m - 1] - c[m - 2]);
    c[m - 1] = detail::carry_out(x[m - 2] + y[m - 1] + z[m - 1] + c[m - 2], d[m - 2], g, st, ds);

    auto xf = x;
    auto yf = y;
    auto zf = z;
    const uint32_t t = x[m - 1] + c[m - 1];
    std::string adj;
    const auto chk = [&](bool ok, const char* msg) { detail::construct_check(ok, msg, st, ds); };
    if (t == 1) {
        adj = "none";
    } else if (t == 0 && y[m - 1] != g - 1) {
        chk(y[m - 1] != 0, "IV.2 needs y_{m-1} != 0");
        if (z[m - 1] != 0) {
            yf[m - 1] = y[m - 1] + 1;
            zf[m - 1] = z[m - 1] - 1;
            adj = "IV.2.i";
        } else if (y[m - 2] != 0) {
            if (y[m - 1] != 1 && z[m - 2] != g - 1) {
                xf[m - 1] = 1;
                yf[m - 2] = y[m - 2] - 1;
                yf[m - 1] = y[m - 1] - 1;
                zf[m - 2] = z[m - 2] + 1;
                zf[m - 1] = 1;
                adj = "IV.2.ii.a";
            } else if (y[m - 1] != 1) {
                xf[m - 1] = 2;
                yf[m - 2] = y[m - 2] - 1;
                yf[m - 1] = y[m - 1] - 2;
                zf[m - 2] = 0;
                zf[m - 1] = 3;
                adj = "IV.2.ii.b";
            } else {
                chk(z[m - 2] == g - 1, "IV.2.ii.c needs z_{m-2} = g-1");
                xf[m - 1] = 1;
                yf[m - 2] = y[m - 2] - 1;
                yf[m - 1] = g - 1;
                zf[m - 2] = 0;
                zf[m - 1] = 3;
                adj = "IV.2.ii.c";
            }
        } else {
            chk(x[m - 2] != 0, "IV.2.iii needs x_{m-2} != 0");
            if (z[m - 2] != g - 1) {
                chk(y[m - 1] != 0, "IV.2.iii.a needs y_{m-1} != 0");
                xf[m - 2] = x[m - 2] - 1;
                xf[m - 1] = 1;
                yf[m - 2] = g - 1;
                yf[m - 1] = y[m - 1] - 1;
                zf[m - 2] = z[m - 2] + 1;
                zf[m - 1] = 1;
                adj = "IV.2.iii.a";
            } else if (y[m - 1] != 1) {
                xf[m - 2] = x[m - 2] - 1;
                xf[m - 1] = 2;
                yf[m - 2] = g - 1;
                yf[m - 1] = y[m - 1] - 2;
                zf[m - 2] = 0;
                zf[m - 1] = 3;
                adj = "IV.2.iii.b";
            } else {
                xf[m - 2] = x[m - 2] - 1;
                xf[m - 1] = 1;
                yf[m - 2] = g - 1;
                yf[m - 1] = g - 1;
                zf[m - 2] = 0;
                zf[m - 1] = 3;
                adj = "IV.2.iii.c";
            }
        }
    } else if (t == 0) {
        chk(x[m - 2] == 0 && z[m - 1] == 0, "IV.3 shape");
        chk(y[m - 2] != 0 && z[m - 2] != g - 1, "IV.3 guards");
        xf[m - 1] = 1;
        yf[m - 2] = y[m - 2] - 1;
        yf[m - 1] = g - 2;
        zf[m - 2] = z[m - 2] + 1;
        zf[m - 1] = 1;
        adj = "IV.3";
    } else if (t == 2 && x[m - 1] == 0) {
        chk(y[m - 1] != 0, "IV.4 needs y_{m-1} != 0");
        if (z[m - 1] != g - 1) {
            yf[m - 1] = y[m - 1] - 1;
            zf[m - 1] = z[m - 1] + 1;
            adj = "IV.4.i";
        } else if (z[m - 2] != g - 1) {
            chk(y[m - 1] != 1, "IV.4.ii needs y_{m-1} != 1");
            if (y[m - 2] != 0) {
                xf[m - 1] = 1;
                yf[m - 2] = y[m - 2] - 1;
                yf[m - 1] = y[m - 1] - 2;
                zf[m - 2] = z[m - 2] + 1;
                zf[m - 1] = 1;
                adj = "IV.4.ii.a";
            } else {
                chk(x[m - 2] != 0, "IV.4.ii.b needs x_{m-2} != 0");
                xf[m - 2] = x[m - 2] - 1;
                xf[m - 1] = 1;
                yf[m - 2] = g - 1;
                yf[m - 1] = y[m - 1] - 2;
                zf[m - 2] = z[m - 2] + 1;
                zf[m - 1] = 1;
                adj = "IV.4.ii.b";
            }
        } else if (y[m - 1] != g - 1 && y[m - 1] != g - 2) {
            chk(x[m - 2] >= 1, "IV.4.iii.a needs x_{m-2} >= 1");
            if (y[m - 2] != g - 1) {
                xf[m - 2] = x[m - 2] - 1;
                xf[m - 1] = g - 2;
                yf[m - 2] = y[m - 2] + 1;
                yf[m - 1] = y[m - 1] + 2;
                zf[m - 2] = g - 2;
                zf[m - 1] = g - 2;
                adj = "IV.4.iii.a.1";
            } else {
                // published variant keeps x_{m-2}: emptying y_{m-2} already
                // frees the same carry
                xf[m - 1] = g - 2;
                yf[m - 2] = 0;
                yf[m - 1] = y[m - 1] + 2;
                zf[m - 2] = g - 2;
                zf[m - 1] = g - 2;
                adj = "IV.4.iii.a.2";
            }
        } else {
            if (y[m - 2] >= 1) {
                xf[m - 1] = 2;
                yf[m - 2] = y[m - 2] - 1;
                yf[m - 1] = y[m - 1] - 3;
                zf[m - 2] = 0;
                zf[m - 1] = 3;
                adj = "IV.4.iii.b.1";
            } else {
                chk(x[m - 2] >= 1, "IV.4.iii.b needs x_{m-2} >= 1");
                xf[m - 2] = x[m - 2] - 1;
                xf[m - 1] = 2;
                yf[m - 2] = g - 1;
                yf[m - 1] = y[m - 1] - 3;
                zf[m - 2] = 0;
                zf[m - 1] = 3;
                adj = "IV.4.iii.b.2";
            }
        }
    } else if (t == 2) {
        chk(z[m - 2] != g - 1 && y[m - 1] != g - 1, "IV.5 shape");
        if (z[m - 1] != g - 1 && y[m - 1] != 0) {
            yf[m - 1] = y[m - 1] - 1;
            zf[m - 1] = z[m - 1] + 1;
            adj = "IV.5.i";
        } else if (z[m - 1] != g - 1) {
            xf[m - 1] = 0;
            yf[m - 1] = g - 1;
            zf[m - 1] = z[m - 1] + 1;
            adj = "IV.5.ii";
        } else if (z[m - 2] != 0) {
            if (y[m - 2] != g - 1) {
                xf[m - 1] = 0;
                yf[m - 2] = y[m - 2] + 1;
                yf[m - 1] = y[m - 1] + 1;
                zf[m - 2] = z[m - 2] - 1;
                zf[m - 1] = g - 2;
                adj = "IV.5.iii.a";
            } else if (y[m - 1] != 0 && y[m - 1] != 1) {
                xf[m - 1] = 2;
                yf[m - 2] = g - 2;
                yf[m - 1] = y[m - 1] - 2;
                zf[m - 2] = z[m - 2] + 1;
                zf[m - 1] = 1;
                adj = "IV.5.iii.b";
            } else if (y[m - 1] == 0) {
                yf[m - 2] = g - 2;
                yf[m - 1] = g - 2;
                zf[m - 2] = z[m - 2] + 1;
                zf[m - 1] = 1;
                adj = "IV.5.iii.c";
            } else {
                yf[m - 2] = g - 2;
                yf[m - 1] = g - 1;
                zf[m - 2] = z[m - 2] + 1;
                zf[m - 1] = 1;
                adj = "IV.5.iii.d";
            }
        } else if (y[m - 2] != 0) {
            if (y[m - 1] != 0 && y[m - 1] != 1) {
                xf[m - 1] = 2;
                yf[m - 2] = y[m - 2] - 1;
                yf[m - 1] = y[m - 1] - 2;
                zf[m - 2] = 1;
                zf[m - 1] = 1;
                adj = "IV.5.iv.a";
            } else if (y[m - 1] == 0) {
                yf[m - 2] = y[m - 2] - 1;
                yf[m - 1] = g - 2;
                zf[m - 2] = 1;
                zf[m - 1] = 1;
                adj = "IV.5.iv.b";
            } else {
                yf[m - 2] = y[m - 2] - 1;
                yf[m - 1] = g - 1;
                zf[m - 2] = 1;
                zf[m - 1] = 1;
                adj = "IV.5.iv.c";
            }
        } else {
            chk(x[m - 2] != 0, "IV.5.v needs x_{m-2} != 0");
            if (y[m - 1] != 0 && y[m - 1] != 1) {
                xf[m - 2] = x[m - 2] - 1;
                xf[m - 1] = 2;
                yf[m - 2] = g - 1;
                yf[m - 1] = y[m - 1] - 2;
                zf[m - 2] = 1;
                zf[m - 1] = 1;
                adj = "IV.5.v.a";
            } else if (y[m - 1] == 0) {
                xf[m - 2] = x[m - 2] - 1;
                yf[m - 2] = g - 1;
                yf[m - 1] = g - 2;
                zf[m - 2] = 1;
                zf[m - 1] = 1;
                adj = "IV.5.v.b";
            } else {
                xf[m - 2] = x[m - 2] - 1;
                yf[m - 2] = g - 1;
                yf[m - 1] = g - 1;
                zf[m - 2] = 1;
                zf[m - 1] = 1;
                adj = "IV.5.v.c";
            }
        }
    } else {
        chk(y[m - 1] >= 1 && z[m - 1] == g - 1, "IV.6 shape");
        yf[m - 1] = y[m - 1] - 1;
        zf[m - 1] = 0;
        adj = "IV.6";
    }
    ThreeConfig cfg{detail::build_one_outer(xf, 2 * m, ds.base),
                    detail::build_half(yf, 2 * m - 2, ds.base),
                    detail::build_half(zf, 2 * m - 3, ds.base), adj, st};
    detail::verify_run(ds, cfg, m - 1, static_cast<int>(t) - 1);
    return cfg;
}

} // namespace palin3
