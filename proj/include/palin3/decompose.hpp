#pragma once
// decompose.hpp - dispatcher: any n >= 1 in base g >= 5 becomes a verified
// sum of three palindromes, with provenance saying which route produced it.

#include <array>
#include <cstdint>
#include <string>

#include "palin3/classify.hpp"
#include "palin3/construct.hpp"
#include "palin3/digits.hpp"
#include "palin3/small.hpp"
#include "palin3/special.hpp"

namespace palin3 {

struct Provenance {
    std::string type;        // "A1".."B7", or "L1".."L6" for short inputs
    std::string algorithm;   // "I", "II", "III", "IV", "V", "small"
    std::string adjustment;  // "none", an adjustment label, or a table branch
    int special_k = 0;       // k used by the special reduction, 0 otherwise
    std::string inner_type;       // type of the reduced number when algorithm == "V"
    std::string inner_algorithm;  // "II" or "IV" when algorithm == "V"
    bool shrunk_reseed = false;  // special reduction needed the B1 reseed
    WorkState state;
};

struct Decomposition {
    DigitString n;
    std::array<DigitString, 3> parts;
    Provenance provenance;
};

namespace detail {

// Output contract: parts ordered by descending length, zeros last.
inline void order_parts(std::array<DigitString, 3>& parts) {
    std::stable_sort(parts.begin(), parts.end(), [](const DigitString& a, const DigitString& b) {
        if (a.is_zero() != b.is_zero()) return b.is_zero();
        return a.length() > b.length();
    });
}

} // namespace detail

// Key used by exhaustive checkers; doubles as branch-coverage accounting.
// The no-adjustment outcome is keyed as case ".1" of the algorithm that
// ran, so the key always names the full route.
inline std::string histogram_key(const Provenance& p) {
    if (p.algorithm == "small") return p.adjustment;
    if (p.algorithm == "V") {
        std::string adj =
            p.adjustment == "none" ? p.inner_algorithm + ".1" : p.adjustment;
        return "V.k" + std::to_string(p.special_k) + ":" + adj +
               (p.shrunk_reseed ? ".104" : "");
    }
    std::string adj = p.adjustment == "none" ? p.algorithm + ".1" : p.adjustment;
    return p.algorithm + ":" + adj;
}

inline Decomposition decompose(const DigitString& n) {
    if (n.base.g < 5) throw std::invalid_argument("decompose: base must be >= 5");
    if (n.is_zero()) throw std::invalid_argument("decompose: n must be positive");
    Decomposition out{n, {DigitString::zero(n.base), DigitString::zero(n.base),
                          DigitString::zero(n.base)}, {}};
    if (n.length() < 7) {
        ThreeConfig cfg = decompose_small(n);
        out.parts = {cfg.p1, cfg.p2, cfg.p3};
        out.provenance.type = "L" + std::to_string(n.length());
        out.provenance.algorithm = "small";
        out.provenance.adjustment = cfg.adjustment;
        out.provenance.state = cfg.state;
        detail::order_parts(out.parts);
        return out;
    }
    const Seed sd = detail::classify_seed(n);
    out.provenance.type = to_string(sd.tag);
    const SpecialFlag flag = special_flag(n, sd.tag);
    if (flag.special) {
        VResult v = run_V(n);
        out.parts = {v.config.p1, v.config.p2, v.config.p3};
        out.provenance.algorithm = "V";
        out.provenance.adjustment = v.config.adjustment;
        out.provenance.special_k = v.reduction.k;
        out.provenance.inner_type = to_string(v.inner_tag);
        out.provenance.inner_algorithm = algorithm_name(v.inner_algorithm);
        out.provenance.shrunk_reseed = v.reduction.reduced_case == ReducedCase::shrunk_104;
        out.provenance.state = v.config.state;
        detail::order_parts(out.parts);
        return out;
    }
    ThreeConfig cfg{DigitString::zero(n.base), DigitString::zero(n.base),
                    DigitString::zero(n.base), "", {}};
    if (!is_type_b(sd.tag)) {
        if (sd.len1 % 2 == 1) {
            cfg = run_I(n, sd);
            out.provenance.algorithm = "I";
        } else {
            cfg = run_II(n, sd);
            out.provenance.algorithm = "II";
        }
    } else {
        if (sd.len1 % 2 == 1) {
            cfg = run_III(n, sd);
            out.provenance.algorithm = "III";
        } else {
            cfg = run_IV(n, sd);
            out.provenance.algorithm = "IV";
        }
    }
    out.parts = {cfg.p1, cfg.p2, cfg.p3};
    out.provenance.adjustment = cfg.adjustment;
    out.provenance.state = cfg.state;
    detail::order_parts(out.parts);
    return out;
}

inline bool verify(const Decomposition& d) {
    for (const auto& p : d.parts) {
        if (p.base != d.n.base) throw std::invalid_argument("verify: base mismatch among parts");
        if (!is_palindrome(p)) return false;
    }
    return add3(d.parts[0], d.parts[1], d.parts[2]) == d.n;
}

} // namespace palin3
