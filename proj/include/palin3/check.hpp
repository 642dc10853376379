#pragma once
// check.hpp - exhaustive range checker: decompose and verify every n in an
// interval, collecting a histogram of the branch labels taken. The range is
// partitioned across workers; merging by label keeps the histogram identical
// for any worker count.

#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "palin3/decompose.hpp"
#include "palin3/digits.hpp"

namespace palin3 {

struct CheckReport {
    uint64_t checked = 0;
    uint64_t failures = 0;
    std::map<std::string, uint64_t> histogram;
    std::string first_failure;  // rendered n, empty when failures == 0

    void merge(const CheckReport& other) {
        checked += other.checked;
        failures += other.failures;
        if (first_failure.empty()) first_failure = other.first_failure;
        for (const auto& [k, v] : other.histogram) histogram[k] += v;
    }
};

// Checks every n in [from, from + count).
inline CheckReport check_range(DigitString from, uint64_t count) {
    CheckReport rep;
    DigitString n = std::move(from);
    for (uint64_t i = 0; i < count; ++i, increment(n)) {
        try {
            Decomposition d = decompose(n);
            if (!verify(d)) throw std::logic_error("verify() rejected the result");
            ++rep.histogram[histogram_key(d.provenance)];
        } catch (const std::exception& e) {
            ++rep.failures;
            if (rep.first_failure.empty())
                rep.first_failure = render(n, 10) + ": " + e.what();
        }
        ++rep.checked;
    }
    return rep;
}

// Checks every n in [from, to] inclusive, split across `workers` threads.
inline CheckReport check_interval(const DigitString& from, const DigitString& to,
                                  unsigned workers = 1) {
    if (from.base != to.base) throw std::invalid_argument("check_interval: base mismatch");
    if (compare(from, to) > 0) throw std::invalid_argument("check_interval: empty range");
    if (from.is_zero()) throw std::invalid_argument("check_interval: range must start at n >= 1");
    const uint64_t total = subtract(to, from).to_value() + 1;  // throws if astronomically large
    if (workers == 0) workers = 1;
    if (workers == 1 || total < 2 * workers) return check_range(from, total);

    const uint64_t chunk = total / workers;
    std::vector<CheckReport> parts(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const uint64_t begin = chunk * w;
        const uint64_t count = (w + 1 == workers) ? total - begin : chunk;
        DigitString start = add(from, DigitString::from_value(begin, from.base));
        threads.emplace_back(
            [&parts, w, count](DigitString s) { parts[w] = check_range(std::move(s), count); },
            std::move(start));
    }
    for (auto& t : threads) t.join();
    CheckReport rep;
    for (const auto& p : parts) rep.merge(p);
    return rep;
}

} // namespace palin3
