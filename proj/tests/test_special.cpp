#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "branch_cases.hpp"
#include "palin3/decompose.hpp"
#include "palin3/special.hpp"

using namespace palin3;

TEST_CASE("special reduction of the 20-digit example") {
    Base b(10);
    auto n = parse("12267420107203532444", b);
    auto red = reduce_special(n);
    CHECK(red.k == 1);
    CHECK(render(red.s, 10) == "11000000000");
    CHECK(render(red.n_prime, 10) == "12267420096203532444");
    CHECK(red.reduced_case == ReducedCase::same_length);

    auto v = run_V(n);
    CHECK(v.inner_algorithm == '4');
    CHECK(to_string(v.inner_tag) == std::string("B5"));
    CHECK(v.config.adjustment == "IV.5.iii.a");
    CHECK(render(v.config.p1, 10) == "11310000111100001311");
    CHECK(render(v.config.p2, 10) == "915785072270587519");
    CHECK(render(v.config.p3, 10) == "41634923832943614");
    // restoration bumped the two central digits of the reduced p1 by k
    CHECK(v.config.p1.digits[9] == 1);
    CHECK(v.config.p1.digits[10] == 1);
}

TEST_CASE("reduction refuses normal numbers") {
    Base b(10);
    CHECK_THROWS_AS(reduce_special(parse("2718281828459045235360", b)), std::invalid_argument);
}

TEST_CASE("harvested special branches reproduce") {
    for (const auto& c : kBranchCases) {
        if (c.key[0] != 'V') continue;
        DigitString n = DigitString::from_value(c.n, Base(c.base));
        auto d = decompose(n);
        INFO("base " << c.base << " n " << c.n << " expecting " << c.key);
        CHECK(histogram_key(d.provenance) == c.key);
        CHECK(verify(d));
    }
}

TEST_CASE("k=2 is chosen only when k=1 fails to normalize") {
    Base b(5);
    DigitString n = DigitString::from_value(78125, b);  // 5^7, first 8-digit value
    uint64_t specials = 0, k2 = 0;
    for (int i = 0; i < 60000; ++i, increment(n)) {
        auto sd = detail::classify_seed(n);
        auto flag = special_flag(n, sd.tag);
        if (!flag.special) continue;
        ++specials;
        auto red = reduce_special(n);
        DigitString n1 = subtract(n, red.s);
        bool k1_ok = n1.digits[flag.m - 1] != 0 && n1.digits[flag.m] != 0;
        if (red.k == 2) {
            ++k2;
            CHECK_FALSE(k1_ok);
        } else {
            CHECK(k1_ok);
        }
        CHECK(verify(decompose(n)));
    }
    CHECK(specials > 1000);
    CHECK(k2 > 0);
}

TEST_CASE("reseeded reduction: the 104-to-103 shape") {
    Base b(10);
    // digit pattern 1 0 4 then zeros through the middle forces the borrow to
    // run up and leaves a 1 0 3 (g-1)... shape that needs the B1 reseed
    auto n = parse("10400000200931", b);
    auto tag = classify(n);
    REQUIRE(special_flag(n, tag).special);
    auto v = run_V(n);
    CHECK(v.reduction.reduced_case == ReducedCase::shrunk_104);
    CHECK(v.inner_algorithm == '4');
    auto d = decompose(n);
    CHECK(verify(d));
    CHECK(d.provenance.shrunk_reseed);
}

TEST_CASE("reduction may lose a digit and still work") {
    Base b(5);
    auto n = DigitString::from_value(15625, b);  // 1000000 in base 5
    auto tag = classify(n);
    REQUIRE(special_flag(n, tag).special);
    auto v = run_V(n);
    CHECK(v.reduction.n_prime.length() == 6);
    CHECK(v.inner_algorithm == '2');
    CHECK(verify(decompose(n)));
}
