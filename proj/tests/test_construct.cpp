#include <catch2/catch_amalgamated.hpp>

#include <cstring>
#include <string>

#include "branch_cases.hpp"
#include "palin3/construct.hpp"
#include "palin3/decompose.hpp"

using namespace palin3;

TEST_CASE("sweep I on the 21-digit pi prefix") {
    Base b(10);
    auto n = parse("314159265358979323846", b);
    auto cfg = run_I(n, seed(classify(n), n));
    const auto& st = cfg.state;
    REQUIRE(st.m == 10);
    // step 2 values
    CHECK(st.x[2] == 1);
    CHECK(st.y[2] == 8);
    CHECK(st.z[2] == 4);
    CHECK(st.c[2] == 1);
    CHECK(cfg.adjustment == "I.2");
    CHECK(render(cfg.p1, 10) == "210100100111001001012");
    CHECK(render(cfg.p2, 10) == "98639929400492993689");
    CHECK(render(cfg.p3, 10) == "5419235847485329145");

    // the temporary configuration misses exactly at the collision column
    auto cols = column_sums(st);
    for (uint32_t i = 0; i < st.m; ++i) CHECK(cols[i] == n.digits[i]);
    CHECK(cols[st.m] != n.digits[st.m]);
    CHECK(cols[st.m] == digit_residue(static_cast<int64_t>(n.digits[st.m]) - 1, b));

    auto final_cols = column_sums(cfg.p1, cfg.p2, cfg.p3);
    REQUIRE(final_cols.size() == n.length());
    for (size_t i = 0; i < n.length(); ++i) CHECK(final_cols[i] == n.digits[i]);
}

TEST_CASE("sweep II on the 22-digit e prefix") {
    Base b(10);
    auto n = parse("2718281828459045235360", b);
    auto cfg = run_II(n, seed(classify(n), n));
    CHECK(cfg.adjustment == "II.2.ii.a");
    CHECK(render(cfg.p1, 10) == "2011101001111001011102");
    CHECK(render(cfg.p2, 10) == "680031748181847130086");
    CHECK(render(cfg.p3, 10) == "27149079166197094172");
    // column 12 of the temporary configuration carries a 3 instead of a 4
    auto cols = column_sums(cfg.state);
    CHECK(cols[11] == 3);
    CHECK(n.digits[11] == 4);
}

TEST_CASE("sweep III on the 21-digit zeta(3) prefix") {
    Base b(10);
    auto n = parse("120205690315959428539", b);
    auto cfg = run_III(n, seed(classify(n), n));
    CHECK(cfg.adjustment == "none");
    CHECK(render(cfg.p1, 10) == "110010100101001010011");
    CHECK(render(cfg.p2, 10) == "9200740505050470029");
    CHECK(render(cfg.p3, 10) == "994849709907948499");
    auto rows = temporary_config(cfg.state);
    CHECK(rows[0] == cfg.p1);
    CHECK(rows[1] == cfg.p2);
    CHECK(rows[2] == cfg.p3);
}

TEST_CASE("sweep IV on the reduced 20-digit value") {
    Base b(10);
    auto n = parse("12267420096203532444", b);
    auto cfg = run_IV(n, seed(classify(n), n));
    CHECK(cfg.adjustment == "IV.5.iii.a");
    // central pair still 0 0 here; the special reduction bumps it afterwards
    CHECK(render(cfg.p1, 10) == "11310000100100001311");
    CHECK(render(cfg.p2, 10) == "915785072270587519");
    CHECK(render(cfg.p3, 10) == "41634923832943614");
}

TEST_CASE("every harvested sweep branch reproduces") {
    for (const auto& c : kBranchCases) {
        if (c.key[0] == 'L' || c.key[0] == 'V') continue;  // covered elsewhere
        DigitString n = DigitString::from_value(c.n, Base(c.base));
        auto d = decompose(n);
        INFO("base " << c.base << " n " << c.n << " expecting " << c.key);
        CHECK(histogram_key(d.provenance) == c.key);
        CHECK(verify(d));
    }
}

TEST_CASE("sweep invariants hold on a dense window") {
    Base b(5);
    DigitString n = DigitString::from_value(15625, b);  // smallest 7-digit value
    for (int i = 0; i < 4000; ++i, increment(n)) {
        auto d = decompose(n);
        const auto& st = d.provenance.state;
        if (st.algorithm == 'S' || st.algorithm == '?') continue;
        for (size_t j = 1; j < st.c.size(); ++j) CHECK(st.c[j] <= 2);
        if (st.algorithm == 'I' || st.algorithm == '2')
            for (size_t j = 3; j + (st.algorithm == 'I' ? 0 : 1) < st.x.size(); ++j)
                CHECK(st.x[j] <= 1);
        if (st.algorithm == '3' || st.algorithm == '4') CHECK(st.x[2] <= 3);
    }
}

TEST_CASE("runs refuse mismatched shapes") {
    Base b(10);
    auto n = parse("2718281828459045235360", b);  // 22 digits, type A1
    auto sd = seed(classify(n), n);
    CHECK_THROWS_AS(run_I(n, sd), std::invalid_argument);   // p1 length is even
    CHECK_THROWS_AS(run_III(n, sd), std::invalid_argument);
}
