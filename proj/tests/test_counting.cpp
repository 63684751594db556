#include "doctest.h"

#include "oracles/orbit_count.hpp"
#include "symca/counting.hpp"
#include "symca/error.hpp"

#include <set>

using namespace symca;

TEST_CASE("rule counts") {
    CHECK(count_rules(2, 8, Level::Leaves) == 262144);
    CHECK(count_rules(2, 3, Level::Leaves) == 256);
    CHECK(count_rules(3, 1, Level::Leaves) == 19683);
    CHECK(count_rules(2, 3, Level::Full) == 32);
    // 3^(C(6,2)*3) = 3^45 does not fit in 64 bits.
    BigInt big = 1;
    for (int i = 0; i < 45; ++i)
        big *= 3;
    CHECK(count_rules(3, 4, Level::Leaves) == big);
}

TEST_CASE("closed forms") {
    CHECK(count_bw_fixed(3, Level::Leaves) == 16);
    CHECK(count_bw_fixed(3, Level::Full) == 0);
    CHECK(count_bw_fixed(8, Level::Leaves) == 512);
    CHECK(count_bw_fixed(4, Level::Full) == 8);
    CHECK(count_orbits_closed(3, Level::Leaves) == 136);
    CHECK(count_orbits_closed(3, Level::Full) == 16);
    CHECK(count_orbits_closed(8, Level::Leaves) == 131328);
    CHECK(count_orbits_closed(2, Level::Leaves) == 36);
    CHECK(count_orbits_closed(4, Level::Full) == 36);
}

TEST_CASE("binomial") {
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("Burnside brute force matches the closed form") {
    for (unsigned k = 1; k <= 8; ++k)
        CHECK(BigInt(count_orbits_bruteforce(2, k, Level::Leaves)) == count_orbits_closed(k, Level::Leaves));
    for (unsigned k = 1; k <= 12; ++k)
        CHECK(BigInt(count_orbits_bruteforce(2, k, Level::Full)) == count_orbits_closed(k, Level::Full));
}

TEST_CASE("Burnside brute force matches explicit orbit listing") {
    CHECK(count_orbits_bruteforce(2, 2, Level::Leaves) == oracle::count_orbits(2, 2, Level::Leaves));
    CHECK(count_orbits_bruteforce(2, 3, Level::Full) == oracle::count_orbits(2, 3, Level::Full));
    CHECK(count_orbits_bruteforce(3, 1, Level::Leaves) == oracle::count_orbits(3, 1, Level::Leaves));
    CHECK(count_orbits_bruteforce(3, 2, Level::Full) == oracle::count_orbits(3, 2, Level::Full));
    CHECK(count_orbits_bruteforce(3, 1, Level::Full) == oracle::count_orbits(3, 1, Level::Full));
}

TEST_CASE("brute force is deterministic across workers") {
    BruteForceOptions one{kDefaultEnumerationCap, 1};
    BruteForceOptions four{kDefaultEnumerationCap, 4};
    CHECK(count_orbits_bruteforce(2, 8, Level::Leaves, one) == count_orbits_bruteforce(2, 8, Level::Leaves, four));
    CHECK(count_orbits_bruteforce(3, 2, Level::Full, one) == count_orbits_bruteforce(3, 2, Level::Full, four));
}

TEST_CASE("brute force refuses past the cap") {
    CHECK_THROWS_AS(count_orbits_bruteforce(2, 10, Level::Leaves), Error);
    try {
        count_orbits_bruteforce(2, 4, Level::Leaves, {16, 1});
        FAIL("expected cap error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CapExceeded);
    }
}

TEST_CASE("orbit representative enumeration") {
    auto collect = [](unsigned k, Level level) {
        std::vector<SymmetricRule> out;
        OrbitRepEnumerator e(k, level);
        while (auto r = e.next())
            out.push_back(*r);
        return out;
    };
    auto reps3 = collect(3, Level::Leaves);
    CHECK(reps3.size() == 136);
    CHECK(format_alpha(reps3.front()) == "00000000");
    CHECK(collect(1, Level::Full).size() == 4);
    for (unsigned k = 1; k <= 6; ++k)
        for (auto level : {Level::Leaves, Level::Full}) {
            auto reps = collect(k, level);
            CHECK(BigInt(reps.size()) == count_orbits_closed(k, level));
            for (std::size_t i = 0; i < reps.size(); ++i) {
                CHECK(canonical_rep(reps[i]) == reps[i]);
                if (i)
                    CHECK(reps[i - 1] < reps[i]);
            }
        }
    CHECK_THROWS_AS(OrbitRepEnumerator(10, Level::Leaves), Error);
}

TEST_CASE("distinct canonical representatives over all k=3 rules") {
    std::set<std::string> reps;
    for (unsigned code = 0; code < 256; ++code) {
        std::vector<std::uint8_t> t(8);
        for (unsigned i = 0; i < 8; ++i)
            t[i] = code >> i & 1;
        reps.insert(format_alpha(canonical_rep(SymmetricRule(2, 3, Level::Leaves, t))));
    }
    CHECK(reps.size() == 136);
}
