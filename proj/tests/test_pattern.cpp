#include "doctest.h"

#include "symca/error.hpp"
#include "symca/lattice.hpp"
#include "symca/pattern.hpp"

using namespace symca;

TEST_CASE("glider") {
    auto g = import_rle("x = 3, y = 3\nbob$2bo$3o!");
    CHECK(g.width == 3);
    CHECK(g.height == 3);
    using P = std::pair<unsigned, unsigned>;
    CHECK(g.live == std::vector<P>{{1, 0}, {2, 1}, {0, 2}, {1, 2}, {2, 2}});
}

TEST_CASE("small patterns") {
    CHECK(import_rle("!").live.empty());
    auto block = import_rle("2o$2o!");
    CHECK(block.live.size() == 4);
    CHECK(block.width == 2);
    CHECK(block.height == 2);
    auto gap = import_rle("o2$o!");
    CHECK(gap.height == 3);
    CHECK(gap.live.back() == std::pair<unsigned, unsigned>{0, 2});
}

TEST_CASE("comments, rule field and whitespace") {
    auto p = import_rle("#N Blinker\n#C period 2\nx = 3, y = 1, rule = B3/S23\n3o\n!\n");
    CHECK(p.live.size() == 3);
    CHECK(p.width == 3);
}

TEST_CASE("malformed input") {
    CHECK_THROWS_AS(import_rle("3q!"), Error);
    CHECK_THROWS_AS(import_rle("x = 2, y = 2\n3o!"), Error);
    CHECK_THROWS_AS(import_rle("x = 2, y = 1\no$o!"), Error);
    CHECK_THROWS_AS(import_rle("2"), Error);
    CHECK_THROWS_AS(import_rle("x = two, y = 2\no!"), Error);
}

TEST_CASE("export round trip") {
    for (const char* text : {"x = 3, y = 3\nbob$2bo$3o!", "2o$2o!", "!", "x = 5, y = 4\no3bo$$5o!"}) {
        auto p = import_rle(text);
        CHECK(import_rle(export_rle(p)) == p);
    }
    PatternDocument wide{100, 1, {}};
    for (unsigned x = 0; x < 100; x += 2)
        wide.live.push_back({x, 0});
    auto text = export_rle(wide);
    std::size_t longest = 0, cur = 0;
    for (char c : text) {
        cur = c == '\n' ? 0 : cur + 1;
        longest = std::max(longest, cur);
    }
    CHECK(longest <= 70);
    CHECK(import_rle(text) == wide);
}

TEST_CASE("placement") {
    auto l = build_moore(Surface::Torus, {6, 6});
    auto s = place_pattern(CAState::filled(2, 36), l, import_rle("2o$2o!"), 4, 3);
    for (auto [x, y] : {std::pair{4u, 3u}, {5u, 3u}, {4u, 4u}, {5u, 4u}})
        CHECK(s[y * 6 + x] == 1);
    CHECK(census(s, l)[1] == 4);
    auto kept = place_pattern(s, l, import_rle("o!"), 0, 0);
    CHECK(census(kept, l)[1] == 5);
    // no implicit wrapping
    CHECK_THROWS_AS(place_pattern(CAState::filled(2, 36), l, import_rle("2o$2o!"), 5, 0), Error);
    CHECK_THROWS_AS(place_pattern(CAState::filled(2, 60), build_fullerene_c60(), import_rle("o!")), Error);
}
