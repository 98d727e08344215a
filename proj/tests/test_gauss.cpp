#include "doctest.h"
#include "test_util.hpp"
#include "wgd/gauss.hpp"

using namespace wgd;

namespace {

GaussDiagram hopf() { return parse_diagram("gd 2\narrow - 2.1 1.1\n"); }

}  // namespace

TEST_CASE("validate reports structural violations") {
    CHECK(validate(GaussDiagram(2)).empty());
    // rank 3 on a strand with one end
    GaussDiagram bad1(2, {Arrow{1, {1, 1}, {2, 3}}});
    CHECK_FALSE(validate(bad1).empty());
    // two ends sharing a rank
    GaussDiagram bad2(2, {Arrow{1, {1, 1}, {2, 1}}, Arrow{1, {1, 1}, {2, 2}}});
    CHECK_FALSE(validate(bad2).empty());
    GaussDiagram bad3(2, {Arrow{2, {1, 1}, {2, 1}}});
    CHECK_FALSE(validate(bad3).empty());
    GaussDiagram bad4(2, {Arrow{1, {3, 1}, {2, 1}}});
    CHECK_FALSE(validate(bad4).empty());
}

TEST_CASE("stacking") {
    GaussDiagram h = hopf();
    GaussDiagram unit(2);
    CHECK(stack(h, unit) == h);
    CHECK(stack(unit, h) == h);
    GaussDiagram hh = stack(h, h);
    CHECK(hh.ends_on(1) == 2);
    CHECK(hh.ends_on(2) == 2);
    GaussDiagram a = stack(stack(h, hh), h);
    GaussDiagram b = stack(h, stack(hh, h));
    CHECK(a == b);
    CHECK_THROWS_AS(stack(h, GaussDiagram(3)), std::invalid_argument);
}

TEST_CASE("predicates") {
    CHECK(is_horizontal(GaussDiagram(2)));
    CHECK(is_ascending(GaussDiagram(2)));
    CHECK(is_horizontal(hopf()));
    CHECK(is_ascending(hopf()));
    // self-arrow: never horizontal, ascending iff tail below head
    GaussDiagram self_up(1, {Arrow{1, {1, 1}, {1, 2}}});
    CHECK_FALSE(is_horizontal(self_up));
    CHECK(is_ascending(self_up));
    GaussDiagram self_down(1, {Arrow{1, {1, 2}, {1, 1}}});
    CHECK_FALSE(is_ascending(self_down));
    // order cycle on two strands
    GaussDiagram cyc(2, {Arrow{1, {1, 1}, {2, 2}}, Arrow{1, {2, 1}, {1, 2}}});
    CHECK_FALSE(is_horizontal(cyc));
    CHECK(is_ascending(cyc));
    GaussDiagram ladder(2, {Arrow{1, {1, 1}, {2, 1}}, Arrow{1, {2, 2}, {1, 2}}});
    CHECK(is_horizontal(ladder));
    CHECK(horizontal_order(ladder) == std::vector<int>{0, 1});
}

TEST_CASE("delete_strand") {
    CHECK(delete_strand(GaussDiagram(2), 1) == GaussDiagram(1));
    CHECK(delete_strand(hopf(), 2) == GaussDiagram(1));
    GaussDiagram g(3, {Arrow{1, {1, 1}, {3, 1}}, Arrow{-1, {2, 1}, {3, 2}},
                       Arrow{1, {2, 2}, {1, 2}}});
    GaussDiagram d = delete_strand(g, 3);
    CHECK(d.strand_count() == 2);
    CHECK(d.arrow_count() == 1);
    CHECK(d == GaussDiagram(2, {Arrow{1, {2, 1}, {1, 1}}}));
    CHECK_THROWS_AS(delete_strand(g, 4), std::invalid_argument);
}

TEST_CASE("random diagrams are deterministic and valid") {
    CHECK(random_diagram(2, 0, 5) == GaussDiagram(2));
    for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
        GaussDiagram a = random_diagram(3, 5, seed);
        GaussDiagram b = random_diagram(3, 5, seed);
        CHECK(a == b);
        CHECK(validate(a).empty());
    }
    CHECK_FALSE(random_diagram(3, 5, 1) == random_diagram(3, 5, 2));
}

TEST_CASE("text format round trip") {
    std::string text = "gd 2\narrow - 2.1 1.1\n";
    CHECK(emit_diagram(parse_diagram(text)) == text);
    // comments and blank lines are ignored
    GaussDiagram g = parse_diagram("# fixture\ngd 2\n\narrow - 2.1 1.1 # the only arrow\n");
    CHECK(g == hopf());
    Rng rng(77);
    for (int t = 0; t < 50; ++t) {
        GaussDiagram d = random_diagram(1 + rng.below(4), rng.below(9), rng.next());
        CHECK(parse_diagram(emit_diagram(d)) == d);
        CHECK(emit_diagram(parse_diagram(emit_diagram(d))) == emit_diagram(d));
    }
}

TEST_CASE("parser rejections") {
    CHECK_THROWS_AS(parse_diagram(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_diagram("gd 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_diagram("gd 2\ngd 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_diagram("arrow + 1.1 2.1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_diagram("gd 2\narrow * 1.1 2.1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_diagram("gd 2\narrow + 1.1 2.2\n"), std::invalid_argument);  // gap
    CHECK_THROWS_AS(parse_diagram("gd 2\narrow + 11 2.1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_diagram("gd 2\nfoo\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_diagram("gd 2\narrow + 1.1 2.1 junk\n"), std::invalid_argument);
}
