#include "doctest.h"
#include "test_util.hpp"
#include "wgd/coloring.hpp"
#include "wgd/moves.hpp"

using namespace wgd;

namespace {

GaussDiagram hopf() { return parse_diagram("gd 2\narrow - 2.1 1.1\n"); }

GaussDiagram hopf_power(int n) {
    GaussDiagram g(2);
    for (int i = 0; i < n; ++i) g = stack(g, hopf());
    return g;
}

ConjAut brunnian_aut() {
    Word br = commutator(parse_word(3, "x2^-1"), parse_word(3, "x1^-1"));
    return ConjAut(3, {Word(3), Word(3), br});
}

}  // namespace

TEST_CASE("tail intervals") {
    IntervalTable empty = tail_intervals(GaussDiagram(3));
    CHECK(empty.all.size() == 3);
    for (int s = 1; s <= 3; ++s) CHECK(empty.bottom(s) == empty.top(s));

    IntervalTable h = tail_intervals(hopf());
    CHECK(h.head_count[1] == 1);
    CHECK(h.head_count[2] == 0);
    CHECK(h.all.size() == 3);  // per-strand interval count = head count + 1
    REQUIRE(h.heads.size() == 1);
    CHECK(h.heads[0].below == TailInterval{1, 0});
    CHECK(h.heads[0].above == TailInterval{1, 1});
    CHECK(h.heads[0].zero == TailInterval{2, 0});
    CHECK(h.heads[0].sign == -1);
}

TEST_CASE("coloring the empty diagram and the Hopf diagram") {
    ColorMap e = color(GaussDiagram(2));
    CHECK(e.color({1, 0}) == parse_word(2, "x1"));
    CHECK(e.color({2, 0}) == parse_word(2, "x2"));

    ColorMap h = color(hopf());
    // xi(T_1^+) = x1^(x2^-1) = x2 x1 x2^-1
    CHECK(h.color({1, 1}) == parse_word(2, "x2 x1 x2^-1"));
    CHECK(h.color({1, 0}) == parse_word(2, "x1"));
    CHECK(h.color({2, 0}) == parse_word(2, "x2"));

    GaussDiagram plus = parse_diagram("gd 2\narrow + 2.1 1.1\n");
    CHECK(color(plus).color({1, 1}) ==
          conjugate(parse_word(2, "x1"), parse_word(2, "x2")));
}

TEST_CASE("colors on strand i are conjugates of x_i") {
    Rng rng(40);
    for (int t = 0; t < 40; ++t) {
        GaussDiagram g = random_diagram(1 + rng.below(4), rng.below(8), rng.next());
        ColorMap cm = color(g);
        for (const auto& [iv, conj] : cm.conjugators()) {
            Word c = cm.color(iv);
            CHECK(exponent_sum(c, iv.strand) == 1);
            CHECK(rf_equal(c, conjugate(Word::from_letters(g.strand_count(), {iv.strand}),
                                        conj)));
        }
    }
}

TEST_CASE("F_n coloring of horizontal diagrams") {
    ColorMap e = fn_color(GaussDiagram(2));
    CHECK(e.color({1, 0}) == parse_word(2, "x1"));
    CHECK_FALSE(e.in_reduced_group());

    GaussDiagram plus = parse_diagram("gd 2\narrow + 2.1 1.1\n");
    CHECK(fn_color(plus).color({1, 1}) == color(plus).color({1, 1}));

    GaussDiagram ladder(2, {Arrow{1, {1, 1}, {2, 1}}, Arrow{-1, {2, 2}, {1, 2}}});
    ColorMap f = fn_color(ladder);
    ColorMap r = color(ladder);
    for (const auto& [iv, conj] : f.conjugators())
        CHECK(rf_equal(f.color(iv), r.color(iv)));  // F_n colors project to RF_n colors

    GaussDiagram self_arrow(1, {Arrow{1, {1, 1}, {1, 2}}});
    CHECK_THROWS_AS(fn_color(self_arrow), std::invalid_argument);
}

TEST_CASE("phi of the basic fixtures") {
    CHECK(aut_equal(phi_g_to_a(GaussDiagram(3)), ConjAut::identity(3)));

    ConjAut h = phi_g_to_a(hopf());
    CHECK(h.conjugator(1) == parse_word(2, "x2^-1"));
    CHECK(h.conjugator(2).empty());

    for (int n = 0; n <= 4; ++n) {
        ConjAut hn = phi_g_to_a(hopf_power(n));
        CHECK(hn.conjugator(1) == power(parse_word(2, "x2"), -n));
        CHECK(hn.conjugator(2).empty());
        CHECK(apply(hn, parse_word(2, "x2")) == parse_word(2, "x2"));
    }
}

TEST_CASE("the ascending three-strand example") {
    // x1 -> x1^(x2 x3^-1), x2 -> x2^x1, x3 -> x3^(x2^-1)
    ConjAut f(3, {parse_word(3, "x2 x3^-1"), parse_word(3, "x1"), parse_word(3, "x2^-1")});
    GaussDiagram g = phi_a_to_g(f);
    CHECK(is_ascending(g));
    CHECK(g.arrow_count() == 4);
    CHECK(aut_equal(phi_g_to_a(g), f));
}

TEST_CASE("phi_a_to_g base cases") {
    CHECK(phi_a_to_g(ConjAut::identity(3)) == GaussDiagram(3));
    ConjAut one(2, {parse_word(2, "x2"), Word(2)});
    CHECK(phi_a_to_g(one) == parse_diagram("gd 2\narrow + 2.1 1.1\n"));
}

TEST_CASE("Brunnian diagram round trip") {
    ConjAut b = brunnian_aut();
    GaussDiagram g = phi_a_to_g(b);
    CHECK(g.arrow_count() == 4);
    CHECK(is_ascending(g));
    CHECK(aut_equal(phi_g_to_a(g), b));
    for (int s = 1; s <= 3; ++s)
        CHECK(aut_equal(phi_g_to_a(delete_strand(g, s)), ConjAut::identity(2)));
}

TEST_CASE("phi is a stacking homomorphism (sampled)") {
    Rng rng(71);
    for (int t = 0; t < 30; ++t) {
        int n = 1 + static_cast<int>(rng.below(4));
        GaussDiagram a = random_diagram(n, rng.below(6), rng.next());
        GaussDiagram b = random_diagram(n, rng.below(6), rng.next());
        CHECK(aut_equal(phi_g_to_a(stack(a, b)), compose(phi_g_to_a(a), phi_g_to_a(b))));
    }
}

TEST_CASE("round trip on random conjugator tuples (sampled)") {
    Rng rng(72);
    for (int t = 0; t < 40; ++t) {
        int n = 1 + static_cast<int>(rng.below(4));
        ConjAut f = wgd_test::rand_conjaut(rng, n, 6);
        CHECK(aut_equal(phi_g_to_a(phi_a_to_g(f)), f));
    }
}

TEST_CASE("direct conjugator reading on ascending diagrams") {
    Rng rng(73);
    for (int t = 0; t < 30; ++t) {
        int n = 1 + static_cast<int>(rng.below(4));
        ConjAut f = wgd_test::rand_conjaut(rng, n, 5);
        GaussDiagram g = phi_a_to_g(f);
        REQUIRE(is_ascending(g));
        // read each conjugator off the heads, bottom to top
        IntervalTable tab = tail_intervals(g);
        ConjAut phi = phi_g_to_a(g);
        for (int i = 1; i <= n; ++i) {
            std::vector<int> letters;
            for (const HeadSite& h : tab.heads) {
                if (h.strand != i) continue;
                int tail_strand = g.arrows()[h.arrow].tail.strand;
                letters.push_back(h.sign * tail_strand);
            }
            CHECK(rf_equal(Word::from_letters(n, letters), phi.conjugator(i)));
        }
    }
}

TEST_CASE("link-homotopy equivalence is symmetric and transitive on fixtures") {
    GaussDiagram h = hopf();
    std::vector<GaussDiagram> reps = {GaussDiagram(2), h, hopf_power(2), hopf_power(3),
                                      stack(h, stack(h, h))};
    auto equiv = [](const GaussDiagram& a, const GaussDiagram& b) {
        return aut_equal(phi_g_to_a(a), phi_g_to_a(b));
    };
    for (size_t a = 0; a < reps.size(); ++a)
        for (size_t b = 0; b < reps.size(); ++b) {
            CHECK(equiv(reps[a], reps[b]) == equiv(reps[b], reps[a]));
            for (size_t c = 0; c < reps.size(); ++c)
                if (equiv(reps[a], reps[b]) && equiv(reps[b], reps[c]))
                    CHECK(equiv(reps[a], reps[c]));
        }
    CHECK(equiv(reps[3], reps[4]));       // H^3 two ways
    CHECK_FALSE(equiv(reps[1], reps[2]));
}

TEST_CASE("Wirtinger presentation of the Hopf diagram") {
    Presentation p = pi1_presentation(hopf());
    CHECK(p.generators == std::vector<std::string>{"m_1^0", "m_1^1", "m_2^0"});
    REQUIRE(p.relations.size() == 1);
    CHECK(p.relations[0].lhs == "m_1^1");
    CHECK(p.relations[0].base == "m_1^0");
    CHECK(p.relations[0].conj == "m_2^0");
    CHECK(p.relations[0].sign == -1);
    CHECK(presentation_json(p) ==
          "{\"generators\": [\"m_1^0\", \"m_1^1\", \"m_2^0\"], "
          "\"relations\": [{\"lhs\": \"m_1^1\", \"base\": \"m_1^0\", \"conj\": \"m_2^0\", "
          "\"sign\": -1}]}");
}

TEST_CASE("presentations of other small diagrams") {
    Presentation free3 = pi1_presentation(GaussDiagram(3));
    CHECK(free3.generators == std::vector<std::string>{"m_1^0", "m_2^0", "m_3^0"});
    CHECK(free3.relations.empty());

    Presentation plus = pi1_presentation(parse_diagram("gd 2\narrow + 2.1 1.1\n"));
    REQUIRE(plus.relations.size() == 1);
    CHECK(plus.relations[0].sign == 1);

    // interior intervals get positional labels
    GaussDiagram two_heads(2,
                           {Arrow{1, {2, 1}, {1, 1}}, Arrow{-1, {2, 2}, {1, 2}}});
    Presentation q = pi1_presentation(two_heads);
    CHECK(q.generators == std::vector<std::string>{"m_1^0", "T1.1", "m_1^1", "m_2^0"});
}
