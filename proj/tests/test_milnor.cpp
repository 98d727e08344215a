#include "doctest.h"
#include "test_util.hpp"
#include "wgd/milnor.hpp"
#include "wgd/moves.hpp"
#include "wgd/series.hpp"

using namespace wgd;

namespace {

GaussDiagram hopf_power(int n) {
    GaussDiagram h = parse_diagram("gd 2\narrow - 2.1 1.1\n");
    GaussDiagram g(2);
    for (int i = 0; i < n; ++i) g = stack(g, h);
    return g;
}

GaussDiagram brunnian() {
    Word br = commutator(parse_word(3, "x2^-1"), parse_word(3, "x1^-1"));
    return phi_a_to_g(ConjAut(3, {Word(3), Word(3), br}));
}

}  // namespace

TEST_CASE("longitudes of small diagrams") {
    for (const Longitude& l : longitudes(GaussDiagram(3), 3)) {
        CHECK(l.word.empty());
        CHECK(l.framing_corrected);
    }
    GaussDiagram plus = parse_diagram("gd 2\narrow + 1.1 2.1\n");
    auto ls = longitudes(plus, 2);
    CHECK(ls[0].word.empty());
    CHECK(ls[1].word == parse_word(2, "x1"));

    for (int n = 1; n <= 3; ++n) {
        auto lh = longitudes(hopf_power(n), 2);
        CHECK(lh[0].word == power(parse_word(2, "x2"), -n));
        CHECK(lh[1].word.empty());
    }
}

TEST_CASE("framing correction zeroes the self exponent") {
    Rng rng(81);
    for (int t = 0; t < 50; ++t) {
        GaussDiagram g = random_diagram(1 + rng.below(4), rng.below(8), rng.next());
        for (const Longitude& l : longitudes(g, 3))
            CHECK(exponent_sum(l.word, l.strand) == 0);
    }
}

TEST_CASE("degree-1 invariants are linking numbers") {
    GaussDiagram plus = parse_diagram("gd 2\narrow + 1.1 2.1\n");
    CHECK(milnor_mu(plus, {1, 2}) == Int(1));
    CHECK(milnor_mu(plus, {2, 1}) == Int(0));
    CHECK(milnor_mu(GaussDiagram(2), {1, 2}) == Int(0));
    CHECK(milnor_mu(GaussDiagram(2), {1, 1, 2}) == Int(0));
    Rng rng(82);
    for (int t = 0; t < 60; ++t) {
        GaussDiagram g = random_diagram(2 + rng.below(3), rng.below(8), rng.next());
        int i = 1 + static_cast<int>(rng.below(g.strand_count()));
        int j = 1 + static_cast<int>(rng.below(g.strand_count()));
        if (i == j) continue;
        long long lk = 0;
        for (const Arrow& a : g.arrows())
            if (a.tail.strand == i && a.head.strand == j) lk += a.sign;
        CHECK(milnor_mu(g, {i, j}) == Int(lk));
    }
}

TEST_CASE("Brunnian invariants, against the naive series oracle") {
    GaussDiagram b = brunnian();
    // lambda_3 = x2 x1 x2^-1 x1^-1; freeze its degree-2 expansion
    Word lam3 = longitudes(b, 3)[2].word;
    CHECK(lam3 == parse_word(3, "x2 x1 x2^-1 x1^-1"));
    wgd_test::Naive oracle = wgd_test::naive_magnus(lam3, 2);
    CHECK(oracle == wgd_test::Naive{{"", 1}, {"12", -1}, {"21", 1}});

    CHECK(milnor_mu(b, {1, 2, 3}) == Int(-1));
    CHECK(milnor_mu(b, {2, 1, 3}) == Int(1));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            if (i != j) CHECK(milnor_mu(b, {i, j}) == Int(0));
}

TEST_CASE("universal invariant tables") {
    CHECK(universal_milnor(GaussDiagram(3), 1).empty());
    CHECK(universal_milnor(GaussDiagram(3), 2).empty());
    for (int n = 1; n <= 3; ++n) {
        UniversalMilnor u = universal_milnor(hopf_power(n), 1);
        REQUIRE(u.size() == 1);
        CHECK(u.at({1, {2}}) == Int(-n));
    }
    UniversalMilnor ub = universal_milnor(brunnian(), 2);
    REQUIRE(ub.size() == 2);
    CHECK(ub.at({3, {1, 2}}) == Int(-1));
    CHECK(ub.at({3, {2, 1}}) == Int(1));
}

TEST_CASE("universal table agrees with milnor_mu entrywise") {
    Rng rng(83);
    for (int t = 0; t < 25; ++t) {
        GaussDiagram g = random_diagram(2 + rng.below(2), rng.below(7), rng.next());
        for (int k = 1; k <= 2; ++k) {
            UniversalMilnor u = universal_milnor(g, k);
            for (const auto& [key, v] : u) {
                MilnorIndex idx = key.second;
                idx.push_back(key.first);
                CHECK(milnor_mu(g, idx) == v);
            }
            // and a few zero entries
            for (int probe = 0; probe < 3; ++probe) {
                MilnorIndex idx;
                for (int i = 0; i < k; ++i)
                    idx.push_back(1 + static_cast<int>(rng.below(g.strand_count())));
                int j = 1 + static_cast<int>(rng.below(g.strand_count()));
                MilnorIndex full = idx;
                full.push_back(j);
                Int expect = u.count({j, idx}) ? u.at({j, idx}) : Int(0);
                CHECK(milnor_mu(g, full) == expect);
            }
        }
    }
}

TEST_CASE("depth stability") {
    Rng rng(84);
    for (int t = 0; t < 40; ++t) {
        GaussDiagram g = random_diagram(1 + rng.below(4), rng.below(6), rng.next());
        int n = g.strand_count();
        MilnorIndex idx;
        int len = 2 + static_cast<int>(rng.below(2));
        for (int i = 0; i < len; ++i) idx.push_back(1 + static_cast<int>(rng.below(n)));
        int m = len - 1;
        Int base = milnor_mu_at_depth(g, idx, m + 1);
        CHECK(milnor_mu_at_depth(g, idx, m + 2) == base);
        CHECK(milnor_mu_at_depth(g, idx, m + 3) == base);
    }
}

TEST_CASE("series path matches the word path at every sweep count") {
    Rng rng(85);
    for (int t = 0; t < 25; ++t) {
        GaussDiagram g = random_diagram(1 + rng.below(4), rng.below(6), rng.next());
        int k = 1 + static_cast<int>(rng.below(2));
        int sweeps = k + 1;
        UniversalMilnor fast = universal_milnor_sweeps(g, k, sweeps);
        // word path with the same truncation depth
        for (int j = 1; j <= g.strand_count(); ++j) {
            Longitude l = longitudes(g, sweeps)[j - 1];
            TruncatedSeries s = magnus(l.word, k);
            for (const auto& [mono, v] : s.terms()) {
                if (static_cast<int>(mono.size()) != k) continue;
                Int have = fast.count({j, mono}) ? fast.at({j, mono}) : Int(0);
                CHECK(have == v);
            }
            for (const auto& [key, v] : fast)
                if (key.first == j) CHECK(s.coeff(key.second) == v);
        }
    }
}

TEST_CASE("framing-correction side only moves coefficients that mention j") {
    // The preferred longitude inserts the compensating twists at the
    // bottom of the strand; inserting them at the top instead conjugates
    // by a power of x_j, which cannot touch j-free monomials.
    Rng rng(87);
    for (int t = 0; t < 30; ++t) {
        GaussDiagram g = random_diagram(2 + rng.below(3), rng.below(7), rng.next());
        int n = g.strand_count();
        for (const Longitude& l : longitudes(g, 3)) {
            Word xj = Word::from_letters(n, {l.strand});
            int k = 1 + static_cast<int>(rng.below(3));
            Word other = multiply(multiply(power(xj, k), l.word), power(xj, -k));
            TruncatedSeries a = magnus(l.word, 2), b = magnus(other, 2);
            for (const auto& [mono, v] : a.terms()) {
                bool has_j = false;
                for (int i : mono) has_j |= i == l.strand;
                if (!has_j) CHECK(b.coeff(mono) == v);
            }
        }
    }
}

TEST_CASE("degree-1 invariants add under stacking") {
    Rng rng(86);
    for (int t = 0; t < 30; ++t) {
        int n = 2 + static_cast<int>(rng.below(3));
        GaussDiagram a = random_diagram(n, rng.below(6), rng.next());
        GaussDiagram b = random_diagram(n, rng.below(6), rng.next());
        GaussDiagram s = stack(a, b);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                CHECK(milnor_mu(s, {i, j}) == milnor_mu(a, {i, j}) + milnor_mu(b, {i, j}));
            }
    }
}

TEST_CASE("filtration order") {
    CHECK(milnor_filtration_order(GaussDiagram(3), 6) == std::nullopt);
    GaussDiagram plus = parse_diagram("gd 2\narrow + 1.1 2.1\n");
    CHECK(milnor_filtration_order(plus, 6) == 2);
    CHECK(milnor_filtration_order(brunnian(), 6) == 3);
    CHECK_THROWS_AS(milnor_filtration_order(GaussDiagram(2), 1), std::invalid_argument);
}

TEST_CASE("index validation") {
    GaussDiagram g(2);
    CHECK_THROWS_AS(milnor_mu(g, {1}), std::invalid_argument);
    CHECK_THROWS_AS(milnor_mu(g, {}), std::invalid_argument);
    CHECK_THROWS_AS(milnor_mu(g, {1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(milnor_mu_at_depth(g, {1, 2}, 1), std::invalid_argument);
}
