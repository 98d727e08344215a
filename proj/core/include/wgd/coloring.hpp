#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "wgd/gauss.hpp"
#include "wgd/reduced.hpp"
#include "wgd/word.hpp"

namespace wgd {

// Maximal strand segment between consecutive heads / strand endpoints.
// rank counts head-delimited segments from the bottom; rank 0 contains
// the bottom endpoint.
struct TailInterval {
    int strand = 0;
    int rank = 0;
    auto operator<=>(const TailInterval&) const = default;
};

// Per-head resolution: the intervals directly below/above the head and
// the interval holding the tail it is connected to.
struct HeadSite {
    int arrow = 0;
    int strand = 0;
    int slot = 0;  // rank of the head on its strand
    int sign = 0;
    TailInterval below, above, zero;
};

struct IntervalTable {
    int strand_count = 0;
    std::vector<int> head_count;     // per strand, index 1..n
    std::vector<HeadSite> heads;     // ordered by (strand, slot)
    std::vector<TailInterval> all;   // every interval, strand-major
    TailInterval bottom(int strand) const { return {strand, 0}; }
    TailInterval top(int strand) const { return {strand, head_count[strand]}; }
};

IntervalTable tail_intervals(const GaussDiagram& g);

// Interval coloring. Colors are conjugates of the strand generator; the
// map stores the conjugator c with color x_s^c = c^-1 x_s c.
class ColorMap {
public:
    ColorMap(int rank, bool in_reduced_group) : rank_(rank), reduced_(in_reduced_group) {}

    int rank() const { return rank_; }
    // True when colors live in RF_n; false for the F_n coloring of
    // horizontal diagrams.
    bool in_reduced_group() const { return reduced_; }

    Word color(const TailInterval& t) const;
    const Word& conjugator(const TailInterval& t) const;
    void set_conjugator(const TailInterval& t, Word c);
    const std::map<TailInterval, Word>& conjugators() const { return conj_; }

private:
    int rank_;
    bool reduced_;
    std::map<TailInterval, Word> conj_;
};

// The unique RF_n coloring with bottom color x_i and the head relation
// color(above) = color(below)^(color(zero)^sign); fixed-point iteration,
// verified post hoc (violation raises internal_error).
ColorMap color(const GaussDiagram& g);

// Unique F_n coloring of a horizontal diagram, following a global arrow
// order; precondition error on non-horizontal input.
ColorMap fn_color(const GaussDiagram& g);

// Iterated Wirtinger substitution in F_n: bottom-up sweeps of the head
// relation without any quotient. After s sweeps every interval meridian
// is exact modulo Gamma_{s+1}; this is the longitude engine.
ColorMap meridian_substitution(const GaussDiagram& g, int sweeps);

// The conjugating-automorphism invariant: x_i -> color of the top
// interval of strand i.
ConjAut phi_g_to_a(const GaussDiagram& g);

// Inverse construction: one arrow per conjugator letter, head at the top
// of strand i, tail at the very bottom of the letter's strand. Output is
// ascending.
GaussDiagram phi_a_to_g(const ConjAut& f);

// Wirtinger presentation of the fundamental group: one generator per
// tail interval, one relation lhs = base^(conj^sign) per head.
struct Presentation {
    struct Relation {
        std::string lhs, base, conj;
        int sign = 0;
    };
    std::vector<std::string> generators;
    std::vector<Relation> relations;
};

Presentation pi1_presentation(const GaussDiagram& g);
std::string presentation_json(const Presentation& p);

}  // namespace wgd
