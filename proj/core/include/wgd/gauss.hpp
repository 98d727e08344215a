#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wgd/word.hpp"

namespace wgd {

// 1-based slot on a strand, counted from the bottom.
struct Pos {
    int strand = 0;
    int rank = 0;
    friend bool operator==(const Pos&, const Pos&) = default;
};

struct Arrow {
    int sign = 1;  // +1 or -1
    Pos tail;      // over strand
    Pos head;      // under strand
    friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Gauss diagram on n ordered strands, all oriented upward. On each strand
// the occupied ranks must form a contiguous 1..m block with every slot
// used exactly once.
class GaussDiagram {
public:
    explicit GaussDiagram(int n, std::vector<Arrow> arrows = {})
        : n_(n), arrows_(std::move(arrows)) {}

    int strand_count() const { return n_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }
    int ends_on(int strand) const;

    friend bool operator==(const GaussDiagram& a, const GaussDiagram& b);

private:
    int n_;
    std::vector<Arrow> arrows_;
};

// Reports every violated structural invariant; empty means valid.
std::vector<std::string> validate(const GaussDiagram& g);
// Throws std::invalid_argument when validate() is non-empty.
void require_valid(const GaussDiagram& g);

GaussDiagram stack(const GaussDiagram& bottom, const GaussDiagram& top);
GaussDiagram delete_strand(const GaussDiagram& g, int strand);

// Horizontal: some total order of the arrows is compatible with the
// bottom-to-top end order on every strand (forbids self-arrows).
bool is_horizontal(const GaussDiagram& g);
// Ascending: on every strand, every tail is below every head.
bool is_ascending(const GaussDiagram& g);
// Arrow indices in a horizontality-compatible order (topological sort);
// empty optional-like behaviour: throws std::invalid_argument when not
// horizontal.
std::vector<int> horizontal_order(const GaussDiagram& g);

GaussDiagram random_diagram(int n, int arrow_count, std::uint64_t seed);

// Text format, one construct per line, '#' comments ignored:
//   gd <n>
//   arrow <sign:+|-> <tail_strand>.<tail_rank> <head_strand>.<head_rank>
GaussDiagram parse_diagram(const std::string& text);
std::string emit_diagram(const GaussDiagram& g);

// Deterministic pseudo-random stream (splitmix64); used everywhere a seed
// is part of a public contract so results do not depend on the platform.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    // Uniform in [0, bound); bound >= 1.
    std::uint64_t below(std::uint64_t bound);
    int pick_sign() { return below(2) == 0 ? 1 : -1; }
};

}  // namespace wgd
