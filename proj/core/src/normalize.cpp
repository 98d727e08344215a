#include "wgd/normalize.hpp"

#include "moves_internal.hpp"
#include "wgd/coloring.hpp"
#include "wgd/moves.hpp"
#include "wgd/reduced.hpp"

namespace wgd {

using detail::DiagramBuf;
using detail::EndRef;

namespace {

constexpr long long kMoveBudget = 4'000'000;

struct MoveCounter {
    long long used = 0;
    void tick() {
        if (++used > kMoveBudget) throw internal_error("normalization move budget exceeded");
    }
};

void drop_new_self_arrows(DiagramBuf& d, int first_new) {
    for (int a = first_new; a < d.arrow_limit(); ++a)
        if (d.alive(a) && d.is_self(a)) d.remove_arrow(a);
}

}  // namespace

GaussDiagram ascending_form(const GaussDiagram& g) {
    require_valid(g);
    if (is_ascending(g)) return g;
    ConjAut phi0 = phi_g_to_a(g);

    DiagramBuf d(g);
    MoveCounter budget;
    for (int a = 0; a < d.arrow_limit(); ++a)
        if (d.alive(a) && d.is_self(a)) d.remove_arrow(a);
    for (int s = 1; s <= d.strand_count(); ++s) {
        // Fix the lowest head-below-tail inversion; each C3-1 settles one
        // and only touches other strands.
        for (;;) {
            int site = -1;
            for (int i = 0; i + 1 < d.ends(s); ++i)
                if (d.at(s, i).head && !d.at(s, i + 1).head) {
                    site = i;
                    break;
                }
            if (site < 0) break;
            budget.tick();
            int first_new = d.arrow_limit();
            detail::apply_move_buf(d, mv_c3(1, s, site + 1));
            drop_new_self_arrows(d, first_new);
        }
    }
    GaussDiagram out = d.to_diagram();
    if (!is_ascending(out)) throw internal_error("ascending_form produced a non-ascending diagram");
    if (!aut_equal(phi_g_to_a(out), phi0))
        throw internal_error("ascending_form failed the invariant certification");
    return out;
}

namespace {

// Horizontal ladder realizing an automorphism that conjugates x_i only:
// one arrow per conjugator letter, heads stacked on strand i in word
// order. Appended on top of the partial diagram under construction.
void append_ladder(std::vector<Arrow>& arrows, std::vector<int>& slots, int target,
                   const Word& conjugator) {
    for (int l : conjugator.letters()) {
        int j = l > 0 ? l : -l;
        Arrow a;
        a.sign = l > 0 ? 1 : -1;
        a.tail = {j, ++slots[j]};
        a.head = {target, ++slots[target]};
        arrows.push_back(a);
    }
}

}  // namespace

GaussDiagram horizontal_form(const GaussDiagram& g) {
    require_valid(g);
    if (is_horizontal(g)) return g;
    ConjAut phi0 = phi_g_to_a(g);

    // Sort ascending first, then peel the automorphism one strand at a
    // time into stacked one-target ladders: phi factors as
    // phi_1 o ... o phi_n with phi_i conjugating x_i only, and a ladder
    // block realizes each factor. The stack of ladders is horizontal by
    // construction and its invariant composes to phi.
    GaussDiagram asc = ascending_form(g);
    ConjAut rest = phi_g_to_a(asc);
    const int n = g.strand_count();
    std::vector<Arrow> arrows;
    std::vector<int> slots(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        Word conj = rest.conjugator(i);
        append_ladder(arrows, slots, i, conj);
        std::vector<Word> single(n, Word(n));
        single[i - 1] = conj;
        rest = compose(invert_aut(ConjAut(n, std::move(single))), rest);
    }
    if (!aut_equal(rest, ConjAut::identity(n)))
        throw internal_error("automorphism failed to factor into strand ladders");

    GaussDiagram out(n, std::move(arrows));
    require_valid(out);
    if (!is_horizontal(out))
        throw internal_error("horizontal_form produced a non-horizontal diagram");
    if (!aut_equal(phi_g_to_a(out), phi0))
        throw internal_error("horizontal_form failed the invariant certification");
    return out;
}

}  // namespace wgd
