#include "wgd/coloring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wgd {

IntervalTable tail_intervals(const GaussDiagram& g) {
    require_valid(g);
    const int n = g.strand_count();
    IntervalTable t;
    t.strand_count = n;
    t.head_count.assign(n + 1, 0);

    // heads per strand, bottom to top
    std::vector<std::vector<std::pair<int, int>>> heads(n + 1);  // (slot, arrow)
    for (int i = 0; i < g.arrow_count(); ++i) {
        const Arrow& a = g.arrows()[i];
        heads[a.head.strand].push_back({a.head.rank, i});
    }
    for (int s = 1; s <= n; ++s) {
        std::sort(heads[s].begin(), heads[s].end());
        t.head_count[s] = static_cast<int>(heads[s].size());
    }
    auto interval_of = [&](const Pos& p) {
        const auto& hs = heads[p.strand];
        int r = static_cast<int>(
            std::lower_bound(hs.begin(), hs.end(), std::make_pair(p.rank, INT32_MIN)) -
            hs.begin());
        return TailInterval{p.strand, r};
    };
    for (int s = 1; s <= n; ++s) {
        for (int k = 0; k < static_cast<int>(heads[s].size()); ++k) {
            auto [slot, arrow] = heads[s][k];
            HeadSite h;
            h.arrow = arrow;
            h.strand = s;
            h.slot = slot;
            h.sign = g.arrows()[arrow].sign;
            h.below = {s, k};
            h.above = {s, k + 1};
            h.zero = interval_of(g.arrows()[arrow].tail);
            t.heads.push_back(h);
        }
        for (int r = 0; r <= t.head_count[s]; ++r) t.all.push_back({s, r});
    }
    return t;
}

Word ColorMap::color(const TailInterval& t) const {
    Word gen = Word::from_letters(rank_, {t.strand});
    return conjugate(gen, conjugator(t));
}

const Word& ColorMap::conjugator(const TailInterval& t) const {
    auto it = conj_.find(t);
    if (it == conj_.end()) throw std::invalid_argument("unknown tail interval");
    return it->second;
}

void ColorMap::set_conjugator(const TailInterval& t, Word c) {
    conj_.insert_or_assign(t, std::move(c));
}

namespace {

// Shared fixed-point engine. In the reduced group the conjugator of an
// interval on strand s may drop x_s letters (rho); sweeps is n+1 there
// and the truncation depth for the Milnor substitution otherwise.
ColorMap color_by_iteration(const GaussDiagram& g, const IntervalTable& t, bool reduced,
                            int sweeps) {
    const int n = g.strand_count();
    ColorMap cm(n, reduced);
    for (const TailInterval& iv : t.all) cm.set_conjugator(iv, Word(n));
    for (int pass = 0; pass < sweeps; ++pass) {
        for (const HeadSite& h : t.heads) {
            Word factor = cm.color(h.zero);
            if (h.sign < 0) factor = invert(factor);
            Word c = multiply(cm.conjugator(h.below), factor);
            if (reduced) c = rho(c, h.strand);
            cm.set_conjugator(h.above, std::move(c));
        }
    }
    return cm;
}

}  // namespace

ColorMap meridian_substitution(const GaussDiagram& g, int sweeps) {
    if (sweeps < 0) throw std::invalid_argument("sweep count must be non-negative");
    IntervalTable t = tail_intervals(g);
    return color_by_iteration(g, t, false, sweeps);
}

ColorMap color(const GaussDiagram& g) {
    IntervalTable t = tail_intervals(g);
    ColorMap cm = color_by_iteration(g, t, true, g.strand_count() + 1);
    // The coloring map is unique and the iteration must reach it: a
    // violated head relation here is a bug, not bad input.
    for (const HeadSite& h : t.heads) {
        Word factor = cm.color(h.zero);
        if (h.sign < 0) factor = invert(factor);
        if (!rf_equal(cm.color(h.above), conjugate(cm.color(h.below), factor)))
            throw internal_error("coloring fixed point failed to verify");
    }
    return cm;
}

ColorMap fn_color(const GaussDiagram& g) {
    IntervalTable t = tail_intervals(g);
    std::vector<int> order = horizontal_order(g);  // throws when not horizontal
    const int n = g.strand_count();
    ColorMap cm(n, false);
    for (const TailInterval& iv : t.all) cm.set_conjugator(iv, Word(n));
    std::vector<const HeadSite*> site_of_arrow(g.arrow_count(), nullptr);
    for (const HeadSite& h : t.heads) site_of_arrow[h.arrow] = &h;
    for (int arrow : order) {
        const HeadSite& h = *site_of_arrow[arrow];
        Word factor = cm.color(h.zero);
        if (h.sign < 0) factor = invert(factor);
        cm.set_conjugator(h.above, multiply(cm.conjugator(h.below), factor));
    }
    return cm;
}

ConjAut phi_g_to_a(const GaussDiagram& g) {
    IntervalTable t = tail_intervals(g);
    ColorMap cm = color(g);
    std::vector<Word> conj;
    conj.reserve(g.strand_count());
    for (int s = 1; s <= g.strand_count(); ++s) conj.push_back(cm.conjugator(t.top(s)));
    return ConjAut(g.strand_count(), std::move(conj));
}

GaussDiagram phi_a_to_g(const ConjAut& f) {
    const int n = f.rank();
    std::vector<std::vector<std::pair<int, bool>>> strands(n + 1);  // (arrow, is_head)
    int arrow_id = 0;
    std::vector<int> signs;
    for (int i = 1; i <= n; ++i) {
        for (int l : f.conjugator(i).letters()) {
            signs.push_back(l > 0 ? 1 : -1);
            strands[i].push_back({arrow_id, true});  // head at the very top of strand i
            auto& tv = strands[std::abs(l)];
            tv.insert(tv.begin(), {arrow_id, false});  // tail at the very bottom
            ++arrow_id;
        }
    }
    std::vector<Arrow> arrows(arrow_id);
    for (int i = 0; i < arrow_id; ++i) arrows[i].sign = signs[i];
    for (int s = 1; s <= n; ++s)
        for (size_t r = 0; r < strands[s].size(); ++r) {
            auto [arrow, is_head] = strands[s][r];
            Pos p{s, static_cast<int>(r) + 1};
            if (is_head)
                arrows[arrow].head = p;
            else
                arrows[arrow].tail = p;
        }
    return GaussDiagram(n, std::move(arrows));
}

namespace {

std::string interval_label(const IntervalTable& t, const TailInterval& iv) {
    if (iv.rank == 0) return "m_" + std::to_string(iv.strand) + "^0";
    if (iv.rank == t.head_count[iv.strand]) return "m_" + std::to_string(iv.strand) + "^1";
    return "T" + std::to_string(iv.strand) + "." + std::to_string(iv.rank);
}

}  // namespace

Presentation pi1_presentation(const GaussDiagram& g) {
    IntervalTable t = tail_intervals(g);
    Presentation p;
    for (const TailInterval& iv : t.all) p.generators.push_back(interval_label(t, iv));
    for (const HeadSite& h : t.heads)
        p.relations.push_back({interval_label(t, h.above), interval_label(t, h.below),
                               interval_label(t, h.zero), h.sign});
    return p;
}

std::string presentation_json(const Presentation& p) {
    std::ostringstream out;
    out << "{\"generators\": [";
    for (size_t i = 0; i < p.generators.size(); ++i) {
        if (i) out << ", ";
        out << '"' << p.generators[i] << '"';
    }
    out << "], \"relations\": [";
    for (size_t i = 0; i < p.relations.size(); ++i) {
        if (i) out << ", ";
        const auto& r = p.relations[i];
        out << "{\"lhs\": \"" << r.lhs << "\", \"base\": \"" << r.base << "\", \"conj\": \""
            << r.conj << "\", \"sign\": " << r.sign << "}";
    }
    out << "]}";
    return out.str();
}

}  // namespace wgd
