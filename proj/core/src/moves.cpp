#include "wgd/moves.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "moves_internal.hpp"
#include "wgd/reduced.hpp"

namespace wgd {

using detail::DiagramBuf;
using detail::EndRef;

std::string move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::R1Add: return "R1-add";
        case MoveKind::R1Del: return "R1-del";
        case MoveKind::R2Add: return "R2-add";
        case MoveKind::R2Del: return "R2-del";
        case MoveKind::R3: return "R3";
        case MoveKind::TC: return "TC";
        case MoveKind::SAAdd: return "SA-add";
        case MoveKind::SADel: return "SA-del";
        case MoveKind::C31: return "C3-1";
        case MoveKind::C32: return "C3-2";
        case MoveKind::C33: return "C3-3";
        case MoveKind::C2: return "C2";
    }
    return "?";
}

MoveInstance mv_r1_add(int strand, int gap, int sign, bool head_above) {
    MoveInstance m{MoveKind::R1Add};
    m.strand = strand;
    m.rank = gap;
    m.sign = sign;
    m.head_above = head_above;
    return m;
}
MoveInstance mv_r1_del(int arrow) {
    MoveInstance m{MoveKind::R1Del};
    m.arrow = arrow;
    return m;
}
MoveInstance mv_r2_add(int tail_strand, int tail_gap, int head_strand, int head_gap, int sign,
                       bool crossed) {
    MoveInstance m{MoveKind::R2Add};
    m.strand = tail_strand;
    m.rank = tail_gap;
    m.strand2 = head_strand;
    m.rank2 = head_gap;
    m.sign = sign;
    m.crossed = crossed;
    return m;
}
MoveInstance mv_r2_del(int arrow_a, int arrow_b) {
    MoveInstance m{MoveKind::R2Del};
    m.arrow = arrow_a;
    m.arrow2 = arrow_b;
    return m;
}
MoveInstance mv_r3(int arrow_a, int arrow_b, int arrow_c) {
    MoveInstance m{MoveKind::R3};
    m.arrow = arrow_a;
    m.arrow2 = arrow_b;
    m.arrow3 = arrow_c;
    return m;
}
MoveInstance mv_tc(int strand, int rank) {
    MoveInstance m{MoveKind::TC};
    m.strand = strand;
    m.rank = rank;
    return m;
}
MoveInstance mv_sa_add(int strand, int tail_gap, int head_gap, int sign) {
    MoveInstance m{MoveKind::SAAdd};
    m.strand = strand;
    m.rank = tail_gap;
    m.rank2 = head_gap;
    m.sign = sign;
    return m;
}
MoveInstance mv_sa_del(int arrow) {
    MoveInstance m{MoveKind::SADel};
    m.arrow = arrow;
    return m;
}
MoveInstance mv_c3(int version, int strand, int rank) {
    MoveInstance m{version == 1 ? MoveKind::C31 : version == 2 ? MoveKind::C32 : MoveKind::C33};
    m.strand = strand;
    m.rank = rank;
    return m;
}
MoveInstance mv_c2(int strand, int rank) {
    MoveInstance m{MoveKind::C2};
    m.strand = strand;
    m.rank = rank;
    return m;
}

namespace {

[[noreturn]] void pattern_error(const std::string& what) {
    throw std::invalid_argument("pattern-not-found: " + what);
}

void check_arrow(const DiagramBuf& d, int arrow, const char* kind) {
    if (!d.alive(arrow))
        throw std::invalid_argument(std::string(kind) + ": arrow index out of range");
}

void check_gap(const DiagramBuf& d, int strand, int gap, const char* kind) {
    if (strand < 1 || strand > d.strand_count())
        throw std::invalid_argument(std::string(kind) + ": strand out of range");
    if (gap < 0 || gap > d.ends(strand))
        throw std::invalid_argument(std::string(kind) + ": insertion gap out of range");
}

}  // namespace

namespace detail {

std::optional<R3Match> match_r3(const DiagramBuf& d, int a, int b, int c) {
    const std::array<std::array<int, 3>, 6> perms = {{{a, b, c},
                                                      {a, c, b},
                                                      {b, a, c},
                                                      {b, c, a},
                                                      {c, a, b},
                                                      {c, b, a}}};
    std::optional<R3Match> pattern_only;
    for (const auto& p : perms) {
        int al = p[0], be = p[1], ga = p[2];
        EndRef ta{al, false}, tb{be, false}, ha{al, true};
        EndRef tg{ga, false}, hb{be, true}, hg{ga, true};
        if (d.strand_of(ta) != d.strand_of(tb) || d.strand_of(ha) != d.strand_of(tg) ||
            d.strand_of(hb) != d.strand_of(hg))
            continue;
        int ita = d.index_of(ta), itb = d.index_of(tb);
        int iha = d.index_of(ha), itg = d.index_of(tg);
        int ihb = d.index_of(hb), ihg = d.index_of(hg);
        if (std::abs(ita - itb) != 1 || std::abs(itg - iha) != 1 || std::abs(ihg - ihb) != 1)
            continue;
        bool b1 = ita > itb, b2 = itg > iha, b3 = ihg > ihb;
        if (b1 != b2 || b2 != b3) continue;
        R3Match match{al, be, ga, d.sign(al) == d.sign(be)};
        if (match.sign_ok) return match;
        if (!pattern_only) pattern_only = match;
    }
    return pattern_only;
}

bool match_r2_del(const DiagramBuf& d, int a, int b) {
    if (a == b || d.sign(a) != -d.sign(b)) return false;
    EndRef ta{a, false}, tb{b, false}, ha{a, true}, hb{b, true};
    if (d.strand_of(ta) != d.strand_of(tb) || d.strand_of(ha) != d.strand_of(hb)) return false;
    return std::abs(d.index_of(ta) - d.index_of(tb)) == 1 &&
           std::abs(d.index_of(ha) - d.index_of(hb)) == 1;
}

bool c3_site_kind(const DiagramBuf& d, int strand, int idx, int* version) {
    if (idx < 0 || idx + 1 >= d.ends(strand)) return false;
    const EndRef& lo = d.at(strand, idx);
    const EndRef& hi = d.at(strand, idx + 1);
    if (lo.arrow == hi.arrow) return false;
    int heads = (lo.head ? 1 : 0) + (hi.head ? 1 : 0);
    *version = heads == 0 ? 2 : heads == 1 ? 1 : 3;
    return true;
}

void apply_move_buf(DiagramBuf& d, const MoveInstance& m) {
    switch (m.kind) {
        case MoveKind::R1Add: {
            check_gap(d, m.strand, m.rank, "R1-add");
            if (m.sign != 1 && m.sign != -1)
                throw std::invalid_argument("R1-add: sign must be +1 or -1");
            int a = d.new_arrow(m.sign);
            d.insert(m.strand, m.rank, EndRef{a, !m.head_above});
            d.insert(m.strand, m.rank + 1, EndRef{a, m.head_above});
            return;
        }
        case MoveKind::R1Del: {
            check_arrow(d, m.arrow, "R1-del");
            if (!d.is_self(m.arrow)) pattern_error("R1-del needs a self-arrow");
            EndRef t{m.arrow, false}, h{m.arrow, true};
            if (std::abs(d.index_of(t) - d.index_of(h)) != 1)
                pattern_error("R1-del needs adjacent self-arrow ends");
            d.remove_arrow(m.arrow);
            return;
        }
        case MoveKind::R2Add: {
            check_gap(d, m.strand, m.rank, "R2-add");
            if (m.sign != 1 && m.sign != -1)
                throw std::invalid_argument("R2-add: sign must be +1 or -1");
            int lo = d.new_arrow(m.sign);
            int hi = d.new_arrow(-m.sign);
            d.insert(m.strand, m.rank, EndRef{lo, false});
            d.insert(m.strand, m.rank + 1, EndRef{hi, false});
            check_gap(d, m.strand2, m.rank2, "R2-add");
            int lower_head = m.crossed ? hi : lo;
            int upper_head = m.crossed ? lo : hi;
            d.insert(m.strand2, m.rank2, EndRef{lower_head, true});
            d.insert(m.strand2, m.rank2 + 1, EndRef{upper_head, true});
            return;
        }
        case MoveKind::R2Del: {
            check_arrow(d, m.arrow, "R2-del");
            check_arrow(d, m.arrow2, "R2-del");
            if (!detail::match_r2_del(d, m.arrow, m.arrow2))
                pattern_error(
                    "R2-del needs opposite signs, adjacent tails and adjacent heads");
            d.remove_arrow(m.arrow);
            d.remove_arrow(m.arrow2);
            return;
        }
        case MoveKind::R3: {
            check_arrow(d, m.arrow, "R3");
            check_arrow(d, m.arrow2, "R3");
            check_arrow(d, m.arrow3, "R3");
            if (m.arrow == m.arrow2 || m.arrow == m.arrow3 || m.arrow2 == m.arrow3)
                pattern_error("R3 needs three distinct arrows");
            auto match = detail::match_r3(d, m.arrow, m.arrow2, m.arrow3);
            if (!match) pattern_error("R3 local pattern absent");
            if (!match->sign_ok)
                throw std::invalid_argument(
                    "R3-condition-violated: the two arrows with tails on the same strand "
                    "must carry the same sign");
            EndRef ta{match->alpha, false}, tb{match->beta, false};
            EndRef ha{match->alpha, true}, tg{match->gamma, false};
            EndRef hb{match->beta, true}, hg{match->gamma, true};
            auto swap_pair = [&](const EndRef& x, const EndRef& y) {
                int s = d.strand_of(x);
                d.swap_adjacent(s, std::min(d.index_of(x), d.index_of(y)));
            };
            swap_pair(ta, tb);
            swap_pair(ha, tg);
            swap_pair(hb, hg);
            return;
        }
        case MoveKind::TC: {
            if (m.strand < 1 || m.strand > d.strand_count() || m.rank < 1 ||
                m.rank >= d.ends(m.strand))
                pattern_error("TC slot out of range");
            int idx = m.rank - 1;
            if (d.at(m.strand, idx).head || d.at(m.strand, idx + 1).head)
                pattern_error("TC needs two adjacent tails");
            d.swap_adjacent(m.strand, idx);
            return;
        }
        case MoveKind::SAAdd: {
            check_gap(d, m.strand, m.rank, "SA-add");
            if (m.sign != 1 && m.sign != -1)
                throw std::invalid_argument("SA-add: sign must be +1 or -1");
            int a = d.new_arrow(m.sign);
            d.insert(m.strand, m.rank, EndRef{a, false});
            check_gap(d, m.strand, m.rank2, "SA-add");
            d.insert(m.strand, m.rank2, EndRef{a, true});
            return;
        }
        case MoveKind::SADel: {
            check_arrow(d, m.arrow, "SA-del");
            if (!d.is_self(m.arrow))
                throw std::invalid_argument("SA-del on a non-self arrow");
            d.remove_arrow(m.arrow);
            return;
        }
        case MoveKind::C31:
        case MoveKind::C32:
        case MoveKind::C33: {
            int version;
            int idx = m.rank - 1;
            if (!detail::c3_site_kind(d, m.strand, idx, &version))
                pattern_error("C3 needs two adjacent ends of distinct arrows");
            int want = m.kind == MoveKind::C31 ? 1 : m.kind == MoveKind::C32 ? 2 : 3;
            if (version != want)
                pattern_error("C3-" + std::to_string(want) + " end types do not match");
            if (version == 2) {  // tail past tail: plain TC
                d.swap_adjacent(m.strand, idx);
                return;
            }
            EndRef lo = d.at(m.strand, idx), hi = d.at(m.strand, idx + 1);
            if (version == 1) {
                EndRef head_end = lo.head ? lo : hi;
                EndRef tail_end = lo.head ? hi : lo;
                bool dir1 = lo.head;  // head below tail before the swap
                int a = head_end.arrow, b = tail_end.arrow;
                int eps = d.sign(a);
                d.swap_adjacent(m.strand, idx);
                int below_sign = dir1 ? -eps : eps;
                int nb = d.new_arrow(below_sign);
                int na = d.new_arrow(-below_sign);
                // heads sandwich the head of the tail's arrow
                EndRef h_b{b, true};
                int v = d.strand_of(h_b);
                d.insert(v, d.index_of(h_b), EndRef{nb, true});
                d.insert(v, d.index_of(h_b) + 1, EndRef{na, true});
                // tails directly below the tail of the head's arrow
                EndRef t_a{a, false};
                int u = d.strand_of(t_a);
                int ti = d.index_of(t_a);
                d.insert(u, ti, EndRef{nb, false});
                d.insert(u, ti + 1, EndRef{na, false});
                return;
            }
            // version 3: two heads
            int beta = lo.arrow, gamma = hi.arrow;
            int b = d.sign(beta);
            d.swap_adjacent(m.strand, idx);
            int e1 = d.new_arrow(b);
            int e2 = d.new_arrow(-b);
            EndRef t_g{gamma, false};
            int v = d.strand_of(t_g);
            d.insert(v, d.index_of(t_g), EndRef{e2, true});
            d.insert(v, d.index_of(t_g) + 1, EndRef{e1, true});
            EndRef t_b{beta, false};
            int u = d.strand_of(t_b);
            int ti = d.index_of(t_b);
            d.insert(u, ti, EndRef{e1, false});
            d.insert(u, ti + 1, EndRef{e2, false});
            return;
        }
        case MoveKind::C2: {
            int idx = m.rank - 1;
            if (m.strand < 1 || m.strand > d.strand_count() || idx < 0 ||
                idx + 1 >= d.ends(m.strand))
                pattern_error("C2 slot out of range");
            EndRef lo = d.at(m.strand, idx), hi = d.at(m.strand, idx + 1);
            if (lo.arrow == hi.arrow) pattern_error("C2 needs ends of distinct arrows");
            EndRef other_lo{lo.arrow, !lo.head}, other_hi{hi.arrow, !hi.head};
            int w1 = d.strand_of(other_lo), w2 = d.strand_of(other_hi);
            if (w1 != w2 || w1 == m.strand)
                pattern_error("C2 needs the other two ends on one common strand");
            d.swap_adjacent(m.strand, idx);
            return;
        }
    }
    throw std::logic_error("unhandled move kind");
}

}  // namespace detail

GaussDiagram apply_move(const GaussDiagram& g, const MoveInstance& m) {
    require_valid(g);
    DiagramBuf d(g);
    detail::apply_move_buf(d, m);
    return d.to_diagram();
}

namespace {

std::vector<MoveInstance> expand_c3(const GaussDiagram& g, const MoveInstance& m) {
    DiagramBuf d(g);
    int idx = m.rank - 1;
    int version;
    if (!detail::c3_site_kind(d, m.strand, idx, &version))
        pattern_error("C3 needs two adjacent ends of distinct arrows");
    if (version == 2) return {mv_tc(m.strand, m.rank)};

    std::vector<MoveInstance> out;
    GaussDiagram cur = g;
    EndRef lo = d.at(m.strand, idx), hi = d.at(m.strand, idx + 1);
    if (version == 1) {
        EndRef head_end = lo.head ? lo : hi;
        EndRef tail_end = lo.head ? hi : lo;
        bool dir1 = lo.head;
        int a = head_end.arrow, b = tail_end.arrow;
        int eps = d.sign(a);
        EndRef t_a{a, false}, h_b{b, true};
        int u = d.strand_of(t_a), v = d.strand_of(h_b);
        int ti = d.index_of(t_a);
        // Helper pair: for dir1 tails go directly below t_a and heads
        // directly below h_b; mirrored for dir2.
        int tail_gap = dir1 ? ti : ti + 1;
        int hb_idx = d.index_of(h_b);
        if (v == u && hb_idx >= tail_gap) hb_idx += 2;
        int head_gap = dir1 ? hb_idx : hb_idx + 1;
        int lower_sign = dir1 ? -eps : eps;
        MoveInstance r2 = mv_r2_add(u, tail_gap, v, head_gap, lower_sign, false);
        cur = apply_move(cur, r2);
        out.push_back(r2);
        int n_lower = g.arrow_count(), n_upper = g.arrow_count() + 1;
        int helper = dir1 ? n_upper : n_lower;  // the sign-eps arrow plays beta
        MoveInstance r3 = mv_r3(a, helper, b);
        cur = apply_move(cur, r3);
        out.push_back(r3);
        // One TC settles t_a back above both helper tails.
        DiagramBuf after(cur);
        int pos = after.index_of(EndRef{a, false});
        MoveInstance tc = mv_tc(u, pos + 1);
        cur = apply_move(cur, tc);
        out.push_back(tc);
        return out;
    }
    // version 3: adjacent heads
    int beta = lo.arrow, gamma = hi.arrow;
    int bsign = d.sign(beta);
    EndRef t_b{beta, false}, t_g{gamma, false};
    int u = d.strand_of(t_b), v = d.strand_of(t_g);
    int tb_idx = d.index_of(t_b);
    int tail_gap = tb_idx + 1;  // helper tail directly above t_beta
    int tg_idx = d.index_of(t_g);
    if (v == u && tg_idx >= tail_gap) tg_idx += 2;
    int head_gap = tg_idx;  // heads [e2, e1] directly below t_gamma
    // lower tail is e1 (sign b) whose head is the upper one: crossed pair
    MoveInstance r2 = mv_r2_add(u, tail_gap, v, head_gap, bsign, true);
    cur = apply_move(cur, r2);
    out.push_back(r2);
    int e1 = g.arrow_count();  // lower tail, sign b
    MoveInstance r3 = mv_r3(e1, beta, gamma);
    cur = apply_move(cur, r3);
    out.push_back(r3);
    DiagramBuf after(cur);
    int pos = after.index_of(EndRef{beta, false});
    MoveInstance tc = mv_tc(u, pos + 1);
    cur = apply_move(cur, tc);
    out.push_back(tc);
    return out;
}

std::vector<MoveInstance> expand_c2(const GaussDiagram& g, const MoveInstance& m) {
    DiagramBuf d(g);
    int idx = m.rank - 1;
    if (m.strand < 1 || m.strand > d.strand_count() || idx < 0 || idx + 1 >= d.ends(m.strand))
        pattern_error("C2 slot out of range");
    EndRef lo = d.at(m.strand, idx), hi = d.at(m.strand, idx + 1);
    if (!lo.head && !hi.head) return {mv_tc(m.strand, m.rank)};
    GaussDiagram direct = apply_move(g, m);
    EndRef other_lo{lo.arrow, !lo.head}, other_hi{hi.arrow, !hi.head};
    int w = d.strand_of(other_lo);
    int helper_id = g.arrow_count();
    // Helper self-arrow on the far strand: enumerate sign, orientation and
    // placement next to the two far ends until the R3 goes through and the
    // script reproduces the direct rewrite.
    for (int sign : {1, -1}) {
        for (int tail_near_lo : {1, 0}) {
            for (int tail_side : {0, 1}) {
                for (int head_side : {0, 1}) {
                    EndRef tail_anchor = tail_near_lo ? other_lo : other_hi;
                    EndRef head_anchor = tail_near_lo ? other_hi : other_lo;
                    int tg = d.index_of(tail_anchor) + tail_side;
                    int hg = d.index_of(head_anchor) + head_side;
                    if (hg >= tg) hg += 1;  // head gap measured after tail insert
                    std::vector<MoveInstance> script = {
                        mv_sa_add(w, tg, hg, sign),
                        mv_r3(lo.arrow, hi.arrow, helper_id),
                        mv_sa_del(helper_id),
                    };
                    GaussDiagram cur = g;
                    bool ok = true;
                    for (const MoveInstance& step : script) {
                        try {
                            cur = apply_move(cur, step);
                        } catch (const std::invalid_argument&) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok && cur == direct) return script;
                }
            }
        }
    }
    throw internal_error("no valid C2 helper configuration found");
}

}  // namespace

std::vector<MoveInstance> expand_macro(const GaussDiagram& g, const MoveInstance& m) {
    require_valid(g);
    switch (m.kind) {
        case MoveKind::C31:
        case MoveKind::C32:
        case MoveKind::C33:
            return expand_c3(g, m);
        case MoveKind::C2:
            return expand_c2(g, m);
        default:
            throw std::invalid_argument("expand_macro only applies to C3/C2 moves");
    }
}

std::vector<MoveInstance> enumerate_rewrite_moves(const GaussDiagram& g) {
    require_valid(g);
    DiagramBuf d(g);
    std::vector<MoveInstance> out;
    const int m = g.arrow_count();
    for (int a = 0; a < m; ++a) {
        if (d.is_self(a)) {
            out.push_back(mv_sa_del(a));
            if (std::abs(d.index_of(EndRef{a, false}) - d.index_of(EndRef{a, true})) == 1)
                out.push_back(mv_r1_del(a));
        }
        for (int b = a + 1; b < m; ++b) {
            if (detail::match_r2_del(d, a, b)) out.push_back(mv_r2_del(a, b));
            for (int c = b + 1; c < m; ++c) {
                auto match = detail::match_r3(d, a, b, c);
                if (match && match->sign_ok) out.push_back(mv_r3(a, b, c));
            }
        }
    }
    for (int s = 1; s <= g.strand_count(); ++s) {
        for (int i = 0; i + 1 < d.ends(s); ++i) {
            const EndRef& lo = d.at(s, i);
            const EndRef& hi = d.at(s, i + 1);
            if (!lo.head && !hi.head) out.push_back(mv_tc(s, i + 1));
            int version;
            if (detail::c3_site_kind(d, s, i, &version)) out.push_back(mv_c3(version, s, i + 1));
            if (lo.arrow != hi.arrow) {
                EndRef olo{lo.arrow, !lo.head}, ohi{hi.arrow, !hi.head};
                if (d.strand_of(olo) == d.strand_of(ohi) && d.strand_of(olo) != s)
                    out.push_back(mv_c2(s, i + 1));
            }
        }
    }
    return out;
}

std::vector<MoveInstance> sample_insert_moves(const GaussDiagram& g, std::uint64_t seed,
                                              int per_kind) {
    require_valid(g);
    Rng rng(seed);
    const int n = g.strand_count();
    auto gap = [&](int strand) { return static_cast<int>(rng.below(g.ends_on(strand) + 1)); };
    std::vector<MoveInstance> out;
    for (int i = 0; i < per_kind; ++i) {
        int s = 1 + static_cast<int>(rng.below(n));
        out.push_back(mv_r1_add(s, gap(s), rng.pick_sign(), rng.below(2) == 0));
    }
    for (int i = 0; i < per_kind; ++i) {
        int s = 1 + static_cast<int>(rng.below(n));
        int tg = gap(s);
        int hg = static_cast<int>(rng.below(g.ends_on(s) + 2));
        out.push_back(mv_sa_add(s, tg, hg, rng.pick_sign()));
    }
    for (int i = 0; i < per_kind; ++i) {
        int ts = 1 + static_cast<int>(rng.below(n));
        int hs = 1 + static_cast<int>(rng.below(n));
        int tg = gap(ts);
        int hg = static_cast<int>(rng.below(g.ends_on(hs) + (hs == ts ? 3 : 1)));
        out.push_back(mv_r2_add(ts, tg, hs, hg, rng.pick_sign(), rng.below(2) == 0));
    }
    return out;
}

}  // namespace wgd
