#include "wgd/gauss.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace wgd {

std::uint64_t Rng::next() {
    // splitmix64
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
    // Rejection sampling keeps the draw unbiased and platform-stable.
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return v % bound;
}

int GaussDiagram::ends_on(int strand) const {
    int c = 0;
    for (const Arrow& a : arrows_) {
        if (a.tail.strand == strand) ++c;
        if (a.head.strand == strand) ++c;
    }
    return c;
}

bool operator==(const GaussDiagram& a, const GaussDiagram& b) {
    if (a.n_ != b.n_) return false;
    auto key = [](const GaussDiagram& g) {
        std::vector<std::tuple<int, int, int, int, int>> k;
        for (const Arrow& x : g.arrows())
            k.emplace_back(x.tail.strand, x.tail.rank, x.head.strand, x.head.rank, x.sign);
        std::sort(k.begin(), k.end());
        return k;
    };
    return key(a) == key(b);
}

std::vector<std::string> validate(const GaussDiagram& g) {
    std::vector<std::string> errs;
    if (g.strand_count() < 1) errs.push_back("strand count must be positive");
    std::map<int, std::vector<int>> ranks;  // strand -> used ranks
    int idx = 0;
    for (const Arrow& a : g.arrows()) {
        ++idx;
        if (a.sign != 1 && a.sign != -1)
            errs.push_back("arrow " + std::to_string(idx) + ": sign must be +1 or -1");
        for (const Pos* p : {&a.tail, &a.head}) {
            if (p->strand < 1 || p->strand > g.strand_count())
                errs.push_back("arrow " + std::to_string(idx) + ": strand " +
                               std::to_string(p->strand) + " out of range");
            else
                ranks[p->strand].push_back(p->rank);
        }
    }
    for (auto& [s, rs] : ranks) {
        std::sort(rs.begin(), rs.end());
        for (size_t i = 0; i < rs.size(); ++i) {
            if (rs[i] != static_cast<int>(i) + 1) {
                errs.push_back("strand " + std::to_string(s) +
                               ": ranks are not a contiguous 1..m block of distinct slots");
                break;
            }
        }
    }
    return errs;
}

void require_valid(const GaussDiagram& g) {
    auto errs = validate(g);
    if (errs.empty()) return;
    std::string msg = "invalid diagram:";
    for (const auto& e : errs) msg += "\n  " + e;
    throw std::invalid_argument(msg);
}

GaussDiagram stack(const GaussDiagram& bottom, const GaussDiagram& top) {
    if (bottom.strand_count() != top.strand_count())
        throw std::invalid_argument("rank mismatch");
    require_valid(bottom);
    require_valid(top);
    std::vector<int> offset(bottom.strand_count() + 1, 0);
    for (int s = 1; s <= bottom.strand_count(); ++s) offset[s] = bottom.ends_on(s);
    std::vector<Arrow> arrows = bottom.arrows();
    for (Arrow a : top.arrows()) {
        a.tail.rank += offset[a.tail.strand];
        a.head.rank += offset[a.head.strand];
        arrows.push_back(a);
    }
    return GaussDiagram(bottom.strand_count(), std::move(arrows));
}

GaussDiagram delete_strand(const GaussDiagram& g, int strand) {
    require_valid(g);
    if (strand < 1 || strand > g.strand_count())
        throw std::invalid_argument("strand index out of range");
    // Ends on surviving strands keep their relative order; ranks re-pack.
    std::vector<Arrow> kept;
    for (const Arrow& a : g.arrows())
        if (a.tail.strand != strand && a.head.strand != strand) kept.push_back(a);
    std::map<int, std::vector<int>> used;
    for (const Arrow& a : kept) {
        used[a.tail.strand].push_back(a.tail.rank);
        used[a.head.strand].push_back(a.head.rank);
    }
    for (auto& [s, rs] : used) std::sort(rs.begin(), rs.end());
    auto repack = [&](Pos p) {
        const auto& rs = used[p.strand];
        int new_rank =
            static_cast<int>(std::lower_bound(rs.begin(), rs.end(), p.rank) - rs.begin()) + 1;
        int new_strand = p.strand > strand ? p.strand - 1 : p.strand;
        return Pos{new_strand, new_rank};
    };
    for (Arrow& a : kept) {
        a.tail = repack(a.tail);
        a.head = repack(a.head);
    }
    return GaussDiagram(g.strand_count() - 1, std::move(kept));
}

namespace {

// Arrow precedence DAG: a < b whenever some strand carries an end of a
// below an end of b. Self-arrows force a < a and kill horizontality.
bool topo_order(const GaussDiagram& g, std::vector<int>* out) {
    const int m = g.arrow_count();
    std::vector<std::vector<int>> above(m);
    std::vector<int> indeg(m, 0);
    std::map<int, std::vector<std::pair<int, int>>> per_strand;  // strand -> (rank, arrow)
    for (int i = 0; i < m; ++i) {
        const Arrow& a = g.arrows()[i];
        if (a.tail.strand == a.head.strand) return false;
        per_strand[a.tail.strand].emplace_back(a.tail.rank, i);
        per_strand[a.head.strand].emplace_back(a.head.rank, i);
    }
    std::vector<std::vector<bool>> seen(m, std::vector<bool>(m, false));
    for (auto& [s, ends] : per_strand) {
        std::sort(ends.begin(), ends.end());
        for (size_t i = 0; i + 1 < ends.size(); ++i) {
            int lo = ends[i].second, hi = ends[i + 1].second;
            if (lo == hi) return false;
            if (!seen[lo][hi]) {
                seen[lo][hi] = true;
                above[lo].push_back(hi);
                ++indeg[hi];
            }
        }
    }
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int i = 0; i < m; ++i)
        if (indeg[i] == 0) ready.push(i);
    std::vector<int> order;
    while (!ready.empty()) {
        int i = ready.top();
        ready.pop();
        order.push_back(i);
        for (int j : above[i])
            if (--indeg[j] == 0) ready.push(j);
    }
    if (static_cast<int>(order.size()) != m) return false;
    if (out) *out = std::move(order);
    return true;
}

}  // namespace

bool is_horizontal(const GaussDiagram& g) {
    require_valid(g);
    return topo_order(g, nullptr);
}

std::vector<int> horizontal_order(const GaussDiagram& g) {
    require_valid(g);
    std::vector<int> order;
    if (!topo_order(g, &order)) throw std::invalid_argument("diagram is not horizontal");
    return order;
}

bool is_ascending(const GaussDiagram& g) {
    require_valid(g);
    std::vector<int> min_head(g.strand_count() + 1, INT32_MAX);
    std::vector<int> max_tail(g.strand_count() + 1, 0);
    for (const Arrow& a : g.arrows()) {
        min_head[a.head.strand] = std::min(min_head[a.head.strand], a.head.rank);
        max_tail[a.tail.strand] = std::max(max_tail[a.tail.strand], a.tail.rank);
    }
    for (int s = 1; s <= g.strand_count(); ++s)
        if (max_tail[s] > 0 && min_head[s] != INT32_MAX && max_tail[s] > min_head[s]) return false;
    return true;
}

GaussDiagram random_diagram(int n, int arrow_count, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("strand count must be positive");
    if (arrow_count < 0) throw std::invalid_argument("arrow count must be non-negative");
    Rng rng(seed);
    std::vector<Arrow> arrows(arrow_count);
    std::vector<std::vector<std::pair<int, bool>>> strands(n + 1);  // (arrow, is_head)
    for (int i = 0; i < arrow_count; ++i) {
        arrows[i].sign = rng.pick_sign();
        int ts = 1 + static_cast<int>(rng.below(n));
        int hs = 1 + static_cast<int>(rng.below(n));
        auto& tv = strands[ts];
        tv.insert(tv.begin() + rng.below(tv.size() + 1), {i, false});
        auto& hv = strands[hs];
        hv.insert(hv.begin() + rng.below(hv.size() + 1), {i, true});
    }
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

GaussDiagram parse_diagram(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<Arrow> arrows;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "gd") {
            if (n != -1) throw std::invalid_argument("line " + std::to_string(lineno) +
                                                     ": duplicate gd header");
            if (!(ls >> n) || n < 1)
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": gd header needs a positive strand count");
        } else if (kw == "arrow") {
            if (n == -1)
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": arrow before gd header");
            std::string sign, tail, head;
            if (!(ls >> sign >> tail >> head) || (sign != "+" && sign != "-"))
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": expected `arrow <+|-> s.r s.r`");
            auto pos = [&](const std::string& tok) {
                auto dot = tok.find('.');
                if (dot == std::string::npos)
                    throw std::invalid_argument("line " + std::to_string(lineno) +
                                                ": bad position `" + tok + "`");
                try {
                    size_t p1 = 0, p2 = 0;
                    int s = std::stoi(tok.substr(0, dot), &p1);
                    int r = std::stoi(tok.substr(dot + 1), &p2);
                    if (p1 != dot || dot + 1 + p2 != tok.size()) throw std::invalid_argument("");
                    return Pos{s, r};
                } catch (const std::exception&) {
                    throw std::invalid_argument("line " + std::to_string(lineno) +
                                                ": bad position `" + tok + "`");
                }
            };
            arrows.push_back(Arrow{sign == "+" ? 1 : -1, pos(tail), pos(head)});
            std::string extra;
            if (ls >> extra)
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": trailing tokens");
        } else {
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": unknown construct `" + kw + "`");
        }
    }
    if (n == -1) throw std::invalid_argument("missing gd header");
    GaussDiagram g(n, std::move(arrows));
    require_valid(g);
    return g;
}

std::string emit_diagram(const GaussDiagram& g) {
    std::ostringstream out;
    out << "gd " << g.strand_count() << "\n";
    for (const Arrow& a : g.arrows())
        out << "arrow " << (a.sign > 0 ? '+' : '-') << ' ' << a.tail.strand << '.' << a.tail.rank
            << ' ' << a.head.strand << '.' << a.head.rank << "\n";
    return out.str();
}

}  // namespace wgd
