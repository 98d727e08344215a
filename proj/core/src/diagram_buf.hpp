#pragma once

// Internal mutable view of a Gauss diagram with stable arrow ids. Used by
// the rewrite engine; arrow ids are positional in the public GaussDiagram
// and only stay stable inside a single rewrite script.

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

#include "wgd/gauss.hpp"

namespace wgd::detail {

struct EndRef {
    int arrow = -1;
    bool head = false;
    friend bool operator==(const EndRef&, const EndRef&) = default;
};

class DiagramBuf {
public:
    explicit DiagramBuf(const GaussDiagram& g) : n_(g.strand_count()), strand_(g.strand_count() + 1) {
        signs_.reserve(g.arrows().size());
        end_strand_.reserve(g.arrows().size());
        std::vector<std::vector<std::pair<int, EndRef>>> tmp(n_ + 1);
        int id = 0;
        for (const Arrow& a : g.arrows()) {
            signs_.push_back(a.sign);
            alive_.push_back(true);
            end_strand_.push_back({a.tail.strand, a.head.strand});
            tmp[a.tail.strand].push_back({a.tail.rank, EndRef{id, false}});
            tmp[a.head.strand].push_back({a.head.rank, EndRef{id, true}});
            ++id;
        }
        for (int s = 1; s <= n_; ++s) {
            std::sort(tmp[s].begin(), tmp[s].end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            for (auto& [r, e] : tmp[s]) strand_[s].push_back(e);
        }
    }

    int strand_count() const { return n_; }
    int ends(int s) const { return static_cast<int>(strand_[s].size()); }
    const EndRef& at(int s, int idx) const { return strand_[s][idx]; }
    int sign(int arrow) const { return signs_[arrow]; }
    bool alive(int arrow) const { return arrow >= 0 && arrow < (int)signs_.size() && alive_[arrow]; }
    int arrow_limit() const { return static_cast<int>(signs_.size()); }

    int strand_of(const EndRef& e) const { return end_strand_[e.arrow][e.head ? 1 : 0]; }

    bool is_self(int arrow) const { return end_strand_[arrow][0] == end_strand_[arrow][1]; }

    // 0-based index of the end on its strand.
    int index_of(const EndRef& e) const {
        const auto& v = strand_[strand_of(e)];
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] == e) return static_cast<int>(i);
        throw std::logic_error("end not found on its strand");
    }

    void insert(int s, int idx, const EndRef& e) {
        auto& v = strand_[s];
        v.insert(v.begin() + idx, e);
        end_strand_[e.arrow][e.head ? 1 : 0] = s;
    }

    void erase(const EndRef& e) {
        int s = strand_of(e);
        auto& v = strand_[s];
        v.erase(v.begin() + index_of(e));
    }

    void swap_adjacent(int s, int idx) { std::swap(strand_[s][idx], strand_[s][idx + 1]); }

    int new_arrow(int sign) {
        signs_.push_back(sign);
        alive_.push_back(true);
        end_strand_.push_back({0, 0});
        return static_cast<int>(signs_.size()) - 1;
    }

    void remove_arrow(int arrow) {
        erase(EndRef{arrow, false});
        erase(EndRef{arrow, true});
        alive_[arrow] = false;
    }

    // Gap index of the lowest slot of the tail interval containing `idx`
    // on strand s (just above the nearest head strictly below).
    int interval_bottom(int s, int idx) const {
        int b = idx;
        while (b > 0 && !strand_[s][b - 1].head) --b;
        return b;
    }

    GaussDiagram to_diagram() const {
        std::vector<int> live_index(signs_.size(), -1);
        std::vector<Arrow> arrows;
        for (size_t i = 0; i < signs_.size(); ++i)
            if (alive_[i]) {
                live_index[i] = static_cast<int>(arrows.size());
                arrows.push_back(Arrow{signs_[i], {}, {}});
            }
        for (int s = 1; s <= n_; ++s)
            for (size_t i = 0; i < strand_[s].size(); ++i) {
                const EndRef& e = strand_[s][i];
                Pos p{s, static_cast<int>(i) + 1};
                Arrow& a = arrows[live_index[e.arrow]];
                if (e.head)
                    a.head = p;
                else
                    a.tail = p;
            }
        return GaussDiagram(n_, std::move(arrows));
    }

private:
    int n_;
    std::vector<int> signs_;
    std::vector<bool> alive_;
    std::vector<std::array<int, 2>> end_strand_;  // [tail strand, head strand]
    std::vector<std::vector<EndRef>> strand_;     // strand_[s][idx], bottom to top
};

}  // namespace wgd::detail
