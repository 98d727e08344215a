#include "wgd/milnor.hpp"

#include <stdexcept>

#include "wgd/series.hpp"

namespace wgd {

std::vector<Longitude> longitudes(const GaussDiagram& g, int depth) {
    if (depth < 1) throw std::invalid_argument("longitude depth must be >= 1");
    require_valid(g);
    const int n = g.strand_count();
    IntervalTable t = tail_intervals(g);
    ColorMap meridians = meridian_substitution(g, depth);
    std::vector<Longitude> out;
    out.reserve(n);
    for (int j = 1; j <= n; ++j) {
        Word lam(n);
        for (const HeadSite& h : t.heads) {
            if (h.strand != j) continue;  // heads are (strand, slot)-ordered
            Word factor = meridians.color(h.zero);
            if (h.sign < 0) factor = invert(factor);
            lam = multiply(lam, factor);
        }
        // Zero framing: compensating twists sit at the bottom of the
        // strand, where the arc meridian is the bottom generator itself.
        int e = exponent_sum(lam, j);
        lam = multiply(power(Word::from_letters(n, {j}), -e), lam);
        out.push_back(Longitude{j, depth, std::move(lam), true});
    }
    return out;
}

namespace {

void check_index(const GaussDiagram& g, const MilnorIndex& index) {
    if (index.size() < 2)
        throw std::invalid_argument("Milnor index needs length >= 2");
    for (int i : index)
        if (i < 1 || i > g.strand_count())
            throw std::invalid_argument("Milnor index entry out of range");
}

}  // namespace

Int milnor_mu_at_depth(const GaussDiagram& g, const MilnorIndex& index, int depth) {
    check_index(g, index);
    const int m = static_cast<int>(index.size()) - 1;
    if (depth <= m) throw std::invalid_argument("truncation depth must exceed index length - 1");
    int j = index.back();
    Longitude lam = longitudes(g, depth)[j - 1];
    Monomial mono(index.begin(), index.end() - 1);
    return magnus(lam.word, m).coeff(mono);
}

Int milnor_mu(const GaussDiagram& g, const MilnorIndex& index) {
    return milnor_mu_at_depth(g, index, static_cast<int>(index.size()));
}

UniversalMilnor universal_milnor_sweeps(const GaussDiagram& g, int k, int sweeps) {
    if (k < 1) throw std::invalid_argument("invariant degree must be >= 1");
    require_valid(g);
    const int n = g.strand_count();
    const int cap = k;
    IntervalTable t = tail_intervals(g);

    // Meridian series per interval; the series mirror of the word
    // substitution, so coefficients of degree <= k agree with it exactly.
    std::map<TailInterval, TruncatedSeries> m;
    for (const TailInterval& iv : t.all) {
        TruncatedSeries s = TruncatedSeries::one(cap);
        s.add_term({iv.strand}, Int(1));
        m.emplace(iv, std::move(s));
    }
    for (int pass = 0; pass < sweeps; ++pass) {
        for (const HeadSite& h : t.heads) {
            const TruncatedSeries& zero = m.at(h.zero);
            TruncatedSeries f = h.sign > 0 ? zero : zero.inverse();
            m.insert_or_assign(h.above, f.inverse() * m.at(h.below) * f);
        }
    }

    UniversalMilnor out;
    for (int j = 1; j <= n; ++j) {
        TruncatedSeries lam = TruncatedSeries::one(cap);
        for (const HeadSite& h : t.heads) {
            if (h.strand != j) continue;
            const TruncatedSeries& zero = m.at(h.zero);
            lam = lam * (h.sign > 0 ? zero : zero.inverse());
        }
        Int e1 = lam.coeff({j});
        long long e = e1.as_int64();
        lam = magnus(power(Word::from_letters(n, {j}), static_cast<int>(-e)), cap) * lam;
        for (const auto& [mono, v] : lam.terms())
            if (static_cast<int>(mono.size()) == k) out[{j, mono}] = v;
    }
    return out;
}

UniversalMilnor universal_milnor(const GaussDiagram& g, int k) {
    return universal_milnor_sweeps(g, k, k + 1);
}

std::optional<int> milnor_filtration_order(const GaussDiagram& g, int k_max) {
    if (k_max < 2) throw std::invalid_argument("k_max must be >= 2");
    for (int len = 2; len < k_max; ++len)
        if (!universal_milnor(g, len - 1).empty()) return len;
    return std::nullopt;
}

}  // namespace wgd
