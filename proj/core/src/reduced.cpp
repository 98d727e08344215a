#include "wgd/reduced.hpp"

#include <cstdlib>
#include <sstream>

namespace wgd {

namespace {

bool has_repeat(const Monomial& m) {
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = i + 1; j < m.size(); ++j)
            if (m[i] == m[j]) return true;
    return false;
}

}  // namespace

MultilinearPoly::MultilinearPoly(int rank, std::map<Monomial, Int> coeffs)
    : rank_(rank), c_(std::move(coeffs)) {
    for (const auto& [m, v] : c_) {
        if (static_cast<int>(m.size()) > rank_ || has_repeat(m))
            throw internal_error("multilinear monomial with repeated index");
        (void)v;
    }
}

Int MultilinearPoly::coeff(const Monomial& m) const {
    auto it = c_.find(m);
    return it == c_.end() ? Int(0) : it->second;
}

void MultilinearPoly::add_term(const Monomial& m, const Int& v) {
    if (static_cast<int>(m.size()) > rank_ || v.is_zero()) return;
    if (has_repeat(m)) throw internal_error("multilinear monomial with repeated index");
    auto [it, inserted] = c_.try_emplace(m, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) c_.erase(it);
    }
}

bool MultilinearPoly::is_one() const {
    return c_.size() == 1 && c_.begin()->first.empty() && c_.begin()->second == Int(1);
}

std::string MultilinearPoly::str() const {
    TruncatedSeries s(rank_);
    for (const auto& [m, v] : c_) s.add_term(m, v);
    return s.str();
}

MultilinearPoly reduced_magnus(const Word& w) {
    const int n = w.rank();
    // Fold letter series left to right, dropping repeated-index monomials
    // as they appear. x_i^-1 contributes sum (-1)^k X_i^k, but X_i X_i
    // already repeats, so only 1 - X_i survives the quotient.
    std::map<Monomial, Int> acc{{Monomial{}, Int(1)}};
    for (int l : w.letters()) {
        int i = std::abs(l);
        int sign = l > 0 ? 1 : -1;
        std::map<Monomial, Int> next = acc;
        for (const auto& [m, v] : acc) {
            if (static_cast<int>(m.size()) >= n) continue;
            bool repeats = false;
            for (int mi : m)
                if (mi == i) repeats = true;
            if (repeats) continue;
            Monomial ext = m;
            ext.push_back(i);
            Int add = v * Int(sign);
            auto [it, inserted] = next.try_emplace(ext, add);
            if (!inserted) {
                it->second += add;
                if (it->second.is_zero()) next.erase(it);
            }
        }
        acc = std::move(next);
    }
    return MultilinearPoly(n, std::move(acc));
}

bool rf_equal(const Word& a, const Word& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
    return reduced_magnus(multiply(a, invert(b))).is_one();
}

Word rho(const Word& g, int i) {
    if (i < 1 || i > g.rank()) throw std::invalid_argument("generator index out of range");
    std::vector<int> ls;
    for (int l : g.letters())
        if (std::abs(l) != i) ls.push_back(l);
    return Word::from_letters(g.rank(), std::move(ls));
}

ConjAut ConjAut::identity(int rank) {
    return ConjAut(rank, std::vector<Word>(rank, Word(rank)));
}

ConjAut::ConjAut(int rank, std::vector<Word> conjugators) : rank_(rank) {
    if (static_cast<int>(conjugators.size()) != rank)
        throw std::invalid_argument("need one conjugator per generator");
    conj_.reserve(rank);
    for (int i = 1; i <= rank; ++i) {
        const Word& g = conjugators[i - 1];
        if (g.rank() != rank) throw std::invalid_argument("rank mismatch");
        conj_.push_back(rho(g, i));
    }
}

Word apply(const ConjAut& f, const Word& w) {
    if (f.rank() != w.rank()) throw std::invalid_argument("rank mismatch");
    Word r(w.rank());
    for (int l : w.letters()) {
        int i = std::abs(l);
        Word img = conjugate(Word::from_letters(w.rank(), {i}), f.conjugator(i));
        r = multiply(r, l > 0 ? img : invert(img));
    }
    return r;
}

ConjAut compose(const ConjAut& f, const ConjAut& g) {
    if (f.rank() != g.rank()) throw std::invalid_argument("rank mismatch");
    std::vector<Word> conj;
    conj.reserve(f.rank());
    // (f o g)(x_i) = f(x_i^{k_i}) = x_i^{h_i f(k_i)}
    for (int i = 1; i <= f.rank(); ++i)
        conj.push_back(multiply(f.conjugator(i), apply(f, g.conjugator(i))));
    return ConjAut(f.rank(), std::move(conj));
}

bool aut_equal(const ConjAut& f, const ConjAut& g) {
    if (f.rank() != g.rank()) throw std::invalid_argument("rank mismatch");
    for (int i = 1; i <= f.rank(); ++i)
        if (!rf_equal(f.conjugator(i), g.conjugator(i))) return false;
    return true;
}

ConjAut invert_aut(const ConjAut& f) {
    const int n = f.rank();
    // Successive approximation h_i <- rho_i((candidate(g_i))^-1); nilpotency
    // of RF_n makes this settle within n rounds.
    std::vector<Word> h;
    h.reserve(n);
    for (int i = 1; i <= n; ++i) h.push_back(invert(f.conjugator(i)));
    ConjAut cand(n, h);
    for (int round = 0; round <= n + 1; ++round) {
        if (aut_equal(compose(f, cand), ConjAut::identity(n)) &&
            aut_equal(compose(cand, f), ConjAut::identity(n)))
            return cand;
        if (round == n + 1) break;
        std::vector<Word> next;
        next.reserve(n);
        for (int i = 1; i <= n; ++i) next.push_back(invert(apply(cand, f.conjugator(i))));
        cand = ConjAut(n, std::move(next));
    }
    throw internal_error("invert_aut failed to converge");
}

std::string conj_aut_json(const ConjAut& f) {
    std::ostringstream out;
    out << "{\"n\": " << f.rank() << ", \"conjugators\": [";
    for (int i = 1; i <= f.rank(); ++i) {
        if (i > 1) out << ", ";
        out << '"' << word_str(f.conjugator(i)) << '"';
    }
    out << "]}";
    return out.str();
}

}  // namespace wgd
