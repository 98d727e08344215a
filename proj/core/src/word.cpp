#include "wgd/word.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace wgd {

Word Word::from_letters(int rank, std::vector<int> letters) {
    if (rank < 0) throw std::invalid_argument("word rank must be non-negative");
    Word w(rank);
    for (int l : letters) {
        if (l == 0 || std::abs(l) > rank)
            throw std::invalid_argument("generator index out of range: " + std::to_string(l));
        if (!w.letters_.empty() && w.letters_.back() == -l)
            w.letters_.pop_back();
        else
            w.letters_.push_back(l);
    }
    return w;
}

Word reduce(int rank, const std::vector<int>& raw) { return Word::from_letters(rank, raw); }

static void check_rank(const Word& a, const Word& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
}

Word multiply(const Word& a, const Word& b) {
    check_rank(a, b);
    std::vector<int> ls = a.letters();
    ls.insert(ls.end(), b.letters().begin(), b.letters().end());
    return Word::from_letters(a.rank(), std::move(ls));
}

Word invert(const Word& a) {
    std::vector<int> ls(a.letters().rbegin(), a.letters().rend());
    for (int& l : ls) l = -l;
    return Word::from_letters(a.rank(), std::move(ls));
}

Word conjugate(const Word& x, const Word& g) {
    check_rank(x, g);
    return multiply(multiply(invert(g), x), g);
}

Word commutator(const Word& a, const Word& b) {
    check_rank(a, b);
    return multiply(multiply(invert(a), invert(b)), multiply(a, b));
}

Word power(const Word& a, int e) {
    Word base = e < 0 ? invert(a) : a;
    Word r(a.rank());
    for (int i = 0, k = std::abs(e); i < k; ++i) r = multiply(r, base);
    return r;
}

int exponent_sum(const Word& w, int generator) {
    if (generator < 1 || generator > w.rank())
        throw std::invalid_argument("generator index out of range");
    int s = 0;
    for (int l : w.letters()) {
        if (l == generator) ++s;
        if (l == -generator) --s;
    }
    return s;
}

Word parse_word(int rank, const std::string& text) {
    std::istringstream in(text);
    std::vector<int> ls;
    std::string tok;
    while (in >> tok) {
        bool inv = false;
        if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
            inv = true;
            tok = tok.substr(0, tok.size() - 3);
        }
        if (tok.size() < 2 || tok[0] != 'x')
            throw std::invalid_argument("bad word token: " + tok);
        size_t pos = 0;
        int idx;
        try {
            idx = std::stoi(tok.substr(1), &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad word token: " + tok);
        }
        if (pos + 1 != tok.size() || idx < 1)
            throw std::invalid_argument("bad word token: " + tok);
        ls.push_back(inv ? -idx : idx);
    }
    return Word::from_letters(rank, std::move(ls));
}

std::string word_str(const Word& w) {
    std::string s;
    for (int l : w.letters()) {
        if (!s.empty()) s += ' ';
        s += 'x' + std::to_string(std::abs(l));
        if (l < 0) s += "^-1";
    }
    return s;
}

}  // namespace wgd
