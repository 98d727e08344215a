#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "wgd/integer.hpp"
#include "wgd/series.hpp"
#include "wgd/word.hpp"

namespace wgd {

struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Magnus image with every repeated-index monomial deleted. RF_n is
// nilpotent of class <= n, so multilinear degrees <= n decide equality;
// keys are sequences of pairwise-distinct generator indices.
class MultilinearPoly {
public:
    explicit MultilinearPoly(int rank) : rank_(rank) {}
    MultilinearPoly(int rank, std::map<Monomial, Int> coeffs);

    int rank() const { return rank_; }
    const std::map<Monomial, Int>& terms() const { return c_; }
    Int coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Int& v);
    bool is_one() const;

    friend bool operator==(const MultilinearPoly& a, const MultilinearPoly& b) {
        return a.rank_ == b.rank_ && a.c_ == b.c_;
    }

    std::string str() const;

private:
    int rank_;
    std::map<Monomial, Int> c_;
};

MultilinearPoly reduced_magnus(const Word& w);

// Equality in the reduced free group RF_n.
bool rf_equal(const Word& a, const Word& b);

// Deletes every x_i^+-1 letter of g; equal to g as a conjugator of x_i
// in RF_n.
Word rho(const Word& g, int i);

// Element of RF_n carrying its representative word together with the
// multilinear expansion that decides equality.
class ReducedElement {
public:
    explicit ReducedElement(Word w) : word_(std::move(w)), expansion_(reduced_magnus(word_)) {}

    const Word& representative() const { return word_; }
    const MultilinearPoly& expansion() const { return expansion_; }

    friend bool operator==(const ReducedElement& a, const ReducedElement& b) {
        return a.expansion_ == b.expansion_;
    }

private:
    Word word_;
    MultilinearPoly expansion_;
};

// Conjugating automorphism of RF_n: x_i -> x_i^{g_i} with the conjugator
// g_i stored rho-normalized (no occurrence of x_i).
class ConjAut {
public:
    static ConjAut identity(int rank);
    ConjAut(int rank, std::vector<Word> conjugators);

    int rank() const { return rank_; }
    const Word& conjugator(int i) const { return conj_.at(i - 1); }
    const std::vector<Word>& conjugators() const { return conj_; }

private:
    int rank_;
    std::vector<Word> conj_;
};

Word apply(const ConjAut& f, const Word& w);
ConjAut compose(const ConjAut& f, const ConjAut& g);  // (f o g)(w) = f(g(w))
bool aut_equal(const ConjAut& f, const ConjAut& g);
ConjAut invert_aut(const ConjAut& f);

std::string conj_aut_json(const ConjAut& f);

}  // namespace wgd
