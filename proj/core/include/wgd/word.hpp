#pragma once

#include <string>
#include <vector>

namespace wgd {

// Freely reduced word in the free group F_n. Letters are nonzero
// integers: +i stands for x_i, -i for x_i^-1, with 1 <= i <= rank.
class Word {
public:
    explicit Word(int rank) : rank_(rank) {}

    // Reduces the raw letter sequence; rejects letters outside [1, rank].
    static Word from_letters(int rank, std::vector<int> letters);

    int rank() const { return rank_; }
    const std::vector<int>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    int length() const { return static_cast<int>(letters_.size()); }

    friend bool operator==(const Word& a, const Word& b) {
        return a.rank_ == b.rank_ && a.letters_ == b.letters_;
    }

private:
    int rank_;
    std::vector<int> letters_;
};

Word reduce(int rank, const std::vector<int>& raw);
Word multiply(const Word& a, const Word& b);
Word invert(const Word& a);
// x^g = g^-1 x g
Word conjugate(const Word& x, const Word& g);
// [a; b] = a^-1 b^-1 a b
Word commutator(const Word& a, const Word& b);
Word power(const Word& a, int e);
int exponent_sum(const Word& w, int generator);

// Word syntax used across the CLI: whitespace-separated `xK` / `xK^-1`
// tokens, empty string for the identity.
Word parse_word(int rank, const std::string& text);
std::string word_str(const Word& w);

}  // namespace wgd
