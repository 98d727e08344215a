#pragma once

#include <map>
#include <string>
#include <vector>

#include "wgd/integer.hpp"
#include "wgd/word.hpp"

namespace wgd {

// Monomial in noncommuting variables X_i, stored as the sequence of
// generator indices. The empty sequence is the constant term.
using Monomial = std::vector<int>;

// Integer power series in noncommuting variables, truncated at a fixed
// total degree. Absent monomials have coefficient zero.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int degree_cap) : cap_(degree_cap) {}
    static TruncatedSeries one(int degree_cap);

    int degree_cap() const { return cap_; }
    const std::map<Monomial, Int>& terms() const { return c_; }

    Int coeff(const Monomial& m) const;
    // Drops the monomial when the resulting coefficient is zero or the
    // degree exceeds the cap.
    void add_term(const Monomial& m, const Int& v);

    bool is_one() const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

    // Multiplicative inverse; requires constant term 1 or -1.
    TruncatedSeries inverse() const;

    std::string str() const;

private:
    int cap_;
    std::map<Monomial, Int> c_;
};

// Magnus expansion: x_i -> 1 + X_i, x_i^-1 -> sum_k (-1)^k X_i^k,
// truncated at total degree D.
TruncatedSeries magnus(const Word& w, int degree_cap);

// Equality in F_n / Gamma_k (lower central series quotient); k = 1 is the
// trivial group. Decided by magnus(a b^-1, k-1) == 1.
bool lcs_equal(const Word& a, const Word& b, int k);

}  // namespace wgd
