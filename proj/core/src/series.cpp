#include "wgd/series.hpp"

#include <cstdlib>
#include <stdexcept>

namespace wgd {

TruncatedSeries TruncatedSeries::one(int degree_cap) {
    TruncatedSeries s(degree_cap);
    s.c_[Monomial{}] = Int(1);
    return s;
}

Int TruncatedSeries::coeff(const Monomial& m) const {
    auto it = c_.find(m);
    return it == c_.end() ? Int(0) : it->second;
}

void TruncatedSeries::add_term(const Monomial& m, const Int& v) {
    if (static_cast<int>(m.size()) > cap_ || v.is_zero()) return;
    auto [it, inserted] = c_.try_emplace(m, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) c_.erase(it);
    }
}

bool TruncatedSeries::is_one() const {
    return c_.size() == 1 && c_.begin()->first.empty() && c_.begin()->second == Int(1);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (cap_ != o.cap_) throw std::invalid_argument("degree cap mismatch");
    for (const auto& [m, v] : o.c_) add_term(m, v);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    if (cap_ != o.cap_) throw std::invalid_argument("degree cap mismatch");
    for (const auto& [m, v] : o.c_) add_term(m, -v);
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.cap_ != b.cap_) throw std::invalid_argument("degree cap mismatch");
    TruncatedSeries r(a.cap_);
    for (const auto& [ma, va] : a.c_) {
        for (const auto& [mb, vb] : b.c_) {
            if (static_cast<int>(ma.size() + mb.size()) > r.cap_) continue;
            Monomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            r.add_term(m, va * vb);
        }
    }
    return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.cap_ == b.cap_ && a.c_ == b.c_;
}

TruncatedSeries TruncatedSeries::inverse() const {
    Int c0 = coeff({});
    if (c0 != Int(1) && c0 != Int(-1))
        throw std::invalid_argument("series inverse needs unit constant term");
    // With unit u = +-1 and N the positive-degree part,
    // (u + N)^-1 = sum_k u^(k+1) (-1)^k N^k.
    bool unit_pos = c0 == Int(1);
    TruncatedSeries n = *this;
    n.add_term({}, -c0);
    TruncatedSeries pw = TruncatedSeries::one(cap_);
    TruncatedSeries result(cap_);
    for (int k = 0; k <= cap_; ++k) {
        int s = unit_pos ? (k % 2 == 0 ? 1 : -1) : -1;
        for (const auto& [m, v] : pw.c_) result.add_term(m, v * Int(s));
        if (pw.c_.empty() || k == cap_) break;
        pw = pw * n;
    }
    return result;
}

TruncatedSeries magnus(const Word& w, int degree_cap) {
    if (degree_cap < 0) throw std::invalid_argument("degree cap must be non-negative");
    TruncatedSeries r = TruncatedSeries::one(degree_cap);
    for (int l : w.letters()) {
        int i = std::abs(l);
        TruncatedSeries f(degree_cap);
        if (l > 0) {
            f.add_term({}, Int(1));
            f.add_term({i}, Int(1));
        } else {
            Monomial m;
            for (int k = 0; k <= degree_cap; ++k) {
                f.add_term(m, Int(k % 2 == 0 ? 1 : -1));
                m.push_back(i);
            }
        }
        r = r * f;
    }
    return r;
}

bool lcs_equal(const Word& a, const Word& b, int k) {
    if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
    if (k < 1) throw std::invalid_argument("lower central depth must be >= 1");
    return magnus(multiply(a, invert(b)), k - 1).is_one();
}

std::string TruncatedSeries::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (const auto& [m, v] : c_) {
        if (!s.empty()) s += " + ";
        std::string mono;
        for (int i : m) mono += "X" + std::to_string(i);
        if (m.empty())
            s += v.str();
        else if (v == Int(1))
            s += mono;
        else if (v == Int(-1))
            s += "-" + mono;
        else
            s += v.str() + " " + mono;
    }
    return s;
}

}  // namespace wgd
