#include "wgd/integer.hpp"

namespace wgd {

void Int::set_big(mpz_class v) {
    big_ = std::make_unique<mpz_class>(std::move(v));
    shrink();
}

void Int::shrink() {
    if (big_ && big_->fits_slong_p()) {
        small_ = big_->get_si();
        big_.reset();
    }
}

bool Int::fits_int64() const { return !big_ || big_->fits_slong_p(); }

long long Int::as_int64() const { return big_ ? big_->get_si() : small_; }

Int& Int::operator+=(const Int& o) {
    if (!big_ && !o.big_) {
        long long r;
        if (!__builtin_add_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    set_big(as_mpz() + o.as_mpz());
    return *this;
}

Int& Int::operator-=(const Int& o) {
    if (!big_ && !o.big_) {
        long long r;
        if (!__builtin_sub_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    set_big(as_mpz() - o.as_mpz());
    return *this;
}

Int& Int::operator*=(const Int& o) {
    if (!big_ && !o.big_) {
        long long r;
        if (!__builtin_mul_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    set_big(as_mpz() * o.as_mpz());
    return *this;
}

Int Int::operator-() const {
    if (!big_) {
        if (small_ != INT64_MIN) return Int(-small_);
    }
    Int r;
    r.set_big(-as_mpz());
    return r;
}

bool operator==(const Int& a, const Int& b) {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    return a.as_mpz() == b.as_mpz();
}

bool operator<(const Int& a, const Int& b) {
    if (!a.big_ && !b.big_) return a.small_ < b.small_;
    return a.as_mpz() < b.as_mpz();
}

std::string Int::str() const {
    return big_ ? big_->get_str() : std::to_string(small_);
}

}  // namespace wgd
