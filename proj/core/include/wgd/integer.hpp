#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace wgd {

// Signed integer with an inlined 64-bit fast path and GMP fallback.
// Magnus coefficients of long words outgrow 64 bits, so all series
// arithmetic goes through this type.
class Int {
public:
    Int() = default;
    Int(long long v) : small_(v) {}

    Int(const Int& o) : small_(o.small_) {
        if (o.big_) big_ = std::make_unique<mpz_class>(*o.big_);
    }
    Int(Int&&) noexcept = default;
    Int& operator=(const Int& o) {
        if (this != &o) {
            small_ = o.small_;
            big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Int& operator=(Int&&) noexcept = default;

    bool is_zero() const { return big_ ? sgn(*big_) == 0 : small_ == 0; }
    int sign() const { return big_ ? sgn(*big_) : (small_ > 0) - (small_ < 0); }

    bool fits_int64() const;
    long long as_int64() const;  // valid only when fits_int64()

    Int& operator+=(const Int& o);
    Int& operator-=(const Int& o);
    Int& operator*=(const Int& o);
    Int operator-() const;

    friend Int operator+(Int a, const Int& b) { return a += b; }
    friend Int operator-(Int a, const Int& b) { return a -= b; }
    friend Int operator*(Int a, const Int& b) { return a *= b; }

    friend bool operator==(const Int& a, const Int& b);
    friend bool operator<(const Int& a, const Int& b);
    friend bool operator!=(const Int& a, const Int& b) { return !(a == b); }

    std::string str() const;

private:
    long long small_ = 0;
    std::unique_ptr<mpz_class> big_;  // non-null once the value left 64 bits

    mpz_class as_mpz() const { return big_ ? *big_ : mpz_class(static_cast<long>(small_)); }
    void set_big(mpz_class v);
    void shrink();
};

}  // namespace wgd
