#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fcx {

// Exact fraction with 64-bit numerator/denominator, always in lowest terms
// with positive denominator. All polygon arithmetic stays far below the
// overflow range, but intermediate products are checked anyway.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    Rational operator+(const Rational& o) const {
        return Rational(checked(__int128(num_) * o.den_ + __int128(o.num_) * den_),
                        checked(__int128(den_) * o.den_));
    }
    Rational operator-(const Rational& o) const {
        return Rational(checked(__int128(num_) * o.den_ - __int128(o.num_) * den_),
                        checked(__int128(den_) * o.den_));
    }
    Rational operator*(const Rational& o) const {
        return Rational(checked(__int128(num_) * o.num_), checked(__int128(den_) * o.den_));
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        return Rational(checked(__int128(num_) * o.den_), checked(__int128(den_) * o.num_));
    }
    Rational operator-() const { return Rational(-num_, den_); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return __int128(num_) * o.den_ < __int128(o.num_) * den_; }
    bool operator<=(const Rational& o) const { return __int128(num_) * o.den_ <= __int128(o.num_) * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

private:
    static std::int64_t checked(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
        return static_cast<std::int64_t>(v);
    }

    void normalize() {
        if (den_ == 0) throw std::domain_error("zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace fcx
