#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace nzsh {

// Exact rational arithmetic on int64 with normalization after every
// operation. The feasibility bounds never leave desk scale, but overflow is
// checked anyway so a bad call fails loudly instead of silently wrapping.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int64_t n) : num_(n), den_(1) {}
    Rational(int64_t n, int64_t d) : num_(n), den_(d) {
        if (den_ == 0) throw std::domain_error("rational: zero denominator");
        normalize();
    }

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }

    Rational operator+(const Rational& o) const {
        return Rational(add_checked(mul_checked(num_, o.den_), mul_checked(o.num_, den_)),
                        mul_checked(den_, o.den_));
    }
    Rational operator-(const Rational& o) const { return *this + Rational(-o.num_, o.den_); }
    Rational operator*(const Rational& o) const {
        return Rational(mul_checked(num_, o.num_), mul_checked(den_, o.den_));
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("rational: division by zero");
        return Rational(mul_checked(num_, o.den_), mul_checked(den_, o.num_));
    }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return mul_checked(num_, o.den_) < mul_checked(o.num_, den_);
    }
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    static int64_t mul_checked(int64_t a, int64_t b) {
        int64_t r;
        if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational: multiply overflow");
        return r;
    }
    static int64_t add_checked(int64_t a, int64_t b) {
        int64_t r;
        if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational: add overflow");
        return r;
    }

    int64_t num_;
    int64_t den_;
};

} // namespace nzsh
