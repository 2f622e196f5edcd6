// Exact rational arithmetic over 64-bit integers with overflow checks.
// All symbolic coefficients in this project are small rationals (structure
// constants, transgression integrals, Dirichlet factorials), so a checked
// int64 numerator/denominator pair is enough; overflow throws instead of
// wrapping.
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace folichar {

class overflow_error : public std::runtime_error {
  public:
    explicit overflow_error(const std::string &what) : std::runtime_error(what) {}
};

class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { reduce(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational &operator+=(const Rational &o) {
        __int128 n = (__int128)num_ * o.den_ + (__int128)o.num_ * den_;
        __int128 d = (__int128)den_ * o.den_;
        assign(n, d);
        return *this;
    }
    Rational &operator-=(const Rational &o) { return *this += -o; }
    Rational &operator*=(const Rational &o) {
        __int128 n = (__int128)num_ * o.num_;
        __int128 d = (__int128)den_ * o.den_;
        assign(n, d);
        return *this;
    }
    Rational &operator/=(const Rational &o) {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        __int128 n = (__int128)num_ * o.den_;
        __int128 d = (__int128)den_ * o.num_;
        assign(n, d);
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational &a, const Rational &b) { return !(a == b); }

    double to_double() const { return double(num_) / double(den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // n! as a rational; n must be small enough for int64.
    static Rational factorial(unsigned n) {
        __int128 f = 1;
        for (unsigned i = 2; i <= n; ++i) {
            f *= i;
            if (f > INT64_MAX) throw overflow_error("Rational::factorial overflow");
        }
        return Rational((std::int64_t)f);
    }

  private:
    void reduce() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        num_ /= g;
        den_ /= g;
    }

    void assign(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 an = n < 0 ? -n : n;
        // gcd on __int128
        __int128 a = an, b = d;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            n /= a;
            d /= a;
        }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw overflow_error("Rational: arithmetic overflow");
        num_ = (std::int64_t)n;
        den_ = (std::int64_t)d;
    }

    std::int64_t num_;
    std::int64_t den_;
};

} // namespace folichar
