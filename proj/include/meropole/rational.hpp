#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace meropole {

using BigInt = mpz_class;

/// Exact rational number kept in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}                     // NOLINT(google-explicit-constructor)
    Rational(int v) : v_(v) {}                      // NOLINT(google-explicit-constructor)
    Rational(const BigInt& v) : v_(v) {}            // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    /// Accepts "n" or "n/d" with optional sign; throws InputError otherwise.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    double to_double() const { return v_.get_d(); }

    /// Always "num/den", e.g. "0/1", "-1/2".
    std::string to_fraction_string() const;
    /// "3", "-1/2": denominator omitted when it is 1.
    std::string to_string() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational pow(unsigned e) const;
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class v_;
};

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace meropole
