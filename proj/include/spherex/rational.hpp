#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace spherex {

// Exact rational number. Values that fit in 64-bit numerator/denominator are
// kept inline; anything larger falls back to a shared immutable mpq_class.
// The representation is canonical, so equal values compare equal field-wise.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long long n, long long d);
    explicit Rational(const mpq_class& q);

    static Rational parse(std::string_view text);

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;
    bool is_small() const { return !big_; }

    mpq_class to_mpq() const;
    mpz_class numerator() const;
    mpz_class denominator() const;
    double to_double() const;
    std::string str() const;

    // Integer value, throws if not an integer or out of range.
    long long to_ll() const;

    Rational floor() const;
    // Representative in [0, 1).
    Rational frac() const { return *this - floor(); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational inverse() const;

    std::size_t hash() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    static Rational from_i128(__int128 n, __int128 d);
    static Rational from_mpq(mpq_class q);

    long long num_ = 0;
    long long den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace spherex

template <>
struct std::hash<spherex::Rational> {
    std::size_t operator()(const spherex::Rational& q) const noexcept { return q.hash(); }
};
