#include "spherex/rational.hpp"

#include "spherex/errors.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <ostream>

namespace spherex {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr long long kMax = std::numeric_limits<long long>::max();

u128 uabs(i128 v) { return v < 0 ? u128(-(v + 1)) + 1 : u128(v); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class mpz_from_u128(u128 v) {
    mpz_class r;
    std::uint64_t limbs[2] = {std::uint64_t(v), std::uint64_t(v >> 64)};
    mpz_import(r.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, limbs);
    return r;
}

mpz_class mpz_from_i128(i128 v) {
    mpz_class r = mpz_from_u128(uabs(v));
    if (v < 0) r = -r;
    return r;
}

bool fits(const mpz_class& z) {
    return z.fits_slong_p() && z != mpz_class(std::numeric_limits<long>::min());
}

}  // namespace

Rational::Rational(long long n, long long d) {
    if (d == 0) throw DivisionByZero();
    *this = from_i128(n, d);
}

Rational::Rational(const mpq_class& q) { *this = from_mpq(q); }

Rational Rational::from_i128(i128 n, i128 d) {
    if (d == 0) throw DivisionByZero();
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) return Rational();
    u128 g = gcd128(uabs(n), u128(d));
    if (g != 1) {
        n /= i128(g);
        d /= i128(g);
    }
    Rational r;
    if (n <= kMax && n >= -kMax && d <= kMax) {
        r.num_ = (long long)n;
        r.den_ = (long long)d;
        return r;
    }
    auto q = std::make_shared<mpq_class>(mpz_from_i128(n), mpz_from_i128(d));
    q->canonicalize();
    r.big_ = std::move(q);
    return r;
}

Rational Rational::from_mpq(mpq_class q) {
    q.canonicalize();
    Rational r;
    if (fits(q.get_num()) && fits(q.get_den())) {
        r.num_ = q.get_num().get_si();
        r.den_ = q.get_den().get_si();
        return r;
    }
    r.big_ = std::make_shared<mpq_class>(std::move(q));
    return r;
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (s.empty()) throw ParseError("empty rational");
    if (s.front() == '+') s.erase(s.begin());
    for (char c : s)
        if (!(std::isdigit((unsigned char)c) || c == '-' || c == '/'))
            throw ParseError("bad rational: " + std::string(text));
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational: " + std::string(text));
    if (q.get_den() == 0) throw DivisionByZero();
    return from_mpq(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(long(num_)), mpz_class(long(den_)));
}

mpz_class Rational::numerator() const { return big_ ? big_->get_num() : mpz_class(long(num_)); }
mpz_class Rational::denominator() const { return big_ ? big_->get_den() : mpz_class(long(den_)); }

double Rational::to_double() const {
    if (big_) return big_->get_d();
    return double(num_) / double(den_);
}

std::string Rational::str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

long long Rational::to_ll() const {
    if (big_ || den_ != 1) throw Error("rational is not a machine integer: " + str());
    return num_;
}

Rational Rational::floor() const {
    if (big_) {
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), big_->get_num_mpz_t(), big_->get_den_mpz_t());
        return from_mpq(mpq_class(f));
    }
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return Rational(q);
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (big_) return from_mpq(1 / *big_);
    return from_i128(den_, num_);
}

std::size_t Rational::hash() const {
    if (!big_) return std::hash<long long>()(num_) * 1000003u ^ std::hash<long long>()(den_);
    return std::hash<std::string>()(big_->get_str());
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (!a.big_ && !b.big_) {
        if (a.den_ == b.den_) return Rational::from_i128(i128(a.num_) + b.num_, a.den_);
        return Rational::from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return Rational();
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) return Rational::from_i128(i128(a.num_) * b.num_, 1);
        return Rational::from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

Rational Rational::operator-() const {
    if (big_) return from_mpq(-*big_);
    Rational r = *this;
    r.num_ = -num_;
    return r;
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        i128 l = i128(a.num_) * b.den_, r = i128(b.num_) * a.den_;
        return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace spherex
