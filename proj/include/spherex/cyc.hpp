#pragma once

#include "spherex/rational.hpp"

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace spherex {

// An element of the cyclotomic field Q(zeta_N), stored as sum c_e * zeta_N^e
// with 0 <= e < phi(N) (remainder modulo the N-th cyclotomic polynomial).
//
// The conductor is always minimal. Rationals have conductor 1, and no stored
// conductor is congruent to 2 mod 4 since Q(zeta_2m) = Q(zeta_m) for odd m.
class Cyc {
public:
    using Term = std::pair<int, Rational>;

    Cyc() = default;
    Cyc(const Rational& q);  // NOLINT(google-explicit-constructor)
    Cyc(long long n) : Cyc(Rational(n)) {}  // NOLINT(google-explicit-constructor)

    // Canonical form of sum c * zeta_n^e; exponents are taken mod n.
    static Cyc make(long long n, const std::vector<std::pair<long long, Rational>>& terms);
    static Cyc zeta(long long n, long long e = 1);

    int conductor() const { return n_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const { return n_ == 1; }
    bool is_one() const { return n_ == 1 && terms_.size() == 1 && terms_[0].second.is_one(); }

    std::optional<Rational> rational_value() const;
    // Throws NotRational.
    Rational as_rational() const;

    Cyc conj() const { return galois(-1); }
    // The automorphism zeta -> zeta^a; a must be coprime to the conductor.
    Cyc galois(long long a) const;
    // Throws DivisionByZero for zero.
    Cyc inverse() const;
    Cyc pow(long long e) const;

    std::complex<double> to_complex() const;

    std::string str() const;
    static Cyc parse(std::string_view text);
    nlohmann::json to_json() const;
    static Cyc from_json(const nlohmann::json& j);

    std::size_t hash() const;

    friend Cyc operator+(const Cyc& a, const Cyc& b);
    friend Cyc operator-(const Cyc& a, const Cyc& b);
    friend Cyc operator*(const Cyc& a, const Cyc& b);
    friend Cyc operator*(const Cyc& a, const Rational& q);
    friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }
    Cyc operator-() const;
    Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
    Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
    Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

    friend bool operator==(const Cyc& a, const Cyc& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

private:
    friend class CycBuilder;
    int n_ = 1;
    std::vector<Term> terms_;
};

// Minimal (order, exponent) with x = zeta_order^exponent. Throws NotRootOfUnity.
std::pair<long long, long long> root_of_unity_log(const Cyc& x);

// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long long>& cyclotomic_polynomial(long long n);

long long euler_phi(long long n);
std::vector<long long> prime_factors(long long n);

std::ostream& operator<<(std::ostream& os, const Cyc& x);

}  // namespace spherex

template <>
struct std::hash<spherex::Cyc> {
    std::size_t operator()(const spherex::Cyc& x) const noexcept { return x.hash(); }
};
