#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spherex/cyc.hpp"
#include "spherex/errors.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

using namespace spherex;

namespace {

std::complex<double> root(long long n, long long e) { return std::polar(1.0, 2 * std::numbers::pi * double(e) / double(n)); }

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -3) == Rational(-1, 3));
    CHECK((Rational(1, 2) + Rational(1, 3)).str() == "5/6");
    CHECK(Rational(-7, 3).floor() == Rational(-3));
    CHECK(Rational(-7, 3).frac() == Rational(2, 3));
    CHECK(Rational::parse("-12/8") == Rational(-3, 2));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
    CHECK_THROWS_AS(Rational::parse("1/x"), ParseError);
}

TEST_CASE("rational falls back to big integers") {
    Rational big(1);
    for (int i = 0; i < 5; ++i) big *= Rational(1000000007LL);
    CHECK_FALSE(big.is_small());
    CHECK(big.numerator() == mpz_class("1000000035000000490000003430000012005000016807"));
    Rational back = big;
    for (int i = 0; i < 5; ++i) back /= Rational(1000000007LL);
    CHECK(back == Rational(1));
    CHECK(back.is_small());
    CHECK(Rational::parse(big.str()) == big);
}

TEST_CASE("roots of unity") {
    CHECK(Cyc::zeta(4) * Cyc::zeta(4) == Cyc(-1));
    CHECK(Cyc::zeta(3) + Cyc::zeta(3, 2) == Cyc(-1));
    Cyc s(0);
    for (int e = 1; e < 5; ++e) s += Cyc::zeta(5, e);
    CHECK(s == Cyc(-1));
    CHECK(Cyc::zeta(7, 7) == Cyc(1));
    CHECK(Cyc::zeta(12, 3) == Cyc::zeta(4));
    // Q(zeta_6) = Q(zeta_3)
    CHECK(Cyc::zeta(6).conductor() == 3);
    CHECK(Cyc::zeta(10).conductor() == 5);
    CHECK((Cyc::zeta(8) + Cyc::zeta(8, 7)).conductor() == 8);
    // sqrt(2)^2 with a minus sign from i: (zeta_8 - zeta_8^7)^2 = (i sqrt 2)^2
    Cyc d = Cyc::zeta(8) - Cyc::zeta(8, 7);
    CHECK(d * d == Cyc(-2));
}

TEST_CASE("field operations match complex arithmetic") {
    std::mt19937 rng(7);
    for (long long n : {5, 8, 9, 12, 15, 16, 20, 24, 36}) {
        for (int trial = 0; trial < 20; ++trial) {
            std::uniform_int_distribution<int> e(0, int(n) - 1), c(-3, 3);
            Cyc a(0), b(0);
            std::complex<double> za, zb;
            for (int k = 0; k < 3; ++k) {
                int ea = e(rng), eb = e(rng), ca = c(rng), cb = c(rng);
                a += Cyc::zeta(n, ea) * Rational(ca);
                b += Cyc::zeta(n, eb) * Rational(cb);
                za += double(ca) * root(n, ea);
                zb += double(cb) * root(n, eb);
            }
            CHECK(close((a + b).to_complex(), za + zb));
            CHECK(close((a * b).to_complex(), za * zb));
            CHECK(close(a.conj().to_complex(), std::conj(za)));
            if (!b.is_zero()) {
                CHECK(close((a / b).to_complex(), za / zb));
                CHECK(a / b * b == a);
            }
        }
    }
}

TEST_CASE("text form round trips") {
    for (const Cyc& x : {Cyc(0), Cyc(Rational(-3, 7)), Cyc::zeta(8), Cyc::zeta(5, 2) * Rational(2, 3) + Cyc(1), Cyc::zeta(20, 3) - Cyc::zeta(20, 7)})
        CHECK(Cyc::parse(x.str()) == x);
    CHECK(Cyc::parse("1 + 2*z(4)^1") == Cyc(1) + Cyc::zeta(4) * Rational(2));
    CHECK_THROWS_AS(Cyc::parse("1 + w"), ParseError);
}

TEST_CASE("root_of_unity_log") {
    CHECK(root_of_unity_log(Cyc(1)) == std::pair<long long, long long>{1, 0});
    CHECK(root_of_unity_log(Cyc(-1)) == std::pair<long long, long long>{2, 1});
    CHECK(root_of_unity_log(Cyc::zeta(12, 8)) == std::pair<long long, long long>{3, 2});
    CHECK(root_of_unity_log(-Cyc::zeta(5)) == std::pair<long long, long long>{10, 7});
    CHECK_THROWS_AS(root_of_unity_log(Cyc(2)), NotRootOfUnity);
    CHECK_THROWS_AS(root_of_unity_log(Cyc::zeta(5) + Cyc(1)), NotRootOfUnity);
}

TEST_CASE("galois action and rational values") {
    Cyc x = Cyc::zeta(7) + Cyc::zeta(7, 6);
    CHECK(x.galois(2) == Cyc::zeta(7, 2) + Cyc::zeta(7, 5));
    CHECK_FALSE(x.rational_value());
    CHECK((x + x.galois(2) + x.galois(3)).rational_value() == Rational(-1));
    CHECK_THROWS_AS(Cyc(0).inverse(), DivisionByZero);
}
