#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spherex/classify.hpp"
#include "spherex/errors.hpp"

#include <cmath>
#include <complex>
#include <numbers>

using namespace spherex;

namespace {

InvariantContext ctx(const std::string& s, std::optional<std::string> spin = std::nullopt) {
    return InvariantContext(MatGroup::build(FamilySpec::parse(s)), spin);
}

// Floating point xi straight from the element sum, every element visited.
double xi_float(const InvariantContext& c, const Character& chi) {
    const auto& g = *c.group();
    const double deg = double(chi.degree());
    std::complex<double> s;
    for (Elem e = 1; e < g.order(); ++e) {
        const auto& m = g.element(e);
        std::complex<double> a = m(0, 0).to_complex(), b = m(0, 1).to_complex(), cc = m(1, 0).to_complex(), d = m(1, 1).to_complex();
        std::complex<double> tr = a + d, det = a * d - b * cc;
        s += (chi.at_element(e).to_complex() - deg) * c.spin().character.at_element(e).to_complex() / (1.0 - tr + det);
    }
    CHECK(std::abs(s.imag()) < 1e-8);
    return s.real() / double(g.order());
}

double frac(double x) { return x - std::floor(x); }

}  // namespace

TEST_CASE("RatMod1") {
    CHECK(RatMod1(Rational(-1, 3)).str() == "2/3");
    CHECK((RatMod1(Rational(3, 4)) + RatMod1(Rational(1, 2))).str() == "1/4");
    CHECK((3 * RatMod1(Rational(1, 2))).str() == "1/2");
    CHECK(RatMod1::parse("7/5") == RatMod1(Rational(2, 5)));
}

TEST_CASE("xi matches a floating point element sum") {
    for (const char* s : {"C:7,3", "BD:5", "BD:6", "BT", "BO", "D:2,2", "D:3,1", "P:2", "BD:3xC:5"}) {
        CAPTURE(s);
        auto c = ctx(s);
        for (const auto& r : c.catalog().irreps) {
            CAPTURE(r.label);
            double want = xi_float(c, r.character);
            CHECK(std::abs(c.xi_raw(r.character).to_double() - want) < 1e-8);
        }
    }
}

TEST_CASE("spin character") {
    auto bd = ctx("BD:4");
    CHECK(bd.spin().character == trivial_character(bd.group()));
    auto d = ctx("D:2,2");
    const auto& g = *d.group();
    CHECK(d.spin().character.at_element(g.generator_element(0)) == Cyc::zeta(8));
    CHECK(d.spin().character.at_element(g.generator_element(1)) == Cyc(1));
    CHECK(d.spin().candidates.size() == 2);
    auto alt = ctx("D:2,2", "x=5");
    CHECK(alt.spin().character.at_element(g.generator_element(0)) == Cyc::zeta(8, 5));
    CHECK_THROWS_AS(ctx("D:2,2", "x=2"), SpinError);
    CHECK_THROWS_AS(ctx("D:2,2", "q=1"), SpinError);
    CHECK_THROWS_AS(ctx("D:2,2", "x"), SpinError);
}

TEST_CASE("defects") {
    auto g = MatGroup::build(FamilySpec::binary_dihedral(5));
    auto s = spin_sqrt_character(g);
    for (Elem e = 1; e < g->order(); ++e)
        if (g->element(e).trace().is_zero()) CHECK(defect(*g, s, e) == Cyc(Rational(1, 2)));
    CHECK_THROWS(defect(*g, s, 0));
    auto d = MatGroup::build(FamilySpec::d(2, 2));
    auto sd = spin_sqrt_character(d);
    CHECK(defect(*d, sd, d->generator_element(0)) == Cyc::zeta(8) / (Cyc(1) + Cyc::zeta(8, 2)));
}

TEST_CASE("degree-1 characters have vanishing second CCS-number") {
    for (const char* s : {"C:9,2", "BD:6", "BT", "BO", "D:3,2", "P:2", "BTxC:5"}) {
        auto c = ctx(s);
        for (const auto& x : linear_characters(c.group())) CHECK(c.second_ccs(x) == RatMod1());
    }
}

TEST_CASE("first CCS-numbers factor through the determinant") {
    for (const char* s : {"BD:6", "BT", "D:2,2", "P:2", "D:2,1xC:5"}) {
        auto c = ctx(s);
        for (const auto& r : c.catalog().irreps) CHECK(c.first_ccs(r.character) == c.first_ccs(det_character(r.character)));
    }
}

TEST_CASE("xi is additive") {
    auto c = ctx("BO");
    const auto& irr = c.catalog().irreps;
    for (std::size_t i = 0; i < irr.size(); ++i)
        for (std::size_t j = 0; j < irr.size(); ++j)
            CHECK(c.xi(irr[i].character + irr[j].character) == c.xi(irr[i].character) + c.xi(irr[j].character));
}

TEST_CASE("free functions agree with the context") {
    auto c = ctx("BT");
    const auto& g = *c.group();
    for (const auto& r : c.catalog().irreps) {
        CHECK(xi_tilde(g, r.character, c.spin()) == c.xi(r.character));
        CHECK(second_ccs(r.character, g, c.spin()) == c.second_ccs(r));
        CHECK(first_ccs(r.character, g.abelianization()) == c.first_ccs(r));
    }
}

TEST_CASE("closed forms") {
    CHECK(xi_closed_form_bd_raw(5, 1) == Rational(1 - 10 - 10, 20));
    CHECK(xi_closed_form_d(2, 2, 2, 0) == RatMod1(Rational(-16, 40)));
    CHECK(xi_closed_form_d(3, 2, 1, 1) == RatMod1(Rational(31, 80)));
    CHECK(xi_closed_form_d(3, 1, 1, 0) == RatMod1(Rational(-32, 48)));
    CHECK_THROWS_AS(xi_closed_form_bd(5, 5), SpecError);
    CHECK_THROWS_AS(xi_closed_form_d(1, 1, 1, 0), SpecError);
}

TEST_CASE("telescoping identity") {
    CHECK(telescoping_identity_check(10, 3, 1));
    CHECK(telescoping_identity_check(7, 5, 3));
    CHECK(telescoping_identity_check(9, 1, 4));
    CHECK_THROWS_AS(telescoping_identity_check(6, 2, 6), DivisionByZero);
    CHECK_THROWS_AS(telescoping_identity_check(6, 2, 0), DivisionByZero);
}

TEST_CASE("tensor first Chern check") {
    CHECK(tensor_chern_first_check(FamilySpec::bt(), 5));
    CHECK(tensor_chern_first_check(FamilySpec::binary_dihedral(3), 7));
    CHECK(tensor_chern_first_check(FamilySpec::d(2, 1), 5));
}

TEST_CASE("scaled display") {
    auto c = ctx("D:2,2");
    auto raw = c.xi_raw(c.catalog().find("varrho_1,0").character);
    CHECK(scaled_xi(raw, 40) == Rational(-4));
    CHECK(frac(raw.to_double()) == doctest::Approx(0.9));
}
