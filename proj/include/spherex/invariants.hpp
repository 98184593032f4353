#pragma once

#include "spherex/character.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spherex {

// A rational number modulo 1, stored as its representative in [0, 1).
class RatMod1 {
public:
    RatMod1() = default;
    RatMod1(const Rational& q) : v_(q.frac()) {}  // NOLINT(google-explicit-constructor)

    const Rational& value() const { return v_; }
    std::string str() const { return v_.str(); }
    static RatMod1 parse(std::string_view text) { return RatMod1(Rational::parse(text)); }

    friend RatMod1 operator+(const RatMod1& a, const RatMod1& b) { return RatMod1(a.v_ + b.v_); }
    friend RatMod1 operator-(const RatMod1& a, const RatMod1& b) { return RatMod1(a.v_ - b.v_); }
    friend RatMod1 operator*(long long n, const RatMod1& a) { return RatMod1(Rational(n) * a.v_); }
    friend bool operator==(const RatMod1& a, const RatMod1& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const RatMod1& a, const RatMod1& b) { return a.v_ <=> b.v_; }

private:
    Rational v_;
};

// A degree-1 character s with s^2 = det of the natural representation.
struct SpinSqrt {
    Character character;
    std::vector<int> exponents;                // s(nu_i) = zeta_{f_i}^{e_i} on the chosen Ab generators
    std::vector<std::vector<int>> candidates;  // every square root, lexicographic order
};

// Default rule: the candidate with the lexicographically smallest exponent
// vector (the trivial character whenever det is trivial).
// `override_spec` is "name=e,name=e" on the abelianization generator names.
// Throws SpinError when no square root exists or the override is not one.
SpinSqrt spin_sqrt_character(const GroupPtr& g, const std::optional<std::string>& override_spec = std::nullopt);

// s(g) / (1 - Tr g + det g). Throws for the identity.
Cyc defect(const MatGroup& g, const SpinSqrt& s, Elem e);

struct CcsVector {
    long long rank = 1;
    std::vector<RatMod1> first;
    RatMod1 second;

    std::string str() const;
    nlohmann::json to_json() const;
    friend bool operator==(const CcsVector&, const CcsVector&) = default;
    friend auto operator<=>(const CcsVector& a, const CcsVector& b) {
        if (auto c = a.rank <=> b.rank; c != 0) return c;
        if (auto c = std::lexicographical_compare_three_way(a.first.begin(), a.first.end(), b.first.begin(), b.first.end()); c != 0) return c;
        return a.second <=> b.second;
    }
};

// Group, catalog, spin character and per-class defects, built once.
class InvariantContext {
public:
    explicit InvariantContext(GroupPtr g, const std::optional<std::string>& spin_override = std::nullopt);

    const GroupPtr& group() const { return g_; }
    const Catalog& catalog() const { return *cat_; }
    const SpinSqrt& spin() const { return spin_; }
    // per class; entry 0 (identity) is unused and zero
    const std::vector<Cyc>& defects() const { return def_; }

    // (1/|G|) sum_{g != 1} (chi(g) - deg) def(g), exact. Throws IrrationalXi.
    Rational xi_raw(const Character& chi) const;
    RatMod1 xi(const Character& chi) const { return RatMod1(xi_raw(chi)); }

    std::vector<RatMod1> first_ccs(const Character& chi) const;
    std::vector<RatMod1> first_ccs(const Irrep& r) const { return first_from_det(det_character(r)); }
    RatMod1 second_ccs(const Irrep& r) const;
    RatMod1 second_ccs(const Character& chi) const;
    CcsVector ccs_vector(const Irrep& r) const;

private:
    std::vector<RatMod1> first_from_det(const Character& det) const;

    GroupPtr g_;
    CatalogPtr cat_;
    SpinSqrt spin_;
    std::vector<Cyc> def_;
};

Rational xi_tilde_raw(const MatGroup& g, const Character& chi, const SpinSqrt& s);
RatMod1 xi_tilde(const MatGroup& g, const Character& chi, const SpinSqrt& s);

// Values on the chosen abelianization generators of log(det chi)/(2 pi i).
std::vector<RatMod1> first_ccs(const Character& chi, const Abelianization& ab);
// xi(chi) - xi(det chi)
RatMod1 second_ccs(const Character& chi, const MatGroup& g, const SpinSqrt& s);

// (t^2 - 2qt - 2q) / (4q) for rho_t of BD(q).
Rational xi_closed_form_bd_raw(long long q, long long t);
RatMod1 xi_closed_form_bd(long long q, long long t);
// The triple sum for varrho_{t,s} of D(k,r).
Rational xi_closed_form_d_raw(long long k, long long r, long long t, long long s);
RatMod1 xi_closed_form_d(long long k, long long r, long long t, long long s);

// (2 - z^tj - z^-tj)/(2 - z^j - z^-j) against its expansion as a sum of powers.
// Throws DivisionByZero when zeta_n^j = 1.
bool telescoping_identity_check(long long n, long long t, long long j);

// First CCS-numbers of rho x alpha_j on gamma x C_l equal those of rho plus
// deg(rho) * j/l on the adjoined generator, for every catalog pair.
bool tensor_chern_first_check(const FamilySpec& gamma, long long l);

// Display helper: |G| * raw value, an integer for every shipped table.
Rational scaled_xi(const Rational& raw, long long order);

}  // namespace spherex
