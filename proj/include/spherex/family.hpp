#pragma once

#include <json.hpp>

#include <memory>
#include <string>
#include <string_view>

namespace spherex {

enum class Family { Cyclic, BinaryDihedral, BinaryTetrahedral, BinaryOctahedral, BinaryIcosahedral, D, Pprime, Product };

// Parametrized family descriptor.
//   Cyclic(n, q)          a = n, b = q      (n = 1 with q = 0 is the trivial group)
//   BinaryDihedral(q)     a = q
//   D(k, r)               a = k, b = r
//   Pprime(k)             a = k
//   Product               inner x C_l
struct FamilySpec {
    Family family = Family::Cyclic;
    long long a = 1;
    long long b = 0;
    long long l = 1;
    std::shared_ptr<const FamilySpec> inner;

    static FamilySpec cyclic(long long n, long long q);
    static FamilySpec binary_dihedral(long long q);
    static FamilySpec bt();
    static FamilySpec bo();
    static FamilySpec bi();
    static FamilySpec d(long long k, long long r);
    static FamilySpec pprime(long long k);
    static FamilySpec product(const FamilySpec& inner, long long l);

    // Syntax: C:n,q | BD:q | BT | BO | BI | D:k,r | P:k | <base>xC:l
    static FamilySpec parse(std::string_view text);
    std::string str() const;

    // Throws SpecError.
    void validate() const;
    long long expected_order() const;

    std::string family_name() const;
    nlohmann::json params_json() const;

    bool is_d_family() const;  // D(k,r) or D(k,r) x C_l
    const FamilySpec& base() const { return family == Family::Product ? *inner : *this; }

    friend bool operator==(const FamilySpec& x, const FamilySpec& y);
};

}  // namespace spherex
