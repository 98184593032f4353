#include "spherex/family.hpp"

#include "spherex/errors.hpp"

#include <cctype>
#include <numeric>
#include <vector>

namespace spherex {

FamilySpec FamilySpec::cyclic(long long n, long long q) { return {Family::Cyclic, n, q, 1, nullptr}; }
FamilySpec FamilySpec::binary_dihedral(long long q) { return {Family::BinaryDihedral, q, 0, 1, nullptr}; }
FamilySpec FamilySpec::bt() { return {Family::BinaryTetrahedral, 0, 0, 1, nullptr}; }
FamilySpec FamilySpec::bo() { return {Family::BinaryOctahedral, 0, 0, 1, nullptr}; }
FamilySpec FamilySpec::bi() { return {Family::BinaryIcosahedral, 0, 0, 1, nullptr}; }
FamilySpec FamilySpec::d(long long k, long long r) { return {Family::D, k, r, 1, nullptr}; }
FamilySpec FamilySpec::pprime(long long k) { return {Family::Pprime, k, 0, 1, nullptr}; }

FamilySpec FamilySpec::product(const FamilySpec& inner, long long l) {
    return {Family::Product, 0, 0, l, std::make_shared<const FamilySpec>(inner)};
}

namespace {

std::vector<long long> parse_params(std::string_view s, std::string_view whole) {
    std::vector<long long> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw SpecError("bad parameters in spec: " + std::string(whole));
        if (cur.size() > 12) throw SpecError("parameter too large in spec: " + std::string(whole));
        out.push_back(std::stoll(cur));
        cur.clear();
    };
    for (char c : s) {
        if (std::isdigit((unsigned char)c)) {
            cur += c;
        } else if (c == ',') {
            flush();
        } else {
            throw SpecError("bad character in spec: " + std::string(whole));
        }
    }
    flush();
    return out;
}

FamilySpec parse_base(std::string_view s, std::string_view whole) {
    auto colon = s.find(':');
    std::string head(s.substr(0, colon));
    std::vector<long long> p;
    if (colon != std::string_view::npos) p = parse_params(s.substr(colon + 1), whole);
    auto want = [&](std::size_t n) {
        if (p.size() != n) throw SpecError("wrong number of parameters for " + head + " in spec: " + std::string(whole));
    };
    if (head == "C") {
        if (p.size() == 1 && p[0] == 1) return FamilySpec::cyclic(1, 0);
        want(2);
        return FamilySpec::cyclic(p[0], p[1]);
    }
    if (head == "BD") {
        want(1);
        return FamilySpec::binary_dihedral(p[0]);
    }
    if (head == "D") {
        want(2);
        return FamilySpec::d(p[0], p[1]);
    }
    if (head == "P") {
        want(1);
        return FamilySpec::pprime(p[0]);
    }
    if (head == "BT" || head == "BO" || head == "BI") {
        want(0);
        if (head == "BT") return FamilySpec::bt();
        if (head == "BO") return FamilySpec::bo();
        return FamilySpec::bi();
    }
    throw SpecError("unknown group family in spec: " + std::string(whole));
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace((unsigned char)c)) s += c;
    FamilySpec spec;
    auto x = s.find("xC:");
    if (x != std::string::npos) {
        FamilySpec inner = parse_base(std::string_view(s).substr(0, x), text);
        auto p = parse_params(std::string_view(s).substr(x + 3), text);
        if (p.size() != 1) throw SpecError("product needs a single cyclic order in spec: " + std::string(text));
        spec = product(inner, p[0]);
    } else {
        spec = parse_base(s, text);
    }
    spec.validate();
    return spec;
}

std::string FamilySpec::str() const {
    switch (family) {
        case Family::Cyclic:
            if (a == 1) return "C:1";
            return "C:" + std::to_string(a) + "," + std::to_string(b);
        case Family::BinaryDihedral: return "BD:" + std::to_string(a);
        case Family::BinaryTetrahedral: return "BT";
        case Family::BinaryOctahedral: return "BO";
        case Family::BinaryIcosahedral: return "BI";
        case Family::D: return "D:" + std::to_string(a) + "," + std::to_string(b);
        case Family::Pprime: return "P:" + std::to_string(a);
        case Family::Product: return inner->str() + "xC:" + std::to_string(l);
    }
    return "?";
}

void FamilySpec::validate() const {
    auto fail = [&](const std::string& why) { throw SpecError("invalid parameters for " + str() + ": " + why); };
    switch (family) {
        case Family::Cyclic:
            if (a == 1 && b == 0) return;
            if (!(0 < b && b < a)) fail("need 0 < q < n");
            if (std::gcd(a, b) != 1) fail("need gcd(n, q) = 1");
            return;
        case Family::BinaryDihedral:
            if (a < 2) fail("need q >= 2");
            return;
        case Family::D:
            if (a < 2) fail("need k > 1");
            if (b < 1) fail("need r >= 1");
            if (a > 20) fail("k too large");
            return;
        case Family::Pprime:
            if (a < 2) fail("need k >= 2");
            if (a > 12) fail("k too large");
            return;
        case Family::Product:
            if (!inner || inner->family == Family::Product) fail("inner group must be a base family");
            inner->validate();
            if (l < 2) fail("need l >= 2");
            if (std::gcd(l, inner->expected_order()) != 1) fail("l must be coprime to the order of the inner group");
            return;
        default: return;
    }
}

long long FamilySpec::expected_order() const {
    switch (family) {
        case Family::Cyclic: return a;
        case Family::BinaryDihedral: return 4 * a;
        case Family::BinaryTetrahedral: return 24;
        case Family::BinaryOctahedral: return 48;
        case Family::BinaryIcosahedral: return 120;
        case Family::D: return (2LL << a) * (2 * b + 1);
        case Family::Pprime: {
            long long p = 8;
            for (long long i = 0; i < a; ++i) p *= 3;
            return p;
        }
        case Family::Product: return inner->expected_order() * l;
    }
    return 0;
}

std::string FamilySpec::family_name() const {
    switch (family) {
        case Family::Cyclic: return "Cyclic";
        case Family::BinaryDihedral: return "BinaryDihedral";
        case Family::BinaryTetrahedral: return "BinaryTetrahedral";
        case Family::BinaryOctahedral: return "BinaryOctahedral";
        case Family::BinaryIcosahedral: return "BinaryIcosahedral";
        case Family::D: return "D";
        case Family::Pprime: return "Pprime";
        case Family::Product: return "ProductWithCyclic";
    }
    return "?";
}

nlohmann::json FamilySpec::params_json() const {
    switch (family) {
        case Family::Cyclic: return {{"n", a}, {"q", b}};
        case Family::BinaryDihedral: return {{"q", a}};
        case Family::D: return {{"k", a}, {"r", b}};
        case Family::Pprime: return {{"k", a}};
        case Family::Product:
            return {{"inner", {{"family", inner->family_name()}, {"params", inner->params_json()}}}, {"l", l}};
        default: return nlohmann::json::object();
    }
}

bool FamilySpec::is_d_family() const { return base().family == Family::D; }

bool operator==(const FamilySpec& x, const FamilySpec& y) {
    if (x.family != y.family) return false;
    if (x.family == Family::Product) return x.l == y.l && *x.inner == *y.inner;
    return x.a == y.a && x.b == y.b;
}

}  // namespace spherex
