#pragma once

#include "spherex/group.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spherex {

// A class function: one value per conjugacy class, in the group's class order.
class Character {
public:
    Character() = default;
    Character(GroupPtr g, std::vector<Cyc> values);

    const GroupPtr& group() const { return g_; }
    const std::vector<Cyc>& values() const { return v_; }
    const Cyc& operator[](std::size_t c) const { return v_[c]; }
    const Cyc& at_element(Elem e) const { return v_[g_->class_of(e)]; }

    // Value at the identity; throws if it is not a positive integer.
    long long degree() const;

    Character conj() const;

    friend Character operator*(const Character& a, const Character& b);
    friend Character operator+(const Character& a, const Character& b);
    friend Character operator-(const Character& a, const Character& b);
    friend Character operator*(const Cyc& c, const Character& a);
    friend bool operator==(const Character& a, const Character& b) { return a.g_ == b.g_ && a.v_ == b.v_; }

    nlohmann::json to_json() const;

private:
    GroupPtr g_;
    std::vector<Cyc> v_;
};

Character trivial_character(const GroupPtr& g);
Character natural_character(const GroupPtr& g);
// The degree-1 character sending the i-th chosen abelianization generator to zeta_{f_i}^{j_i}.
Character linear_character(const GroupPtr& g, const std::vector<int>& exponents);
std::vector<Character> linear_characters(const GroupPtr& g);

// (1/|G|) sum_g a(g) conj(b(g)). Throws on group mismatch.
Cyc char_inner_product(const Character& a, const Character& b);
// The inner product as an integer; throws InternalError if it is not one.
long long char_multiplicity(const Character& a, const Character& b);

// Determinant character via Newton's identities on power sums chi(g^k).
Character det_character(const Character& chi);

struct Irrep {
    std::string label;
    // images of the group generators, in generator order (empty if character-only)
    std::vector<CycMatrix> generator_images;
    Character character;
    // for Gamma x C_l: index into the inner catalog and the exponent j of alpha_j
    std::optional<std::pair<std::size_t, int>> product_factors;

    bool has_matrices() const { return !generator_images.empty() || character.group()->generators().empty(); }
    long long degree() const { return character.degree(); }
    // Image of an element, built from the generator images along its word.
    CycMatrix image(Elem e) const;
};

// Pointwise determinant when matrices exist, Newton's identities otherwise.
Character det_character(const Irrep& r);

struct Catalog {
    GroupPtr group;
    std::vector<Irrep> irreps;
    const Irrep& find(const std::string& label) const;
    std::optional<std::size_t> index_of(const std::string& label) const;
};

using CatalogPtr = std::shared_ptr<const Catalog>;

// The full list of irreducible representations with their usual labels.
CatalogPtr irrep_catalog(const GroupPtr& g);

// Character-only catalog built from linear characters and tensor products with
// the natural character, peeling known constituents by inner products.
std::vector<Character> burnside_brauer(const GroupPtr& g, int max_degree = 12);

// Multiplicities of catalog irreps in a * b, as (label, multiplicity) in catalog order.
std::vector<std::pair<std::string, long long>> tensor_decompose(const Character& a, const Character& b, const Catalog& cat);

// Checks M(e) M(g) = M(e g) for all elements and generators.
bool is_homomorphism(const Irrep& r);

// Whether the generator images satisfy the defining relations of the family.
bool satisfies_family_relations(const Irrep& r);

}  // namespace spherex
