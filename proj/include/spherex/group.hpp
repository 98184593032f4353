#pragma once

#include "spherex/family.hpp"
#include "spherex/matrix.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace spherex {

using Elem = std::uint32_t;

struct NamedMatrix {
    std::string name;
    CycMatrix matrix;
};

class MatGroup;

// Decomposition of Gamma x C_l: element = inner element * zeta_l^j.
struct ProductStructure {
    std::shared_ptr<const MatGroup> inner;
    long long l = 1;
    std::vector<Elem> inner_index;
    std::vector<int> cyclic_exponent;
};

struct AbGenerator {
    std::string name;
    Elem element = 0;
    std::vector<int> word;  // generator indices
    int order = 1;          // order of the image in Ab
};

struct Abelianization {
    std::vector<int> factors;                 // orders of the chosen generators' images
    std::vector<long long> invariant_factors;  // Smith normal form, d1 | d2 | ...
    std::vector<AbGenerator> generators;
    std::vector<std::vector<int>> projection;  // element -> residues mod factors
    std::vector<Elem> commutator_subgroup;
    std::vector<std::uint32_t> coset;  // element -> coset id
    long long order() const;
};

// A finite subgroup of U(2) (or any finite matrix group), fully enumerated.
// Elements are numbered breadth-first from the identity (index 0), multiplying
// on the right by generators in declared order.
class MatGroup {
public:
    static std::shared_ptr<const MatGroup> build(const FamilySpec& spec);
    static std::shared_ptr<const MatGroup> build(const FamilySpec& spec, std::size_t cap);
    static std::shared_ptr<const MatGroup> from_generators(std::vector<NamedMatrix> gens, std::size_t cap);
    static std::shared_ptr<const MatGroup> from_generators(std::vector<NamedMatrix> gens);
    // SPHEREX_ELEMENT_CAP, default 100000.
    static std::size_t default_element_cap();

    const std::optional<FamilySpec>& spec() const { return spec_; }
    std::string name() const;
    std::size_t order() const { return elems_.size(); }
    int dim() const { return elems_.front().dim(); }

    const std::vector<NamedMatrix>& generators() const { return gens_; }
    int generator_index(const std::string& name) const;
    Elem generator_element(int g) const { return gen_elem_[g]; }

    const CycMatrix& element(Elem i) const { return elems_[i]; }
    std::optional<Elem> index_of(const CycMatrix& m) const;

    Elem right_mul_gen(Elem i, int g) const { return right_[std::size_t(i) * gens_.size() + g]; }
    Elem multiply(Elem i, Elem j) const;
    Elem inverse(Elem i) const { return inv_[i]; }
    Elem power(Elem i, long long k) const;
    int element_order(Elem i) const;
    Elem conjugate(Elem x, Elem g) const;  // g x g^-1

    std::vector<int> word(Elem i) const;
    std::string word_string(Elem i) const;
    std::string word_string(const std::vector<int>& w) const;

    const std::vector<std::vector<Elem>>& classes() const { return classes_; }
    std::size_t num_classes() const { return classes_.size(); }
    std::size_t class_of(Elem i) const { return class_of_[i]; }
    Elem class_rep(std::size_t c) const { return classes_[c].front(); }
    std::size_t class_size(std::size_t c) const { return classes_[c].size(); }
    std::size_t class_power(std::size_t c, long long k) const;

    // Full Cayley table, row-major; built on first use. Throws ResourceError
    // for groups larger than 8192 elements.
    const std::vector<Elem>& multiplication_table() const;

    bool fixed_point_free() const { return fixed_point_free_; }
    bool contains_minus_identity() const;

    // Subgroup generated by the given elements, sorted.
    std::vector<Elem> generated_subgroup(const std::vector<Elem>& gens) const;
    std::vector<Elem> commutator_subgroup_bruteforce() const;

    const Abelianization& abelianization() const;
    const ProductStructure* product() const { return product_ ? &*product_ : nullptr; }

    // For BT, BO, BI: elements b, c with (bc)^2 = b^3 = c^t generating the group,
    // first such pair in element order.
    std::optional<std::pair<Elem, Elem>> polyhedral_bc() const;

    // Trace of the natural representation per class.
    std::vector<Cyc> natural_character() const;

    nlohmann::json descriptor() const;

private:
    MatGroup() = default;
    void close(std::size_t cap);
    void compute_classes();
    Abelianization compute_abelianization() const;

    std::optional<FamilySpec> spec_;
    std::vector<NamedMatrix> gens_;
    std::vector<Elem> gen_elem_;
    std::vector<CycMatrix> elems_;
    std::unordered_map<CycMatrix, Elem> index_;
    std::vector<Elem> parent_;
    std::vector<int> parent_gen_;
    std::vector<Elem> right_;
    std::vector<Elem> inv_;
    std::vector<std::vector<Elem>> classes_;
    std::vector<std::size_t> class_of_;
    bool fixed_point_free_ = false;
    std::optional<ProductStructure> product_;
    std::optional<std::pair<Elem, Elem>> bc_;

    mutable std::once_flag table_once_, ab_once_;
    mutable std::vector<Elem> table_;
    mutable std::optional<Abelianization> ab_;
};

using GroupPtr = std::shared_ptr<const MatGroup>;

// Generator matrices used for a family, in declared order.
std::vector<NamedMatrix> family_generators(const FamilySpec& spec);

}  // namespace spherex
