#pragma once

#include "spherex/group.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace spherex {

// A word in single-letter generator names: sequence of (name, exponent).
// Syntax: letters, optional ^int (may be negative), parentheses with an
// optional exponent, "1" for the identity; spaces and '*' are ignored.
//   "x^2", "(xy)^3", "y^-1 x y", "1"
struct Word {
    std::vector<std::pair<char, long long>> letters;
    static Word parse(std::string_view text);
    std::string str() const;
};

// Relation chain "a = b = c": all sides are equal. A single side means "= 1".
struct Relation {
    std::vector<Word> sides;
    std::string text;
    static Relation parse(std::string_view text);
};

struct Presentation {
    std::vector<char> generators;
    std::vector<Relation> relations;
    // generators as a string of letters, e.g. "xy"
    static Presentation parse(std::string_view generators, const std::vector<std::string>& relations);
};

// Evaluate a word in g, with generator letters bound to elements.
Elem evaluate(const Word& w, const std::map<char, Elem>& binding, const MatGroup& g);

// Evaluate a word in g's own generator names (which must be single letters).
Elem evaluate_in_group(const Word& w, const MatGroup& g);

struct IsoCheckResult {
    bool relations_hold = false;
    bool surjective = false;
    std::string detail;  // first failing relation, if any
    bool ok() const { return relations_hold && surjective; }
};

// Checks that assigning each presentation generator to a word in g's generators
// satisfies all relations and that the images generate g.
// Throws ParseError for a relation using an undeclared generator.
IsoCheckResult verify_isomorphism(const Presentation& p, const std::map<char, std::string>& assignment, const MatGroup& g);

// Defining presentation of a family in the group's own generator letters.
//   C:n     g^n
//   BD:q    (bc)^2 = b^2 = c^q
//   D:k,r   x^(2^(k+1)), y^(2r+1), x y x^-1 = y^-1
//   P:k     x^2 = (xy)^2 = y^2, z x z^-1 = y, z y z^-1 = xy, z^(3^k)
//   base x C:l   base relations, w commuting with each generator, w^l (or w^2l)
// BT, BO and BI are built from generators with no short presentation in those
// letters; they throw SpecError.
Presentation family_presentation(const FamilySpec& spec);

// Evaluate a word on matrices of finite order; inverses are taken as positive
// powers, so the images need not be unitary. `order_bound` caps the search.
CycMatrix evaluate_matrices(const Word& w, const std::map<char, CycMatrix>& binding, long long order_bound);

}  // namespace spherex
