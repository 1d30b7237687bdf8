#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "glie/bigint.hpp"
#include "glie/lyndon.hpp"

namespace glie::freelie {

using lyndon::Word;

// Raised when an associative polynomial is not the expansion of an integer
// Lie element (nonzero remainder or non-Lyndon leading word).
struct NotALieElement : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Homogeneous polynomial in noncommuting variables with integer coefficients.
// No zero coefficients are stored; all words share the same length.
struct AssocPolynomial {
  int degree = 0;
  std::map<Word, Int> terms;

  bool is_zero() const { return terms.empty(); }
  void add_term(const Word& w, const Int& c);
};

bool operator==(const AssocPolynomial& a, const AssocPolynomial& b);

AssocPolynomial mul(const AssocPolynomial& a, const AssocPolynomial& b);
AssocPolynomial commutator(const AssocPolynomial& a, const AssocPolynomial& b);

// leaf -> its one-letter word; (l, r) -> expand(l) expand(r) - expand(r) expand(l)
AssocPolynomial expand_tree(const lyndon::BracketTree& t);

// Memoized expansion of the standard bracketing of a Lyndon word. The leading
// (lexicographically smallest) word of the result is w itself, coefficient 1.
const AssocPolynomial& lyndon_expansion(const Word& w);

// Homogeneous element of the free Lie ring, stored in Lyndon coordinates.
struct LieElement {
  int alphabet = 0;
  int degree = 0;
  std::map<Word, Int> coords;

  bool is_zero() const { return coords.empty(); }
};

bool operator==(const LieElement& a, const LieElement& b);

LieElement lie_zero(int alphabet, int degree);
LieElement lie_generator(int alphabet, int index);
LieElement lie_term(int alphabet, const Word& w, const Int& c);

LieElement add(const LieElement& a, const LieElement& b);
LieElement scale(const LieElement& a, const Int& c);

// Associative image: sum of coords times Lyndon expansions.
AssocPolynomial expand(const LieElement& x);

// Triangular elimination along the leading-term property: repeatedly read off
// the coefficient of the smallest support word (which must be Lyndon) and
// subtract that multiple of its expansion.
LieElement to_lyndon_coordinates(const AssocPolynomial& p, int alphabet);

LieElement bracket(const LieElement& x, const LieElement& y);

// Dense coordinates in the lexicographic Lyndon basis of the given degree.
std::vector<Int> coordinate_vector(const LieElement& x, int degree);

}  // namespace glie::freelie
