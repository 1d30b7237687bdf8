#pragma once

#include <string>
#include <vector>

namespace glie::braid {

// Braid word on n strands: letter +i means sigma_i, -i means sigma_i^{-1},
// 1 <= i <= n-1.
struct BraidWord {
  int strands = 0;
  std::vector<int> letters;
};

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& a);
BraidWord power(const BraidWord& a, int e);

// Freely reduced word in x_1..x_n: letter +g means x_g, -g means x_g^{-1}.
struct FreeGroupWord {
  std::vector<int> letters;
};

bool operator==(const FreeGroupWord& a, const FreeGroupWord& b);

FreeGroupWord reduce(const FreeGroupWord& w);
FreeGroupWord inverse(const FreeGroupWord& w);

// Endomorphism of the free group F_n given by the images of the generators;
// images are stored freely reduced.
struct FreeGroupEndomorphism {
  std::vector<FreeGroupWord> images;
};

bool operator==(const FreeGroupEndomorphism& a, const FreeGroupEndomorphism& b);

FreeGroupEndomorphism identity_endomorphism(int n);
FreeGroupWord apply(const FreeGroupEndomorphism& e, const FreeGroupWord& w);
// f followed by g: images of f rewritten through g
FreeGroupEndomorphism compose(const FreeGroupEndomorphism& f, const FreeGroupEndomorphism& g);

// Faithful action on F_n: sigma_i sends x_i -> x_i x_{i+1} x_i^{-1},
// x_{i+1} -> x_i and fixes the other generators.
FreeGroupEndomorphism artin_action(const BraidWord& b);

// Equality in the braid group of the disc, decided through the Artin action.
bool braids_equal(const BraidWord& a, const BraidWord& b);

// a_{i,j} = sigma_{j-1} ... sigma_{i+1} sigma_i^2 sigma_{i+1}^{-1} ... sigma_{j-1}^{-1}
BraidWord pure_generator_word(int i, int j, int n);

// Delta = Pi_{n-1} ... Pi_1 with Pi_t = sigma_1 ... sigma_t
BraidWord delta_word(int n);

// (a_{1,2} a_{1,3} ... a_{1,n})(a_{2,3} ... a_{2,n}) ... (a_{n-1,n})
BraidWord delta_squared_product(int n);

std::vector<int> permutation_of(const BraidWord& b);  // image of each strand, 1-based
long long exponent_sum(const BraidWord& b);

struct CheckItem {
  std::string label;
  bool pass = false;
};

struct CheckReport {
  std::vector<CheckItem> items;
  bool all_pass() const;
};

// All four families of Burau relations over valid index tuples, including the
// i < k < l < j commuting case.
CheckReport verify_burau_relations(int n);

// (sigma_1 ... sigma_{n-1})^n = Delta^2 in the disc braid group.
bool verify_magnus_equivalence(int n);

// Delta^2 commutes with every generator.
bool centrality_check(int n);

struct SphereSanity {
  std::vector<int> permutation;
  long long exponent_sum = 0;
  bool permutation_is_identity = false;
};

// w = sigma_1 ... sigma_{n-2} sigma_{n-1}^2 sigma_{n-2} ... sigma_1 is a pure
// braid with exponent sum 2(n-1), hence nontrivial in the disc group.
SphereSanity sphere_relator_sanity(int n);

}  // namespace glie::braid
