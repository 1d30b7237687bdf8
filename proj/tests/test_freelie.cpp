#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "glie/freelie.hpp"

using namespace glie;
using namespace glie::freelie;
using lyndon::Letter;
using lyndon::Word;

namespace {

Word W(std::initializer_list<int> letters) {
  Word w;
  for (int l : letters) w.push_back(static_cast<Letter>(l));
  return w;
}

AssocPolynomial poly(int degree, std::initializer_list<std::pair<Word, long long>> ts) {
  AssocPolynomial p;
  p.degree = degree;
  for (const auto& [w, c] : ts) p.add_term(w, c);
  return p;
}

LieElement random_homogeneous(std::mt19937& rng, int k, int d) {
  const auto& basis = lyndon::lyndon_basis(k, d);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  LieElement x = lie_zero(k, d);
  for (int t = 0; t < 4; ++t) {
    x = add(x, lie_term(k, basis.word(pick(rng)), coeff(rng)));
  }
  return x;
}

}  // namespace

TEST_CASE("expand_tree pinned expansions") {
  using lyndon::make_leaf;
  using lyndon::make_node;

  CHECK(expand_tree(make_leaf(1)) == poly(1, {{W({1}), 1}}));

  auto ab = make_node(make_leaf(0), make_leaf(1));
  CHECK(expand_tree(ab) == poly(2, {{W({0, 1}), 1}, {W({1, 0}), -1}}));

  // a(ab - ba) - (ab - ba)a = aab - 2 aba + baa
  auto a_ab = make_node(make_leaf(0), make_node(make_leaf(0), make_leaf(1)));
  CHECK(expand_tree(a_ab) ==
        poly(3, {{W({0, 0, 1}), 1}, {W({0, 1, 0}), -2}, {W({1, 0, 0}), 1}}));
}

TEST_CASE("to_lyndon_coordinates pinned values") {
  auto c1 = to_lyndon_coordinates(poly(2, {{W({0, 1}), 1}, {W({1, 0}), -1}}), 2);
  CHECK(c1 == lie_term(2, W({0, 1}), 1));

  auto c2 = to_lyndon_coordinates(
      poly(3, {{W({0, 0, 1}), 1}, {W({0, 1, 0}), -2}, {W({1, 0, 0}), 1}}), 2);
  CHECK(c2 == lie_term(2, W({0, 0, 1}), 1));

  auto c3 = to_lyndon_coordinates(poly(2, {{W({1, 0}), 1}, {W({0, 1}), -1}}), 2);
  CHECK(c3 == lie_term(2, W({0, 1}), -1));
}

TEST_CASE("to_lyndon_coordinates rejects non-Lie input") {
  CHECK_THROWS_AS(to_lyndon_coordinates(poly(2, {{W({0, 1}), 1}}), 2), NotALieElement);
  CHECK_THROWS_AS(to_lyndon_coordinates(poly(2, {{W({1, 0}), 1}}), 2), NotALieElement);
  CHECK_THROWS_AS(to_lyndon_coordinates(poly(2, {{W({0, 0}), 1}}), 2), NotALieElement);
  CHECK_THROWS_AS(to_lyndon_coordinates(poly(1, {{W({5}), 1}}), 2), std::invalid_argument);
}

TEST_CASE("bracket pinned values") {
  auto a = lie_generator(2, 0);
  auto b = lie_generator(2, 1);
  CHECK(bracket(a, b) == lie_term(2, W({0, 1}), 1));
  CHECK(bracket(b, a) == lie_term(2, W({0, 1}), -1));

  // [[a,b],a] = -[a,[a,b]]
  auto ab = bracket(a, b);
  CHECK(bracket(ab, a) == lie_term(2, W({0, 0, 1}), -1));

  CHECK(bracket(a, a).is_zero());
  CHECK_THROWS_AS(bracket(a, lie_generator(3, 0)), std::invalid_argument);
}

TEST_CASE("coordinate_vector pinned values") {
  auto ab = lie_term(2, W({0, 1}), 1);
  CHECK(coordinate_vector(ab, 2) == std::vector<Int>{1});

  CHECK(coordinate_vector(lie_zero(2, 3), 3) == std::vector<Int>{0, 0});

  auto x = add(lie_term(2, W({0, 0, 1}), 1), lie_term(2, W({0, 1, 1}), -1));
  CHECK(coordinate_vector(x, 3) == std::vector<Int>{1, -1});

  CHECK_THROWS_AS(coordinate_vector(ab, 3), std::invalid_argument);
}

TEST_CASE("leading term of a Lyndon expansion is the word itself") {
  for (int k = 1; k <= 3; ++k)
    for (int d = 1; d <= 6; ++d)
      for (const auto& w : lyndon::enumerate_lyndon_words(k, d)) {
        const auto& p = lyndon_expansion(w);
        REQUIRE_FALSE(p.terms.empty());
        CHECK(p.terms.begin()->first == w);
        CHECK(p.terms.begin()->second == 1);
      }
}

TEST_CASE("round trip through expansion and elimination") {
  for (int k = 1; k <= 3; ++k)
    for (int d = 1; d <= 6; ++d)
      for (const auto& w : lyndon::enumerate_lyndon_words(k, d)) {
        auto back = to_lyndon_coordinates(expand_tree(lyndon::standard_bracketing(w)), k);
        CHECK(back == lie_term(k, w, 1));
      }
}

TEST_CASE("antisymmetry on random homogeneous elements") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 50; ++trial) {
    int k = 2 + trial % 2;
    int dx = 1 + trial % 4;
    int dy = 1 + (trial / 2) % 4;
    auto x = random_homogeneous(rng, k, dx);
    auto y = random_homogeneous(rng, k, dy);
    CHECK(add(bracket(x, y), bracket(y, x)).is_zero());
  }
}

TEST_CASE("Jacobi identity on random homogeneous elements") {
  std::mt19937 rng(987123);
  const int patterns[4][3] = {{1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {2, 1, 1}};
  for (int trial = 0; trial < 50; ++trial) {
    int k = 2 + trial % 2;
    const int* ds = patterns[trial % 4];
    auto x = random_homogeneous(rng, k, ds[0]);
    auto y = random_homogeneous(rng, k, ds[1]);
    auto z = random_homogeneous(rng, k, ds[2]);
    auto s = add(add(bracket(x, bracket(y, z)), bracket(y, bracket(z, x))),
                 bracket(z, bracket(x, y)));
    CHECK(s.is_zero());
  }
}
