#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "glie/zmodule.hpp"

using namespace glie;
using namespace glie::zmodule;

namespace {

IntMatrix matrix(std::initializer_list<std::initializer_list<long long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.begin()->size() : 0;
  IntMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long long v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

std::vector<Int> vec(std::initializer_list<long long> vals) {
  return std::vector<Int>(vals.begin(), vals.end());
}

// Independent oracle: cofactor expansion determinant.
Int det_cofactor(const std::vector<std::vector<Int>>& a) {
  std::size_t n = a.size();
  if (n == 1) return a[0][0];
  Int total = 0;
  for (std::size_t p = 0; p < n; ++p) {
    if (a[0][p] == 0) continue;
    std::vector<std::vector<Int>> minor(n - 1, std::vector<Int>(n - 1));
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t jj = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != p) minor[i - 1][jj++] = a[i][j];
    }
    Int term = a[0][p] * det_cofactor(minor);
    total += (p % 2 == 0) ? term : -term;
  }
  return total;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> entry(-9, 9);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = entry(rng);
  return m;
}

}  // namespace

TEST_CASE("hermite form pinned cases") {
  auto b1 = hermite_form(matrix({{2, 0}, {0, 3}}));
  CHECK(b1.rank() == 2);
  CHECK(b1.rows()[0] == SparseVec{{0, 2}});
  CHECK(b1.rows()[1] == SparseVec{{1, 3}});

  // [[1,1],[1,-1]] -> [[1,1],[0,2]]
  auto b2 = hermite_form(matrix({{1, 1}, {1, -1}}));
  CHECK(b2.rank() == 2);
  CHECK(b2.rows()[0] == SparseVec{{0, 1}, {1, 1}});
  CHECK(b2.rows()[1] == SparseVec{{1, 2}});

  auto b3 = hermite_form(matrix({{0, 0}}));
  CHECK(b3.ambient() == 2);
  CHECK(b3.rank() == 0);
}

TEST_CASE("smith invariants pinned cases") {
  auto q1 = smith_invariants(matrix({{2, 2, 2}}));
  CHECK(q1.free_rank == 2);
  CHECK(q1.torsion == std::vector<Int>{2});

  auto q2 = smith_invariants(matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(q2.free_rank == 0);
  CHECK(q2.torsion.empty());

  IntMatrix empty(0, 5);
  auto q3 = smith_invariants(empty);
  CHECK(q3.free_rank == 5);
  CHECK(q3.torsion.empty());
}

TEST_CASE("lattice membership pinned cases") {
  auto b = hermite_form(matrix({{1, 1}, {0, 2}}));
  CHECK(lattice_member(b, vec({1, 3})));
  CHECK_FALSE(lattice_member(b, vec({0, 1})));
  CHECK(lattice_member(b, vec({0, 0})));
  CHECK_THROWS_AS(lattice_member(b, vec({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("hermite form is canonical under row mixing") {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> small(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + trial % 4, c = 1 + (trial / 2) % 5;
    IntMatrix m = random_matrix(rng, r, c);
    auto base = hermite_form(m);

    // append random integer combinations of the rows, then permute
    IntMatrix mixed(r + 2, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) mixed.at(i, j) = m.at(i, j);
    for (std::size_t e = 0; e < 2; ++e)
      for (std::size_t i = 0; i < r; ++i) {
        int coef = small(rng);
        for (std::size_t j = 0; j < c; ++j) mixed.at(r + e, j) += coef * m.at(i, j);
      }
    std::vector<std::size_t> perm(mixed.rows);
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    IntMatrix shuffled(mixed.rows, c);
    for (std::size_t i = 0; i < mixed.rows; ++i)
      for (std::size_t j = 0; j < c; ++j) shuffled.at(i, j) = mixed.at(perm[i], j);

    CHECK(hermite_form(shuffled) == base);
  }
}

TEST_CASE("hermite form is idempotent") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix m = random_matrix(rng, 3, 4);
    auto b = hermite_form(m);
    IntMatrix again(b.rank(), 4);
    for (std::size_t i = 0; i < b.rank(); ++i)
      for (const auto& [col, coef] : b.rows()[i]) again.at(i, col) = coef;
    CHECK(hermite_form(again) == b);
  }
}

TEST_CASE("incremental append equals batch form") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix m = random_matrix(rng, 5, 4);
    SubgroupBasis incremental(4);
    for (std::size_t i = 0; i < m.rows; ++i) {
      std::vector<Int> row(4);
      for (std::size_t j = 0; j < 4; ++j) row[j] = m.at(i, j);
      incremental.add_row(row);
      incremental.canonicalize();
    }
    CHECK(incremental == hermite_form(m));
  }
}

TEST_CASE("smith divisibility chain and rank consistency") {
  std::mt19937 rng(2211);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix m = random_matrix(rng, 4, 4);
    auto q = smith_invariants(m);
    auto b = hermite_form(m);
    CHECK(q.free_rank == m.cols - b.rank());
    for (std::size_t i = 0; i + 1 < q.torsion.size(); ++i) {
      CHECK(q.torsion[i] >= 2);
      CHECK(q.torsion[i + 1] % q.torsion[i] == 0);
    }
  }
}

TEST_CASE("product of invariant factors equals the determinant") {
  std::mt19937 rng(90210);
  int nonsingular = 0;
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix m = random_matrix(rng, 4, 4);
    std::vector<std::vector<Int>> a(4, std::vector<Int>(4));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) a[i][j] = m.at(i, j);
    Int det = det_cofactor(a);
    if (det == 0) continue;
    ++nonsingular;
    auto q = smith_invariants(m);
    CHECK(q.free_rank == 0);
    Int prod = 1;  // factors equal to 1 contribute nothing
    for (const auto& f : q.torsion) prod *= f;
    CHECK(prod == abs(det));
  }
  CHECK(nonsingular > 20);
}

TEST_CASE("membership needs exact pivot division") {
  SubgroupBasis b(3);
  b.add_row(vec({2, 0, 4}));
  b.add_row(vec({0, 0, 8}));
  b.canonicalize();
  CHECK(b.member(vec({2, 0, 12})));
  CHECK_FALSE(b.member(vec({1, 0, 6})));
  CHECK_FALSE(b.member(vec({2, 1, 4})));
  CHECK_FALSE(b.member(vec({2, 0, 6})));
}

TEST_CASE("sparse and dense row insertion agree") {
  SubgroupBasis s(4);
  s.add_row(SparseVec{{1, 3}, {3, -6}});
  s.add_row(SparseVec{{1, 1}, {2, 1}});
  s.canonicalize();
  SubgroupBasis d(4);
  d.add_row(vec({0, 3, 0, -6}));
  d.add_row(vec({0, 1, 1, 0}));
  d.canonicalize();
  CHECK(s == d);
}
