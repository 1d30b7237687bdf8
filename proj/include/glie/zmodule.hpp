#pragma once

#include <cstdint>
#include <vector>

#include "glie/bigint.hpp"

namespace glie::zmodule {

// Sparse integer vector: (column, coefficient) pairs sorted by column,
// coefficients nonzero.
using SparseVec = std::vector<std::pair<std::uint32_t, Int>>;

SparseVec to_sparse(const std::vector<Int>& dense);
std::vector<Int> to_dense(const SparseVec& v, std::size_t ambient);

struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Int> data;  // row-major

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  Int& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

struct QuotientInvariants {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1, each dividing the next
};

bool operator==(const QuotientInvariants& a, const QuotientInvariants& b);

// Basis of an integer row lattice, kept in row echelon form with one row per
// pivot column. canonicalize() brings it to the Hermite normal form: positive
// pivots, entries above each pivot reduced into [0, pivot). The canonical form
// depends only on the row lattice, not on how rows were inserted.
class SubgroupBasis {
 public:
  SubgroupBasis() = default;
  explicit SubgroupBasis(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }
  bool is_canonical() const { return canonical_; }
  const std::vector<SparseVec>& rows() const { return rows_; }

  // Reduces the vector against the current basis and inserts the remainder,
  // if nonzero, as a new pivot row. Existing rows change only when a pivot
  // coefficient shrinks to a gcd.
  void add_row(SparseVec row);
  void add_row(const std::vector<Int>& dense);

  bool member(const std::vector<Int>& v) const;
  bool member(const SparseVec& v) const;

  void canonicalize();

 private:
  std::size_t pivot_index(std::uint32_t col) const;  // rows_.size() if absent
  SparseVec collect_scratch(std::uint32_t from_col);
  void clear_scratch();

  std::size_t ambient_ = 0;
  std::vector<SparseVec> rows_;       // sorted by leading column
  std::vector<std::uint32_t> leads_;  // leading column of each row
  bool canonical_ = true;
  std::vector<Int> scratch_;          // dense accumulator reused across calls
  std::vector<std::uint32_t> dirty_;
};

bool operator==(const SubgroupBasis& a, const SubgroupBasis& b);

// Canonical Hermite form of the row lattice of m, zero rows dropped.
SubgroupBasis hermite_form(const IntMatrix& m);

// Invariants of the cokernel Z^cols / rowLattice(m): free rank plus the
// invariant factors exceeding 1, in divisibility order.
QuotientInvariants smith_invariants(const IntMatrix& m);
QuotientInvariants cokernel_invariants(const SubgroupBasis& basis);

bool lattice_member(const SubgroupBasis& b, const std::vector<Int>& v);

}  // namespace glie::zmodule
