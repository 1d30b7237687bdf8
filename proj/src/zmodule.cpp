#include "glie/zmodule.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace glie::zmodule {

namespace {

// g = x a + y b with g > 0 (a, b not both zero).
std::tuple<Int, Int, Int> extended_gcd(const Int& a, const Int& b) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

// floor(b / p) for p > 0
Int floordiv(const Int& b, const Int& p) {
  Int q = b / p;
  if (b % p != 0 && b < 0) --q;
  return q;
}

SparseVec axpby(const Int& alpha, const SparseVec& u, const Int& beta, const SparseVec& v) {
  SparseVec out;
  out.reserve(u.size() + v.size());
  auto iu = u.begin();
  auto iv = v.begin();
  while (iu != u.end() || iv != v.end()) {
    if (iv == v.end() || (iu != u.end() && iu->first < iv->first)) {
      Int c = alpha * iu->second;
      if (c != 0) out.emplace_back(iu->first, std::move(c));
      ++iu;
    } else if (iu == u.end() || iv->first < iu->first) {
      Int c = beta * iv->second;
      if (c != 0) out.emplace_back(iv->first, std::move(c));
      ++iv;
    } else {
      Int c = alpha * iu->second + beta * iv->second;
      if (c != 0) out.emplace_back(iu->first, std::move(c));
      ++iu;
      ++iv;
    }
  }
  return out;
}

}  // namespace

SparseVec to_sparse(const std::vector<Int>& dense) {
  SparseVec out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) out.emplace_back(static_cast<std::uint32_t>(i), dense[i]);
  return out;
}

std::vector<Int> to_dense(const SparseVec& v, std::size_t ambient) {
  std::vector<Int> out(ambient);
  for (const auto& [c, coef] : v) out.at(c) = coef;
  return out;
}

bool operator==(const QuotientInvariants& a, const QuotientInvariants& b) {
  return a.free_rank == b.free_rank && a.torsion == b.torsion;
}

std::size_t SubgroupBasis::pivot_index(std::uint32_t col) const {
  auto it = std::lower_bound(leads_.begin(), leads_.end(), col);
  if (it != leads_.end() && *it == col) return static_cast<std::size_t>(it - leads_.begin());
  return rows_.size();
}

SparseVec SubgroupBasis::collect_scratch(std::uint32_t from_col) {
  std::sort(dirty_.begin(), dirty_.end());
  dirty_.erase(std::unique(dirty_.begin(), dirty_.end()), dirty_.end());
  SparseVec out;
  for (auto c : dirty_)
    if (c >= from_col && scratch_[c] != 0) out.emplace_back(c, scratch_[c]);
  return out;
}

void SubgroupBasis::clear_scratch() {
  for (auto c : dirty_) scratch_[c] = 0;
  dirty_.clear();
}

void SubgroupBasis::add_row(SparseVec row) {
  if (row.empty()) return;
  if (row.back().first >= ambient_) throw std::invalid_argument("add_row: column out of range");
  if (scratch_.size() < ambient_) scratch_.resize(ambient_);

  std::uint32_t start = row.front().first;
  for (auto& [c, v] : row) {
    scratch_[c] = std::move(v);
    dirty_.push_back(c);
  }

  for (std::uint32_t c = start; c < ambient_; ++c) {
    if (scratch_[c] == 0) continue;
    std::size_t idx = pivot_index(c);
    if (idx == rows_.size()) {
      SparseVec fresh = collect_scratch(c);
      clear_scratch();
      auto pos = std::lower_bound(leads_.begin(), leads_.end(), c) - leads_.begin();
      leads_.insert(leads_.begin() + pos, c);
      rows_.insert(rows_.begin() + pos, std::move(fresh));
      canonical_ = false;
      return;
    }
    const SparseVec& pivot_row = rows_[idx];
    const Int& a = pivot_row.front().second;
    const Int& b = scratch_[c];
    if (b % a == 0) {
      Int q = b / a;
      for (const auto& [col, coef] : pivot_row) {
        Int& slot = scratch_[col];
        if (slot == 0) dirty_.push_back(col);
        slot -= q * coef;
      }
    } else {
      // pivot shrinks to the gcd; the remainder continues at a later column
      SparseVec v = collect_scratch(c);
      auto [g, x, y] = extended_gcd(a, b);
      SparseVec new_pivot = axpby(x, pivot_row, y, v);
      SparseVec rest = axpby(a / g, v, -(b / g), pivot_row);
      clear_scratch();
      rows_[idx] = std::move(new_pivot);
      canonical_ = false;
      for (auto& [col, coef] : rest) {
        scratch_[col] = std::move(coef);
        dirty_.push_back(col);
      }
    }
  }
  clear_scratch();
}

void SubgroupBasis::add_row(const std::vector<Int>& dense) {
  if (dense.size() != ambient_) throw std::invalid_argument("add_row: dimension mismatch");
  add_row(to_sparse(dense));
}

bool SubgroupBasis::member(const std::vector<Int>& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("member: dimension mismatch");
  std::vector<Int> buf = v;
  for (std::uint32_t c = 0; c < ambient_; ++c) {
    if (buf[c] == 0) continue;
    std::size_t idx = pivot_index(c);
    if (idx == rows_.size()) return false;
    const Int& a = rows_[idx].front().second;
    if (buf[c] % a != 0) return false;
    Int q = buf[c] / a;
    for (const auto& [col, coef] : rows_[idx]) buf[col] -= q * coef;
  }
  return true;
}

bool SubgroupBasis::member(const SparseVec& v) const {
  if (!v.empty() && v.back().first >= ambient_)
    throw std::invalid_argument("member: dimension mismatch");
  return member(to_dense(v, ambient_));
}

void SubgroupBasis::canonicalize() {
  if (canonical_) return;
  if (scratch_.size() < ambient_) scratch_.resize(ambient_);

  for (auto& row : rows_)
    if (row.front().second < 0)
      for (auto& [c, coef] : row) coef = -coef;

  // Reduce every entry above a pivot into [0, pivot), later pivots in order.
  for (std::size_t j = 0; j + 1 < rows_.size(); ++j) {
    for (const auto& [col, coef] : rows_[j]) {
      scratch_[col] = coef;
      dirty_.push_back(col);
    }
    bool changed = false;
    for (std::size_t i = j + 1; i < rows_.size(); ++i) {
      const Int& b = scratch_[leads_[i]];
      if (b == 0) continue;
      Int q = floordiv(b, rows_[i].front().second);
      if (q == 0) continue;
      changed = true;
      for (const auto& [col, coef] : rows_[i]) {
        Int& slot = scratch_[col];
        if (slot == 0) dirty_.push_back(col);
        slot -= q * coef;
      }
    }
    if (changed) rows_[j] = collect_scratch(leads_[j]);
    clear_scratch();
  }
  canonical_ = true;
}

bool operator==(const SubgroupBasis& a, const SubgroupBasis& b) {
  if (a.ambient() != b.ambient()) return false;
  auto canonical_rows = [](const SubgroupBasis& s) -> std::vector<SparseVec> {
    if (s.is_canonical()) return s.rows();
    SubgroupBasis copy = s;
    copy.canonicalize();
    return copy.rows();
  };
  return canonical_rows(a) == canonical_rows(b);
}

SubgroupBasis hermite_form(const IntMatrix& m) {
  SubgroupBasis b(m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    SparseVec row;
    for (std::size_t j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) row.emplace_back(static_cast<std::uint32_t>(j), m.at(i, j));
    b.add_row(std::move(row));
  }
  b.canonicalize();
  return b;
}

namespace {

// Classical elimination with smallest-pivot selection; returns the nonzero
// diagonal of the Smith form, positive, each factor dividing the next.
std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<Int> diag;

  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    while (true) {
      std::size_t pi = rows, pj = cols;
      Int best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] == 0) continue;
          Int mag = abs(a[i][j]);
          if (best == 0 || mag < best) {
            best = mag;
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) return diag;  // submatrix is zero
      std::swap(a[t], a[pi]);
      if (pj != t)
        for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Int q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      if (!clean) continue;
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Int q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][j]);
          clean = false;
        }
      }
      if (!clean) continue;

      // the pivot must divide every remaining entry
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols && divides; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
            divides = false;
          }
      if (divides) break;
    }
    if (a[t][t] < 0)
      for (std::size_t j = t; j < cols; ++j) a[t][j] = -a[t][j];
    diag.push_back(a[t][t]);
  }
  return diag;
}

}  // namespace

QuotientInvariants cokernel_invariants(const SubgroupBasis& basis) {
  const SubgroupBasis* src = &basis;
  SubgroupBasis canon;
  if (!basis.is_canonical()) {
    canon = basis;
    canon.canonicalize();
    src = &canon;
  }

  QuotientInvariants out;
  out.free_rank = src->ambient() - src->rank();

  // In canonical form a column holding a unit pivot is a standard basis
  // vector, so the row and the column split off with invariant factor 1.
  std::vector<const SparseVec*> nonunit;
  std::vector<bool> drop_col(src->ambient(), false);
  for (const auto& row : src->rows()) {
    if (row.front().second == 1)
      drop_col[row.front().first] = true;
    else
      nonunit.push_back(&row);
  }
  if (nonunit.empty()) return out;

  std::vector<std::uint32_t> colmap(src->ambient(), 0);
  std::uint32_t ncols = 0;
  for (std::size_t c = 0; c < src->ambient(); ++c)
    if (!drop_col[c]) colmap[c] = ncols++;

  std::vector<std::vector<Int>> dense(nonunit.size(), std::vector<Int>(ncols));
  for (std::size_t i = 0; i < nonunit.size(); ++i)
    for (const auto& [c, coef] : *nonunit[i]) dense[i][colmap[c]] = coef;

  for (const auto& d : smith_diagonal(std::move(dense)))
    if (d > 1) out.torsion.push_back(d);
  return out;
}

QuotientInvariants smith_invariants(const IntMatrix& m) {
  return cokernel_invariants(hermite_form(m));
}

bool lattice_member(const SubgroupBasis& b, const std::vector<Int>& v) {
  return b.member(v);
}

}  // namespace glie::zmodule
