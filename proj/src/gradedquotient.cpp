#include "glie/gradedquotient.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "glie/parallel.hpp"

namespace glie::gradedquotient {

using freelie::LieElement;
using lyndon::LyndonBasis;
using zmodule::SparseVec;
using zmodule::SubgroupBasis;

namespace {

SparseVec sparse_coords(const LieElement& x, const LyndonBasis& basis) {
  SparseVec v;
  v.reserve(x.coords.size());
  for (const auto& [w, c] : x.coords) v.emplace_back(basis.index_of(w), c);
  return v;  // map order is lexicographic, which is the basis order
}

// Coordinates of [x_g, w] for every generator g and Lyndon word w of the
// previous degree. Computed once per degree; row assembly only reads it.
std::vector<std::vector<SparseVec>> ad_table(int k, const LyndonBasis& prev_basis,
                                             const LyndonBasis& basis) {
  // warm the expansion memo so workers never write to it
  for (const auto& w : prev_basis.words()) freelie::lyndon_expansion(w);
  for (const auto& w : basis.words()) freelie::lyndon_expansion(w);

  std::vector<std::vector<SparseVec>> ad(k, std::vector<SparseVec>(prev_basis.size()));
  std::size_t total = static_cast<std::size_t>(k) * prev_basis.size();
  parallel::parallel_for(total, [&](std::size_t begin, std::size_t end) {
    for (std::size_t t = begin; t < end; ++t) {
      int g = static_cast<int>(t / prev_basis.size());
      std::size_t i = t % prev_basis.size();
      auto b = freelie::bracket(freelie::lie_generator(k, g),
                                freelie::lie_term(k, prev_basis.word(i), 1));
      ad[g][i] = sparse_coords(b, basis);
    }
  });
  return ad;
}

}  // namespace

bool operator==(const GradedComponentReport& a, const GradedComponentReport& b) {
  return a.degree == b.degree && a.ambient == b.ambient && a.free_rank == b.free_rank &&
         a.torsion == b.torsion;
}

IdealSlice ideal_slice(const presentations::GradedPresentation& p, int d, const IdealSlice* prev) {
  if (d < 1) throw std::invalid_argument("ideal_slice: degree must be >= 1");
  if ((d >= 2) != (prev != nullptr))
    throw std::invalid_argument("ideal_slice: previous slice required exactly for degree >= 2");
  if (prev && prev->degree != d - 1)
    throw std::invalid_argument("ideal_slice: degree mismatch on previous slice");

  const int k = p.alphabet();
  const auto& basis = lyndon::lyndon_basis(k, d);

  std::vector<SparseVec> rows;
  for (const auto& r : p.relations)
    if (r.degree == d) rows.push_back(sparse_coords(r, basis));

  if (d >= 2 && prev->basis.rank() > 0) {
    const auto& prev_basis = lyndon::lyndon_basis(k, d - 1);
    auto ad = ad_table(k, prev_basis, basis);

    const auto& prev_rows = prev->basis.rows();
    std::size_t first = rows.size();
    std::size_t count = static_cast<std::size_t>(k) * prev_rows.size();
    rows.resize(first + count);
    parallel::parallel_for(count, [&](std::size_t begin, std::size_t end) {
      std::vector<Int> scratch(basis.size());
      std::vector<std::uint32_t> dirty;
      for (std::size_t t = begin; t < end; ++t) {
        int g = static_cast<int>(t / prev_rows.size());
        const SparseVec& v = prev_rows[t % prev_rows.size()];
        for (const auto& [col, c] : v)
          for (const auto& [out_col, ad_c] : ad[g][col]) {
            Int& slot = scratch[out_col];
            if (slot == 0) dirty.push_back(out_col);
            slot += c * ad_c;
          }
        std::sort(dirty.begin(), dirty.end());
        SparseVec row;
        for (auto col : dirty) {
          if (scratch[col] != 0) row.emplace_back(col, std::move(scratch[col]));
          scratch[col] = 0;
        }
        dirty.clear();
        rows[first + t] = std::move(row);
      }
    });
  }

  IdealSlice slice;
  slice.degree = d;
  slice.basis = SubgroupBasis(basis.size());
  for (auto& row : rows) slice.basis.add_row(std::move(row));
  slice.basis.canonicalize();
  return slice;
}

std::vector<GradedComponentReport> hilbert_table(const presentations::GradedPresentation& p,
                                                 int max_degree) {
  if (max_degree < 1) throw std::invalid_argument("hilbert_table: max degree must be >= 1");
  std::vector<GradedComponentReport> reports;
  reports.reserve(max_degree);
  IdealSlice prev;
  for (int d = 1; d <= max_degree; ++d) {
    auto start = std::chrono::steady_clock::now();
    IdealSlice slice = ideal_slice(p, d, d >= 2 ? &prev : nullptr);
    auto inv = zmodule::cokernel_invariants(slice.basis);
    GradedComponentReport report;
    report.degree = d;
    report.ambient = slice.basis.ambient();
    report.free_rank = inv.free_rank;
    report.torsion = std::move(inv.torsion);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    reports.push_back(std::move(report));
    prev = std::move(slice);
  }
  return reports;
}

GradedComponentReport graded_component(const presentations::GradedPresentation& p, int d) {
  return hilbert_table(p, d).back();
}

bool central_element_check(const presentations::GradedPresentation& p, const LieElement& z) {
  if (z.alphabet != p.alphabet())
    throw std::invalid_argument("central_element_check: alphabet mismatch");
  if (z.degree != 1) throw std::invalid_argument("central_element_check: z must have degree 1");

  IdealSlice slice1 = ideal_slice(p, 1, nullptr);
  IdealSlice slice2 = ideal_slice(p, 2, &slice1);
  const auto& basis2 = lyndon::lyndon_basis(p.alphabet(), 2);
  for (int g = 0; g < p.alphabet(); ++g) {
    auto b = freelie::bracket(z, p.generator_element(g));
    if (!slice2.basis.member(sparse_coords(b, basis2))) return false;
  }
  return true;
}

}  // namespace glie::gradedquotient
