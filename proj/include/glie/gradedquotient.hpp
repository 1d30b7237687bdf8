#pragma once

#include <vector>

#include "glie/presentations.hpp"
#include "glie/zmodule.hpp"

namespace glie::gradedquotient {

// Degree-d component of the Lie ideal generated by the relations, as a
// sublattice of the free Lie component in Lyndon coordinates.
struct IdealSlice {
  int degree = 0;
  zmodule::SubgroupBasis basis;
};

struct GradedComponentReport {
  int degree = 0;
  std::size_t ambient = 0;  // Witt rank of the free component
  std::size_t free_rank = 0;
  std::vector<Int> torsion;
  double seconds = 0.0;
};

bool operator==(const GradedComponentReport& a, const GradedComponentReport& b);

// Lattice spanned by the relations of degree exactly d together with
// bracket(g, v) for every generator g and every basis vector v of the
// previous slice. Every generator has degree 1 and ad[a,b] = ad a ad b -
// ad b ad a, so degree-1 ad-extensions of the previous slice exhaust the
// degree-d component of the two-sided ideal.
IdealSlice ideal_slice(const presentations::GradedPresentation& p, int d, const IdealSlice* prev);

GradedComponentReport graded_component(const presentations::GradedPresentation& p, int d);

std::vector<GradedComponentReport> hilbert_table(const presentations::GradedPresentation& p,
                                                 int max_degree);

// True iff bracket(z, g) lies in the degree-2 ideal slice for every
// generator g; z must be homogeneous of degree 1 over p's alphabet.
bool central_element_check(const presentations::GradedPresentation& p,
                           const freelie::LieElement& z);

}  // namespace glie::gradedquotient
