#pragma once

#include <string>
#include <vector>

#include "glie/freelie.hpp"

namespace glie::presentations {

// Point-pair generator label, canonicalized to i < j.
struct GeneratorLabel {
  int i = 0, j = 0;
  std::string name;
};

// Degree-1 generators plus homogeneous relations of degree 1 or 2 defining a
// quotient of the free Lie ring on the generators.
struct GradedPresentation {
  std::string name;
  int n = 0;  // number of points/strings
  std::vector<GeneratorLabel> generators;
  std::vector<freelie::LieElement> relations;

  int alphabet() const { return static_cast<int>(generators.size()); }
  int generator_index(int i, int j) const;  // accepts either order
  freelie::LieElement generator_element(int index) const;
  freelie::LieElement generator_sum() const;
};

// Infinitesimal braid relations on A_{i,j}, 1 <= i < j <= n: commuting
// disjoint pairs plus the two triangle families per triple.
GradedPresentation build_kohno(int n);

// Sphere braid relations on B_{i,j}, 1 <= i < j <= n (B_{j,i} = B_{i,j} and
// B_{i,i} = 0 are absorbed into the labels): commuting disjoint pairs plus the
// degree-1 row relations sum_{j != i} B_{i,j} = 0 for each i.
GradedPresentation build_ihara(int n);

// build_ihara(n) plus the degree-1 total sum relation.
GradedPresentation build_pm0n_full(int n);

// Presentation on A_{i,j}, 1 <= i < j <= n-1, obtained from build_pm0n_full(n)
// by eliminating the generators B_{i,n}: the infinitesimal braid relations on
// the remaining letters plus the total sum relation.
GradedPresentation build_pm0n_reduced(int n);

// Same generators and degree-2 relations as build_pm0n_reduced(n) but with
// twice the total sum as the degree-1 relation.
GradedPresentation build_sphere_reduced(int n);

// Names accepted by the command line: kohno, ihara, pm0n-full, pm0n-reduced,
// sphere-reduced.
const std::vector<std::string>& presentation_names();
int min_points(const std::string& name);
GradedPresentation build_presentation(const std::string& name, int n);

}  // namespace glie::presentations
