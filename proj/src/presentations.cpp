#include "glie/presentations.hpp"

#include <stdexcept>
#include <utility>

namespace glie::presentations {

using freelie::LieElement;

namespace {

std::vector<GeneratorLabel> pair_labels(int points, char symbol) {
  std::vector<GeneratorLabel> labels;
  for (int i = 1; i <= points; ++i)
    for (int j = i + 1; j <= points; ++j) {
      GeneratorLabel label;
      label.i = i;
      label.j = j;
      label.name = std::string(1, symbol) + "_{" + std::to_string(i) + "," + std::to_string(j) + "}";
      labels.push_back(std::move(label));
    }
  return labels;
}

bool disjoint(const GeneratorLabel& a, const GeneratorLabel& b) {
  return a.i != b.i && a.i != b.j && a.j != b.i && a.j != b.j;
}

// [X_{p}, X_{q}] = 0 for every pair of generators with disjoint index sets.
void append_disjoint_relations(GradedPresentation& p) {
  const int m = p.alphabet();
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (disjoint(p.generators[a], p.generators[b]))
        p.relations.push_back(
            freelie::bracket(p.generator_element(a), p.generator_element(b)));
}

// [X_{i,j}, X_{i,k} + X_{j,k}] = 0 and [X_{i,k}, X_{i,j} + X_{j,k}] = 0
// for i < j < k.
void append_triangle_relations(GradedPresentation& p, int points) {
  for (int i = 1; i <= points; ++i)
    for (int j = i + 1; j <= points; ++j)
      for (int k = j + 1; k <= points; ++k) {
        auto ij = p.generator_element(p.generator_index(i, j));
        auto ik = p.generator_element(p.generator_index(i, k));
        auto jk = p.generator_element(p.generator_index(j, k));
        p.relations.push_back(freelie::bracket(ij, freelie::add(ik, jk)));
        p.relations.push_back(freelie::bracket(ik, freelie::add(ij, jk)));
      }
}

}  // namespace

int GradedPresentation::generator_index(int i, int j) const {
  if (i == j) throw std::invalid_argument("generator_index: diagonal label");
  if (i > j) std::swap(i, j);
  for (std::size_t idx = 0; idx < generators.size(); ++idx)
    if (generators[idx].i == i && generators[idx].j == j) return static_cast<int>(idx);
  throw std::invalid_argument("generator_index: no such generator");
}

LieElement GradedPresentation::generator_element(int index) const {
  return freelie::lie_generator(alphabet(), index);
}

LieElement GradedPresentation::generator_sum() const {
  LieElement sum = freelie::lie_zero(alphabet(), 1);
  for (int g = 0; g < alphabet(); ++g) sum = freelie::add(sum, generator_element(g));
  return sum;
}

GradedPresentation build_kohno(int n) {
  if (n < 2) throw std::invalid_argument("build_kohno: n must be >= 2");
  GradedPresentation p;
  p.name = "kohno";
  p.n = n;
  p.generators = pair_labels(n, 'A');
  append_disjoint_relations(p);
  append_triangle_relations(p, n);
  return p;
}

GradedPresentation build_ihara(int n) {
  if (n < 3) throw std::invalid_argument("build_ihara: n must be >= 3");
  GradedPresentation p;
  p.name = "ihara";
  p.n = n;
  p.generators = pair_labels(n, 'B');
  append_disjoint_relations(p);
  for (int i = 1; i <= n; ++i) {
    LieElement row = freelie::lie_zero(p.alphabet(), 1);
    for (int j = 1; j <= n; ++j)
      if (j != i) row = freelie::add(row, p.generator_element(p.generator_index(i, j)));
    p.relations.push_back(std::move(row));
  }
  return p;
}

GradedPresentation build_pm0n_full(int n) {
  if (n < 3) throw std::invalid_argument("build_pm0n_full: n must be >= 3");
  GradedPresentation p = build_ihara(n);
  p.name = "pm0n-full";
  p.relations.push_back(p.generator_sum());
  return p;
}

GradedPresentation build_pm0n_reduced(int n) {
  if (n < 4) throw std::invalid_argument("build_pm0n_reduced: n must be >= 4");
  GradedPresentation p;
  p.name = "pm0n-reduced";
  p.n = n;
  p.generators = pair_labels(n - 1, 'A');
  append_disjoint_relations(p);
  append_triangle_relations(p, n - 1);
  p.relations.push_back(p.generator_sum());
  return p;
}

GradedPresentation build_sphere_reduced(int n) {
  if (n < 4) throw std::invalid_argument("build_sphere_reduced: n must be >= 4");
  GradedPresentation p = build_pm0n_reduced(n);
  p.name = "sphere-reduced";
  p.relations.back() = freelie::scale(p.generator_sum(), 2);
  return p;
}

const std::vector<std::string>& presentation_names() {
  static const std::vector<std::string> names = {"kohno", "ihara", "pm0n-full", "pm0n-reduced",
                                                 "sphere-reduced"};
  return names;
}

int min_points(const std::string& name) {
  if (name == "kohno") return 2;
  if (name == "ihara" || name == "pm0n-full") return 3;
  if (name == "pm0n-reduced" || name == "sphere-reduced") return 4;
  throw std::invalid_argument("unknown presentation: " + name);
}

GradedPresentation build_presentation(const std::string& name, int n) {
  if (name == "kohno") return build_kohno(n);
  if (name == "ihara") return build_ihara(n);
  if (name == "pm0n-full") return build_pm0n_full(n);
  if (name == "pm0n-reduced") return build_pm0n_reduced(n);
  if (name == "sphere-reduced") return build_sphere_reduced(n);
  throw std::invalid_argument("unknown presentation: " + name);
}

}  // namespace glie::presentations
