#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "glie/braidcheck.hpp"
#include "glie/gradedquotient.hpp"
#include "glie/lyndon.hpp"
#include "glie/presentations.hpp"
#include "glie/table.hpp"
#include "glie/zmodule.hpp"

namespace py = pybind11;
using namespace glie;

namespace {

py::int_ big(const Int& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::list int_list(const std::vector<Int>& values) {
  py::list out;
  for (const auto& v : values) out.append(big(v));
  return out;
}

py::dict report_dict(const gradedquotient::GradedComponentReport& r) {
  py::dict d;
  d["degree"] = r.degree;
  d["witt"] = r.ambient;
  d["rank"] = r.free_rank;
  d["torsion"] = int_list(r.torsion);
  d["seconds"] = r.seconds;
  return d;
}

py::object tree_to_py(const lyndon::BracketTree& t) {
  if (t.is_leaf()) return py::int_(t.leaf);
  return py::make_tuple(tree_to_py(*t.left), tree_to_py(*t.right));
}

zmodule::IntMatrix matrix_from(const std::vector<std::vector<long long>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows[0].size() : 0;
  for (const auto& row : rows)
    if (row.size() != c) throw std::invalid_argument("rows must have equal length");
  zmodule::IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  return m;
}

braid::BraidWord braid_from(int n, const std::vector<int>& letters) {
  braid::BraidWord b;
  b.strands = n;
  b.letters = letters;
  return b;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact graded Lie algebra tables and braid identity checks";
  m.attr("__version__") = table::kToolVersion;

  m.def("enumerate_lyndon_words",
        [](int k, int d) {
          py::list out;
          for (const auto& w : lyndon::enumerate_lyndon_words(k, d)) {
            py::list word;
            for (auto l : w) word.append(static_cast<int>(l));
            out.append(word);
          }
          return out;
        },
        py::arg("k"), py::arg("d"),
        "All Lyndon words of length d over k letters, lexicographic order");

  m.def("witt_rank", &lyndon::witt_rank, py::arg("k"), py::arg("d"),
        "Rank of the degree-d component of the free Lie ring on k generators");

  m.def("is_lyndon",
        [](const std::vector<int>& w) {
          lyndon::Word word;
          for (int l : w) word.push_back(static_cast<lyndon::Letter>(l));
          return lyndon::is_lyndon(word);
        },
        py::arg("word"));

  m.def("standard_bracketing",
        [](const std::vector<int>& w) {
          lyndon::Word word;
          for (int l : w) word.push_back(static_cast<lyndon::Letter>(l));
          return tree_to_py(lyndon::standard_bracketing(word));
        },
        py::arg("word"), "Standard factorization bracketing as nested pairs");

  m.def("list_presentations",
        [] { return presentations::presentation_names(); },
        "Presentation names accepted by hilbert_table and graded_component");

  m.def("hilbert_table",
        [](const std::string& name, int n, int max_degree) {
          py::list out;
          for (const auto& r : gradedquotient::hilbert_table(
                   presentations::build_presentation(name, n), max_degree))
            out.append(report_dict(r));
          return out;
        },
        py::arg("presentation"), py::arg("n"), py::arg("max_degree"),
        "Free rank and torsion of each graded component up to max_degree");

  m.def("graded_component",
        [](const std::string& name, int n, int degree) {
          return report_dict(
              gradedquotient::graded_component(presentations::build_presentation(name, n), degree));
        },
        py::arg("presentation"), py::arg("n"), py::arg("degree"));

  m.def("central_sum_check",
        [](const std::string& name, int n) {
          auto p = presentations::build_presentation(name, n);
          return gradedquotient::central_element_check(p, p.generator_sum());
        },
        py::arg("presentation"), py::arg("n"),
        "Whether the sum of the generators is central in the presented quotient");

  m.def("hermite_form",
        [](const std::vector<std::vector<long long>>& rows) {
          auto b = zmodule::hermite_form(matrix_from(rows));
          py::list out;
          for (const auto& row : b.rows()) {
            py::list dense;
            auto full = zmodule::to_dense(row, b.ambient());
            for (const auto& v : full) dense.append(big(v));
            out.append(dense);
          }
          return out;
        },
        py::arg("rows"), "Canonical Hermite basis of the row lattice");

  m.def("smith_invariants",
        [](const std::vector<std::vector<long long>>& rows) {
          auto q = zmodule::smith_invariants(matrix_from(rows));
          py::dict d;
          d["free_rank"] = q.free_rank;
          d["torsion"] = int_list(q.torsion);
          return d;
        },
        py::arg("rows"), "Free rank and invariant factors of the cokernel");

  m.def("braids_equal",
        [](int n, const std::vector<int>& a, const std::vector<int>& b) {
          return braid::braids_equal(braid_from(n, a), braid_from(n, b));
        },
        py::arg("n"), py::arg("a"), py::arg("b"),
        "Equality in the braid group of the disc, via the Artin action");

  m.def("pure_generator_word",
        [](int i, int j, int n) { return braid::pure_generator_word(i, j, n).letters; },
        py::arg("i"), py::arg("j"), py::arg("n"));

  m.def("delta_word", [](int n) { return braid::delta_word(n).letters; }, py::arg("n"));

  m.def("delta_squared_check",
        [](int n) {
          return braid::braids_equal(braid::power(braid::delta_word(n), 2),
                                     braid::delta_squared_product(n));
        },
        py::arg("n"), "Delta^2 equals the ordered product of the pure generators");

  m.def("verify_burau_relations",
        [](int n) {
          auto report = braid::verify_burau_relations(n);
          py::list items;
          for (const auto& item : report.items) items.append(py::make_tuple(item.label, item.pass));
          py::dict d;
          d["all_pass"] = report.all_pass();
          d["items"] = items;
          return d;
        },
        py::arg("n"));

  m.def("verify_magnus_equivalence", &braid::verify_magnus_equivalence, py::arg("n"));
  m.def("centrality_check", &braid::centrality_check, py::arg("n"));

  m.def("sphere_relator_sanity",
        [](int n) {
          auto s = braid::sphere_relator_sanity(n);
          py::dict d;
          d["permutation"] = s.permutation;
          d["exponent_sum"] = s.exponent_sum;
          d["permutation_is_identity"] = s.permutation_is_identity;
          return d;
        },
        py::arg("n"));
}
