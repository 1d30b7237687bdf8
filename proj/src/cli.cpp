#include "glie/cli.hpp"

#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "glie/braidcheck.hpp"
#include "glie/gradedquotient.hpp"
#include "glie/presentations.hpp"
#include "glie/table.hpp"

namespace glie::cli {

namespace {

using gradedquotient::GradedComponentReport;

std::string torsion_str(const std::vector<Int>& torsion) {
  if (torsion.empty()) return "-";
  std::string s = "[";
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (i) s += ",";
    s += torsion[i].str();
  }
  return s + "]";
}

std::vector<GradedComponentReport> compute_table(const std::string& name, int n, int dmax) {
  return gradedquotient::hilbert_table(presentations::build_presentation(name, n), dmax);
}

// Rank comparison with an optional degree-1 offset on the left side; torsion
// must match degree by degree.
bool compare_tables(std::ostream& out, const std::string& la,
                    const std::vector<GradedComponentReport>& a, const std::string& lb,
                    const std::vector<GradedComponentReport>& b, int degree1_offset) {
  bool ok = a.size() == b.size();
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    std::size_t expected = b[i].free_rank + (a[i].degree == 1 ? degree1_offset : 0);
    bool line_ok = a[i].free_rank == expected && a[i].torsion == b[i].torsion;
    ok = ok && line_ok;
    out << "  degree " << a[i].degree << ": " << la << " rank " << a[i].free_rank << " torsion "
        << torsion_str(a[i].torsion) << " | " << lb << " rank " << b[i].free_rank << " torsion "
        << torsion_str(b[i].torsion) << (line_ok ? "" : "  <- mismatch") << "\n";
  }
  return ok;
}

bool check_burau(std::ostream& out, int n) {
  auto report = braid::verify_burau_relations(n);
  std::size_t failed = 0;
  for (const auto& item : report.items)
    if (!item.pass) {
      ++failed;
      out << "  failed: " << item.label << "\n";
    }
  out << "  " << report.items.size() << " relation instances, " << (report.items.size() - failed)
      << " passed\n";
  return failed == 0;
}

bool check_delta2(std::ostream& out, int n) {
  bool ok = braid::braids_equal(braid::power(braid::delta_word(n), 2),
                                braid::delta_squared_product(n));
  out << "  Delta^2 vs product of pure generators on " << n << " strands: "
      << (ok ? "equal" : "NOT equal") << "\n";
  return ok;
}

bool check_magnus(std::ostream& out, int n) {
  bool ok = braid::verify_magnus_equivalence(n);
  out << "  (sigma_1 ... sigma_" << n - 1 << ")^" << n << " vs Delta^2: "
      << (ok ? "equal" : "NOT equal") << "\n";
  return ok;
}

bool check_central(std::ostream& out, int n) {
  bool ok = braid::centrality_check(n);
  out << "  Delta^2 commutes with all generators on " << n << " strands: " << (ok ? "yes" : "NO")
      << "\n";
  return ok;
}

bool check_sphere_sanity(std::ostream& out, int n) {
  auto s = braid::sphere_relator_sanity(n);
  bool ok = s.permutation_is_identity && s.exponent_sum == 2 * (n - 1);
  out << "  permutation " << (s.permutation_is_identity ? "identity" : "NOT identity")
      << ", exponent sum " << s.exponent_sum << " (expected " << 2 * (n - 1) << ")\n";
  return ok;
}

bool check_theorem2(std::ostream& out, int n, int dmax) {
  auto full = compute_table("pm0n-full", n, dmax);
  auto reduced = compute_table("pm0n-reduced", n, dmax);
  return compare_tables(out, "pm0n-full", full, "pm0n-reduced", reduced, 0);
}

bool check_theorem1(std::ostream& out, int n, int dmax) {
  auto kohno = compute_table("kohno", n, dmax);
  auto reduced = compute_table("pm0n-reduced", n + 1, dmax);
  out << "  kohno(" << n << ") vs pm0n-reduced(" << n + 1 << "), degree-1 rank offset 1:\n";
  bool ok = compare_tables(out, "kohno", kohno, "pm0n-reduced", reduced, 1);
  if (n >= 4) {
    out << "  ihara(" << n << ") vs sphere-reduced(" << n << "):\n";
    auto ihara = compute_table("ihara", n, dmax);
    auto sphere = compute_table("sphere-reduced", n, dmax);
    ok = compare_tables(out, "ihara", ihara, "sphere-reduced", sphere, 0) && ok;
  } else {
    out << "  ihara vs sphere-reduced skipped (needs n >= 4)\n";
  }
  return ok;
}

bool check_corollary(std::ostream& out, int n) {
  auto p = presentations::build_sphere_reduced(n);
  auto degree1 = gradedquotient::graded_component(p, 1);
  bool d1_ok = degree1.free_rank == p.generators.size() - 1 &&
               degree1.torsion == std::vector<Int>{2};
  out << "  sphere-reduced(" << n << ") degree 1: rank " << degree1.free_rank << " torsion "
      << torsion_str(degree1.torsion) << (d1_ok ? "" : "  <- mismatch") << "\n";
  bool central = gradedquotient::central_element_check(p, p.generator_sum());
  out << "  sum of generators is central: " << (central ? "yes" : "NO") << "\n";
  return d1_ok && central;
}

bool check_example_pm04(std::ostream& out, int dmax) {
  auto table = compute_table("pm0n-reduced", 4, dmax);
  bool ok = true;
  for (const auto& r : table) {
    auto expected = static_cast<std::size_t>(lyndon::witt_rank(2, r.degree));
    bool line_ok = r.free_rank == expected && r.torsion.empty();
    ok = ok && line_ok;
    out << "  degree " << r.degree << ": rank " << r.free_rank << " torsion "
        << torsion_str(r.torsion) << " | free Lie ring on 2 generators: " << expected
        << (line_ok ? "" : "  <- mismatch") << "\n";
  }
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact graded Lie algebra tables and braid identity checks"};
  app.name("glie");
  app.require_subcommand(0, 1);

  auto* list_cmd = app.add_subcommand("list-presentations", "List known presentation names");

  std::string presentation;
  int n = 0;
  int max_degree = 0;
  std::string format = "text";
  auto* table_cmd =
      app.add_subcommand("table", "Rank/torsion table of a graded presentation, degree by degree");
  table_cmd->add_option("--presentation", presentation, "Presentation name")->required();
  table_cmd->add_option("--n", n, "Number of points/strings")->required();
  table_cmd->add_option("--max-degree", max_degree, "Largest degree to compute")->required();
  table_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  std::string check_pos, check_flag;
  int verify_n = 0;
  int verify_deg = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Run a named consistency check");
  verify_cmd->add_option("check_name", check_pos,
                         "One of: burau, delta2, magnus, central, sphere-sanity, theorem1, "
                         "theorem2, corollary, example-pm04");
  verify_cmd->add_option("--check", check_flag, "Check name (alternative to the positional)");
  verify_cmd->add_option("--n", verify_n, "Number of points/strings");
  verify_cmd->add_option("--max-degree", verify_deg, "Largest degree to compare");

  std::vector<const char*> argv;
  argv.push_back("glie");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (list_cmd->parsed()) {
      for (const auto& name : presentations::presentation_names())
        out << name << "  (n >= " << presentations::min_points(name) << ")\n";
      return 0;
    }

    if (table_cmd->parsed()) {
      auto doc = table::make_document(presentation, n,
                                      gradedquotient::hilbert_table(
                                          presentations::build_presentation(presentation, n),
                                          max_degree));
      if (format == "json")
        out << table::emit_json(doc);
      else if (format == "csv")
        out << table::emit_csv(doc);
      else
        out << table::emit_text(doc);
      return 0;
    }

    if (verify_cmd->parsed()) {
      std::string check = !check_pos.empty() ? check_pos : check_flag;
      if (check.empty()) {
        err << "verify: missing check name\n";
        return 2;
      }
      const std::map<std::string, int> default_n = {
          {"burau", 4},    {"delta2", 4},   {"magnus", 4},       {"central", 4},
          {"sphere-sanity", 4}, {"theorem1", 4}, {"theorem2", 4}, {"corollary", 4},
          {"example-pm04", 4}};
      auto it = default_n.find(check);
      if (it == default_n.end()) {
        err << "verify: unknown check '" << check << "'\n";
        return 2;
      }
      int cn = verify_n > 0 ? verify_n : it->second;
      int cd = verify_deg > 0 ? verify_deg : (check == "example-pm04" ? 6 : 4);

      out << "check " << check;
      if (check != "example-pm04") out << " (n=" << cn << ")";
      if (check == "theorem1" || check == "theorem2" || check == "example-pm04")
        out << " (max-degree=" << cd << ")";
      out << "\n";

      bool pass = false;
      if (check == "burau")
        pass = check_burau(out, cn);
      else if (check == "delta2")
        pass = check_delta2(out, cn);
      else if (check == "magnus")
        pass = check_magnus(out, cn);
      else if (check == "central")
        pass = check_central(out, cn);
      else if (check == "sphere-sanity")
        pass = check_sphere_sanity(out, cn);
      else if (check == "theorem1")
        pass = check_theorem1(out, cn, cd);
      else if (check == "theorem2")
        pass = check_theorem2(out, cn, cd);
      else if (check == "corollary")
        pass = check_corollary(out, cn);
      else if (check == "example-pm04")
        pass = check_example_pm04(out, cd);

      out << (pass ? "PASS" : "FAIL") << " " << check << "\n";
      return pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  err << app.help();
  return 2;
}

}  // namespace glie::cli
