#include "glie/table.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace glie::table {

namespace {

std::string torsion_text(const std::vector<Int>& torsion, const char* sep) {
  if (torsion.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (i) out += sep;
    out += torsion[i].str();
  }
  return out;
}

long long to_ll(const Int& v) { return v.convert_to<long long>(); }

}  // namespace

bool operator==(const TableDocument& a, const TableDocument& b) {
  if (a.presentation != b.presentation || a.n != b.n || a.version != b.version ||
      a.rows.size() != b.rows.size())
    return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const auto& x = a.rows[i];
    const auto& y = b.rows[i];
    if (x.degree != y.degree || x.witt != y.witt || x.rank != y.rank || x.torsion != y.torsion)
      return false;
  }
  return true;
}

TableDocument make_document(const std::string& presentation, int n,
                            const std::vector<gradedquotient::GradedComponentReport>& reports) {
  TableDocument doc;
  doc.presentation = presentation;
  doc.n = n;
  for (const auto& r : reports) {
    TableRow row;
    row.degree = r.degree;
    row.witt = r.ambient;
    row.rank = r.free_rank;
    row.torsion = r.torsion;
    row.seconds = r.seconds;
    doc.rows.push_back(std::move(row));
  }
  return doc;
}

std::string emit_text(const TableDocument& doc) {
  std::ostringstream out;
  out << "presentation " << doc.presentation << "  n " << doc.n << "  (glie " << doc.version
      << ")\n";
  out << std::setw(7) << "degree" << std::setw(8) << "witt" << std::setw(8) << "rank"
      << "  " << std::left << std::setw(16) << "torsion" << std::right << std::setw(10)
      << "seconds" << "\n";
  for (const auto& r : doc.rows) {
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(3) << r.seconds;
    out << std::setw(7) << r.degree << std::setw(8) << r.witt << std::setw(8) << r.rank << "  "
        << std::left << std::setw(16) << torsion_text(r.torsion, ",") << std::right
        << std::setw(10) << secs.str() << "\n";
  }
  return out.str();
}

std::string emit_json(const TableDocument& doc) {
  nlohmann::json j;
  j["presentation"] = doc.presentation;
  j["n"] = doc.n;
  j["version"] = doc.version;
  auto rows = nlohmann::json::array();
  for (const auto& r : doc.rows) {
    nlohmann::json row;
    row["degree"] = r.degree;
    row["witt"] = r.witt;
    row["rank"] = r.rank;
    auto torsion = nlohmann::json::array();
    for (const auto& t : r.torsion) torsion.push_back(to_ll(t));
    row["torsion"] = std::move(torsion);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string emit_csv(const TableDocument& doc) {
  std::string out = "degree,witt,rank,torsion\n";
  for (const auto& r : doc.rows) {
    out += std::to_string(r.degree) + "," + std::to_string(r.witt) + "," + std::to_string(r.rank) +
           "," + (r.torsion.empty() ? "" : torsion_text(r.torsion, ";")) + "\n";
  }
  return out;
}

TableDocument parse_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  TableDocument doc;
  doc.presentation = j.at("presentation").get<std::string>();
  doc.n = j.at("n").get<int>();
  doc.version = j.at("version").get<std::string>();
  for (const auto& row : j.at("rows")) {
    TableRow r;
    r.degree = row.at("degree").get<int>();
    r.witt = row.at("witt").get<std::size_t>();
    r.rank = row.at("rank").get<std::size_t>();
    for (const auto& t : row.at("torsion")) r.torsion.emplace_back(t.get<long long>());
    doc.rows.push_back(std::move(r));
  }
  return doc;
}

}  // namespace glie::table
