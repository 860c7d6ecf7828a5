#include "ocpkit/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ocpkit {

namespace {

using ordered_json = nlohmann::ordered_json;

int require_int(const nlohmann::json& j, const char* what) {
  if (!j.is_number_integer())
    throw std::invalid_argument(std::string("poset document: ") + what +
                                " must be an integer");
  return j.get<int>();
}

} // namespace

poset parse_poset(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded())
    throw std::invalid_argument("poset document: malformed text");
  if (!doc.is_object())
    throw std::invalid_argument("poset document: top level must be an object");
  for (const auto& item : doc.items())
    if (item.key() != "d" && item.key() != "covers" && item.key() != "labels")
      throw std::invalid_argument("poset document: unknown key '" + item.key() + "'");
  if (!doc.contains("d") || !doc.contains("covers"))
    throw std::invalid_argument("poset document: keys d and covers are required");

  int d = require_int(doc["d"], "d");
  if (!doc["covers"].is_array())
    throw std::invalid_argument("poset document: covers must be a list");
  std::vector<std::pair<int, int>> covers;
  for (const auto& entry : doc["covers"]) {
    if (!entry.is_array() || entry.size() != 2)
      throw std::invalid_argument("poset document: each cover must be a pair");
    covers.emplace_back(require_int(entry[0], "cover entry"),
                        require_int(entry[1], "cover entry"));
  }

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array())
      throw std::invalid_argument("poset document: labels must be a list");
    for (const auto& entry : doc["labels"]) {
      if (!entry.is_string())
        throw std::invalid_argument("poset document: labels must be strings");
      labels.push_back(entry.get<std::string>());
    }
  }
  return poset::from_covers(d, std::move(covers), std::move(labels));
}

poset load_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open poset file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_poset(buf.str());
}

std::string serialize_poset(const poset& p) {
  ordered_json doc;
  doc["d"] = p.size();
  doc["covers"] = ordered_json::array();
  for (auto [lower, upper] : p.covers())
    doc["covers"].push_back(ordered_json::array({lower, upper}));
  if (!p.labels().empty()) doc["labels"] = p.labels();
  return doc.dump();
}

void write_poset_file(const std::string& path, const poset& p) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write poset file: " + path);
  out << serialize_poset(p) << '\n';
}

std::string report_to_json(const std::string& poset_id, const comparison_report& r,
                           bool consistent) {
  ordered_json doc;
  doc["poset_id"] = poset_id;
  doc["d"] = r.d;
  if (r.level_sizes)
    doc["levels"] = *r.level_sizes;
  else
    doc["levels"] = nullptr;
  doc["f0_O"] = r.f0_o;
  doc["f0_C"] = r.f0_c;
  doc["f1_O"] = r.f1_o;
  doc["f1_C"] = r.f1_c;
  doc["tri_O"] = r.tri_o;
  doc["tri_C"] = r.tri_c;
  doc["estar_O"] = r.estar_o;
  doc["estar_C"] = r.estar_c;
  doc["dstar_O"] = r.dstar_o;
  doc["dstar_C"] = r.dstar_c;
  doc["has_x"] = r.has_x;
  if (r.formula_value)
    doc["formula"] = *r.formula_value;
  else
    doc["formula"] = nullptr;
  doc["equality_holds"] = r.equality_holds;
  if (r.oracle_consistent)
    doc["oracle_consistent"] = *r.oracle_consistent;
  else
    doc["oracle_consistent"] = nullptr;
  doc["consistent"] = consistent;
  return doc.dump();
}

std::string format_level_sizes(const std::vector<int>& sizes) {
  std::ostringstream out;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) out << '-';
    out << sizes[i];
  }
  return out.str();
}

std::string report_csv_header() {
  return "poset_id,d,levels,f0,f1_O,f1_C,tri_O,tri_C,estar_O,estar_C,"
         "dstar_O,dstar_C,has_x,formula,equality_holds,consistent";
}

std::string report_to_csv_row(const std::string& poset_id, const comparison_report& r,
                              bool consistent) {
  std::ostringstream out;
  out << poset_id << ',' << r.d << ',';
  if (r.level_sizes) out << format_level_sizes(*r.level_sizes);
  out << ',' << r.f0_o << ',' << r.f1_o << ',' << r.f1_c << ',' << r.tri_o << ','
      << r.tri_c << ',' << r.estar_o << ',' << r.estar_c << ',' << r.dstar_o << ','
      << r.dstar_c << ',' << (r.has_x ? 1 : 0) << ',';
  if (r.formula_value) out << *r.formula_value;
  out << ',' << (r.equality_holds ? 1 : 0) << ',' << (consistent ? 1 : 0);
  return out.str();
}

} // namespace ocpkit
