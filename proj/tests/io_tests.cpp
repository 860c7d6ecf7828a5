#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "ocpkit/faces.hpp"
#include "ocpkit/io.hpp"
#include "ocpkit/poset.hpp"

using ocpkit::poset;

namespace {

const std::string canonical_x =
    R"({"d":5,"covers":[[0,2],[1,2],[2,3],[2,4]],"labels":["a","b","c","d","e"]})";

poset make_x_poset() {
  return poset::from_covers(5, {{0, 2}, {1, 2}, {2, 3}, {2, 4}},
                            {"a", "b", "c", "d", "e"});
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string cell;
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

} // namespace

TEST_CASE("parsing the canonical document") {
  poset p = ocpkit::parse_poset(canonical_x);
  CHECK(p == make_x_poset());
  CHECK(p.labels() == std::vector<std::string>{"a", "b", "c", "d", "e"});
}

TEST_CASE("serialization is canonical and round-trips") {
  CHECK(ocpkit::serialize_poset(make_x_poset()) == canonical_x);
  CHECK(ocpkit::serialize_poset(ocpkit::parse_poset(canonical_x)) == canonical_x);

  poset bare = poset::from_covers(2, {{0, 1}});
  std::string doc = ocpkit::serialize_poset(bare);
  CHECK(doc == R"({"d":2,"covers":[[0,1]]})");
  CHECK(ocpkit::serialize_poset(ocpkit::parse_poset(doc)) == doc);
}

TEST_CASE("redundant covers are reduced on parse") {
  std::string fat = R"({"d":3,"covers":[[0,1],[1,2],[0,2]]})";
  CHECK(ocpkit::serialize_poset(ocpkit::parse_poset(fat)) ==
        R"({"d":3,"covers":[[0,1],[1,2]]})");
}

TEST_CASE("bad documents are rejected") {
  CHECK_THROWS_AS(ocpkit::parse_poset("not a document"), std::invalid_argument);
  CHECK_THROWS_AS(ocpkit::parse_poset("[1,2]"), std::invalid_argument);
  CHECK_THROWS_AS(ocpkit::parse_poset(R"({"covers":[]})"), std::invalid_argument);
  CHECK_THROWS_AS(ocpkit::parse_poset(R"({"d":2})"), std::invalid_argument);
  CHECK_THROWS_AS(ocpkit::parse_poset(R"({"d":2,"covers":[],"extra":1})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(ocpkit::parse_poset(R"({"d":"2","covers":[]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(ocpkit::parse_poset(R"({"d":2,"covers":[[0,1,2]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(ocpkit::parse_poset(R"({"d":2,"covers":[[0,"1"]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(ocpkit::parse_poset(R"({"d":2,"covers":[[0,2]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(ocpkit::parse_poset(R"({"d":2,"covers":[[0,1],[1,0]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(ocpkit::parse_poset(R"({"d":2,"covers":[],"labels":["a"]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(ocpkit::parse_poset(R"({"d":1,"covers":[],"labels":[1]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(ocpkit::parse_poset(R"({"d":0,"covers":[]})"),
                  std::invalid_argument);
}

TEST_CASE("poset files round-trip byte for byte") {
  namespace fs = std::filesystem;
  fs::path path = fs::temp_directory_path() / "ocpkit_io_tests_poset.json";
  ocpkit::write_poset_file(path.string(), make_x_poset());
  std::ifstream in(path);
  std::string contents((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
  CHECK(contents == canonical_x + "\n");
  CHECK(ocpkit::load_poset_file(path.string()) == make_x_poset());
  fs::remove(path);

  CHECK_THROWS_AS(ocpkit::load_poset_file("/nonexistent/ocpkit.json"),
                  std::invalid_argument);
}

TEST_CASE("report serialization as json") {
  poset p = make_x_poset();
  ocpkit::comparison_report r = ocpkit::compare(p);
  nlohmann::json doc = nlohmann::json::parse(ocpkit::report_to_json("x", r, true));
  CHECK(doc["poset_id"] == "x");
  CHECK(doc["d"] == 5);
  CHECK(doc["levels"] == nlohmann::json::array({2, 1, 2}));
  CHECK(doc["f0_O"] == 8);
  CHECK(doc["f0_C"] == 8);
  CHECK(doc["f1_O"] == 24);
  CHECK(doc["f1_C"] == 24);
  CHECK(doc["tri_O"] == 32);
  CHECK(doc["tri_C"] == 33);
  CHECK(doc["estar_O"] == 1);
  CHECK(doc["estar_C"] == 1);
  CHECK(doc["dstar_O"] == 4);
  CHECK(doc["dstar_C"] == 5);
  CHECK(doc["has_x"] == true);
  CHECK(doc["formula"] == 1);
  CHECK(doc["equality_holds"] == false);
  CHECK(doc["oracle_consistent"].is_null());
  CHECK(doc["consistent"] == true);

  poset ungraded = poset::from_covers(4, {{0, 1}, {1, 3}, {2, 3}});
  nlohmann::json doc2 = nlohmann::json::parse(
      ocpkit::report_to_json("u", ocpkit::compare(ungraded), true));
  CHECK(doc2["levels"].is_null());
  CHECK(doc2["formula"].is_null());
}

TEST_CASE("report serialization as csv") {
  CHECK(ocpkit::report_csv_header() ==
        "poset_id,d,levels,f0,f1_O,f1_C,tri_O,tri_C,estar_O,estar_C,"
        "dstar_O,dstar_C,has_x,formula,equality_holds,consistent");

  poset p = make_x_poset();
  ocpkit::comparison_report r = ocpkit::compare(p);
  CHECK(ocpkit::report_to_csv_row("x", r, true) ==
        "x,5,2-1-2,8,24,24,32,33,1,1,4,5,1,1,0,1");

  poset ungraded = poset::from_covers(4, {{0, 1}, {1, 3}, {2, 3}});
  std::string row = ocpkit::report_to_csv_row("u", ocpkit::compare(ungraded), true);
  std::vector<std::string> cells = split_csv(row);
  REQUIRE(cells.size() == 16);
  CHECK(cells[0] == "u");
  CHECK(cells[2].empty());   // no level sizes
  CHECK(cells[13].empty());  // no formula value
  CHECK(split_csv(ocpkit::report_csv_header()).size() == 16);
}

TEST_CASE("level size formatting") {
  CHECK(ocpkit::format_level_sizes({2, 1, 2}) == "2-1-2");
  CHECK(ocpkit::format_level_sizes({7}) == "7");
  CHECK(ocpkit::format_level_sizes({}) == "");
}
