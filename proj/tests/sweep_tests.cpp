#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "ocpkit/sweep.hpp"

TEST_CASE("level compositions come out complete and ordered") {
  std::vector<std::vector<int>> got = ocpkit::level_compositions_up_to(3);
  std::vector<std::vector<int>> want = {{1},    {1, 1}, {2},   {1, 1, 1},
                                        {1, 2}, {2, 1}, {3}};
  CHECK(got == want);
  CHECK(ocpkit::level_compositions_up_to(8).size() == 255);
  CHECK_THROWS_AS(ocpkit::level_compositions_up_to(0), std::invalid_argument);
}

TEST_CASE("level sweep is consistent and deterministic") {
  std::vector<ocpkit::sweep_row> rows =
      ocpkit::run_sweep(ocpkit::sweep_family::levels, 5, 0, 1);
  CHECK(rows.size() == 31);
  CHECK(std::is_sorted(rows.begin(), rows.end(),
                       [](const ocpkit::sweep_row& a, const ocpkit::sweep_row& b) {
                         return a.poset_id < b.poset_id;
                       }));
  for (const ocpkit::sweep_row& row : rows) {
    CAPTURE(row.poset_id);
    CHECK(row.consistent());
  }

  auto x_row = std::find_if(rows.begin(), rows.end(), [](const ocpkit::sweep_row& r) {
    return r.poset_id == "levels-2-1-2";
  });
  REQUIRE(x_row != rows.end());
  CHECK(x_row->report.tri_c - x_row->report.tri_o == 1);
  CHECK(x_row->report.has_x);

  std::vector<ocpkit::sweep_row> parallel =
      ocpkit::run_sweep(ocpkit::sweep_family::levels, 5, 0, 4);
  REQUIRE(parallel.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(parallel[i].poset_id == rows[i].poset_id);
    CHECK(parallel[i].report.tri_o == rows[i].report.tri_o);
    CHECK(parallel[i].report.tri_c == rows[i].report.tri_c);
  }
}

TEST_CASE("random sweep rows are unique and consistent") {
  std::vector<ocpkit::sweep_row> rows =
      ocpkit::run_sweep(ocpkit::sweep_family::random, 6, 40, 2);
  CHECK(rows.size() == 40);
  std::set<std::string> ids;
  for (const ocpkit::sweep_row& row : rows) {
    CAPTURE(row.poset_id);
    CHECK(row.consistent());
    ids.insert(row.poset_id);
  }
  CHECK(ids.size() == rows.size());
}

TEST_CASE("sweep argument validation") {
  CHECK_THROWS_AS(ocpkit::run_sweep(ocpkit::sweep_family::levels, 0, 0, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(ocpkit::run_sweep(ocpkit::sweep_family::levels, 70, 0, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(ocpkit::run_sweep(ocpkit::sweep_family::random, 5, 0, 1),
                  std::invalid_argument);
}
