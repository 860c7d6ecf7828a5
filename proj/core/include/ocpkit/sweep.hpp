#pragma once

#include <string>
#include <vector>

#include "ocpkit/faces.hpp"
#include "ocpkit/poset.hpp"

namespace ocpkit {

/// All level compositions (c_0,...,c_n), every c_i >= 1, with total at most
/// max_total; ordered by total ascending, lexicographic within one total.
std::vector<std::vector<int>> level_compositions_up_to(int max_total);

struct sweep_row {
  std::string poset_id;
  comparison_report report;
  std::vector<std::string> violations;

  bool consistent() const { return violations.empty(); }
};

enum class sweep_family { levels, random };

/// All identity checks on one poset, one message per violation.
std::vector<std::string> check_poset(const poset& p, const comparison_report& r,
                                     std::size_t cap = default_enumeration_cap);

/// Analyzes one family of posets across worker threads. For `levels`, all
/// compositions with total <= max_size; for `random`, `random_count`
/// seed-derived posets with d <= max_size. Rows come back sorted by
/// poset_id regardless of parallelism.
std::vector<sweep_row> run_sweep(sweep_family family, int max_size, int random_count,
                                 int jobs, std::size_t cap = default_enumeration_cap);

} // namespace ocpkit
