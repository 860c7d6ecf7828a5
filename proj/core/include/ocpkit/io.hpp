#pragma once

#include <string>

#include "ocpkit/faces.hpp"
#include "ocpkit/poset.hpp"

namespace ocpkit {

/// Parses the poset document format: an object with integer `d`, a `covers`
/// list of [lower, upper] pairs and an optional `labels` list of d strings.
/// Unknown keys, wrong types and invalid cover data all throw
/// std::invalid_argument.
poset parse_poset(const std::string& text);
poset load_poset_file(const std::string& path);

/// Canonical single-line document: keys in the order d, covers, labels
/// (labels omitted when absent), covers sorted, no insignificant
/// whitespace. parse -> serialize round-trips byte-identically on
/// canonical input.
std::string serialize_poset(const poset& p);
void write_poset_file(const std::string& path, const poset& p);

/// Flat JSON record of one report; absent optional fields serialize as
/// null. `consistent` is the caller's verdict from the invariant checks.
std::string report_to_json(const std::string& poset_id, const comparison_report& r,
                           bool consistent);

std::string report_csv_header();
std::string report_to_csv_row(const std::string& poset_id, const comparison_report& r,
                              bool consistent);

/// Levels rendered as "2-1-2" for CSV cells and poset ids.
std::string format_level_sizes(const std::vector<int>& sizes);

} // namespace ocpkit
