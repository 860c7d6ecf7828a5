#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ocpkit/element_set.hpp"

namespace ocpkit {

/// Default cap on ideal/antichain enumeration; overridable per call.
inline constexpr std::size_t default_enumeration_cap = 1'000'000;

/// Thrown when an enumeration would exceed its cap.
class enumeration_limit_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Finite poset on elements 0..d-1 with precomputed order relation.
///
/// Construction validates acyclicity and reduces the input relation to its
/// transitive reduction; the stored cover list is always that reduction,
/// sorted. Instances are immutable after construction and safe to share.
class poset {
public:
  /// Builds a poset from "j covers i" pairs. Redundant (transitively
  /// implied) pairs are dropped. Throws std::invalid_argument on a cycle
  /// ("not a partial order"), an out-of-range index, or d outside 1..64.
  static poset from_covers(int d, std::vector<std::pair<int, int>> covers,
                           std::vector<std::string> labels = {});

  int size() const { return d_; }
  /// Transitive reduction, sorted ascending.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  /// Empty, or one display name per element.
  const std::vector<std::string>& labels() const { return labels_; }

  bool leq(int i, int j) const { return up_[static_cast<std::size_t>(i)].contains(j); }
  bool less(int i, int j) const { return i != j && leq(i, j); }
  bool comparable(int i, int j) const { return i != j && (leq(i, j) || leq(j, i)); }

  /// {j : i <= j}, including i.
  element_set up_set(int i) const { return up_[static_cast<std::size_t>(i)]; }
  /// {j : j <= i}, including i.
  element_set down_set(int i) const { return down_[static_cast<std::size_t>(i)]; }
  element_set strict_up(int i) const { return up_set(i) - element_set::single(i); }
  element_set strict_down(int i) const { return down_set(i) - element_set::single(i); }
  /// Comparability-graph neighbourhood of i (excludes i).
  element_set comparables(int i) const {
    return (up_[static_cast<std::size_t>(i)] | down_[static_cast<std::size_t>(i)]) -
           element_set::single(i);
  }

  element_set all() const { return element_set::first_n(d_); }
  element_set minimal_elements() const;
  element_set maximal_elements() const;

  /// Elements of S with nothing of S strictly above / below them.
  element_set maximal_of(element_set s) const;
  element_set minimal_of(element_set s) const;

  bool is_ideal(element_set s) const;
  bool is_antichain(element_set s) const;

  friend bool operator==(const poset& a, const poset& b) {
    return a.d_ == b.d_ && a.covers_ == b.covers_ && a.labels_ == b.labels_;
  }

private:
  poset() = default;

  int d_ = 0;
  std::vector<std::pair<int, int>> covers_;
  std::vector<element_set> up_;
  std::vector<element_set> down_;
  std::vector<std::string> labels_;
};

/// Levels P_0..P_n of a graded poset; levels partition the elements and each
/// level is an antichain.
struct rank_decomposition {
  std::vector<element_set> levels;

  int rank() const { return static_cast<int>(levels.size()) - 1; }
  std::vector<int> level_sizes() const;
};

/// Five elements a,b,c,x,y with a||b, x||y and a<c, b<c, c<x, c<y.
struct x_witness {
  int a = 0, b = 0, c = 0, x = 0, y = 0;

  friend bool operator==(const x_witness&, const x_witness&) = default;
};

/// Undirected comparability edges {i,j}, i<j, sorted.
std::vector<std::pair<int, int>> comparability_graph(const poset& p);

/// True iff s is nonempty and induces a connected subgraph of the
/// comparability graph. The empty set counts as disconnected.
bool is_connected(const poset& p, element_set s);

/// All downward-closed subsets (including the empty set and the whole poset)
/// in ascending canonical order.
std::vector<element_set> enumerate_ideals(const poset& p,
                                          std::size_t cap = default_enumeration_cap);

/// All antichains (including the empty set) in ascending canonical order.
std::vector<element_set> enumerate_antichains(const poset& p,
                                              std::size_t cap = default_enumeration_cap);

/// Maximal elements of an ideal. Throws std::invalid_argument if the input
/// is not downward-closed.
element_set max_of_ideal(const poset& p, element_set ideal);

/// Downward closure of an antichain; inverse of max_of_ideal. Throws
/// std::invalid_argument if the input is not an antichain.
element_set ideal_of_antichain(const poset& p, element_set antichain);

/// Rank levels of a graded poset; throws std::invalid_argument ("not
/// graded") when maximal chains have different lengths.
rank_decomposition rank_levels(const poset& p);
std::optional<rank_decomposition> try_rank_levels(const poset& p);

/// Graded with every cross-level pair comparable.
bool is_maximal_ranked(const poset& p);

/// Stacks antichain levels of the given sizes with full comparability
/// between consecutive levels. Elements are numbered level by level.
poset ordinal_sum_of_antichains(std::span<const int> level_sizes);

/// First witness, in deterministic scan order, of an induced X-shaped
/// subposet; std::nullopt when none exists.
std::optional<x_witness> contains_x_subposet(const poset& p);

/// For a maximal ranked poset the presence of an X subposet depends only on
/// the level sizes: some level s >= 2 of size >= 2 with a level at most s-2
/// of size >= 2. Must agree with the generic search.
bool levels_contain_x(std::span<const int> level_sizes);

/// All inclusion-maximal chains, each bottom-to-top, in deterministic order.
std::vector<std::vector<int>> maximal_chains(const poset& p);

/// Seed-deterministic random poset: random linear order, each respecting
/// pair related with the given probability, then closed transitively.
poset random_poset(int d, double edge_probability, std::uint64_t seed);

/// Render s using the poset's labels when present, indices otherwise.
std::string format_set(const poset& p, element_set s);

} // namespace ocpkit
