#include "ocpkit/poset.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <sstream>
#include <unordered_set>

namespace ocpkit {

std::string to_string(element_set s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int i : s) {
    if (!first) out << ',';
    out << i;
    first = false;
  }
  out << '}';
  return out.str();
}

std::string format_set(const poset& p, element_set s) {
  if (p.labels().empty()) return to_string(s);
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int i : s) {
    if (!first) out << ',';
    out << p.labels()[static_cast<std::size_t>(i)];
    first = false;
  }
  out << '}';
  return out.str();
}

std::vector<int> rank_decomposition::level_sizes() const {
  std::vector<int> out;
  out.reserve(levels.size());
  for (element_set lv : levels) out.push_back(lv.size());
  return out;
}

poset poset::from_covers(int d, std::vector<std::pair<int, int>> covers,
                         std::vector<std::string> labels) {
  if (d < 1) throw std::invalid_argument("poset needs at least one element");
  if (d > element_set::capacity)
    throw std::invalid_argument("element count exceeds capacity of 64");
  if (!labels.empty() && static_cast<int>(labels.size()) != d)
    throw std::invalid_argument("label count does not match element count");

  std::vector<element_set> succ(static_cast<std::size_t>(d));
  std::vector<int> indeg(static_cast<std::size_t>(d), 0);
  for (auto [i, j] : covers) {
    if (i < 0 || i >= d || j < 0 || j >= d)
      throw std::invalid_argument("cover index out of range");
    if (i == j) throw std::invalid_argument("not a partial order");
    if (!succ[static_cast<std::size_t>(i)].contains(j)) {
      succ[static_cast<std::size_t>(i)].insert(j);
      ++indeg[static_cast<std::size_t>(j)];
    }
  }

  // Kahn topological order; leftover nodes mean a directed cycle.
  std::vector<int> topo;
  topo.reserve(static_cast<std::size_t>(d));
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < d; ++v)
    if (indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    topo.push_back(v);
    for (int w : succ[static_cast<std::size_t>(v)])
      if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push(w);
  }
  if (static_cast<int>(topo.size()) != d)
    throw std::invalid_argument("not a partial order");

  poset p;
  p.d_ = d;
  p.labels_ = std::move(labels);
  p.up_.assign(static_cast<std::size_t>(d), element_set{});
  p.down_.assign(static_cast<std::size_t>(d), element_set{});

  // Reflexive-transitive closure, processed against the topological order.
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    int v = *it;
    element_set reach = element_set::single(v);
    for (int w : succ[static_cast<std::size_t>(v)])
      reach |= p.up_[static_cast<std::size_t>(w)];
    p.up_[static_cast<std::size_t>(v)] = reach;
  }
  for (int v = 0; v < d; ++v)
    for (int w : p.up_[static_cast<std::size_t>(v)])
      p.down_[static_cast<std::size_t>(w)].insert(v);

  // Transitive reduction from the closure: (i,j) is a cover iff i<j and the
  // open interval between them is empty.
  for (int i = 0; i < d; ++i) {
    for (int j : p.strict_up(i)) {
      element_set between = p.strict_up(i) & p.strict_down(j);
      if (between.empty()) p.covers_.emplace_back(i, j);
    }
  }
  std::sort(p.covers_.begin(), p.covers_.end());
  return p;
}

element_set poset::minimal_elements() const {
  element_set out;
  for (int i = 0; i < d_; ++i)
    if (strict_down(i).empty()) out.insert(i);
  return out;
}

element_set poset::maximal_elements() const {
  element_set out;
  for (int i = 0; i < d_; ++i)
    if (strict_up(i).empty()) out.insert(i);
  return out;
}

element_set poset::maximal_of(element_set s) const {
  element_set out;
  for (int i : s)
    if ((strict_up(i) & s).empty()) out.insert(i);
  return out;
}

element_set poset::minimal_of(element_set s) const {
  element_set out;
  for (int i : s)
    if ((strict_down(i) & s).empty()) out.insert(i);
  return out;
}

bool poset::is_ideal(element_set s) const {
  for (int i : s)
    if (!strict_down(i).subset_of(s)) return false;
  return true;
}

bool poset::is_antichain(element_set s) const {
  for (int i : s)
    if (strict_up(i).intersects(s)) return false;
  return true;
}

std::vector<std::pair<int, int>> comparability_graph(const poset& p) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < p.size(); ++i)
    for (int j = i + 1; j < p.size(); ++j)
      if (p.comparable(i, j)) edges.emplace_back(i, j);
  return edges;
}

bool is_connected(const poset& p, element_set s) {
  if (s.empty()) return false;
  element_set reached = element_set::single(s.front());
  element_set frontier = reached;
  while (!frontier.empty()) {
    element_set next;
    for (int i : frontier) next |= p.comparables(i) & s;
    frontier = next - reached;
    reached |= next;
  }
  return reached == s;
}

std::vector<element_set> enumerate_ideals(const poset& p, std::size_t cap) {
  // Lattice walk: from each ideal, extend by any minimal element of the
  // complement; dedupe and sort at the end for the canonical order.
  std::vector<element_set> out;
  std::unordered_set<std::uint64_t> seen;
  std::queue<element_set> work;
  work.push(element_set{});
  seen.insert(0);
  out.push_back(element_set{});
  while (!work.empty()) {
    element_set ideal = work.front();
    work.pop();
    for (int e : p.all() - ideal) {
      if (!p.strict_down(e).subset_of(ideal)) continue;
      element_set bigger = ideal | element_set::single(e);
      if (seen.insert(bigger.bits()).second) {
        if (out.size() >= cap) throw enumeration_limit_error("enumeration too large");
        out.push_back(bigger);
        work.push(bigger);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void collect_antichains(const poset& p, element_set chosen, element_set candidates,
                        std::size_t cap, std::vector<element_set>& out) {
  if (out.size() >= cap) throw enumeration_limit_error("enumeration too large");
  out.push_back(chosen);
  for (int e : candidates) {
    element_set rest = candidates - element_set::first_n(e + 1) - p.comparables(e);
    collect_antichains(p, chosen | element_set::single(e), rest, cap, out);
  }
}

} // namespace

std::vector<element_set> enumerate_antichains(const poset& p, std::size_t cap) {
  std::vector<element_set> out;
  collect_antichains(p, element_set{}, p.all(), cap, out);
  std::sort(out.begin(), out.end());
  return out;
}

element_set max_of_ideal(const poset& p, element_set ideal) {
  if (!p.is_ideal(ideal)) throw std::invalid_argument("not a poset ideal");
  return p.maximal_of(ideal);
}

element_set ideal_of_antichain(const poset& p, element_set antichain) {
  if (!p.is_antichain(antichain)) throw std::invalid_argument("not an antichain");
  element_set out;
  for (int a : antichain) out |= p.down_set(a);
  return out;
}

namespace {

std::vector<int> element_heights(const poset& p) {
  // Longest path from below; covers processed in topological safety by
  // iterating until the fixpoint (d is small).
  std::vector<int> h(static_cast<std::size_t>(p.size()), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [i, j] : p.covers()) {
      if (h[static_cast<std::size_t>(j)] < h[static_cast<std::size_t>(i)] + 1) {
        h[static_cast<std::size_t>(j)] = h[static_cast<std::size_t>(i)] + 1;
        changed = true;
      }
    }
  }
  return h;
}

} // namespace

std::optional<rank_decomposition> try_rank_levels(const poset& p) {
  std::vector<int> h = element_heights(p);
  int n = *std::max_element(h.begin(), h.end());
  // All maximal chains have equal length iff every cover climbs exactly one
  // height step and every maximal element sits at the top height: a maximal
  // chain is a cover path from height 0, so its length is then forced to n.
  for (auto [i, j] : p.covers())
    if (h[static_cast<std::size_t>(j)] != h[static_cast<std::size_t>(i)] + 1)
      return std::nullopt;
  for (int m : p.maximal_elements())
    if (h[static_cast<std::size_t>(m)] != n) return std::nullopt;

  rank_decomposition rd;
  rd.levels.assign(static_cast<std::size_t>(n) + 1, element_set{});
  for (int i = 0; i < p.size(); ++i)
    rd.levels[static_cast<std::size_t>(h[static_cast<std::size_t>(i)])].insert(i);
  return rd;
}

rank_decomposition rank_levels(const poset& p) {
  auto rd = try_rank_levels(p);
  if (!rd) throw std::invalid_argument("not graded");
  return *rd;
}

bool is_maximal_ranked(const poset& p) {
  auto rd = try_rank_levels(p);
  if (!rd) return false;
  for (std::size_t a = 0; a < rd->levels.size(); ++a)
    for (std::size_t b = a + 1; b < rd->levels.size(); ++b)
      for (int i : rd->levels[a])
        for (int j : rd->levels[b])
          if (!p.comparable(i, j)) return false;
  return true;
}

poset ordinal_sum_of_antichains(std::span<const int> level_sizes) {
  if (level_sizes.empty()) throw std::invalid_argument("no levels given");
  long long total = 0;
  for (int c : level_sizes) {
    if (c < 1) throw std::invalid_argument("level sizes must be positive");
    total += c;
  }
  if (total > element_set::capacity)
    throw std::invalid_argument("element count exceeds capacity of 64");

  std::vector<std::pair<int, int>> covers;
  int prev_start = 0;
  int start = level_sizes[0];
  for (std::size_t lv = 1; lv < level_sizes.size(); ++lv) {
    for (int i = prev_start; i < start; ++i)
      for (int j = start; j < start + level_sizes[lv]; ++j) covers.emplace_back(i, j);
    prev_start = start;
    start += level_sizes[lv];
  }
  return poset::from_covers(static_cast<int>(total), std::move(covers));
}

std::optional<x_witness> contains_x_subposet(const poset& p) {
  // The remaining relations of the pattern are forced by transitivity, so
  // matching these five comparabilities finds an induced copy.
  for (int c = 0; c < p.size(); ++c) {
    element_set below = p.strict_down(c);
    element_set above = p.strict_up(c);
    if (below.size() < 2 || above.size() < 2) continue;
    std::optional<std::pair<int, int>> ab, xy;
    for (int a : below) {
      for (int b : below - element_set::first_n(a + 1))
        if (!p.comparable(a, b)) {
          ab = {a, b};
          break;
        }
      if (ab) break;
    }
    if (!ab) continue;
    for (int x : above) {
      for (int y : above - element_set::first_n(x + 1))
        if (!p.comparable(x, y)) {
          xy = {x, y};
          break;
        }
      if (xy) break;
    }
    if (!xy) continue;
    return x_witness{ab->first, ab->second, c, xy->first, xy->second};
  }
  return std::nullopt;
}

bool levels_contain_x(std::span<const int> level_sizes) {
  for (std::size_t s = 2; s < level_sizes.size(); ++s) {
    if (level_sizes[s] < 2) continue;
    for (std::size_t t = 0; t + 2 <= s; ++t)
      if (level_sizes[t] >= 2) return true;
  }
  return false;
}

namespace {

void extend_chain(const poset& p, std::vector<int>& chain,
                  const std::vector<element_set>& cover_succ,
                  std::vector<std::vector<int>>& out) {
  element_set next = cover_succ[static_cast<std::size_t>(chain.back())];
  if (next.empty()) {
    out.push_back(chain);
    return;
  }
  for (int w : next) {
    chain.push_back(w);
    extend_chain(p, chain, cover_succ, out);
    chain.pop_back();
  }
}

} // namespace

std::vector<std::vector<int>> maximal_chains(const poset& p) {
  std::vector<element_set> cover_succ(static_cast<std::size_t>(p.size()));
  for (auto [i, j] : p.covers()) cover_succ[static_cast<std::size_t>(i)].insert(j);
  std::vector<std::vector<int>> out;
  std::vector<int> chain;
  for (int m : p.minimal_elements()) {
    chain.assign(1, m);
    extend_chain(p, chain, cover_succ, out);
  }
  return out;
}

poset random_poset(int d, double edge_probability, std::uint64_t seed) {
  if (d < 1 || d > element_set::capacity)
    throw std::invalid_argument("element count must be in 1..64");
  if (edge_probability < 0.0 || edge_probability > 1.0)
    throw std::invalid_argument("edge probability must be in [0,1]");

  std::mt19937_64 rng(seed);
  // Hand-rolled Fisher-Yates; std::shuffle's draw sequence is not pinned by
  // the standard and the result must be reproducible from the seed alone.
  std::vector<int> order(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) order[static_cast<std::size_t>(i)] = i;
  for (int i = d - 1; i > 0; --i) {
    auto j = static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(order[static_cast<std::size_t>(i)], order[j]);
  }

  const auto threshold =
      static_cast<std::uint64_t>(edge_probability * 9007199254740992.0);  // 2^53
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      std::uint64_t draw = rng() >> 11;  // 53 uniform bits
      if (draw < threshold)
        pairs.emplace_back(order[static_cast<std::size_t>(a)],
                           order[static_cast<std::size_t>(b)]);
    }
  return poset::from_covers(d, std::move(pairs));
}

} // namespace ocpkit
