#include "ocpkit/faces.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace ocpkit {

namespace {

bool is_o_edge_pair(const poset& p, element_set lo, element_set hi) {
  return lo.proper_subset_of(hi) && is_connected(p, hi - lo);
}

// Definition-based membership of an order edge in the exceptional set: the
// pair of maximal-element antichains fails to be a chain edge.
bool o_edge_is_exceptional(const poset& p, element_set lo, element_set hi) {
  element_set ma = p.maximal_of(lo);
  element_set mb = p.maximal_of(hi);
  return !is_connected(p, ma ^ mb);
}

bool c_edge_is_exceptional(const poset& p, element_set a, element_set b) {
  element_set ia = ideal_of_antichain(p, a);
  element_set ib = ideal_of_antichain(p, b);
  return !is_o_edge_pair(p, ia < ib ? ia : ib, ia < ib ? ib : ia);
}

std::vector<triangle_triple> triangles_of_graph(polytope_kind kind,
                                                const std::vector<element_set>& verts,
                                                const std::vector<edge_pair>& edges) {
  // Adjacency restricted to higher-indexed neighbours; vertex lists are
  // sorted so edge endpoints map to ordered index pairs.
  const std::size_t n = verts.size();
  std::vector<std::vector<std::uint32_t>> up(n);
  auto index_of = [&](element_set s) {
    return static_cast<std::uint32_t>(
        std::lower_bound(verts.begin(), verts.end(), s) - verts.begin());
  };
  for (const edge_pair& e : edges) up[index_of(e.a)].push_back(index_of(e.b));
  for (auto& v : up) std::sort(v.begin(), v.end());

  std::vector<triangle_triple> out;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::uint32_t v : up[u]) {
      for (std::uint32_t w : up[v]) {
        if (std::binary_search(up[u].begin(), up[u].end(), w))
          out.emplace_back(kind, verts[u], verts[v], verts[w]);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<triangle_triple> filter_exceptional(const std::vector<triangle_triple>& tris,
                                                const std::vector<edge_pair>& estar,
                                                polytope_kind kind) {
  auto in_estar = [&](element_set x, element_set y) {
    return std::binary_search(estar.begin(), estar.end(), edge_pair(kind, x, y));
  };
  std::vector<triangle_triple> out;
  for (const triangle_triple& t : tris)
    if (in_estar(t.a, t.b) || in_estar(t.b, t.c) || in_estar(t.a, t.c))
      out.push_back(t);
  return out;
}

int level_of(const rank_decomposition& rd, int element) {
  for (std::size_t lv = 0; lv < rd.levels.size(); ++lv)
    if (rd.levels[lv].contains(element)) return static_cast<int>(lv);
  return -1;
}

} // namespace

std::vector<edge_pair> o_edges(const poset& p, std::size_t cap) {
  std::vector<element_set> ideals = enumerate_ideals(p, cap);
  std::vector<edge_pair> out;
  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (std::size_t j = i + 1; j < ideals.size(); ++j)
      if (is_o_edge_pair(p, ideals[i], ideals[j]))
        out.emplace_back(polytope_kind::order, ideals[i], ideals[j]);
  return out;  // generated in canonical order
}

std::vector<edge_pair> c_edges(const poset& p, std::size_t cap) {
  std::vector<element_set> anti = enumerate_antichains(p, cap);
  std::vector<edge_pair> out;
  for (std::size_t i = 0; i < anti.size(); ++i)
    for (std::size_t j = i + 1; j < anti.size(); ++j)
      if (is_connected(p, anti[i] ^ anti[j]))
        out.emplace_back(polytope_kind::chain, anti[i], anti[j]);
  return out;
}

std::vector<triangle_triple> o_triangles(const poset& p, std::size_t cap) {
  // Ideal chains I < J < K; ascending canonical order is a linear extension
  // of inclusion, so scanning ordered index triples sees each chain once.
  std::vector<element_set> ideals = enumerate_ideals(p, cap);
  std::vector<triangle_triple> out;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    for (std::size_t j = i + 1; j < ideals.size(); ++j) {
      if (!ideals[i].proper_subset_of(ideals[j])) continue;
      if (!is_connected(p, ideals[j] - ideals[i])) continue;
      for (std::size_t k = j + 1; k < ideals.size(); ++k) {
        if (!ideals[j].proper_subset_of(ideals[k])) continue;
        if (!is_connected(p, ideals[k] - ideals[j])) continue;
        if (!is_connected(p, ideals[k] - ideals[i])) continue;
        out.emplace_back(polytope_kind::order, ideals[i], ideals[j], ideals[k]);
      }
    }
  }
  return out;
}

std::vector<triangle_triple> c_triangles(const poset& p, std::size_t cap) {
  return triangles_of_graph(polytope_kind::chain, enumerate_antichains(p, cap),
                            c_edges(p, cap));
}

std::vector<edge_pair> exceptional_edges_o(const poset& p, std::size_t cap) {
  std::vector<edge_pair> out;
  for (const edge_pair& e : o_edges(p, cap))
    if (o_edge_is_exceptional(p, e.a, e.b)) out.push_back(e);
  return out;
}

std::vector<edge_pair> exceptional_edges_c(const poset& p, std::size_t cap) {
  std::vector<edge_pair> out;
  for (const edge_pair& e : c_edges(p, cap))
    if (c_edge_is_exceptional(p, e.a, e.b)) out.push_back(e);
  return out;
}

std::vector<triangle_triple> exceptional_triangles_o(const poset& p, std::size_t cap) {
  return filter_exceptional(o_triangles(p, cap), exceptional_edges_o(p, cap),
                            polytope_kind::order);
}

std::vector<triangle_triple> exceptional_triangles_c(const poset& p, std::size_t cap) {
  return filter_exceptional(c_triangles(p, cap), exceptional_edges_c(p, cap),
                            polytope_kind::chain);
}

std::vector<edge_pair> exceptional_edges_o_characterized(const poset& p,
                                                         std::size_t cap) {
  if (!is_maximal_ranked(p))
    throw std::invalid_argument("poset is not maximal ranked");
  std::vector<edge_pair> out;
  for (element_set ideal : enumerate_ideals(p, cap))
    if (is_connected(p, ideal) && p.maximal_of(ideal).size() >= 2)
      out.emplace_back(polytope_kind::order, element_set{}, ideal);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<edge_pair> exceptional_edges_c_characterized(const poset& p) {
  if (!is_maximal_ranked(p))
    throw std::invalid_argument("poset is not maximal ranked");
  rank_decomposition rd = rank_levels(p);
  std::vector<edge_pair> out;
  for (std::size_t lv = 1; lv < rd.levels.size(); ++lv) {
    element_set level = rd.levels[lv];
    // All subsets of the level with at least two members, by submask walk.
    for (std::uint64_t sub = level.bits(); sub != 0;
         sub = (sub - 1) & level.bits()) {
      element_set b = element_set::from_bits(sub);
      if (b.size() >= 2)
        out.emplace_back(polytope_kind::chain, rd.levels[lv - 1], b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

triangle_triple exceptional_injection(const poset& p, const triangle_triple& t) {
  auto rd = try_rank_levels(p);
  if (!rd || !is_maximal_ranked(p))
    throw std::invalid_argument("poset is not maximal ranked");

  // Canonical order of the triple is the inclusion order.
  element_set lo = t.a, mid = t.b, hi = t.c;
  bool is_triangle = p.is_ideal(lo) && p.is_ideal(mid) && p.is_ideal(hi) &&
                     lo.proper_subset_of(mid) && mid.proper_subset_of(hi) &&
                     is_connected(p, mid - lo) && is_connected(p, hi - mid) &&
                     is_connected(p, hi - lo);
  bool exceptional_side =
      is_triangle && (o_edge_is_exceptional(p, lo, mid) ||
                      o_edge_is_exceptional(p, mid, hi) ||
                      o_edge_is_exceptional(p, lo, hi));
  if (!exceptional_side || !lo.empty())
    throw std::invalid_argument("triple is not an exceptional order triangle");

  element_set max_mid = p.maximal_of(mid);
  element_set max_hi = p.maximal_of(hi);
  int j = level_of(*rd, max_mid.front());
  int k = level_of(*rd, max_hi.front());
  assert(j <= k);

  if (max_mid.size() >= 2) {
    assert(j >= 1);  // a connected ideal with two maximal elements cannot sit in level 0
    return {polytope_kind::chain, rd->levels[static_cast<std::size_t>(j - 1)], max_mid,
            max_hi};
  }
  assert(k >= 1);
  if (k - j != 1)
    return {polytope_kind::chain, rd->levels[static_cast<std::size_t>(k - 1)], max_mid,
            max_hi};
  return {polytope_kind::chain, rd->levels[static_cast<std::size_t>(k - 1)],
          p.minimal_of(hi - mid), max_hi};
}

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  }
  return static_cast<std::uint64_t>(acc);
}

} // namespace

std::uint64_t excess_formula(std::span<const int> level_sizes) {
  if (level_sizes.empty()) throw std::invalid_argument("no levels given");
  for (int c : level_sizes)
    if (c < 1) throw std::invalid_argument("level sizes must be positive");

  const int n = static_cast<int>(level_sizes.size()) - 1;
  unsigned __int128 total = 0;
  for (int s = 2; s <= n; ++s)
    for (int t = 2; t <= s; ++t)
      for (int m = 2; m <= level_sizes[static_cast<std::size_t>(s)]; ++m)
        for (int l = 2; l <= level_sizes[static_cast<std::size_t>(s - t)]; ++l)
          total += static_cast<unsigned __int128>(
                       binomial(level_sizes[static_cast<std::size_t>(s)], m)) *
                   binomial(level_sizes[static_cast<std::size_t>(s - t)], l);
  if (total > static_cast<unsigned __int128>(~std::uint64_t{0}))
    throw std::overflow_error("excess formula value exceeds 64 bits");
  return static_cast<std::uint64_t>(total);
}

std::uint64_t excess_formula(const rank_decomposition& rd) {
  std::vector<int> sizes = rd.level_sizes();
  return excess_formula(sizes);
}

comparison_report compare(const poset& p, std::size_t cap) {
  comparison_report r;
  r.d = p.size();
  r.f0_o = enumerate_ideals(p, cap).size();
  r.f0_c = enumerate_antichains(p, cap).size();
  r.f1_o = o_edges(p, cap).size();
  r.f1_c = c_edges(p, cap).size();
  r.tri_o = o_triangles(p, cap).size();
  r.tri_c = c_triangles(p, cap).size();
  r.estar_o = exceptional_edges_o(p, cap).size();
  r.estar_c = exceptional_edges_c(p, cap).size();
  r.dstar_o = exceptional_triangles_o(p, cap).size();
  r.dstar_c = exceptional_triangles_c(p, cap).size();
  r.has_x = contains_x_subposet(p).has_value();
  if (auto rd = try_rank_levels(p)) {
    r.level_sizes = rd->level_sizes();
    if (is_maximal_ranked(p)) r.formula_value = excess_formula(*rd);
  }
  r.equality_holds = r.tri_o == r.tri_c;
  return r;
}

std::vector<std::string> report_invariant_violations(const poset& p,
                                                     const comparison_report& r) {
  std::vector<std::string> out;
  auto complain = [&](const std::string& msg) { out.push_back(msg); };
  auto num = [](std::uint64_t v) { return std::to_string(v); };

  if (r.f0_o != r.f0_c)
    complain("vertex counts differ: f0_O=" + num(r.f0_o) + " f0_C=" + num(r.f0_c));
  if (r.f1_o != r.f1_c)
    complain("edge counts differ: f1_O=" + num(r.f1_o) + " f1_C=" + num(r.f1_c));
  if (r.tri_o + r.dstar_c != r.tri_c + r.dstar_o)
    complain("triangle-difference identity fails: " + num(r.tri_o) + "-" +
             num(r.dstar_o) + " != " + num(r.tri_c) + "-" + num(r.dstar_c));
  if (r.formula_value) {
    if (r.tri_o > r.tri_c)
      complain("tri_O exceeds tri_C on a maximal ranked poset");
    if ((r.tri_o == r.tri_c) != !r.has_x)
      complain("triangle-count equality does not match the X criterion");
    if (r.tri_c - r.tri_o != *r.formula_value)
      complain("excess formula mismatch: tri_C-tri_O=" + num(r.tri_c - r.tri_o) +
               " formula=" + num(*r.formula_value));
    if ((*r.formula_value > 0) != r.has_x)
      complain("excess formula zero/nonzero does not match the X criterion");
  }
  (void)p;
  return out;
}

std::vector<std::string> injection_contract_violations(const poset& p, std::size_t cap) {
  std::vector<std::string> out;
  if (!is_maximal_ranked(p)) return out;

  std::vector<triangle_triple> dstar_o = exceptional_triangles_o(p, cap);
  std::vector<triangle_triple> dstar_c = exceptional_triangles_c(p, cap);
  std::vector<triangle_triple> images;
  images.reserve(dstar_o.size());
  for (const triangle_triple& t : dstar_o) images.push_back(exceptional_injection(p, t));

  for (const triangle_triple& im : images)
    if (!std::binary_search(dstar_c.begin(), dstar_c.end(), im))
      out.push_back("image " + to_string(im.a) + "," + to_string(im.b) + "," +
                    to_string(im.c) + " is not an exceptional chain triangle");

  std::vector<triangle_triple> sorted_images = images;
  std::sort(sorted_images.begin(), sorted_images.end());
  if (std::adjacent_find(sorted_images.begin(), sorted_images.end()) !=
      sorted_images.end())
    out.push_back("injection maps two exceptional triangles to the same image");

  if (auto w = contains_x_subposet(p)) {
    rank_decomposition rd = rank_levels(p);
    int s = level_of(rd, w->x);
    int low = level_of(rd, w->a);
    triangle_triple missed(polytope_kind::chain, rd.levels[static_cast<std::size_t>(low)],
                           rd.levels[static_cast<std::size_t>(s - 1)],
                           rd.levels[static_cast<std::size_t>(s)]);
    if (!std::binary_search(dstar_c.begin(), dstar_c.end(), missed))
      out.push_back("X-witness level triple is not an exceptional chain triangle");
    if (std::binary_search(sorted_images.begin(), sorted_images.end(), missed))
      out.push_back("X-witness level triple unexpectedly lies in the injection image");
  }
  return out;
}

std::vector<std::string> characterization_violations(const poset& p, std::size_t cap) {
  std::vector<std::string> out;
  if (!is_maximal_ranked(p)) return out;
  if (exceptional_edges_o(p, cap) != exceptional_edges_o_characterized(p, cap))
    out.push_back("order-side exceptional edges differ from their closed form");
  if (exceptional_edges_c(p, cap) != exceptional_edges_c_characterized(p))
    out.push_back("chain-side exceptional edges differ from their closed form");
  return out;
}

} // namespace ocpkit
