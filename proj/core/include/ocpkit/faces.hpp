#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ocpkit/poset.hpp"

namespace ocpkit {

enum class polytope_kind { order, chain };

/// Unordered vertex pair of an edge, kept in canonical (ascending) order.
/// Endpoints are ideals for the order polytope, antichains for the chain
/// polytope.
struct edge_pair {
  polytope_kind kind = polytope_kind::order;
  element_set a, b;

  edge_pair() = default;
  edge_pair(polytope_kind k, element_set x, element_set y)
      : kind(k), a(x < y ? x : y), b(x < y ? y : x) {}

  friend bool operator==(const edge_pair&, const edge_pair&) = default;
  friend auto operator<=>(const edge_pair& l, const edge_pair& r) {
    if (auto c = l.a <=> r.a; c != 0) return c;
    return l.b <=> r.b;
  }
};

/// Unordered vertex triple of a triangular 2-face, canonical ascending; for
/// order-polytope triples the ascending order is the inclusion order.
struct triangle_triple {
  polytope_kind kind = polytope_kind::order;
  element_set a, b, c;

  triangle_triple() = default;
  triangle_triple(polytope_kind k, element_set x, element_set y, element_set z) : kind(k) {
    if (y < x) std::swap(x, y);
    if (z < y) std::swap(y, z);
    if (y < x) std::swap(x, y);
    a = x;
    b = y;
    c = z;
  }

  friend bool operator==(const triangle_triple&, const triangle_triple&) = default;
  friend auto operator<=>(const triangle_triple& l, const triangle_triple& r) {
    if (auto cmp = l.a <=> r.a; cmp != 0) return cmp;
    if (auto cmp = l.b <=> r.b; cmp != 0) return cmp;
    return l.c <=> r.c;
  }
};

/// All counts and verdicts for one poset.
struct comparison_report {
  int d = 0;
  std::optional<std::vector<int>> level_sizes;  // graded posets only
  std::uint64_t f0_o = 0, f0_c = 0;
  std::uint64_t f1_o = 0, f1_c = 0;
  std::uint64_t tri_o = 0, tri_c = 0;
  std::uint64_t estar_o = 0, estar_c = 0;
  std::uint64_t dstar_o = 0, dstar_c = 0;
  bool has_x = false;
  std::optional<std::uint64_t> formula_value;  // maximal ranked only
  bool equality_holds = false;
  std::optional<bool> oracle_consistent;
};

/// Edges of the order polytope: pairs of ideals I < J with J \ I connected.
std::vector<edge_pair> o_edges(const poset& p, std::size_t cap = default_enumeration_cap);

/// Edges of the chain polytope: antichain pairs with connected symmetric
/// difference.
std::vector<edge_pair> c_edges(const poset& p, std::size_t cap = default_enumeration_cap);

/// Triangular 2-faces of the order polytope: ideal chains I < J < K whose
/// three pairwise differences are all connected. Coincides with the
/// triangle set of the graph (ideals, o_edges).
std::vector<triangle_triple> o_triangles(const poset& p,
                                         std::size_t cap = default_enumeration_cap);

/// Triangular 2-faces of the chain polytope: antichain triples with pairwise
/// connected symmetric differences.
std::vector<triangle_triple> c_triangles(const poset& p,
                                         std::size_t cap = default_enumeration_cap);

/// Order-polytope edges whose endpoints, mapped to antichains by taking
/// maximal elements, do not span a chain-polytope edge.
std::vector<edge_pair> exceptional_edges_o(const poset& p,
                                           std::size_t cap = default_enumeration_cap);

/// Chain-polytope edges whose endpoints, mapped to ideals by downward
/// closure, do not span an order-polytope edge.
std::vector<edge_pair> exceptional_edges_c(const poset& p,
                                           std::size_t cap = default_enumeration_cap);

/// Triangles with at least one exceptional side.
std::vector<triangle_triple> exceptional_triangles_o(
    const poset& p, std::size_t cap = default_enumeration_cap);
std::vector<triangle_triple> exceptional_triangles_c(
    const poset& p, std::size_t cap = default_enumeration_cap);

/// Closed forms of the exceptional edge sets on a maximal ranked poset:
/// {empty, J} with J connected and >= 2 maximal elements on the order side,
/// {P_(l-1), B} with B a subset of P_l of size >= 2 on the chain side.
/// Cross-check path against the definition-based scans above.
std::vector<edge_pair> exceptional_edges_o_characterized(
    const poset& p, std::size_t cap = default_enumeration_cap);
std::vector<edge_pair> exceptional_edges_c_characterized(const poset& p);

/// Maps an exceptional order-polytope triangle {empty, J, K} of a maximal
/// ranked poset to an exceptional chain-polytope triangle. Injective over
/// the whole exceptional set. Throws std::invalid_argument when the poset
/// is not maximal ranked or the triple is not an exceptional triangle.
triangle_triple exceptional_injection(const poset& p, const triangle_triple& t);

/// The quadruple binomial sum giving tri_C - tri_O for a maximal ranked
/// poset; empty index ranges contribute zero.
std::uint64_t excess_formula(std::span<const int> level_sizes);
std::uint64_t excess_formula(const rank_decomposition& rd);

/// Runs every enumerator on one poset and assembles the counts.
comparison_report compare(const poset& p, std::size_t cap = default_enumeration_cap);

/// Identity checks on a finished report: vertex/edge count equality, the
/// triangle-difference identity, and for maximal ranked posets the
/// triangle inequality, the X criterion and the excess formula. Returns
/// one message per violated identity; empty means consistent.
std::vector<std::string> report_invariant_violations(const poset& p,
                                                     const comparison_report& r);

/// Injection contract on a maximal ranked poset: every image lies in the
/// exceptional chain-triangle set, images are pairwise distinct, and when
/// an X subposet exists the level triple it yields is missed by the map.
/// Empty for posets that are not maximal ranked.
std::vector<std::string> injection_contract_violations(
    const poset& p, std::size_t cap = default_enumeration_cap);

/// Definition-based exceptional edge sets versus their closed forms; empty
/// for posets that are not maximal ranked.
std::vector<std::string> characterization_violations(
    const poset& p, std::size_t cap = default_enumeration_cap);

} // namespace ocpkit
