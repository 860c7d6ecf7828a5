#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ocpkit/faces.hpp"
#include "ocpkit/poset.hpp"

namespace ocpkit {

inline constexpr std::size_t default_pair_cap = 1'000'000;
inline constexpr std::size_t default_triple_cap = 10'000'000;

/// 0/1 point of R^d, the indicator vector of a subset.
struct lattice_point {
  std::vector<int> coords;

  friend bool operator==(const lattice_point&, const lattice_point&) = default;
  friend auto operator<=>(const lattice_point&, const lattice_point&) = default;
};

lattice_point indicator_point(int d, element_set w);

/// Halfspace normal . x <= rhs with integer data.
struct facet_inequality {
  std::vector<long long> normal;
  long long rhs = 0;
};

/// Exact V- and H-description of one polytope. vertices[i] is the indicator
/// vector of sources[i] (an ideal or antichain); tight[i] is a bitmask over
/// facet indices, packed 64 per word, marking the facets vertex i lies on.
struct polytope_model {
  polytope_kind kind = polytope_kind::order;
  int dim = 0;
  std::vector<element_set> sources;
  std::vector<lattice_point> vertices;
  std::vector<facet_inequality> facets;
  std::vector<std::vector<std::uint64_t>> tight;
};

polytope_model order_polytope_model(const poset& p,
                                    std::size_t cap = default_enumeration_cap);
polytope_model chain_polytope_model(const poset& p,
                                    std::size_t cap = default_enumeration_cap);

std::optional<std::size_t> find_vertex(const polytope_model& m, const lattice_point& v);

/// Vertex set of the smallest face containing all of s: the vertices lying
/// on every facet that is tight on all of s. Returned in model vertex
/// order. Throws std::invalid_argument when s is empty or contains a
/// non-vertex point.
std::vector<lattice_point> smallest_face(const polytope_model& m,
                                         std::span<const lattice_point> s);

/// Rank of the difference vectors of s over exact integer elimination;
/// 0 for a single point.
int affine_rank(std::span<const lattice_point> s);

bool is_edge_geometric(const polytope_model& m, const lattice_point& u,
                       const lattice_point& v);
bool is_triangle_geometric(const polytope_model& m, const lattice_point& u,
                           const lattice_point& v, const lattice_point& w);

/// Exhaustive scans over all vertex pairs / triples, reported as the source
/// subsets so results compare directly against the combinatorial
/// enumerators. Throws enumeration_limit_error beyond the cap.
std::vector<edge_pair> brute_edges(const polytope_model& m,
                                   std::size_t pair_cap = default_pair_cap);
std::vector<triangle_triple> brute_triangles(const polytope_model& m,
                                             std::size_t triple_cap = default_triple_cap);

} // namespace ocpkit
