#include "ocpkit/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace ocpkit {

namespace {

using int128 = __int128;

int128 checked_mul(int128 a, int128 b) {
  int128 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in exact elimination");
  return r;
}

long long evaluate(const facet_inequality& f, const lattice_point& v) {
  long long acc = 0;
  for (std::size_t i = 0; i < f.normal.size(); ++i)
    acc += f.normal[i] * static_cast<long long>(v.coords[i]);
  return acc;
}

// Packed subset test: does every set bit of sub appear in sup?
bool mask_subset(const std::vector<std::uint64_t>& sub,
                 const std::vector<std::uint64_t>& sup) {
  for (std::size_t w = 0; w < sub.size(); ++w)
    if (sub[w] & ~sup[w]) return false;
  return true;
}

polytope_model finish_model(polytope_kind kind, int d,
                            std::vector<element_set> sources,
                            std::vector<facet_inequality> facets) {
  polytope_model m;
  m.kind = kind;
  m.dim = d;
  m.sources = std::move(sources);
  m.facets = std::move(facets);
  m.vertices.reserve(m.sources.size());
  for (element_set s : m.sources) m.vertices.push_back(indicator_point(d, s));

  const std::size_t words = (m.facets.size() + 63) / 64;
  m.tight.assign(m.vertices.size(), std::vector<std::uint64_t>(words, 0));
  std::vector<bool> facet_used(m.facets.size(), false);
  for (std::size_t v = 0; v < m.vertices.size(); ++v) {
    for (std::size_t f = 0; f < m.facets.size(); ++f) {
      long long val = evaluate(m.facets[f], m.vertices[v]);
      if (val > m.facets[f].rhs)
        throw std::logic_error("model vertex violates a facet inequality");
      if (val == m.facets[f].rhs) {
        m.tight[v][f / 64] |= std::uint64_t{1} << (f % 64);
        facet_used[f] = true;
      }
    }
  }
  if (std::find(facet_used.begin(), facet_used.end(), false) != facet_used.end())
    throw std::logic_error("model facet is tight on no vertex");
  return m;
}

std::size_t require_vertex(const polytope_model& m, const lattice_point& v) {
  auto idx = find_vertex(m, v);
  if (!idx) throw std::invalid_argument("point is not a vertex of the polytope");
  return *idx;
}

// Tight-facet intersection of a set of vertex indices.
std::vector<std::uint64_t> common_tight(const polytope_model& m,
                                        const std::vector<std::size_t>& idx) {
  std::vector<std::uint64_t> t = m.tight[idx.front()];
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t w = 0; w < t.size(); ++w) t[w] &= m.tight[idx[i]][w];
  return t;
}

} // namespace

lattice_point indicator_point(int d, element_set w) {
  lattice_point v;
  v.coords.assign(static_cast<std::size_t>(d), 0);
  for (int i : w) v.coords[static_cast<std::size_t>(i)] = 1;
  return v;
}

polytope_model order_polytope_model(const poset& p, std::size_t cap) {
  const int d = p.size();
  std::vector<facet_inequality> facets;
  for (int i : p.maximal_elements()) {
    facet_inequality f;
    f.normal.assign(static_cast<std::size_t>(d), 0);
    f.normal[static_cast<std::size_t>(i)] = -1;
    f.rhs = 0;
    facets.push_back(std::move(f));
  }
  for (int j : p.minimal_elements()) {
    facet_inequality f;
    f.normal.assign(static_cast<std::size_t>(d), 0);
    f.normal[static_cast<std::size_t>(j)] = 1;
    f.rhs = 1;
    facets.push_back(std::move(f));
  }
  for (auto [lower, upper] : p.covers()) {
    facet_inequality f;
    f.normal.assign(static_cast<std::size_t>(d), 0);
    f.normal[static_cast<std::size_t>(upper)] = 1;
    f.normal[static_cast<std::size_t>(lower)] = -1;
    f.rhs = 0;
    facets.push_back(std::move(f));
  }
  return finish_model(polytope_kind::order, d, enumerate_ideals(p, cap),
                      std::move(facets));
}

polytope_model chain_polytope_model(const poset& p, std::size_t cap) {
  const int d = p.size();
  std::vector<facet_inequality> facets;
  for (int i = 0; i < d; ++i) {
    facet_inequality f;
    f.normal.assign(static_cast<std::size_t>(d), 0);
    f.normal[static_cast<std::size_t>(i)] = -1;
    f.rhs = 0;
    facets.push_back(std::move(f));
  }
  for (const std::vector<int>& chain : maximal_chains(p)) {
    facet_inequality f;
    f.normal.assign(static_cast<std::size_t>(d), 0);
    for (int i : chain) f.normal[static_cast<std::size_t>(i)] = 1;
    f.rhs = 1;
    facets.push_back(std::move(f));
  }
  return finish_model(polytope_kind::chain, d, enumerate_antichains(p, cap),
                      std::move(facets));
}

std::optional<std::size_t> find_vertex(const polytope_model& m, const lattice_point& v) {
  // Vertices inherit the canonical ascending order of their source sets,
  // which is not the lexicographic order of coordinate vectors; scan.
  for (std::size_t i = 0; i < m.vertices.size(); ++i)
    if (m.vertices[i] == v) return i;
  return std::nullopt;
}

std::vector<lattice_point> smallest_face(const polytope_model& m,
                                         std::span<const lattice_point> s) {
  if (s.empty()) throw std::invalid_argument("no points given");
  std::vector<std::size_t> idx;
  idx.reserve(s.size());
  for (const lattice_point& v : s) idx.push_back(require_vertex(m, v));

  std::vector<std::uint64_t> t = common_tight(m, idx);
  std::vector<lattice_point> out;
  for (std::size_t v = 0; v < m.vertices.size(); ++v)
    if (mask_subset(t, m.tight[v])) out.push_back(m.vertices[v]);
  return out;
}

int affine_rank(std::span<const lattice_point> s) {
  if (s.empty()) throw std::invalid_argument("no points given");
  const std::size_t cols = s.front().coords.size();
  for (const lattice_point& v : s)
    if (v.coords.size() != cols)
      throw std::invalid_argument("point dimensions differ");

  std::vector<std::vector<int128>> rows;
  rows.reserve(s.size() - 1);
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::vector<int128> r(cols);
    for (std::size_t c = 0; c < cols; ++c)
      r[c] = static_cast<int128>(s[i].coords[c]) - s[0].coords[c];
    rows.push_back(std::move(r));
  }

  // Fraction-free (Bareiss) elimination; divisions are exact.
  int rank = 0;
  int128 prev_pivot = 1;
  for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[pivot]);

    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      for (std::size_t c = col + 1; c < cols; ++c)
        rows[r][c] =
            (checked_mul(rows[static_cast<std::size_t>(rank)][col], rows[r][c]) -
             checked_mul(rows[r][col], rows[static_cast<std::size_t>(rank)][c])) /
            prev_pivot;
      rows[r][col] = 0;
    }
    prev_pivot = rows[static_cast<std::size_t>(rank)][col];
    ++rank;
  }
  return rank;
}

bool is_edge_geometric(const polytope_model& m, const lattice_point& u,
                       const lattice_point& v) {
  std::vector<std::size_t> idx = {require_vertex(m, u), require_vertex(m, v)};
  if (idx[0] == idx[1]) throw std::invalid_argument("edge endpoints coincide");
  std::vector<std::uint64_t> t = common_tight(m, idx);
  for (std::size_t w = 0; w < m.vertices.size(); ++w)
    if (w != idx[0] && w != idx[1] && mask_subset(t, m.tight[w])) return false;
  return true;
}

bool is_triangle_geometric(const polytope_model& m, const lattice_point& u,
                           const lattice_point& v, const lattice_point& w) {
  std::vector<std::size_t> idx = {require_vertex(m, u), require_vertex(m, v),
                                  require_vertex(m, w)};
  if (idx[0] == idx[1] || idx[0] == idx[2] || idx[1] == idx[2])
    throw std::invalid_argument("triangle vertices coincide");
  std::vector<std::uint64_t> t = common_tight(m, idx);
  for (std::size_t x = 0; x < m.vertices.size(); ++x)
    if (x != idx[0] && x != idx[1] && x != idx[2] && mask_subset(t, m.tight[x]))
      return false;
  lattice_point pts[3] = {u, v, w};
  return affine_rank(pts) == 2;
}

std::vector<edge_pair> brute_edges(const polytope_model& m, std::size_t pair_cap) {
  const std::size_t n = m.vertices.size();
  if (n * (n - 1) / 2 > pair_cap)
    throw enumeration_limit_error("pair cap exceeded");
  std::vector<edge_pair> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::uint64_t hit = 0;  // count of other vertices in the tight face, early out
      std::vector<std::uint64_t> t = m.tight[i];
      for (std::size_t w = 0; w < t.size(); ++w) t[w] &= m.tight[j][w];
      for (std::size_t x = 0; x < n && hit == 0; ++x)
        if (x != i && x != j && mask_subset(t, m.tight[x])) hit = 1;
      if (hit == 0) out.emplace_back(m.kind, m.sources[i], m.sources[j]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<triangle_triple> brute_triangles(const polytope_model& m,
                                             std::size_t triple_cap) {
  const std::size_t n = m.vertices.size();
  if (n >= 3 && n * (n - 1) / 2 * (n - 2) / 3 > triple_cap)
    throw enumeration_limit_error("triple cap exceeded");
  std::vector<triangle_triple> out;
  std::vector<std::uint64_t> t(m.tight.empty() ? 0 : m.tight.front().size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        for (std::size_t w = 0; w < t.size(); ++w)
          t[w] = m.tight[i][w] & m.tight[j][w] & m.tight[k][w];
        bool minimal = true;
        for (std::size_t x = 0; x < n && minimal; ++x)
          if (x != i && x != j && x != k && mask_subset(t, m.tight[x])) minimal = false;
        if (!minimal) continue;
        lattice_point pts[3] = {m.vertices[i], m.vertices[j], m.vertices[k]};
        if (affine_rank(pts) == 2)
          out.emplace_back(m.kind, m.sources[i], m.sources[j], m.sources[k]);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace ocpkit
