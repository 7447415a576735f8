#include "support.hpp"

#include <bit>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/isomorphism.hpp>

namespace cactus::testing {

std::vector<GraphKey> generated_keys(std::size_t max_vertices) {
  std::vector<GraphKey> keys;
  for (FamilyId family : kAllFamilies) {
    for (GraphKind kind : {GraphKind::Family, GraphKind::Bar, GraphKind::Tilde}) {
      if (kind == GraphKind::Tilde && !supports_tilde(family)) continue;
      for (int n = 0;; ++n) {
        GraphKey key{family, kind, n};
        if (build_graph(key).vertex_count() > max_vertices) break;
        keys.push_back(key);
      }
    }
  }
  return keys;
}

namespace {

std::vector<std::uint64_t> neighbour_masks(const Graph& g) {
  if (g.vertex_count() > 64) throw std::invalid_argument("test oracles handle at most 64 vertices");
  std::vector<std::uint64_t> masks(g.vertex_count(), 0);
  for (auto [u, v] : g.edges()) {
    masks[u] |= std::uint64_t{1} << v;
    masks[v] |= std::uint64_t{1} << u;
  }
  return masks;
}

void bron_kerbosch(const std::vector<std::uint64_t>& adj, std::uint64_t r, std::uint64_t p,
                   std::uint64_t x, SizeDistribution& out) {
  if (p == 0 && x == 0) {
    out.add(std::popcount(r), 1);
    return;
  }
  const std::uint64_t px = p | x;
  const int pivot = std::countr_zero(px);
  std::uint64_t candidates = p & ~adj[static_cast<std::size_t>(pivot)];
  while (candidates) {
    const int v = std::countr_zero(candidates);
    const std::uint64_t bit = std::uint64_t{1} << v;
    candidates &= candidates - 1;
    bron_kerbosch(adj, r | bit, p & adj[static_cast<std::size_t>(v)],
                  x & adj[static_cast<std::size_t>(v)], out);
    p &= ~bit;
    x |= bit;
  }
}

}  // namespace

SizeDistribution subset_filter_mis(const Graph& g) {
  if (g.vertex_count() > 24) throw std::invalid_argument("subset filter limited to 24 vertices");
  const auto adj = neighbour_masks(g);
  const std::size_t n = g.vertex_count();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  SizeDistribution out;
  for (std::uint64_t s = 0; s <= all; ++s) {
    bool ok = true;
    std::uint64_t covered = s;
    for (std::size_t v = 0; v < n && ok; ++v) {
      if (s >> v & 1) {
        if (adj[v] & s) ok = false;
        covered |= adj[v];
      }
    }
    if (ok && covered == all) out.add(std::popcount(s), 1);
  }
  return out;
}

SizeDistribution complement_clique_mis(const Graph& g) {
  const auto adj = neighbour_masks(g);
  const std::size_t n = g.vertex_count();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> complement(n);
  for (std::size_t v = 0; v < n; ++v) complement[v] = all & ~adj[v] & ~(std::uint64_t{1} << v);
  SizeDistribution out;
  bron_kerbosch(complement, 0, all, 0, out);
  return out;
}

Graph random_graph(std::mt19937_64& rng, int vertices, double edge_probability) {
  std::bernoulli_distribution coin(edge_probability);
  std::vector<Edge> edges;
  for (int u = 0; u < vertices; ++u) {
    for (int v = u + 1; v < vertices; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return make_graph(vertices, edges);
}

Graph make_graph(int vertices, const std::vector<Edge>& edges) {
  GraphBuilder b;
  for (int v = 0; v < vertices; ++v) b.add_vertex(VertexLabel{0, 0, "v" + std::to_string(v)});
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

bool isomorphic(const Graph& a, const Graph& b) {
  using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto convert = [](const Graph& g) {
    BGraph out(g.vertex_count());
    for (auto [u, v] : g.edges()) boost::add_edge(u, v, out);
    return out;
  };
  return boost::isomorphism(convert(a), convert(b));
}

}  // namespace cactus::testing
