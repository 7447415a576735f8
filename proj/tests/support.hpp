#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

#include "cactus/graph.hpp"
#include "cactus/mis.hpp"
#include "cactus/poly.hpp"

namespace cactus {

inline void PrintTo(const UnivarPoly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const BivarPoly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const SizeDistribution& d, std::ostream* os) { *os << d.to_string(); }

}  // namespace cactus

namespace cactus::testing {

/// Every generated graph: family graphs and their gadget auxiliaries for
/// each n whose graph has at most `max_vertices` vertices.
std::vector<GraphKey> generated_keys(std::size_t max_vertices);

/// Distribution by filtering all 2^V vertex subsets.
SizeDistribution subset_filter_mis(const Graph& g);

/// Distribution by Bron-Kerbosch with pivoting over the complement graph:
/// maximal cliques of the complement are the MIS of g.
SizeDistribution complement_clique_mis(const Graph& g);

/// Uniform G(n, p) graph with plain labels.
Graph random_graph(std::mt19937_64& rng, int vertices, double edge_probability);

/// Graph from an explicit edge list on vertices 0..vertices-1.
Graph make_graph(int vertices, const std::vector<Edge>& edges);

/// Isomorphism test ignoring labels.
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace cactus::testing
