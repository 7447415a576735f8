#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cactus {

/// Dense vertex index, contiguous from 0 within a graph.
using VertexId = std::uint32_t;

using Edge = std::pair<VertexId, VertexId>;

/// The eight regular polygonal cactus families.
enum class FamilyId {
  Triangular,
  Diamond,
  Square,
  Pentagonal,
  MetaPentagonal,
  MetaHexagonal,
  ParaHexagonal,
  OrthoHexagonal,
};

inline constexpr std::array<FamilyId, 8> kAllFamilies = {
    FamilyId::Triangular,    FamilyId::Diamond,       FamilyId::Square,
    FamilyId::Pentagonal,    FamilyId::MetaPentagonal, FamilyId::MetaHexagonal,
    FamilyId::ParaHexagonal, FamilyId::OrthoHexagonal,
};

/// Construction parameters of a family: every block is a cycle of
/// `cycle_length` vertices and consecutive cut vertices of a block sit at
/// cycle distance `attach_distance` (1 ortho, 2 meta, 3 para).
struct FamilySpec {
  FamilyId id;
  int cycle_length;
  int attach_distance;
};

FamilySpec family_spec(FamilyId id);

/// Lowercase hyphenated id, e.g. "meta-hexagonal".
std::string_view family_name(FamilyId id);

/// Case-insensitive lookup by hyphenated id.
std::optional<FamilyId> parse_family(std::string_view name);

/// Upper-case graph letter (T, D, S, P, M, H, G, Q).
char family_letter(FamilyId id);

/// Lower-case count symbol (t, d, s, p, m, h, g, q).
char count_symbol(FamilyId id);

enum class AuxKind { Bar, Tilde };

/// Which graph of a family a count refers to: the cactus itself or one of
/// its gadget-augmented auxiliaries.
enum class GraphKind { Family, Bar, Tilde };

std::string_view kind_name(GraphKind kind);
std::optional<GraphKind> parse_kind(std::string_view name);
std::optional<AuxKind> to_aux(GraphKind kind);

/// Tilde auxiliaries exist only for the meta-pentagonal and the three hexagonal families.
bool supports_tilde(FamilyId id);

/// Identifies one concrete generated graph.
struct GraphKey {
  FamilyId family;
  GraphKind kind;
  int n;

  friend auto operator<=>(const GraphKey&, const GraphKey&) = default;
};

std::string describe(const GraphKey& key);

/// Structural label. Block vertices carry their 1-based block and cycle
/// position; a shared cut vertex keeps the label of the earlier block.
/// Gadget vertices (block == 0) carry a slot name instead.
struct VertexLabel {
  int block = 0;
  int position = 0;
  std::string slot;

  bool is_gadget() const { return block == 0; }
  /// "b<i>_p<j>" for block vertices, the slot name for gadget vertices.
  std::string text() const;
  static std::optional<VertexLabel> parse(std::string_view text);

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

/// Undirected simple graph with sorted adjacency lists. Immutable once built.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return adjacency_.empty(); }

  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  bool adjacent(VertexId u, VertexId v) const;
  const VertexLabel& label(VertexId v) const { return labels_.at(v); }

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend class GraphBuilder;

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<VertexLabel> labels_;
  std::size_t edge_count_ = 0;
};

/// Accumulates vertices and edges, rejecting loops and parallel edges.
class GraphBuilder {
 public:
  VertexId add_vertex(VertexLabel label);
  void add_edge(VertexId u, VertexId v);
  std::size_t vertex_count() const { return labels_.size(); }
  Graph build() &&;

 private:
  std::vector<VertexLabel> labels_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Chain of n cycles of length k where vertex d of block i is identified
/// with vertex 0 of block i+1. n == 0 yields the empty graph.
Graph build_family(const FamilySpec& spec, int n);

/// Family graph with the auxiliary gadget hung on its anchor, the vertex
/// where block n+1 would attach. For n == 0 the gadget hangs on a lone root.
/// Throws std::invalid_argument for Tilde on families without one.
Graph build_aux(const FamilySpec& spec, AuxKind kind, int n);

Graph build_graph(const GraphKey& key);

/// Anchor of build_family(spec, n) for n >= 1.
VertexId family_anchor(const FamilySpec& spec, int n);

/// Articulation points in increasing order.
std::vector<VertexId> cut_vertices(const Graph& g);

/// Vertex sets of the biconnected components (blocks), each sorted.
std::vector<std::vector<VertexId>> blocks(const Graph& g);

/// Induced subgraph on the complement of `removed`, keeping labels and
/// relative vertex order.
Graph remove_vertices(const Graph& g, std::span<const VertexId> removed);

/// Vertices of `b` follow those of `a`.
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace cactus
