#include "cactus/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/biconnected_components.hpp>

namespace cactus {

namespace {

struct FamilyInfo {
  FamilyId id;
  std::string_view name;
  char letter;
  int k;
  int d;
  std::vector<int> bar_paths;
  std::vector<int> tilde_paths;
};

// Gadgets are pendant paths hung on the anchor; each entry is a path length.
const std::vector<FamilyInfo>& family_table() {
  static const std::vector<FamilyInfo> table = {
      {FamilyId::Triangular, "triangular", 'T', 3, 1, {1}, {}},
      {FamilyId::Diamond, "diamond", 'D', 4, 2, {1, 1}, {}},
      {FamilyId::Square, "square", 'S', 4, 1, {2}, {}},
      {FamilyId::Pentagonal, "pentagonal", 'P', 5, 1, {3}, {}},
      {FamilyId::MetaPentagonal, "meta-pentagonal", 'M', 5, 2, {1}, {1, 2}},
      {FamilyId::MetaHexagonal, "meta-hexagonal", 'H', 6, 2, {1, 1}, {1, 3}},
      {FamilyId::ParaHexagonal, "para-hexagonal", 'G', 6, 3, {1, 1}, {2, 2}},
      {FamilyId::OrthoHexagonal, "ortho-hexagonal", 'Q', 6, 1, {1, 1}, {4}},
  };
  return table;
}

const FamilyInfo& info(FamilyId id) {
  for (const auto& f : family_table()) {
    if (f.id == id) return f;
  }
  throw std::invalid_argument("unknown family id");
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::no_property,
                                         boost::property<boost::edge_index_t, std::size_t>>;

BoostGraph to_boost(const Graph& g) {
  BoostGraph bg(g.vertex_count());
  std::size_t index = 0;
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, index++, bg);
  return bg;
}

}  // namespace

FamilySpec family_spec(FamilyId id) {
  const auto& f = info(id);
  return {f.id, f.k, f.d};
}

std::string_view family_name(FamilyId id) { return info(id).name; }

std::optional<FamilyId> parse_family(std::string_view name) {
  const std::string key = lower(name);
  for (const auto& f : family_table()) {
    if (f.name == key) return f.id;
  }
  return std::nullopt;
}

char family_letter(FamilyId id) { return info(id).letter; }

char count_symbol(FamilyId id) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(info(id).letter)));
}

std::string_view kind_name(GraphKind kind) {
  switch (kind) {
    case GraphKind::Family: return "family";
    case GraphKind::Bar: return "bar";
    case GraphKind::Tilde: return "tilde";
  }
  return "family";
}

std::optional<GraphKind> parse_kind(std::string_view name) {
  const std::string key = lower(name);
  if (key == "family" || key == "none") return GraphKind::Family;
  if (key == "bar") return GraphKind::Bar;
  if (key == "tilde") return GraphKind::Tilde;
  return std::nullopt;
}

std::optional<AuxKind> to_aux(GraphKind kind) {
  switch (kind) {
    case GraphKind::Bar: return AuxKind::Bar;
    case GraphKind::Tilde: return AuxKind::Tilde;
    case GraphKind::Family: break;
  }
  return std::nullopt;
}

bool supports_tilde(FamilyId id) { return !info(id).tilde_paths.empty(); }

std::string describe(const GraphKey& key) {
  std::ostringstream out;
  out << family_letter(key.family);
  if (key.kind == GraphKind::Bar) out << "bar";
  if (key.kind == GraphKind::Tilde) out << "tilde";
  out << '(' << key.n << ')';
  return out.str();
}

std::string VertexLabel::text() const {
  if (is_gadget()) return slot;
  return "b" + std::to_string(block) + "_p" + std::to_string(position);
}

std::optional<VertexLabel> VertexLabel::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text.front() == 'b') {
    const auto sep = text.find("_p");
    if (sep != std::string_view::npos && sep > 1) {
      int block = 0;
      int position = 0;
      const char* b0 = text.data() + 1;
      const char* b1 = text.data() + sep;
      const char* p0 = text.data() + sep + 2;
      const char* p1 = text.data() + text.size();
      auto rb = std::from_chars(b0, b1, block);
      auto rp = std::from_chars(p0, p1, position);
      if (rb.ec == std::errc() && rb.ptr == b1 && rp.ec == std::errc() && rp.ptr == p1 &&
          block >= 1 && position >= 1) {
        return VertexLabel{block, position, {}};
      }
    }
  }
  return VertexLabel{0, 0, std::string(text)};
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  const auto& nu = adjacency_.at(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < adjacency_.size(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexId GraphBuilder::add_vertex(VertexLabel label) {
  labels_.push_back(std::move(label));
  adjacency_.emplace_back();
  return static_cast<VertexId>(labels_.size() - 1);
}

void GraphBuilder::add_edge(VertexId u, VertexId v) {
  if (u >= labels_.size() || v >= labels_.size()) {
    throw std::out_of_range("edge endpoint out of range");
  }
  if (u == v) throw std::invalid_argument("self-loop");
  auto& nu = adjacency_[u];
  if (std::find(nu.begin(), nu.end(), v) != nu.end()) {
    throw std::invalid_argument("parallel edge");
  }
  nu.push_back(v);
  adjacency_[v].push_back(u);
  ++edge_count_;
}

Graph GraphBuilder::build() && {
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
  Graph g;
  g.adjacency_ = std::move(adjacency_);
  g.labels_ = std::move(labels_);
  g.edge_count_ = edge_count_;
  return g;
}

namespace {

// Builds the family chain into `b` and returns the anchor (v_{n,d}).
VertexId build_chain(GraphBuilder& b, const FamilySpec& spec, int n) {
  const int k = spec.cycle_length;
  const int d = spec.attach_distance;
  VertexId entry = 0;
  VertexId anchor = 0;
  for (int i = 1; i <= n; ++i) {
    std::vector<VertexId> cycle(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
      if (i > 1 && j == 0) {
        cycle[0] = entry;
      } else {
        cycle[static_cast<std::size_t>(j)] = b.add_vertex({i, j + 1, {}});
      }
    }
    for (int j = 0; j < k; ++j) {
      b.add_edge(cycle[static_cast<std::size_t>(j)], cycle[static_cast<std::size_t>((j + 1) % k)]);
    }
    entry = cycle[static_cast<std::size_t>(d)];
    anchor = entry;
  }
  return anchor;
}

}  // namespace

Graph build_family(const FamilySpec& spec, int n) {
  if (n < 0) throw std::invalid_argument("block count must be non-negative");
  GraphBuilder b;
  build_chain(b, spec, n);
  return std::move(b).build();
}

VertexId family_anchor(const FamilySpec& spec, int n) {
  if (n < 1) throw std::invalid_argument("family anchor needs n >= 1");
  // Block 1 contributes k vertices, each later block k-1; the anchor is the
  // vertex at cycle index d of block n.
  const int k = spec.cycle_length;
  const int d = spec.attach_distance;
  const int first = n == 1 ? 0 : k + (n - 2) * (k - 1) - 1;
  return static_cast<VertexId>(first + d);
}

Graph build_aux(const FamilySpec& spec, AuxKind kind, int n) {
  if (n < 0) throw std::invalid_argument("block count must be non-negative");
  const auto& f = info(spec.id);
  const auto& paths = kind == AuxKind::Bar ? f.bar_paths : f.tilde_paths;
  if (paths.empty()) {
    throw std::invalid_argument(std::string("family ") + std::string(f.name) +
                                " has no tilde auxiliary graph");
  }
  GraphBuilder b;
  VertexId anchor = n == 0 ? b.add_vertex({0, 0, "root"}) : build_chain(b, spec, n);
  int slot = 0;
  for (int length : paths) {
    VertexId prev = anchor;
    for (int step = 0; step < length; ++step) {
      VertexId v = b.add_vertex({0, 0, "g" + std::to_string(++slot)});
      b.add_edge(prev, v);
      prev = v;
    }
  }
  return std::move(b).build();
}

Graph build_graph(const GraphKey& key) {
  const FamilySpec spec = family_spec(key.family);
  if (auto aux = to_aux(key.kind)) return build_aux(spec, *aux, key.n);
  return build_family(spec, key.n);
}

std::vector<VertexId> cut_vertices(const Graph& g) {
  BoostGraph bg = to_boost(g);
  std::vector<VertexId> out;
  boost::articulation_points(bg, std::back_inserter(out));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<VertexId>> blocks(const Graph& g) {
  BoostGraph bg = to_boost(g);
  auto index = boost::get(boost::edge_index, bg);
  std::vector<std::size_t> component(boost::num_edges(bg));
  const std::size_t count = boost::biconnected_components(
      bg, boost::make_iterator_property_map(component.begin(), index));
  std::vector<std::vector<VertexId>> out(count);
  for (auto [it, end] = boost::edges(bg); it != end; ++it) {
    auto& block = out[component[index[*it]]];
    block.push_back(static_cast<VertexId>(boost::source(*it, bg)));
    block.push_back(static_cast<VertexId>(boost::target(*it, bg)));
  }
  for (auto& block : out) {
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph remove_vertices(const Graph& g, std::span<const VertexId> removed) {
  std::vector<bool> gone(g.vertex_count(), false);
  for (VertexId v : removed) gone.at(v) = true;
  std::vector<VertexId> remap(g.vertex_count(), 0);
  GraphBuilder b;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!gone[v]) remap[v] = b.add_vertex(g.label(v));
  }
  for (auto [u, v] : g.edges()) {
    if (!gone[u] && !gone[v]) b.add_edge(remap[u], remap[v]);
  }
  return std::move(b).build();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  GraphBuilder out;
  for (VertexId v = 0; v < a.vertex_count(); ++v) out.add_vertex(a.label(v));
  const auto offset = static_cast<VertexId>(a.vertex_count());
  for (VertexId v = 0; v < b.vertex_count(); ++v) out.add_vertex(b.label(v));
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(u + offset, v + offset);
  return std::move(out).build();
}

}  // namespace cactus
