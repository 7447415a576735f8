#include "cactus/mis.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace cactus {

SizeDistribution::SizeDistribution(Map counts) {
  for (auto& [k, v] : counts) set(k, std::move(v));
}

BigInt SizeDistribution::at(int k) const {
  auto it = counts_.find(k);
  return it == counts_.end() ? BigInt(0) : it->second;
}

void SizeDistribution::set(int k, BigInt value) {
  if (value == 0) {
    counts_.erase(k);
  } else {
    counts_[k] = std::move(value);
  }
}

void SizeDistribution::add(int k, const BigInt& value) { set(k, at(k) + value); }

BigInt SizeDistribution::total() const {
  BigInt sum = 0;
  for (const auto& [k, v] : counts_) sum += v;
  return sum;
}

int SizeDistribution::min_size() const { return counts_.empty() ? 0 : counts_.begin()->first; }
int SizeDistribution::max_size() const { return counts_.empty() ? 0 : counts_.rbegin()->first; }

SizeDistribution SizeDistribution::shifted(int dk) const {
  SizeDistribution out;
  for (const auto& [k, v] : counts_) out.counts_[k + dk] = v;
  return out;
}

SizeDistribution SizeDistribution::scaled(const BigInt& factor) const {
  SizeDistribution out;
  for (const auto& [k, v] : counts_) out.set(k, v * factor);
  return out;
}

SizeDistribution& SizeDistribution::operator+=(const SizeDistribution& other) {
  for (const auto& [k, v] : other.counts_) add(k, v);
  return *this;
}

SizeDistribution SizeDistribution::convolve(const SizeDistribution& other) const {
  SizeDistribution out;
  for (const auto& [ka, va] : counts_) {
    for (const auto& [kb, vb] : other.counts_) out.add(ka + kb, va * vb);
  }
  return out;
}

std::string SizeDistribution::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [k, v] : counts_) {
    if (!first) out << ", ";
    first = false;
    out << k << ": " << v;
  }
  out << '}';
  return out.str();
}

VertexLimitExceeded::VertexLimitExceeded(std::size_t vertices, std::size_t limit)
    : std::runtime_error("graph has " + std::to_string(vertices) +
                         " vertices, above the oracle vertex limit of " + std::to_string(limit)),
      vertices_(vertices),
      limit_(limit) {}

namespace {

// Vertices are decided in index order. A vertex is sealed once its last
// neighbour has been decided; a sealed excluded vertex without a chosen
// neighbour can never become dominated, so the branch is cut there.
template <typename Leaf>
class Search {
 public:
  Search(const Graph& g, Leaf& leaf) : g_(g), leaf_(leaf) {
    const auto n = g.vertex_count();
    in_.assign(n, false);
    dominated_.assign(n, 0);
    sealed_at_.assign(n, {});
    for (VertexId v = 0; v < n; ++v) {
      VertexId last = v;
      for (VertexId u : g.neighbors(v)) last = std::max(last, u);
      sealed_at_[last].push_back(v);
    }
  }

  void run() { step(0); }

 private:
  void step(VertexId v) {
    if (v == g_.vertex_count()) {
      leaf_(chosen_);
      return;
    }
    const auto before = g_.neighbors(v);
    const bool blocked = std::any_of(before.begin(), before.end(),
                                     [&](VertexId u) { return u < v && in_[u]; });
    if (!blocked) {
      in_[v] = true;
      chosen_.push_back(v);
      for (VertexId u : before) ++dominated_[u];
      if (sealed_ok(v)) step(v + 1);
      for (VertexId u : before) --dominated_[u];
      chosen_.pop_back();
      in_[v] = false;
    }
    if (sealed_ok(v)) step(v + 1);
  }

  bool sealed_ok(VertexId v) const {
    for (VertexId w : sealed_at_[v]) {
      if (!in_[w] && dominated_[w] == 0) return false;
    }
    return true;
  }

  const Graph& g_;
  Leaf& leaf_;
  std::vector<bool> in_;
  std::vector<int> dominated_;
  std::vector<std::vector<VertexId>> sealed_at_;
  std::vector<VertexId> chosen_;
};

void check_limit(const Graph& g, const OracleOptions& options) {
  if (g.vertex_count() > options.vertex_limit) {
    throw VertexLimitExceeded(g.vertex_count(), options.vertex_limit);
  }
}

}  // namespace

SizeDistribution enumerate_mis(const Graph& g, const OracleOptions& options) {
  check_limit(g, options);
  std::vector<unsigned long long> by_size(g.vertex_count() + 1, 0);
  std::vector<BigInt> overflow(g.vertex_count() + 1, 0);
  auto leaf = [&](const std::vector<VertexId>& chosen) {
    auto& slot = by_size[chosen.size()];
    if (++slot == 0) overflow[chosen.size()] += BigInt(1) << 64;
  };
  Search<decltype(leaf)> search(g, leaf);
  search.run();
  SizeDistribution out;
  for (std::size_t k = 0; k < by_size.size(); ++k) {
    out.set(static_cast<int>(k), overflow[k] + by_size[k]);
  }
  return out;
}

BigInt mis_count(const Graph& g, const OracleOptions& options) {
  return enumerate_mis(g, options).total();
}

bool is_maximal_independent(const Graph& g, std::span<const VertexId> s) {
  std::vector<bool> in(g.vertex_count(), false);
  for (VertexId v : s) in.at(v) = true;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto nbrs = g.neighbors(v);
    const bool has_in_neighbor =
        std::any_of(nbrs.begin(), nbrs.end(), [&](VertexId u) { return in[u]; });
    if (in[v] && has_in_neighbor) return false;
    if (!in[v] && !has_in_neighbor) return false;
  }
  return true;
}

namespace detail {

void for_each_mis(const Graph& g, const std::function<void(std::span<const VertexId>)>& visit,
                  const OracleOptions& options) {
  check_limit(g, options);
  auto leaf = [&](const std::vector<VertexId>& chosen) { visit(chosen); };
  Search<decltype(leaf)> search(g, leaf);
  search.run();
}

}  // namespace detail

}  // namespace cactus
