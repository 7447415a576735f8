#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>

#include "cactus/bigint.hpp"
#include "cactus/graph.hpp"

namespace cactus {

/// Exact map from MIS cardinality to count. Zero counts are never stored.
class SizeDistribution {
 public:
  using Map = std::map<int, BigInt>;

  SizeDistribution() = default;
  explicit SizeDistribution(Map counts);

  const Map& counts() const { return counts_; }
  bool empty() const { return counts_.empty(); }
  BigInt at(int k) const;
  void set(int k, BigInt value);
  void add(int k, const BigInt& value);
  BigInt total() const;

  /// Largest and smallest stored size; 0 when empty.
  int min_size() const;
  int max_size() const;

  /// Entry k of the result is entry k - dk of this distribution.
  SizeDistribution shifted(int dk) const;
  SizeDistribution scaled(const BigInt& factor) const;
  SizeDistribution& operator+=(const SizeDistribution& other);
  friend SizeDistribution operator+(SizeDistribution a, const SizeDistribution& b) {
    return a += b;
  }

  /// Distribution of a disjoint union: sizes add, counts multiply.
  SizeDistribution convolve(const SizeDistribution& other) const;

  /// "{2: 3, 3: 1}".
  std::string to_string() const;

  friend bool operator==(const SizeDistribution&, const SizeDistribution&) = default;

 private:
  Map counts_;
};

struct OracleOptions {
  std::size_t vertex_limit = 64;
};

class VertexLimitExceeded : public std::runtime_error {
 public:
  VertexLimitExceeded(std::size_t vertices, std::size_t limit);
  std::size_t vertices() const { return vertices_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t vertices_;
  std::size_t limit_;
};

/// Counts every maximal independent set of `g` by size. The empty graph has
/// the single MIS {} of size 0. Throws VertexLimitExceeded above the limit.
SizeDistribution enumerate_mis(const Graph& g, const OracleOptions& options = {});

BigInt mis_count(const Graph& g, const OracleOptions& options = {});

/// True iff `s` is independent and dominates every vertex outside it.
/// Throws std::out_of_range for a vertex id not in `g`.
bool is_maximal_independent(const Graph& g, std::span<const VertexId> s);

namespace detail {

/// Invokes `visit` once per MIS with its vertices in increasing order.
void for_each_mis(const Graph& g, const std::function<void(std::span<const VertexId>)>& visit,
                  const OracleOptions& options = {});

}  // namespace detail

}  // namespace cactus
