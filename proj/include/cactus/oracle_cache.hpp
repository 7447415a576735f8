#pragma once

#include <future>
#include <map>
#include <mutex>
#include <vector>

#include "cactus/graph.hpp"
#include "cactus/mis.hpp"

namespace cactus {

/// Memoised oracle distributions of generated graphs. Each key is computed
/// at most once; concurrent requests for the same key share the result.
class OracleCache {
 public:
  explicit OracleCache(OracleOptions options = {}, unsigned workers = 1);

  /// Throws VertexLimitExceeded (every time it is asked) for oversized graphs.
  const SizeDistribution& get(const GraphKey& key);

  /// Computes the given keys on the worker pool. Failures are kept and
  /// rethrown by later get() calls.
  void prefetch(const std::vector<GraphKey>& keys);

  const OracleOptions& options() const { return options_; }
  unsigned workers() const { return workers_; }

 private:
  OracleOptions options_;
  unsigned workers_;
  std::mutex mutex_;
  std::map<GraphKey, std::shared_future<SizeDistribution>> entries_;
};

}  // namespace cactus
