#include "cactus/oracle_cache.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace cactus {

OracleCache::OracleCache(OracleOptions options, unsigned workers)
    : options_(options), workers_(std::max(1u, workers)) {}

const SizeDistribution& OracleCache::get(const GraphKey& key) {
  std::promise<SizeDistribution> promise;
  std::shared_future<SizeDistribution> future;
  bool owner = false;
  {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
      future = promise.get_future().share();
      entries_.emplace(key, future);
      owner = true;
    } else {
      future = it->second;
    }
  }
  if (owner) {
    try {
      promise.set_value(enumerate_mis(build_graph(key), options_));
    } catch (...) {
      promise.set_exception(std::current_exception());
    }
  }
  // The map keeps the shared state alive, so the reference stays valid.
  return future.get();
}

void OracleCache::prefetch(const std::vector<GraphKey>& keys) {
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < keys.size(); i = next++) {
      try {
        get(keys[i]);
      } catch (...) {
      }
    }
  };
  const unsigned count = std::min<unsigned>(workers_, static_cast<unsigned>(keys.size()));
  if (count <= 1) {
    work();
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
}

}  // namespace cactus
