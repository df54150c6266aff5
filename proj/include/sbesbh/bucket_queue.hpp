#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <vector>

namespace sbesbh {

/// Min-priority queue over (key, id) with small integer keys that only
/// decrease. Entries are lazy: push a fresh (key, id) whenever a key drops
/// and let pop_min discard entries the caller reports as stale. Ties go to
/// the lowest id.
class BucketQueue {
 public:
  using Id = std::uint32_t;

  void push(std::uint32_t key, Id id) {
    if (key >= buckets_.size()) buckets_.resize(key + 1);
    buckets_[key].push(id);
    if (key < min_key_) min_key_ = key;
  }

  /// Pops the smallest (key, id) for which is_current(key, id) holds.
  template <typename IsCurrent>
  std::optional<Id> pop_min(IsCurrent&& is_current) {
    while (min_key_ < buckets_.size()) {
      auto& bucket = buckets_[min_key_];
      while (!bucket.empty()) {
        const Id id = bucket.top();
        bucket.pop();
        if (is_current(min_key_, id)) return id;
      }
      ++min_key_;
    }
    return std::nullopt;
  }

 private:
  using Bucket = std::priority_queue<Id, std::vector<Id>, std::greater<Id>>;
  std::vector<Bucket> buckets_;
  std::uint32_t min_key_ = 0;
};

}  // namespace sbesbh
