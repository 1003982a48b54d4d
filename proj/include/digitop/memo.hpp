#pragma once

#include <cstddef>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

namespace digitop {

// Map keyed by canonical codes. Inserting into a full cache drops every
// entry first. All members are safe to call concurrently.
template <class V>
class MemoCache {
 public:
  explicit MemoCache(std::size_t capacity) : capacity_(capacity) {}

  std::optional<V> get(const std::string& key) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  void put(const std::string& key, V value) {
    std::lock_guard<std::mutex> lock(mu_);
    if (map_.size() >= capacity_) map_.clear();
    map_.insert_or_assign(key, std::move(value));
  }

  void clear() {
    std::lock_guard<std::mutex> lock(mu_);
    map_.clear();
  }

  void set_capacity(std::size_t capacity) {
    std::lock_guard<std::mutex> lock(mu_);
    capacity_ = capacity == 0 ? 1 : capacity;
    if (map_.size() > capacity_) map_.clear();
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return map_.size();
  }

 private:
  mutable std::mutex mu_;
  std::size_t capacity_;
  std::unordered_map<std::string, V> map_;
};

inline constexpr std::size_t kDefaultMemoCapacity = 1 << 20;

MemoCache<bool>& contractibility_cache();
// Sphere dimension by canonical code; -1 records "not a sphere".
MemoCache<int>& sphere_cache();

void clear_memo_caches();
void set_memo_capacity(std::size_t entries);

}  // namespace digitop
