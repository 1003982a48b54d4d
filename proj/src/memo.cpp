#include "digitop/memo.hpp"

namespace digitop {

MemoCache<bool>& contractibility_cache() {
  static MemoCache<bool> cache(kDefaultMemoCapacity);
  return cache;
}

MemoCache<int>& sphere_cache() {
  static MemoCache<int> cache(kDefaultMemoCapacity);
  return cache;
}

void clear_memo_caches() {
  contractibility_cache().clear();
  sphere_cache().clear();
}

void set_memo_capacity(std::size_t entries) {
  contractibility_cache().set_capacity(entries);
  sphere_cache().set_capacity(entries);
}

}  // namespace digitop
