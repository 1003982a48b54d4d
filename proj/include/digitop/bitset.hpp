#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace digitop {

// Fixed-universe dynamic bitset over point indices [0, universe).
// Sets over <= 64 points fit in one word and skip the kernel dispatch.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static PointSet full(std::size_t universe);
  static PointSet of(std::size_t universe, std::span<const std::size_t> members);

  std::size_t universe() const { return universe_; }
  std::size_t word_count() const { return words_.size(); }
  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const;
  bool empty() const;

  // Smallest member >= from, or universe() if there is none.
  std::size_t next(std::size_t from) const;
  std::size_t first() const { return next(0); }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const auto b = static_cast<std::size_t>(std::countr_zero(bits));
        f(w * 64 + b);
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> to_vector() const;

  bool intersects(const PointSet& other) const;
  bool is_subset_of(const PointSet& other) const;
  std::size_t intersection_count(const PointSet& other) const;

  PointSet& operator&=(const PointSet& other);
  PointSet& operator|=(const PointSet& other);
  PointSet& operator-=(const PointSet& other);

  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }

  friend bool operator==(const PointSet& a, const PointSet& b) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace digitop
