#include "digitop/bitset.hpp"

#include <cassert>

#include "digitop/simd/kernels.hpp"

namespace digitop {

PointSet PointSet::full(std::size_t universe) {
  PointSet s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (const std::size_t tail = universe & 63; tail != 0) {
    s.words_.back() = (std::uint64_t{1} << tail) - 1;
  }
  return s;
}

PointSet PointSet::of(std::size_t universe, std::span<const std::size_t> members) {
  PointSet s(universe);
  for (std::size_t m : members) s.set(m);
  return s;
}

std::size_t PointSet::count() const {
  if (words_.size() == 1) return static_cast<std::size_t>(std::popcount(words_[0]));
  return simd::active_kernels().popcount(words_);
}

bool PointSet::empty() const {
  for (std::uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::size_t PointSet::next(std::size_t from) const {
  if (from >= universe_) return universe_;
  std::size_t w = from >> 6;
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (bits != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
    if (++w == words_.size()) return universe_;
    bits = words_[w];
  }
}

std::vector<std::size_t> PointSet::to_vector() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

bool PointSet::intersects(const PointSet& other) const {
  assert(universe_ == other.universe_);
  if (words_.size() == 1) return (words_[0] & other.words_[0]) != 0;
  return simd::active_kernels().intersects(words_, other.words_);
}

bool PointSet::is_subset_of(const PointSet& other) const {
  assert(universe_ == other.universe_);
  if (words_.size() == 1) return (words_[0] & ~other.words_[0]) == 0;
  return simd::active_kernels().is_subset(words_, other.words_);
}

std::size_t PointSet::intersection_count(const PointSet& other) const {
  assert(universe_ == other.universe_);
  if (words_.size() == 1) {
    return static_cast<std::size_t>(std::popcount(words_[0] & other.words_[0]));
  }
  return simd::active_kernels().and_popcount(words_, other.words_);
}

PointSet& PointSet::operator&=(const PointSet& other) {
  assert(universe_ == other.universe_);
  if (words_.size() == 1) {
    words_[0] &= other.words_[0];
  } else {
    simd::active_kernels().and_into(words_, words_, other.words_);
  }
  return *this;
}

PointSet& PointSet::operator|=(const PointSet& other) {
  assert(universe_ == other.universe_);
  if (words_.size() == 1) {
    words_[0] |= other.words_[0];
  } else {
    simd::active_kernels().or_into(words_, words_, other.words_);
  }
  return *this;
}

PointSet& PointSet::operator-=(const PointSet& other) {
  assert(universe_ == other.universe_);
  if (words_.size() == 1) {
    words_[0] &= ~other.words_[0];
  } else {
    simd::active_kernels().andnot_into(words_, words_, other.words_);
  }
  return *this;
}

}  // namespace digitop
