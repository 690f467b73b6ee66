#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "thinpath/kernels.hpp"

namespace thinpath {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// Fixed-universe bit set over dense vertex ids [0, universe).
class VertexSet {
 public:
  using Word = kernels::Word;
  static constexpr std::size_t kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

  static std::size_t words_for(std::size_t universe) noexcept {
    return (universe + kWordBits - 1) / kWordBits;
  }

  std::size_t universe() const noexcept { return universe_; }

  void insert(VertexId v) noexcept { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
  void erase(VertexId v) noexcept { words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }
  bool contains(VertexId v) const noexcept {
    return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
  }

  std::size_t count() const noexcept { return kernels::popcount(words_); }
  bool empty() const noexcept {
    for (Word w : words_)
      if (w) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& other) noexcept {
    kernels::or_into(words_, other.words_);
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }

  std::size_t union_count(const VertexSet& other) const noexcept {
    return kernels::union_popcount(words_, other.words_);
  }
  bool is_subset_of(const VertexSet& other) const noexcept {
    return kernels::is_subset(words_, other.words_);
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        f(static_cast<VertexId>(w * kWordBits + bit));
        bits &= bits - 1;
      }
    }
  }

  std::vector<VertexId> to_vector() const {
    std::vector<VertexId> out;
    out.reserve(count());
    for_each([&](VertexId v) { out.push_back(v); });
    return out;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace thinpath
