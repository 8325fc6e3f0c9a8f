#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace drgforge {

using Word = std::uint64_t;

inline int words_for(int bits) { return (bits + 63) / 64; }

/// Fixed-width vertex set. Width is fixed at construction.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int width) : width_(width), words_(words_for(width), 0) {}

  int width() const { return width_; }
  bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void set(int v) { words_[v >> 6] |= Word{1} << (v & 63); }
  void reset(int v) { words_[v >> 6] &= ~(Word{1} << (v & 63)); }
  int count() const {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }
  bool none() const {
    for (Word w : words_)
      if (w) return false;
    return true;
  }
  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits) {
        out.push_back(static_cast<int>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  int width_ = 0;
  std::vector<Word> words_;
};

/// popcount(a & b) over equal-width word spans.
inline int and_count(std::span<const Word> a, std::span<const Word> b) {
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

}  // namespace drgforge
