#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace oturan {

/// Dense bit-addressable vertex subset of {0, ..., n-1}.
/// Neighborhoods are stored in this form so that intersection-heavy
/// work (detection, search pruning) runs one word at a time.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe)
      : n_(universe), words_((universe + 63) / 64, 0) {}

  int universe() const { return n_; }

  bool contains(int v) const {
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }
  void insert(int v) { words_[v >> 6] |= uint64_t{1} << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }

  int intersection_count(const VertexSet& other) const {
    int c = 0;
    for (size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & other.words_[i]);
    return c;
  }

  VertexSet& operator|=(const VertexSet& other) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& other) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  bool operator==(const VertexSet& other) const = default;

  /// Members in increasing order.
  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count());
    for (size_t i = 0; i < words_.size(); ++i) {
      uint64_t w = words_[i];
      while (w) {
        int b = std::countr_zero(w);
        out.push_back((int)(i * 64 + b));
        w &= w - 1;
      }
    }
    return out;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      uint64_t w = words_[i];
      while (w) {
        int b = std::countr_zero(w);
        fn((int)(i * 64 + b));
        w &= w - 1;
      }
    }
  }

 private:
  int n_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace oturan
