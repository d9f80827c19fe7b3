#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <vector>

namespace smul {

/// Largest finite ring the library materializes.
inline constexpr std::size_t kMaxRingSize = 256;

/// Canonical index of an element of a finite ring. Index 0 is always zero.
enum class Elem : std::uint16_t {};

constexpr std::size_t idx(Elem e) noexcept { return static_cast<std::size_t>(e); }
constexpr Elem elem(std::size_t i) noexcept { return static_cast<Elem>(i); }

/// Fixed-capacity bitset over element indices of one finite ring.
class ElemSet {
 public:
  static constexpr std::size_t kWords = kMaxRingSize / 64;

  ElemSet() = default;
  ElemSet(std::initializer_list<Elem> init) {
    for (Elem e : init) insert(e);
  }

  static ElemSet all(std::size_t n) {
    ElemSet s;
    for (std::size_t w = 0; w < kWords; ++w) {
      const std::size_t lo = w * 64;
      if (n >= lo + 64) {
        s.words_[w] = ~std::uint64_t{0};
      } else if (n > lo) {
        s.words_[w] = (std::uint64_t{1} << (n - lo)) - 1;
      }
    }
    return s;
  }

  void insert(Elem e) noexcept { words_[idx(e) / 64] |= std::uint64_t{1} << (idx(e) % 64); }
  void erase(Elem e) noexcept { words_[idx(e) / 64] &= ~(std::uint64_t{1} << (idx(e) % 64)); }
  bool contains(Elem e) const noexcept {
    return (words_[idx(e) / 64] >> (idx(e) % 64)) & 1U;
  }

  std::size_t size() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool subset_of(const ElemSet& o) const noexcept {
    for (std::size_t i = 0; i < kWords; ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }
  bool intersects(const ElemSet& o) const noexcept {
    for (std::size_t i = 0; i < kWords; ++i)
      if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
  }

  ElemSet& operator&=(const ElemSet& o) noexcept {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElemSet& operator|=(const ElemSet& o) noexcept {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ElemSet& operator-=(const ElemSet& o) noexcept {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend ElemSet operator&(ElemSet a, const ElemSet& b) noexcept { return a &= b; }
  friend ElemSet operator|(ElemSet a, const ElemSet& b) noexcept { return a |= b; }
  friend ElemSet operator-(ElemSet a, const ElemSet& b) noexcept { return a -= b; }

  friend bool operator==(const ElemSet&, const ElemSet&) = default;

  /// Smallest member; undefined on the empty set.
  Elem first() const noexcept {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] != 0) return elem(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
    return elem(0);
  }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Elem;
    using difference_type = std::ptrdiff_t;
    using pointer = const Elem*;
    using reference = Elem;

    iterator() = default;
    iterator(const ElemSet* set, std::size_t pos) : set_(set), pos_(pos) { advance(); }

    Elem operator*() const noexcept { return elem(pos_); }
    iterator& operator++() noexcept {
      ++pos_;
      advance();
      return *this;
    }
    iterator operator++(int) noexcept {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) noexcept { return a.pos_ == b.pos_; }

   private:
    void advance() noexcept {
      while (pos_ < kMaxRingSize) {
        const std::uint64_t w = set_->words_[pos_ / 64] >> (pos_ % 64);
        if (w != 0) {
          pos_ += static_cast<std::size_t>(std::countr_zero(w));
          return;
        }
        pos_ = (pos_ / 64 + 1) * 64;
      }
      pos_ = kMaxRingSize;
    }

    const ElemSet* set_ = nullptr;
    std::size_t pos_ = kMaxRingSize;
  };

  iterator begin() const noexcept { return iterator(this, 0); }
  iterator end() const noexcept { return iterator(this, kMaxRingSize); }

  std::vector<Elem> to_vector() const {
    std::vector<Elem> out;
    for (Elem e : *this) out.push_back(e);
    return out;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 0;
    for (auto w : words_) h = h * 0x9E3779B97F4A7C15ULL ^ std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

/// Ordering by (cardinality, sorted element list); used wherever output order
/// must be deterministic.
inline bool canonical_less(const ElemSet& a, const ElemSet& b) noexcept {
  const auto sa = a.size();
  const auto sb = b.size();
  if (sa != sb) return sa < sb;
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end(); ++ia, ++ib) {
    if (*ia != *ib) return idx(*ia) < idx(*ib);
  }
  return false;
}

struct ElemSetHash {
  std::size_t operator()(const ElemSet& s) const noexcept { return s.hash(); }
};

}  // namespace smul
