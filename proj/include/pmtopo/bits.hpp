#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace pmtopo {

/// Largest ground set a simplicial complex may be built over.
inline constexpr int kMaxGround = 128;

/// A subset of {0, ..., 127}; the face representation used by complexes,
/// the Morse engine and homology.
class Face {
 public:
  constexpr Face() = default;

  static Face from_elements(std::span<const int> elements) {
    Face f;
    for (int e : elements) f.set(e);
    return f;
  }
  static Face from_elements(std::initializer_list<int> elements) {
    Face f;
    for (int e : elements) f.set(e);
    return f;
  }

  constexpr bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  constexpr void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  constexpr void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  constexpr Face with(int i) const {
    Face f = *this;
    f.set(i);
    return f;
  }
  constexpr Face without(int i) const {
    Face f = *this;
    f.reset(i);
    return f;
  }

  constexpr int count() const { return std::popcount(words_[0]) + std::popcount(words_[1]); }
  constexpr bool empty() const { return (words_[0] | words_[1]) == 0; }
  /// Simplicial dimension: cardinality minus one, so the empty face is -1.
  constexpr int dim() const { return count() - 1; }

  constexpr bool is_subset_of(const Face& o) const {
    return (words_[0] & ~o.words_[0]) == 0 && (words_[1] & ~o.words_[1]) == 0;
  }

  constexpr Face operator&(const Face& o) const {
    Face f;
    f.words_ = {words_[0] & o.words_[0], words_[1] & o.words_[1]};
    return f;
  }
  constexpr Face operator|(const Face& o) const {
    Face f;
    f.words_ = {words_[0] | o.words_[0], words_[1] | o.words_[1]};
    return f;
  }
  constexpr Face operator-(const Face& o) const {
    Face f;
    f.words_ = {words_[0] & ~o.words_[0], words_[1] & ~o.words_[1]};
    return f;
  }

  constexpr bool operator==(const Face&) const = default;
  // Canonical order: numeric order of the 128-bit mask.
  constexpr std::strong_ordering operator<=>(const Face& o) const {
    if (auto c = words_[1] <=> o.words_[1]; c != 0) return c;
    return words_[0] <=> o.words_[0];
  }

  template <class F>
  constexpr void for_each(F&& fn) const {
    for (int w = 0; w < 2; ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        fn(w * 64 + b);
        bits &= bits - 1;
      }
    }
  }

  /// Elements in increasing order.
  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int e) { out.push_back(e); });
    return out;
  }

  constexpr std::uint64_t word(int w) const { return words_[w]; }

 private:
  std::array<std::uint64_t, 2> words_{0, 0};
};

struct FaceHash {
  std::size_t operator()(const Face& f) const noexcept {
    std::uint64_t h = f.word(0) * 0x9E3779B97F4A7C15ull;
    h ^= f.word(1) + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

/// Dynamically sized edge subset, used for matchings on graphs of any size.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  EdgeSet operator&(const EdgeSet& o) const {
    EdgeSet r(size_);
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] = words_[w] & o.words_[w];
    return r;
  }

  bool is_subset_of(const EdgeSet& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        out.push_back(static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
        bits &= bits - 1;
      }
    }
    return out;
  }

  /// Narrow to a Face; throws when an element lies beyond the Face width.
  Face to_face() const {
    Face f;
    for (int e : elements()) {
      if (e >= kMaxGround) throw std::length_error("edge index exceeds face width");
      f.set(e);
    }
    return f;
  }

  bool operator==(const EdgeSet&) const = default;
  auto operator<=>(const EdgeSet& o) const { return elements() <=> o.elements(); }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace pmtopo
