#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace revsc {

// Set of state indices 0..width-1 backed by a fixed-width bit vector.
// Binary operations assume both operands share the same width.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(int width) : width_(width), words_((width + 63) / 64, 0) {}

  static StateSet of(int width, std::initializer_list<int> states) {
    StateSet s(width);
    for (int q : states) s.set(q);
    return s;
  }

  static StateSet full(int width) {
    StateSet s(width);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  int width() const { return width_; }

  bool test(int q) const { return (words_[q >> 6] >> (q & 63)) & 1u; }
  void set(int q) { words_[q >> 6] |= std::uint64_t{1} << (q & 63); }
  void reset(int q) { words_[q >> 6] &= ~(std::uint64_t{1} << (q & 63)); }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool is_subset_of(const StateSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const StateSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  StateSet& operator|=(const StateSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  StateSet& operator&=(const StateSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  StateSet complemented() const {
    StateSet s(width_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
    s.trim();
    return s;
  }

  friend StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
  friend StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }

  bool operator==(const StateSet&) const = default;

  std::vector<int> indices() const {
    std::vector<int> out;
    for (int q = 0; q < width_; ++q)
      if (test(q)) out.push_back(q);
    return out;
  }

  std::string to_string() const {
    std::string out = "{";
    for (int q = 0; q < width_; ++q) {
      if (!test(q)) continue;
      if (out.size() > 1) out += ",";
      out += std::to_string(q);
    }
    return out + "}";
  }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(width_);
    for (auto w : words_) h = h * 1000003u ^ std::hash<std::uint64_t>{}(w);
    return h;
  }

  struct Hash {
    std::size_t operator()(const StateSet& s) const { return s.hash(); }
  };

 private:
  void trim() {
    int r = width_ & 63;
    if (r != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << r) - 1;
  }

  int width_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace revsc
