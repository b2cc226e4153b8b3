#include "sandwich/element_set.hpp"

#include <bit>
#include <stdexcept>

namespace sandwich {

namespace {
// 2^26 bits = 8 MiB per set; enough for n <= 8 and far past the scan guards.
constexpr std::uint64_t kMaxUniverse = std::uint64_t(1) << 26;
}  // namespace

ElementSet::ElementSet(int n) : n_(n), universe_(universe_size(n)) {
  if (universe_ > kMaxUniverse) {
    throw std::length_error("element set universe n^n = " + std::to_string(universe_) +
                            " exceeds the supported maximum " + std::to_string(kMaxUniverse));
  }
  words_.assign((universe_ + 63) / 64, 0);
}

ElementSet ElementSet::full(int n) {
  ElementSet s(n);
  for (auto& w : s.words_) {
    w = ~std::uint64_t(0);
  }
  // Clear the bits past the universe in the last word.
  std::uint64_t extra = s.words_.size() * 64 - s.universe_;
  if (extra > 0) {
    s.words_.back() >>= extra;
  }
  return s;
}

std::uint64_t ElementSet::size() const {
  std::uint64_t total = 0;
  for (std::uint64_t w : words_) {
    total += std::popcount(w);
  }
  return total;
}

void ElementSet::check_same_universe(const ElementSet& other) const {
  if (n_ != other.n_) {
    throw std::invalid_argument("element sets over different degrees: " + std::to_string(n_) +
                                " vs " + std::to_string(other.n_));
  }
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] |= other.words_[i];
  }
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] &= other.words_[i];
  }
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] &= ~other.words_[i];
  }
  return *this;
}

ElementSet ElementSet::complement() const {
  ElementSet out = full(n_);
  out -= *this;
  return out;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) {
      return false;
    }
  }
  return true;
}

bool ElementSet::operator<(const ElementSet& other) const {
  if (n_ != other.n_) {
    return n_ < other.n_;
  }
  return words_ < other.words_;
}

void ElementSet::for_each(const std::function<void(std::uint64_t)>& fn) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      int bit = std::countr_zero(w);
      fn(i * 64 + bit);
      w &= w - 1;
    }
  }
}

std::vector<std::uint64_t> ElementSet::to_indices() const {
  std::vector<std::uint64_t> out;
  out.reserve(size());
  for_each([&](std::uint64_t idx) { out.push_back(idx); });
  return out;
}

}  // namespace sandwich
