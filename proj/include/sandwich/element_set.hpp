#pragma once
//
// Dense bit-vector sets over all n^n transformations of degree n, indexed by
// the canonical element encoding.  The universal representation for
// subsemigroups at desk scale.

#include <cstdint>
#include <functional>
#include <vector>

#include "sandwich/transformation.hpp"

namespace sandwich {

class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int n);
  static ElementSet full(int n);

  int degree() const { return n_; }
  std::uint64_t universe() const { return universe_; }

  bool contains(std::uint64_t index) const {
    return (words_[index >> 6] >> (index & 63)) & 1;
  }
  bool contains(const Transformation& t) const { return contains(t.index()); }
  void insert(std::uint64_t index) { words_[index >> 6] |= std::uint64_t(1) << (index & 63); }
  void insert(const Transformation& t) { insert(t.index()); }
  void erase(std::uint64_t index) { words_[index >> 6] &= ~(std::uint64_t(1) << (index & 63)); }

  std::uint64_t size() const;
  bool empty() const { return size() == 0; }

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  ElementSet& operator-=(const ElementSet& other);
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }
  ElementSet complement() const;

  bool is_subset_of(const ElementSet& other) const;

  bool operator==(const ElementSet& other) const = default;
  // Deterministic total order (degree, then the packed bit words).
  bool operator<(const ElementSet& other) const;

  // Ascending element index.
  void for_each(const std::function<void(std::uint64_t)>& fn) const;
  std::vector<std::uint64_t> to_indices() const;

 private:
  void check_same_universe(const ElementSet& other) const;

  int n_ = 0;
  std::uint64_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace sandwich
