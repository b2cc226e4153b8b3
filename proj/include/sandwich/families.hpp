#pragma once
//
// The parameterized families of isolated subsemigroups and their index sets.
//
// Top layer (stable rank l):
//   X: partitions of {1..n} into l blocks separating all representatives;
//   Y: images {b_1..b_l} with b_i in A_i.
// Corank-one layer (stable rank l-1), for an ordered pair (k, m):
//   U^(k,m): partitions into l-1 blocks, each meeting A, with a_k and a_m
//            sharing a block (symmetric in k, m);
//   V^(k):   images {b_i : i != k} with b_i in A_i.
//
// Families:
//   F(X,Y):       union of the root classes of the top-layer idempotents
//                 with kernel in X and image in Y;
//   H(k,m,X,Y):   same in the corank layer, trifle a_k and burdened a_m;
//   K({k,m},X):   both orientations of the pair, kernel in X, any image;
//   L(k,M,Y):     trifle a_k, burdened ranging over M (|M| > 1), image in Y;
//   Ideal:        all elements of stable rank < l;
//   FUnionIdeal:  F(X,Y) together with the ideal;
//   RootUnion:    an explicit union of root classes (degenerate cases l <= 2).

#include <cstdint>
#include <string>
#include <vector>

#include "sandwich/context.hpp"
#include "sandwich/element_set.hpp"
#include "sandwich/guards.hpp"
#include "sandwich/idempotents.hpp"
#include "sandwich/transformation.hpp"

namespace sandwich {

struct TopIndexSets {
  std::vector<Partition> kernels;                 // sorted, size l^(n-l)
  std::vector<std::vector<std::uint8_t>> images;  // sorted, size prod |A_i|
};

TopIndexSets enum_index_sets(const SandwichContext& ctx);

struct CorankIndexSets {
  std::vector<Partition> kernels;                 // size (l-1)^(n-l)
  std::vector<std::vector<std::uint8_t>> images;  // size prod_{i != k} |A_i|
};

// k, m are 1-based representative indices, k != m; requires l >= 2.
CorankIndexSets enum_index_sets_lm1(const SandwichContext& ctx, int k, int m);

// The unique idempotent with the given top-layer kernel and image.
Transformation top_idempotent(const SandwichContext& ctx, const Partition& ker,
                              const std::vector<std::uint8_t>& img);
// The unique idempotent with kernel in U^(k,m) and image in V^(k); its trifle
// is a_k and its burdened element a_m.
Transformation corank_idempotent(const SandwichContext& ctx, int k, int m, const Partition& ker,
                                 const std::vector<std::uint8_t>& img);

struct FamilyDescriptor {
  enum class Tag { F, H, K, L, Ideal, FUnionIdeal, RootUnion };

  Tag tag;
  int k = 0;                                       // H, L: trifle index; K: smaller index
  int m = 0;                                       // H: burdened index; K: larger index
  std::vector<Partition> kernels;                  // F/H/K: the subset X
  std::vector<std::vector<std::uint8_t>> images;   // F/H/L: the subset Y
  std::vector<int> burdened_indices;               // L: M as 1-based indices, |M| > 1
  std::vector<Transformation> roots;               // RootUnion: the idempotents

  static FamilyDescriptor f(std::vector<Partition> X, std::vector<std::vector<std::uint8_t>> Y);
  static FamilyDescriptor h(int k, int m, std::vector<Partition> X,
                            std::vector<std::vector<std::uint8_t>> Y);
  static FamilyDescriptor kk(int k, int m, std::vector<Partition> X);
  static FamilyDescriptor l(int k, std::vector<int> M, std::vector<std::vector<std::uint8_t>> Y);
  static FamilyDescriptor ideal();
  static FamilyDescriptor f_union_ideal(std::vector<Partition> X,
                                        std::vector<std::vector<std::uint8_t>> Y);
  static FamilyDescriptor root_union(std::vector<Transformation> roots);

  const char* tag_name() const;
  // Canonical total order: tag, then parameters; used for deterministic
  // output and for keeping the least descriptor on deduplication.
  std::string key() const;
  // Compact human-readable form, e.g. "F(X={{1,2|3}}, Y={{1,3}})".
  std::string to_string() const;
};

// Validates the descriptor for the context (e.g. H/K/L need l >= 2, Ideal
// needs l > 2, nonempty parameter subsets) and materializes its element set.
ElementSet family_elements(const SandwichContext& ctx, const FamilyDescriptor& d,
                           const RootClassTable& table);
ElementSet family_elements(const SandwichContext& ctx, const FamilyDescriptor& d,
                           const Guards& guards);

}  // namespace sandwich
