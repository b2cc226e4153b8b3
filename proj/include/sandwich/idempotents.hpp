#pragma once
//
// Idempotents of (T_n, *): the structural criterion, exhaustive enumeration,
// the exact counting formula, root classes sqrt(eps), maximal subgroups, the
// rank-(l-1) invariants (distinguished pair, trifle, burdened), and the
// homomorphisms phi_l, phi_r, phi_bar.

#include <cstdint>
#include <optional>
#include <vector>

#include "sandwich/bigint.hpp"
#include "sandwich/context.hpp"
#include "sandwich/element_set.hpp"
#include "sandwich/guards.hpp"
#include "sandwich/transformation.hpp"

namespace sandwich {

// For an idempotent of rank l-1 exactly one kernel block contains two of the
// representatives a_m, a_k; the one whose block index carries the block's
// image is burdened, the other is trifle.
struct RankLm1Data {
  std::pair<int, int> distinguished;  // {burdened, trifle} as 1-based points, sorted ascending
  int trifle;                         // a_k
  int burdened;                       // a_m
  int trifle_index;                   // k, 1-based
  int burdened_index;                 // m, 1-based
};

struct IdempotentInfo {
  Transformation element;
  int rank = 0;
  Partition kernel_blocks;                  // E_1..E_k, canonical order
  std::vector<std::uint8_t> block_images;   // e_i = value on E_i
  std::vector<int> injection;               // f(i) into {1..l}, 1-based
  std::optional<RankLm1Data> corank_one;    // populated when rank == l-1
};

// Definitional test: eps * eps == eps.
bool is_variant_idempotent(const SandwichContext& ctx, const Transformation& eps);

// Structural test: the unique candidate injection f (f(i) = block of e_i)
// must satisfy a_{f(i)} in E_i and be injective.  Returns the populated info
// or nullopt.  Agrees with the definitional test on every input.
std::optional<IdempotentInfo> structural_idempotent_check(const SandwichContext& ctx,
                                                          const Transformation& eps);

// Scan of all n^n maps with the definitional check, ascending element index.
std::vector<IdempotentInfo> enumerate_idempotents(const SandwichContext& ctx,
                                                  const Guards& guards);

// Exact count: sum over nonempty X of {1..l} of (prod_{i in X} |A_i|) * |X|^(n-|X|).
BigInt count_idempotents_formula(const SandwichContext& ctx);

RankLm1Data rank_lm1_data(const SandwichContext& ctx, const Transformation& eps);

// Root classes sqrt(eps) = { beta : some *-power of beta equals eps }.  They
// partition T_n, one class per idempotent.
class RootClassTable {
 public:
  RootClassTable(const SandwichContext& ctx, const Guards& guards);

  const std::vector<Transformation>& idempotents() const { return idempotents_; }
  int class_count() const { return static_cast<int>(idempotents_.size()); }
  // Class id of an element, by dense index.
  int class_of(std::uint64_t index) const { return class_of_[index]; }
  int class_of_idempotent(const Transformation& eps) const;
  ElementSet class_set(int class_id) const;
  ElementSet union_of(const std::vector<int>& class_ids) const;
  const std::vector<int>& ranks() const { return ranks_; }

 private:
  int n_;
  std::vector<Transformation> idempotents_;  // ascending element index
  std::vector<int> ranks_;
  std::vector<std::int32_t> class_of_;       // size n^n
};

ElementSet sqrt_class(const SandwichContext& ctx, const Transformation& eps,
                      const Guards& guards);

// Maximal subgroup membership: same kernel and image as eps.
bool group_membership(const SandwichContext& ctx, const Transformation& eps,
                      const Transformation& beta);
ElementSet group_of(const SandwichContext& ctx, const Transformation& eps, const Guards& guards);

// phi_l(beta) = alpha beta, phi_r(beta) = beta alpha: homomorphisms from
// (T_n, *) to plain T_n.
Transformation phi_l(const SandwichContext& ctx, const Transformation& beta);
Transformation phi_r(const SandwichContext& ctx, const Transformation& beta);
// phi_bar(beta) = phi_r(beta) restricted to A = {a_1..a_l}, as a degree-l
// transformation on representative indices: entry i = j means a_i |-> a_j.
Transformation phi_bar(const SandwichContext& ctx, const Transformation& beta);

}  // namespace sandwich
