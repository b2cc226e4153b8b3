#pragma once
//
// The sandwich semigroup (T_n, *) for a fixed idempotent sandwich element
// alpha of rank l: beta * gamma = beta alpha gamma.  The context carries the
// kernel blocks A_1..A_l of alpha (canonical partition order), their
// representatives a_1..a_l (the values of alpha), and lookup tables.

#include <cstdint>
#include <vector>

#include "sandwich/transformation.hpp"

namespace sandwich {

class SandwichContext {
 public:
  static SandwichContext from_idempotent(const Transformation& alpha);

  int degree() const { return alpha_.degree(); }
  int sandwich_rank() const { return static_cast<int>(reps_.size()); }  // l
  const Transformation& alpha() const { return alpha_; }
  const Partition& block_partition() const { return blocks_; }
  const std::vector<std::vector<std::uint8_t>>& blocks() const { return block_lists_; }
  const std::vector<std::uint8_t>& reps() const { return reps_; }

  // 0-based index i with x in A_{i+1}, for a 1-based point x.
  int block_index(int x) const { return blocks_.block_of(x); }
  // 0-based index i with a_{i+1} == x, or -1 when x is not a representative.
  int rep_index(int x) const { return rep_index_[x]; }
  bool in_image(int x) const { return rep_index_[x] >= 0; }

  // beta * gamma = beta alpha gamma.
  Transformation product(const Transformation& beta, const Transformation& gamma) const;

 private:
  SandwichContext() = default;

  Transformation alpha_;
  Partition blocks_;
  std::vector<std::vector<std::uint8_t>> block_lists_;
  std::vector<std::uint8_t> reps_;
  std::vector<int> rep_index_;  // by 1-based point, -1 outside im(alpha)
};

struct IdempotentPower {
  Transformation element;     // the unique idempotent *-power of beta
  std::uint64_t exponent;     // least e >= 1 with beta^{*e} idempotent
};

// All distinct *-powers of beta, in order beta^{*1}, beta^{*2}, ...; the list
// stops just before the first repetition, so it covers every power.
std::vector<Transformation> star_power_orbit(const SandwichContext& ctx,
                                             const Transformation& beta);

IdempotentPower idempotent_power(const SandwichContext& ctx, const Transformation& beta);

struct StableData {
  int stable_rank;
  Partition stable_kernel;
  std::vector<std::uint8_t> stable_image;
};

StableData stable_data(const SandwichContext& ctx, const Transformation& beta);
int stable_rank(const SandwichContext& ctx, const Transformation& beta);

}  // namespace sandwich
