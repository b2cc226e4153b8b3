#include "sandwich/idempotents.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sandwich {

bool is_variant_idempotent(const SandwichContext& ctx, const Transformation& eps) {
  return ctx.product(eps, eps) == eps;
}

namespace {

std::optional<RankLm1Data> corank_one_data(const SandwichContext& ctx,
                                           const Partition& ker,
                                           const std::vector<std::uint8_t>& block_images) {
  const int l = ctx.sandwich_rank();
  const int k = ker.block_count();
  if (k != l - 1) {
    return std::nullopt;
  }
  // l representatives in l-1 blocks, each block holding at least one: exactly
  // one block holds a pair.
  std::vector<std::vector<int>> reps_in_block(k);
  for (int i = 0; i < l; ++i) {
    reps_in_block[ker.block_of(ctx.reps()[i])].push_back(i);
  }
  int pair_block = -1;
  for (int b = 0; b < k; ++b) {
    if (reps_in_block[b].size() == 2) {
      if (pair_block >= 0) {
        throw std::logic_error("two kernel blocks with doubled representatives");
      }
      pair_block = b;
    } else if (reps_in_block[b].size() != 1) {
      throw std::logic_error("kernel block with " + std::to_string(reps_in_block[b].size()) +
                             " representatives in a rank l-1 idempotent");
    }
  }
  if (pair_block < 0) {
    throw std::logic_error("no doubled-representative block in a rank l-1 idempotent");
  }
  int first = reps_in_block[pair_block][0];
  int second = reps_in_block[pair_block][1];
  int image_block = ctx.block_index(block_images[pair_block]);
  int burdened_index;  // 0-based
  if (image_block == first) {
    burdened_index = first;
  } else if (image_block == second) {
    burdened_index = second;
  } else {
    throw std::logic_error("pair block image lies outside both candidate blocks");
  }
  int trifle_index = burdened_index == first ? second : first;
  int burdened = ctx.reps()[burdened_index];
  int trifle = ctx.reps()[trifle_index];
  return RankLm1Data{{std::min(burdened, trifle), std::max(burdened, trifle)},
                     trifle,
                     burdened,
                     trifle_index + 1,
                     burdened_index + 1};
}

IdempotentInfo build_info(const SandwichContext& ctx, const Transformation& eps,
                          const Partition& ker, std::vector<std::uint8_t> block_images,
                          std::vector<int> injection) {
  IdempotentInfo info;
  info.element = eps;
  info.rank = ker.block_count();
  info.kernel_blocks = ker;
  info.block_images = std::move(block_images);
  info.injection = std::move(injection);
  info.corank_one = corank_one_data(ctx, ker, info.block_images);
  return info;
}

}  // namespace

std::optional<IdempotentInfo> structural_idempotent_check(const SandwichContext& ctx,
                                                          const Transformation& eps) {
  if (eps.degree() != ctx.degree()) {
    throw std::invalid_argument("degree mismatch with sandwich context");
  }
  Partition ker = kernel(eps);
  const int k = ker.block_count();
  auto blocks = ker.blocks();
  std::vector<std::uint8_t> block_images(k);
  for (int i = 0; i < k; ++i) {
    block_images[i] = static_cast<std::uint8_t>(eps(blocks[i][0]));
  }
  // The only candidate injection sends block i to the alpha-block of its
  // image; check a_{f(i)} lands back in E_i and that no alpha-block repeats.
  std::vector<int> injection(k);
  std::vector<bool> used(ctx.sandwich_rank(), false);
  for (int i = 0; i < k; ++i) {
    int f = ctx.block_index(block_images[i]);
    if (used[f]) {
      return std::nullopt;
    }
    used[f] = true;
    if (ker.block_of(ctx.reps()[f]) != i) {
      return std::nullopt;
    }
    injection[i] = f + 1;
  }
  return build_info(ctx, eps, ker, std::move(block_images), std::move(injection));
}

std::vector<IdempotentInfo> enumerate_idempotents(const SandwichContext& ctx,
                                                  const Guards& guards) {
  require_scan(guards, ctx.degree());
  const std::uint64_t total = universe_size(ctx.degree());
  std::vector<IdempotentInfo> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Transformation t = Transformation::from_index(ctx.degree(), idx);
    if (is_variant_idempotent(ctx, t)) {
      auto info = structural_idempotent_check(ctx, t);
      if (!info) {
        throw std::logic_error("definitional idempotent fails the structural criterion: " +
                               t.to_string());
      }
      out.push_back(std::move(*info));
    }
  }
  return out;
}

BigInt count_idempotents_formula(const SandwichContext& ctx) {
  const int n = ctx.degree();
  const int l = ctx.sandwich_rank();
  // Group subsets X by size: sum_s s^(n-s) e_s(|A_1|,..,|A_l|) with e_s the
  // elementary symmetric polynomials of the block sizes.
  std::vector<BigInt> elem(l + 1, 0);
  elem[0] = 1;
  for (int i = 0; i < l; ++i) {
    BigInt size = static_cast<int>(ctx.blocks()[i].size());
    for (int s = std::min(i + 1, l); s >= 1; --s) {
      elem[s] += elem[s - 1] * size;
    }
  }
  BigInt total = 0;
  for (int s = 1; s <= l; ++s) {
    total += elem[s] * ipow(s, static_cast<std::uint64_t>(n - s));
  }
  return total;
}

RankLm1Data rank_lm1_data(const SandwichContext& ctx, const Transformation& eps) {
  auto info = structural_idempotent_check(ctx, eps);
  if (!info || !is_variant_idempotent(ctx, eps)) {
    throw std::invalid_argument(eps.to_string() + " is not an idempotent of the variant");
  }
  if (!info->corank_one) {
    throw std::invalid_argument("rank of " + eps.to_string() + " is " +
                                std::to_string(info->rank) + ", not l-1 = " +
                                std::to_string(ctx.sandwich_rank() - 1));
  }
  return *info->corank_one;
}

RootClassTable::RootClassTable(const SandwichContext& ctx, const Guards& guards) : n_(ctx.degree()) {
  require_scan(guards, n_);
  const std::uint64_t total = universe_size(n_);
  class_of_.assign(total, -1);
  std::map<std::uint64_t, int> id_by_index;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Transformation t = Transformation::from_index(n_, idx);
    if (is_variant_idempotent(ctx, t)) {
      id_by_index.emplace(idx, static_cast<int>(id_by_index.size()));
      idempotents_.push_back(t);
      ranks_.push_back(rank(t));
    }
  }
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Transformation eps = idempotent_power(ctx, Transformation::from_index(n_, idx)).element;
    class_of_[idx] = id_by_index.at(eps.index());
  }
}

int RootClassTable::class_of_idempotent(const Transformation& eps) const {
  auto it = std::lower_bound(idempotents_.begin(), idempotents_.end(), eps,
                             [](const Transformation& a, const Transformation& b) {
                               return a.index() < b.index();
                             });
  if (it == idempotents_.end() || !(*it == eps)) {
    throw std::invalid_argument(eps.to_string() + " is not an idempotent of the variant");
  }
  return static_cast<int>(it - idempotents_.begin());
}

ElementSet RootClassTable::class_set(int class_id) const {
  ElementSet out(n_);
  for (std::uint64_t idx = 0; idx < class_of_.size(); ++idx) {
    if (class_of_[idx] == class_id) {
      out.insert(idx);
    }
  }
  return out;
}

ElementSet RootClassTable::union_of(const std::vector<int>& class_ids) const {
  std::vector<bool> wanted(class_count(), false);
  for (int id : class_ids) {
    wanted[id] = true;
  }
  ElementSet out(n_);
  for (std::uint64_t idx = 0; idx < class_of_.size(); ++idx) {
    if (wanted[class_of_[idx]]) {
      out.insert(idx);
    }
  }
  return out;
}

ElementSet sqrt_class(const SandwichContext& ctx, const Transformation& eps,
                      const Guards& guards) {
  if (!is_variant_idempotent(ctx, eps)) {
    throw std::invalid_argument(eps.to_string() + " is not an idempotent of the variant");
  }
  require_scan(guards, ctx.degree());
  const std::uint64_t total = universe_size(ctx.degree());
  ElementSet out(ctx.degree());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Transformation beta = Transformation::from_index(ctx.degree(), idx);
    if (idempotent_power(ctx, beta).element == eps) {
      out.insert(idx);
    }
  }
  return out;
}

bool group_membership(const SandwichContext& ctx, const Transformation& eps,
                      const Transformation& beta) {
  if (!is_variant_idempotent(ctx, eps)) {
    throw std::invalid_argument(eps.to_string() + " is not an idempotent of the variant");
  }
  return kernel(beta) == kernel(eps) && image(beta) == image(eps);
}

ElementSet group_of(const SandwichContext& ctx, const Transformation& eps, const Guards& guards) {
  if (!is_variant_idempotent(ctx, eps)) {
    throw std::invalid_argument(eps.to_string() + " is not an idempotent of the variant");
  }
  require_scan(guards, ctx.degree());
  Partition ker = kernel(eps);
  auto im = image(eps);
  const std::uint64_t total = universe_size(ctx.degree());
  ElementSet out(ctx.degree());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Transformation beta = Transformation::from_index(ctx.degree(), idx);
    if (kernel(beta) == ker && image(beta) == im) {
      out.insert(idx);
    }
  }
  std::uint64_t expected = 1;
  for (int i = 2; i <= rank(eps); ++i) {
    expected *= i;
  }
  if (out.size() != expected) {
    throw std::logic_error("maximal subgroup of " + eps.to_string() + " has " +
                           std::to_string(out.size()) + " elements, expected rank factorial");
  }
  return out;
}

Transformation phi_l(const SandwichContext& ctx, const Transformation& beta) {
  return compose(ctx.alpha(), beta);
}

Transformation phi_r(const SandwichContext& ctx, const Transformation& beta) {
  return compose(beta, ctx.alpha());
}

Transformation phi_bar(const SandwichContext& ctx, const Transformation& beta) {
  const int l = ctx.sandwich_rank();
  Transformation r = phi_r(ctx, beta);
  std::vector<std::uint8_t> img(l);
  for (int i = 0; i < l; ++i) {
    int target = ctx.rep_index(r(ctx.reps()[i]));
    if (target < 0) {
      throw std::logic_error("phi_r image left the representative set");
    }
    img[i] = static_cast<std::uint8_t>(target + 1);
  }
  return Transformation(std::move(img));
}

}  // namespace sandwich
