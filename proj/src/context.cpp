#include "sandwich/context.hpp"

#include <algorithm>
#include <stdexcept>

namespace sandwich {

SandwichContext SandwichContext::from_idempotent(const Transformation& alpha) {
  if (!is_plain_idempotent(alpha)) {
    throw std::invalid_argument("sandwich element " + alpha.to_string() +
                                " is not idempotent");
  }
  SandwichContext ctx;
  ctx.alpha_ = alpha;
  ctx.blocks_ = kernel(alpha);
  ctx.block_lists_ = ctx.blocks_.blocks();
  const int l = ctx.blocks_.block_count();
  ctx.reps_.resize(l);
  for (int i = 0; i < l; ++i) {
    // alpha is constant on each block; its value there is the representative
    // and lies inside the block because alpha is idempotent.
    ctx.reps_[i] = static_cast<std::uint8_t>(alpha(ctx.block_lists_[i][0]));
  }
  ctx.rep_index_.assign(alpha.degree() + 1, -1);
  for (int i = 0; i < l; ++i) {
    ctx.rep_index_[ctx.reps_[i]] = i;
  }
  return ctx;
}

Transformation SandwichContext::product(const Transformation& beta,
                                        const Transformation& gamma) const {
  if (beta.degree() != degree() || gamma.degree() != degree()) {
    throw std::invalid_argument("degree mismatch with sandwich context of degree " +
                                std::to_string(degree()));
  }
  const int n = degree();
  std::vector<std::uint8_t> img(n);
  for (int i = 0; i < n; ++i) {
    img[i] = static_cast<std::uint8_t>(gamma(alpha_(beta.images()[i])));
  }
  return Transformation(std::move(img));
}

std::vector<Transformation> star_power_orbit(const SandwichContext& ctx,
                                             const Transformation& beta) {
  // Orbits are short (tail plus period); a linear membership scan beats
  // hashing here.
  std::vector<Transformation> powers;
  std::vector<std::uint64_t> seen;
  Transformation current = beta;
  while (std::find(seen.begin(), seen.end(), current.index()) == seen.end()) {
    seen.push_back(current.index());
    powers.push_back(current);
    current = ctx.product(current, beta);
  }
  return powers;
}

IdempotentPower idempotent_power(const SandwichContext& ctx, const Transformation& beta) {
  std::vector<std::uint64_t> power_indices;  // power_indices[k] = index of beta^{*(k+1)}
  Transformation current = beta;
  while (true) {
    auto it = std::find(power_indices.begin(), power_indices.end(), current.index());
    if (it != power_indices.end()) {
      // Cycle found: powers tail..tail+period-1 repeat forever.  The cyclic
      // subsemigroup has exactly one idempotent, at the unique exponent in
      // that window divisible by the period.
      std::uint64_t tail = static_cast<std::uint64_t>(it - power_indices.begin()) + 1;
      std::uint64_t period = power_indices.size() + 1 - tail;
      std::uint64_t exponent = ((tail + period - 1) / period) * period;
      Transformation eps =
          Transformation::from_index(ctx.degree(), power_indices[exponent - 1]);
      if (ctx.product(eps, eps) != eps) {
        throw std::logic_error("cycle arithmetic produced a non-idempotent power");
      }
      return {eps, exponent};
    }
    power_indices.push_back(current.index());
    current = ctx.product(current, beta);
  }
}

StableData stable_data(const SandwichContext& ctx, const Transformation& beta) {
  Transformation eps = idempotent_power(ctx, beta).element;
  return {rank(eps), kernel(eps), image(eps)};
}

int stable_rank(const SandwichContext& ctx, const Transformation& beta) {
  return rank(idempotent_power(ctx, beta).element);
}

}  // namespace sandwich
