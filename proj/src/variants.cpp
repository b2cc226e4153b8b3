#include "sandwich/variants.hpp"

#include <algorithm>
#include <stdexcept>

namespace sandwich {

std::vector<int> kernel_type(const Transformation& alpha) {
  std::vector<int> sizes;
  for (const auto& block : kernel(alpha).blocks()) {
    sizes.push_back(static_cast<int>(block.size()));
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  return sizes;
}

bool variants_isomorphic(const Transformation& alpha1, const Transformation& alpha2) {
  if (alpha1.degree() != alpha2.degree()) {
    throw std::invalid_argument("degree mismatch: " + std::to_string(alpha1.degree()) + " vs " +
                                std::to_string(alpha2.degree()));
  }
  return kernel_type(alpha1) == kernel_type(alpha2);
}

NormalizedSandwich normalize_sandwich(const Transformation& alpha) {
  if (is_plain_idempotent(alpha)) {
    return {SandwichContext::from_idempotent(alpha), false};
  }
  // Send each kernel block to its minimal element.  The kernel (hence the
  // kernel type) is unchanged and the result is idempotent.
  const int n = alpha.degree();
  Partition ker = kernel(alpha);
  auto blocks = ker.blocks();
  std::vector<std::uint8_t> img(n);
  for (int i = 1; i <= n; ++i) {
    img[i - 1] = blocks[ker.block_of(i)][0];
  }
  Transformation normalized{std::move(img)};
  return {SandwichContext::from_idempotent(normalized), true};
}

}  // namespace sandwich
