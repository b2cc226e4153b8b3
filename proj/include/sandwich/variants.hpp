#pragma once
//
// Variants of T_n up to isomorphism: two sandwich elements give isomorphic
// variants exactly when their kernels have the same number of blocks of each
// size, and every variant is isomorphic to one whose sandwich element is
// idempotent.

#include <vector>

#include "sandwich/context.hpp"
#include "sandwich/transformation.hpp"

namespace sandwich {

// Multiset of kernel-block sizes, sorted descending.
std::vector<int> kernel_type(const Transformation& alpha);

bool variants_isomorphic(const Transformation& alpha1, const Transformation& alpha2);

struct NormalizedSandwich {
  SandwichContext context;
  bool changed;  // context.alpha() != input
};

// Produces a context whose sandwich element is idempotent with the same
// kernel type as alpha.  Idempotent input is kept as is; otherwise each
// kernel block is sent to its minimal element.
NormalizedSandwich normalize_sandwich(const Transformation& alpha);

}  // namespace sandwich
