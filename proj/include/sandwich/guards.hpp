#pragma once
//
// Resource guards for the exhaustive operations.  Formula-level operations
// never consult these; anything scanning all n^n maps or all subsets of the
// idempotent set does.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "sandwich/transformation.hpp"

namespace sandwich {

class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Guards {
  // Full-universe scans are allowed while n^n <= max_scan.
  std::uint64_t max_scan = 3125;
  // Subset enumeration over the idempotents runs while |E| <= max_subset_idempotents.
  int max_subset_idempotents = 22;
  // Closure-driven enumeration for |E| up to 30 when subset enumeration is out
  // of bounds.
  bool pruned_search = false;
};

inline void require_scan(const Guards& guards, int n) {
  std::uint64_t u = universe_size(n);
  if (u > guards.max_scan) {
    throw GuardError("full scan over n^n = " + std::to_string(u) +
                     " elements exceeds the scan bound " + std::to_string(guards.max_scan));
  }
}

}  // namespace sandwich
