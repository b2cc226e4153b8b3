#pragma once

#include <random>
#include <string>
#include <vector>

#include "sandwich/context.hpp"
#include "sandwich/transformation.hpp"

namespace sandwich::testing {

inline Transformation t(const std::string& text) { return Transformation::parse(text); }

// n=3, alpha=[1,1,3]: l=2, A_1={1,2}, a_1=1, A_2={3}, a_2=3.
inline SandwichContext ctx3() { return SandwichContext::from_idempotent(t("[1,1,3]")); }

// n=4, alpha=[1,1,3,4]: l=3.
inline SandwichContext ctx4() { return SandwichContext::from_idempotent(t("[1,1,3,4]")); }

inline Transformation random_map(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> dist(1, n);
  std::vector<std::uint8_t> img(n);
  for (auto& v : img) {
    v = static_cast<std::uint8_t>(dist(rng));
  }
  return Transformation(img);
}

// A random idempotent of plain T_n: the idempotent power of a random map
// under ordinary composition.  The power walk always reaches the unique
// idempotent in the cycle.
inline Transformation random_plain_idempotent(std::mt19937& rng, int n) {
  Transformation beta = random_map(rng, n);
  Transformation current = beta;
  while (!is_plain_idempotent(current)) {
    current = compose(current, beta);
  }
  return current;
}

// All idempotents of plain T_n, i.e. every admissible sandwich element.
inline std::vector<Transformation> all_plain_idempotents(int n) {
  std::vector<Transformation> out;
  const std::uint64_t total = universe_size(n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Transformation candidate = Transformation::from_index(n, idx);
    if (is_plain_idempotent(candidate)) {
      out.push_back(candidate);
    }
  }
  return out;
}

inline std::vector<Transformation> all_maps(int n) {
  std::vector<Transformation> out;
  const std::uint64_t total = universe_size(n);
  out.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    out.push_back(Transformation::from_index(n, idx));
  }
  return out;
}

}  // namespace sandwich::testing
