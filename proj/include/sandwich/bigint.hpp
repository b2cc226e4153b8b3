#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sandwich {

using BigInt = boost::multiprecision::cpp_int;

// 2^exp for nonnegative exponents.
inline BigInt pow2(const BigInt& exp) {
  BigInt result = 1;
  BigInt e = exp;
  BigInt base = 2;
  while (e > 0) {
    if (e & 1) {
      result *= base;
    }
    base *= base;
    e >>= 1;
  }
  return result;
}

inline BigInt ipow(BigInt base, std::uint64_t exp) {
  BigInt result = 1;
  while (exp > 0) {
    if (exp & 1) {
      result *= base;
    }
    base *= base;
    exp >>= 1;
  }
  return result;
}

}  // namespace sandwich
