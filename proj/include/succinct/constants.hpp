#pragma once

// Measured size constants: the maximum of size(ψ_i) / i^d over 3 ≤ i ≤ 50,
// stored as exact fractions (size at the maximizing i over i^d).

#include <cstdint>

namespace succinct {

struct SizeConstant {
  std::uint64_t size;  // size of the formula at the maximizing level
  std::uint64_t level;
  int degree;

  double value() const {
    double d = 1;
    for (int k = 0; k < degree; ++k) d *= static_cast<double>(level);
    return static_cast<double>(size) / d;
  }
};

/// FO ψ_i, size O(i^5).
inline constexpr SizeConstant kFoConstant{4571, 3, 5};
/// FO ψ_i without the order clauses, size O(i^3).
inline constexpr SizeConstant kFoNoOrderConstant{13297666, 50, 3};
/// MSO ψ_i, size O(i^2).
inline constexpr SizeConstant kMsoConstant{2343, 3, 2};

inline constexpr std::uint64_t kConstantMinLevel = 3;
inline constexpr std::uint64_t kConstantMaxLevel = 50;

}  // namespace succinct
