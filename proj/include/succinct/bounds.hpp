#pragma once

// Exponential towers and the type-count and size bounds stated for FO and MSO.

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "succinct/error.hpp"

namespace succinct {

using u128 = unsigned __int128;

inline std::string to_string_u128(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return s;
}

/// tower(height), with the exact value when it fits 128 bits.
struct BoundExpr {
  std::uint64_t height = 0;
  std::optional<u128> exact;

  std::string str() const { return exact ? to_string_u128(*exact) : "tower(" + std::to_string(height) + ")"; }
  /// True iff value ≤ tower(height); values beyond 128 bits never come from counting.
  bool admits(u128 value) const { return !exact || value <= *exact; }

  friend bool operator==(const BoundExpr&, const BoundExpr&) = default;
};

/// tower(0) = 1, tower(n+1) = 2^tower(n).
inline BoundExpr tower(std::uint64_t n) {
  BoundExpr b{n, u128{1}};
  for (std::uint64_t k = 0; k < n; ++k) {
    if (*b.exact >= 128) {
      b.exact.reset();
      break;
    }
    b.exact = u128{1} << static_cast<unsigned>(*b.exact);
  }
  return b;
}

/// twr(x) = tower(⌈x⌉), x ≥ 0.
inline BoundExpr twr(double x) {
  if (!(x >= 0) || !std::isfinite(x)) throw DomainError("twr needs a finite argument >= 0");
  return tower(static_cast<std::uint64_t>(std::ceil(x)));
}

/// Smallest m with tower(m) ≥ x. Defined for every x ≥ 0 (it is 0 for x ≤ 1),
/// which the k = 0 instances of the type bounds need.
inline std::uint64_t log_star(double x) {
  if (!(x >= 0) || !std::isfinite(x)) throw DomainError("log* needs a finite argument >= 0");
  std::uint64_t m = 0;
  double t = 1;
  while (t < x) {
    ++m;
    t = std::exp2(t);
  }
  return m;
}

enum class Logic { FO, MSO };

inline std::string to_string(Logic l) { return l == Logic::FO ? "fo" : "mso"; }

inline Logic parse_logic(const std::string& s) {
  if (s == "fo" || s == "FO") return Logic::FO;
  if (s == "mso" || s == "MSO") return Logic::MSO;
  throw DomainError("unknown logic '" + s + "'");
}

/// N_{FO_k} ≤ twr(k + log*(k²+k) + 1), N_{MSO_k} ≤ twr(k + log*((k+1)²) + 1).
inline BoundExpr upper_bound_types(Logic logic, std::uint64_t k) {
  double kk = static_cast<double>(k);
  double inner = logic == Logic::FO ? kk * kk + kk : (kk + 1) * (kk + 1);
  return tower(k + log_star(inner) + 1);
}

/// Upper bound on DN, LS and H of the size-n fragment (via qr ≤ n/2).
inline BoundExpr upper_bound_size(Logic logic, std::uint64_t n) {
  double h = static_cast<double>(n) / 2;
  double inner = logic == Logic::FO ? h * h + h : (h + 1) * (h + 1);
  return twr(h + static_cast<double>(log_star(inner)) + 1);
}

/// twr((n/c)^(1/degree)): the lower-bound shape for DN (FO: degree 5,
/// MSO: degree 2) and for LS of FO without the order clauses (degree 3).
inline BoundExpr lower_bound_size(std::uint64_t n, double c, int degree) {
  if (c <= 0 || degree <= 0) throw DomainError("lower bound needs c > 0 and a positive degree");
  return twr(std::pow(static_cast<double>(n) / c, 1.0 / degree));
}

/// Quantifier-free type counts: O_0(r,s) ≤ 2^{s(r+s+1)}, M_0(m) ≤ 2^{(m+1)²},
/// F_0(s) ≤ 2^{s²+s}.
inline u128 lemma_o0_bound(std::uint64_t r, std::uint64_t s) {
  auto e = s * (r + s + 1);
  if (e >= 128) throw DomainError("bound exceeds 128 bits");
  return u128{1} << e;
}
inline u128 lemma_m0_bound(std::uint64_t m) {
  auto e = (m + 1) * (m + 1);
  if (e >= 128) throw DomainError("bound exceeds 128 bits");
  return u128{1} << e;
}
inline u128 lemma_f0_bound(std::uint64_t s) { return lemma_o0_bound(0, s); }

}  // namespace succinct
