#pragma once

// Seeded random sentences for differential and property tests. Draws use
// the raw mt19937_64 stream so corpora are identical across platforms.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "succinct/formula.hpp"

namespace succinct {

struct RandomFormulaOptions {
  std::uint64_t max_size = 12;
  std::uint32_t max_qr = 3;
  bool second_order = false;
};

class RandomFormulas {
 public:
  explicit RandomFormulas(std::uint64_t seed, RandomFormulaOptions options = {}) : rng_(seed), options_(options) {}

  /// A sentence of size at most max_size and quantifier rank at most max_qr.
  Formula sentence() {
    std::vector<Var> fo, so;
    return gen(1 + below(options_.max_size), fo, so, options_.max_qr);
  }

  std::uint64_t below(std::uint64_t n) { return rng_() % n; }

 private:
  Formula atom(const std::vector<Var>& fo, const std::vector<Var>& so) {
    if (fo.empty()) return below(2) ? Formula::top() : Formula::bottom();
    auto pick = [&] { return fo[below(fo.size())]; };
    switch (below(so.empty() ? 4 : 5)) {
      case 0: return Formula::lt(pick(), pick());
      case 1: return Formula::eq(pick(), pick());
      case 2: return Formula::letter_l(pick());
      case 3: return Formula::letter_r(pick());
      default: return Formula::in(pick(), so[below(so.size())]);
    }
  }

  Formula gen(std::uint64_t size, std::vector<Var>& fo, std::vector<Var>& so, std::uint32_t qr) {
    if (size <= 1) return atom(fo, so);
    std::vector<int> ops{0};  // negation
    if (size >= 3) ops.push_back(1);
    if (qr > 0) ops.push_back(2);
    // Prefer binding a variable when none is in scope.
    int op = (fo.empty() && qr > 0 && below(4) != 0) ? 2 : ops[below(ops.size())];
    if (op == 0) return Formula::negate(gen(size - 1, fo, so, qr));
    if (op == 1) {
      auto left = 1 + below(size - 2);
      auto a = gen(left, fo, so, qr);
      auto b = gen(size - 1 - left, fo, so, qr);
      return below(2) ? Formula::land(a, b) : Formula::lor(a, b);
    }
    bool second = options_.second_order && below(3) == 0;
    auto depth = fo.size() + so.size();
    Var x = second ? so_var("X" + std::to_string(depth)) : fo_var("x" + std::to_string(depth));
    auto& scope = second ? so : fo;
    scope.push_back(x);
    auto body = gen(size - 1, fo, so, qr - 1);
    scope.pop_back();
    return below(2) ? Formula::exists(x, body) : Formula::forall(x, body);
  }

  std::mt19937_64 rng_;
  RandomFormulaOptions options_;
};

/// Every sentence of size at most max_size over the first-order variables
/// x, y and, if second_order is set, the set variable X. Binders are reused,
/// so shadowing occurs.
inline std::vector<Formula> small_sentences(std::uint64_t max_size, bool second_order = false) {
  std::vector<Var> vars{fo_var("x"), fo_var("y")};
  if (second_order) vars.push_back(so_var("X"));
  // by_size[n]: all formulas of size n, sentences or not.
  std::vector<std::vector<Formula>> by_size(max_size + 1);
  if (max_size == 0) return {};
  by_size[1] = {Formula::top(), Formula::bottom()};
  for (Var a : vars) {
    if (!a.first_order()) continue;
    by_size[1].push_back(Formula::letter_l(a));
    by_size[1].push_back(Formula::letter_r(a));
    for (Var b : vars) {
      if (!b.first_order()) continue;
      by_size[1].push_back(Formula::lt(a, b));
      if (a.name() <= b.name()) by_size[1].push_back(Formula::eq(a, b));
    }
    if (second_order) by_size[1].push_back(Formula::in(a, so_var("X")));
  }
  for (std::uint64_t n = 2; n <= max_size; ++n) {
    auto& out = by_size[n];
    for (const auto& f : by_size[n - 1]) {
      out.push_back(Formula::negate(f));
      for (Var v : vars)
        if (f.has_free(v)) {
          out.push_back(Formula::exists(v, f));
          out.push_back(Formula::forall(v, f));
        }
    }
    for (std::uint64_t left = 1; left + 1 < n; ++left)
      for (const auto& a : by_size[left])
        for (const auto& b : by_size[n - 1 - left]) {
          out.push_back(Formula::land(a, b));
          out.push_back(Formula::lor(a, b));
        }
  }
  std::vector<Formula> sentences;
  for (const auto& layer : by_size)
    for (const auto& f : layer)
      if (f.is_sentence()) sentences.push_back(f);
  return sentences;
}

}  // namespace succinct
