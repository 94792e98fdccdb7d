#pragma once

// Seeded property checks over the type, automata and evaluator layers. Each
// returns the number of cases and of violations so callers decide what to
// assert.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "succinct/compile.hpp"
#include "succinct/evaluate.hpp"
#include "succinct/formula_io.hpp"
#include "succinct/fragment.hpp"
#include "succinct/random.hpp"
#include "succinct/types.hpp"

namespace succinct {

struct PropertyResult {
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::string first_violation;

  bool ok() const { return violations == 0; }
  void fail(std::string what) {
    if (violations++ == 0) first_violation = std::move(what);
  }
};

/// u ≡ u' and v ≡ v' imply uv ≡ u'v'. Each trial draws a logic and a rank
/// (FO up to 2, MSO up to 1), two words of length ≤ max_length and partners
/// of the same type.
inline PropertyResult check_concatenation(std::uint64_t seed, std::size_t trials, std::size_t max_length = 8) {
  PropertyResult out;
  TypeTable table;
  std::mt19937_64 rng(seed);
  auto below = [&](std::uint64_t n) { return rng() % n; };
  std::vector<Word> words;
  for (std::size_t n = 1; n <= max_length; ++n)
    for (auto& w : all_words(n)) words.push_back(w);
  struct Classes {
    std::vector<std::uint32_t> type_of;
    std::map<std::uint32_t, std::vector<std::size_t>> members;
  };
  std::map<std::pair<Logic, std::uint32_t>, Classes> cache;
  auto classes = [&](Logic logic, std::uint32_t k) -> Classes& {
    auto [it, fresh] = cache.try_emplace({logic, k});
    if (fresh)
      for (std::size_t idx = 0; idx < words.size(); ++idx) {
        auto t = qr_type(logic, k, words[idx], table).id;
        it->second.type_of.push_back(t);
        it->second.members[t].push_back(idx);
      }
    return it->second;
  };
  for (std::size_t t = 0; t < trials; ++t) {
    Logic logic = below(2) ? Logic::MSO : Logic::FO;
    std::uint32_t k = static_cast<std::uint32_t>(below(logic == Logic::FO ? 3 : 2));
    auto& c = classes(logic, k);
    auto partner = [&](std::size_t idx) {
      const auto& same = c.members.at(c.type_of[idx]);
      return same[below(same.size())];
    };
    auto u = below(words.size()), v = below(words.size());
    auto u2 = partner(u), v2 = partner(v);
    auto left = words[u].concat(words[v]), right = words[u2].concat(words[v2]);
    ++out.cases;
    if (qr_type(logic, k, left, table) != qr_type(logic, k, right, table))
      out.fail(to_string(logic) + " k=" + std::to_string(k) + ": " + left.str() + " vs " + right.str());
  }
  return out;
}

/// For satisfiable φ of rank ≤ k, μ(φ) ≤ N; for finite languages also ν(φ) ≤ N.
inline PropertyResult check_length_bounds(std::uint64_t seed, std::size_t count, std::uint32_t k, std::uint64_t n_types,
                                          AutomataOptions options = {}) {
  PropertyResult out;
  RandomFormulas gen(seed, {12, k, false});
  for (std::size_t t = 0; t < count; ++t) {
    auto f = gen.sentence();
    auto r = analyze(compile(f, {}, options));
    ++out.cases;
    if (r.mu > n_types || (r.finiteness && r.nu > n_types))
      out.fail(print(f) + ": mu " + std::to_string(r.mu) + ", nu " + std::to_string(r.nu));
  }
  return out;
}

/// DN ≤ LS and DN ≤ H on a fragment report.
inline bool numbers_ordered(const FragmentReport& r) { return r.dn <= r.ls && r.dn <= r.h; }

/// The evaluator and the compiled automaton agree on every word up to
/// max_length, for every sentence in the corpus.
inline PropertyResult check_differential(const std::vector<Formula>& corpus, std::size_t max_length,
                                         AutomataOptions options = {}) {
  PropertyResult out;
  std::vector<Word> words;
  for (std::size_t n = 1; n <= max_length; ++n)
    for (auto& w : all_words(n)) words.push_back(w);
  for (const auto& f : corpus) {
    auto d = compile(f, {}, options);
    for (const auto& w : words) {
      ++out.cases;
      if (accepts(d, w) != evaluate(w, f)) out.fail(print(f) + " on " + w.str());
    }
  }
  return out;
}

}  // namespace succinct
