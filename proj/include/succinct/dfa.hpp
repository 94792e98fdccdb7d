#pragma once

// Deterministic automata over track-extended alphabets. A symbol is an integer
// whose bit 0 is the letter (0 = l, 1 = r) and whose bit 1 + t is the mark of
// track t. Tracks are variables sorted by name. Every automaton produced here
// accepts only valid words: each first-order track is marked exactly once.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"
#include "succinct/error.hpp"
#include "succinct/formula.hpp"
#include "succinct/word.hpp"

namespace succinct {

struct AutomataOptions {
  std::size_t state_budget = 1'000'000;
  std::size_t max_tracks = 20;
};

class Dfa {
 public:
  using State = std::uint32_t;
  using Symbol = std::uint32_t;

  Dfa() = default;
  Dfa(std::vector<Var> tracks, std::uint32_t num_states)
      : tracks_(std::move(tracks)), num_states_(num_states), accepting_(num_states, 0) {
    delta_.assign(std::size_t{num_states} * num_symbols(), 0);
  }

  const std::vector<Var>& tracks() const noexcept { return tracks_; }
  std::size_t num_symbols() const noexcept { return std::size_t{2} << tracks_.size(); }
  std::uint32_t num_states() const noexcept { return num_states_; }
  State start() const noexcept { return start_; }
  bool accepting(State q) const { return accepting_[q] != 0; }
  State next(State q, Symbol a) const { return delta_[std::size_t{q} * num_symbols() + a]; }

  void set_start(State q) { start_ = q; }
  void set_accepting(State q, bool on) { accepting_[q] = on ? 1 : 0; }
  void set_next(State q, Symbol a, State to) { delta_[std::size_t{q} * num_symbols() + a] = to; }

  /// Position of a track, or -1.
  int track_index(Var x) const {
    for (std::size_t i = 0; i < tracks_.size(); ++i)
      if (tracks_[i] == x) return static_cast<int>(i);
    return -1;
  }

  /// Human-readable symbol: the letter followed by the track bits.
  std::string symbol_label(Symbol a) const {
    std::string s(1, (a & 1) ? 'r' : 'l');
    if (!tracks_.empty()) {
      s.push_back(':');
      for (std::size_t t = 0; t < tracks_.size(); ++t) s.push_back(((a >> (t + 1)) & 1) ? '1' : '0');
    }
    return s;
  }

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  std::vector<Var> tracks_;
  std::uint32_t num_states_ = 0;
  State start_ = 0;
  std::vector<char> accepting_;
  std::vector<State> delta_;
};

namespace detail {

inline void check_budget(std::size_t states, const AutomataOptions& opts) {
  if (states > opts.state_budget)
    throw BudgetExceeded("automaton state budget of " + std::to_string(opts.state_budget) + " exceeded");
}

inline std::vector<Var> sorted_union(const std::vector<Var>& a, const std::vector<Var>& b) {
  std::vector<Var> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), VarNameLess{});
  return out;
}

/// For each symbol over `ctx`, the symbol over `sub` obtained by dropping tracks.
inline std::vector<Dfa::Symbol> restriction_map(const std::vector<Var>& ctx, const std::vector<Var>& sub) {
  std::vector<int> where(sub.size(), -1);
  for (std::size_t i = 0; i < sub.size(); ++i)
    for (std::size_t j = 0; j < ctx.size(); ++j)
      if (ctx[j] == sub[i]) where[i] = static_cast<int>(j);
  for (int w : where)
    if (w < 0) throw ContextError("track context is not a superset");
  std::size_t n = std::size_t{2} << ctx.size();
  std::vector<Dfa::Symbol> map(n);
  for (std::size_t a = 0; a < n; ++a) {
    Dfa::Symbol b = a & 1;
    for (std::size_t i = 0; i < sub.size(); ++i)
      if ((a >> (where[i] + 1)) & 1) b |= Dfa::Symbol{1} << (i + 1);
    map[a] = b;
  }
  return map;
}

/// States from which no accepting state is reachable.
inline std::vector<char> dead_states(const Dfa& a) {
  std::vector<std::vector<Dfa::State>> reverse(a.num_states());
  for (Dfa::State q = 0; q < a.num_states(); ++q)
    for (Dfa::Symbol s = 0; s < a.num_symbols(); ++s) {
      auto to = a.next(q, s);
      if (reverse[to].empty() || reverse[to].back() != q) reverse[to].push_back(q);
    }
  std::vector<char> live(a.num_states(), 0);
  std::vector<Dfa::State> stack;
  for (Dfa::State q = 0; q < a.num_states(); ++q)
    if (a.accepting(q)) {
      live[q] = 1;
      stack.push_back(q);
    }
  while (!stack.empty()) {
    auto q = stack.back();
    stack.pop_back();
    for (auto p : reverse[q])
      if (!live[p]) {
        live[p] = 1;
        stack.push_back(p);
      }
  }
  std::vector<char> dead(a.num_states());
  for (Dfa::State q = 0; q < a.num_states(); ++q) dead[q] = !live[q];
  return dead;
}

inline std::vector<char> reachable_states(const Dfa& a) {
  std::vector<char> seen(a.num_states(), 0);
  std::vector<Dfa::State> stack{a.start()};
  seen[a.start()] = 1;
  while (!stack.empty()) {
    auto q = stack.back();
    stack.pop_back();
    for (Dfa::Symbol s = 0; s < a.num_symbols(); ++s) {
      auto to = a.next(q, s);
      if (!seen[to]) {
        seen[to] = 1;
        stack.push_back(to);
      }
    }
  }
  return seen;
}

}  // namespace detail

/// Minimal automaton with states numbered in breadth-first order from the
/// start state (symbols visited in increasing order). Equal languages over
/// equal tracks give identical results.
inline Dfa minimize(const Dfa& a) {
  const std::size_t k = a.num_symbols();
  auto reach = detail::reachable_states(a);
  std::vector<Dfa::State> live;
  std::vector<std::uint32_t> index(a.num_states(), UINT32_MAX);
  for (Dfa::State q = 0; q < a.num_states(); ++q)
    if (reach[q]) {
      index[q] = static_cast<std::uint32_t>(live.size());
      live.push_back(q);
    }
  const std::size_t n = live.size();

  // Partition refinement on signatures (own block, blocks of successors).
  std::vector<std::uint32_t> block(n), next_block(n);
  bool has_acc = false, has_rej = false;
  for (std::size_t i = 0; i < n; ++i) {
    block[i] = a.accepting(live[i]) ? 1 : 0;
    (block[i] ? has_acc : has_rej) = true;
  }
  if (!has_rej)
    std::fill(block.begin(), block.end(), 0);
  std::size_t num_blocks = (has_acc && has_rej) ? 2 : 1;
  std::vector<std::uint64_t> hashes(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t h = 0xcbf29ce484222325ULL ^ block[i];
      for (std::size_t s = 0; s < k; ++s) {
        h ^= block[index[a.next(live[i], static_cast<Dfa::Symbol>(s))]];
        h *= 0x100000001b3ULL;
        h ^= h >> 29;
      }
      hashes[i] = h;
    }
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;  // hash -> representatives
    buckets.reserve(n * 2);
    std::uint32_t fresh = 0;
    std::vector<std::uint32_t> rep_of_block;
    auto same = [&](std::size_t i, std::size_t j) {
      if (block[i] != block[j]) return false;
      for (std::size_t s = 0; s < k; ++s)
        if (block[index[a.next(live[i], static_cast<Dfa::Symbol>(s))]] !=
            block[index[a.next(live[j], static_cast<Dfa::Symbol>(s))]])
          return false;
      return true;
    };
    for (std::size_t i = 0; i < n; ++i) {
      auto& reps = buckets[hashes[i]];
      bool found = false;
      for (auto r : reps) {
        if (same(i, rep_of_block[r])) {
          next_block[i] = r;
          found = true;
          break;
        }
      }
      if (!found) {
        reps.push_back(fresh);
        rep_of_block.push_back(static_cast<std::uint32_t>(i));
        next_block[i] = fresh++;
      }
    }
    block.swap(next_block);
    if (fresh == num_blocks) break;
    num_blocks = fresh;
  }

  // Canonical numbering by BFS over blocks.
  std::vector<std::uint32_t> rep(num_blocks, UINT32_MAX);
  for (std::size_t i = 0; i < n; ++i)
    if (rep[block[i]] == UINT32_MAX) rep[block[i]] = static_cast<std::uint32_t>(i);
  std::vector<std::uint32_t> order(num_blocks, UINT32_MAX);
  std::vector<std::uint32_t> queue;
  queue.reserve(num_blocks);
  auto start_block = block[index[a.start()]];
  order[start_block] = 0;
  queue.push_back(start_block);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto b = queue[head];
    for (std::size_t s = 0; s < k; ++s) {
      auto to = block[index[a.next(live[rep[b]], static_cast<Dfa::Symbol>(s))]];
      if (order[to] == UINT32_MAX) {
        order[to] = static_cast<std::uint32_t>(queue.size());
        queue.push_back(to);
      }
    }
  }
  Dfa out(a.tracks(), static_cast<std::uint32_t>(queue.size()));
  out.set_start(0);
  for (std::size_t j = 0; j < queue.size(); ++j) {
    auto b = queue[j];
    auto q = live[rep[b]];
    out.set_accepting(static_cast<Dfa::State>(j), a.accepting(q));
    for (std::size_t s = 0; s < k; ++s)
      out.set_next(static_cast<Dfa::State>(j), static_cast<Dfa::Symbol>(s),
                   order[block[index[a.next(q, static_cast<Dfa::Symbol>(s))]]]);
  }
  return out;
}

namespace detail {

/// Synchronous product over the union context. The result accepts a word iff
/// `accept(accA, accB)` holds on the restrictions and every first-order track
/// listed in `validate` is marked exactly once. `prune(deadA, deadB)` names
/// pairs that can never lead to acceptance.
inline Dfa product(const Dfa& a, const Dfa& b, const std::vector<Var>& ctx, const std::vector<Var>& validate,
                   const std::function<bool(bool, bool)>& accept, const std::function<bool(bool, bool)>& prune,
                   const AutomataOptions& opts) {
  if (ctx.size() > opts.max_tracks) throw BudgetExceeded("too many tracks: " + std::to_string(ctx.size()));
  auto map_a = restriction_map(ctx, a.tracks());
  auto map_b = restriction_map(ctx, b.tracks());
  const std::size_t k = std::size_t{2} << ctx.size();
  std::vector<std::uint32_t> marks(k, 0);
  for (std::size_t i = 0; i < validate.size(); ++i) {
    int t = -1;
    for (std::size_t j = 0; j < ctx.size(); ++j)
      if (ctx[j] == validate[i]) t = static_cast<int>(j);
    for (std::size_t s = 0; s < k; ++s)
      if ((s >> (t + 1)) & 1) marks[s] |= 1u << i;
  }
  const std::uint32_t full = validate.empty() ? 0 : ((1u << validate.size()) - 1);
  auto dead_a = dead_states(a);
  auto dead_b = dead_states(b);

  if (a.num_states() >= (1u << 21) || b.num_states() >= (1u << 21) || validate.size() > 22)
    throw BudgetExceeded("product operands too large");
  struct Triple {
    std::uint32_t qa, qb, mask;
  };
  std::vector<Triple> states;
  std::unordered_map<std::uint64_t, std::uint32_t> ids;
  const std::uint32_t sink = 0;
  states.push_back({0, 0, 0});
  auto lookup = [&](std::uint32_t qa, std::uint32_t qb, std::uint32_t m) -> std::uint32_t {
    if (prune(dead_a[qa], dead_b[qb])) return sink;
    std::uint64_t key = (std::uint64_t{qa} << 43) | (std::uint64_t{qb} << 22) | m;
    auto [it, inserted] = ids.emplace(key, static_cast<std::uint32_t>(states.size()));
    if (inserted) {
      states.push_back({qa, qb, m});
      check_budget(states.size(), opts);
    }
    return it->second;
  };
  auto start = lookup(a.start(), b.start(), 0);
  std::vector<std::uint32_t> delta(k, sink);
  std::vector<char> acc{0};
  for (std::uint32_t id = 1; id < states.size(); ++id) {
    Triple t = states[id];
    acc.push_back(accept(a.accepting(t.qa), b.accepting(t.qb)) && t.mask == full);
    for (std::size_t s = 0; s < k; ++s) {
      std::uint32_t to = (marks[s] & t.mask)
                             ? sink
                             : lookup(a.next(t.qa, map_a[s]), b.next(t.qb, map_b[s]), t.mask | marks[s]);
      delta.push_back(to);
    }
  }
  Dfa out(ctx, static_cast<std::uint32_t>(states.size()));
  out.set_start(start);
  for (std::uint32_t q = 0; q < states.size(); ++q) {
    out.set_accepting(q, acc[q]);
    for (std::size_t s = 0; s < k; ++s) out.set_next(q, static_cast<Dfa::Symbol>(s), delta[std::size_t{q} * k + s]);
  }
  return out;
}

inline std::vector<Var> first_order_only(const std::vector<Var>& vars) {
  std::vector<Var> out;
  for (Var x : vars)
    if (x.first_order()) out.push_back(x);
  return out;
}

inline std::vector<Var> symmetric_difference(const std::vector<Var>& a, const std::vector<Var>& b) {
  std::vector<Var> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), VarNameLess{});
  return out;
}

}  // namespace detail

/// Automaton for ⊤ (accepting) or ⊥ over no tracks.
inline Dfa constant_dfa(bool accept_all) {
  Dfa d({}, 1);
  d.set_start(0);
  d.set_accepting(0, accept_all);
  return d;
}

/// All valid words over the given tracks.
inline Dfa valid_words(std::vector<Var> tracks, const AutomataOptions& opts = {}) {
  std::sort(tracks.begin(), tracks.end(), VarNameLess{});
  auto t = constant_dfa(true);
  return minimize(detail::product(t, t, tracks, detail::first_order_only(tracks),
                                  [](bool, bool) { return true; }, [](bool, bool) { return false; }, opts));
}

inline Dfa intersect(const Dfa& a, const Dfa& b, const AutomataOptions& opts = {}) {
  auto ctx = detail::sorted_union(a.tracks(), b.tracks());
  return minimize(detail::product(a, b, ctx, {}, [](bool x, bool y) { return x && y; },
                                  [](bool x, bool y) { return x || y; }, opts));
}

inline Dfa unite(const Dfa& a, const Dfa& b, const AutomataOptions& opts = {}) {
  auto ctx = detail::sorted_union(a.tracks(), b.tracks());
  auto validate = detail::first_order_only(detail::symmetric_difference(a.tracks(), b.tracks()));
  return minimize(detail::product(a, b, ctx, validate, [](bool x, bool y) { return x || y; },
                                  [](bool x, bool y) { return x && y; }, opts));
}

/// Complement relative to the valid words over the same tracks.
inline Dfa complement(const Dfa& a, const AutomataOptions& opts = {}) {
  auto t = constant_dfa(true);
  return minimize(detail::product(a, t, a.tracks(), detail::first_order_only(a.tracks()),
                                  [](bool x, bool) { return !x; }, [](bool, bool) { return false; }, opts));
}

/// Extends the track context; new first-order tracks are constrained to a single mark.
inline Dfa cylindrify(const Dfa& a, std::vector<Var> ctx, const AutomataOptions& opts = {}) {
  std::sort(ctx.begin(), ctx.end(), VarNameLess{});
  ctx.erase(std::unique(ctx.begin(), ctx.end()), ctx.end());
  auto extra = detail::symmetric_difference(ctx, a.tracks());
  for (Var x : extra)
    if (a.track_index(x) >= 0) throw ContextError("target context drops track '" + x.name() + "'");
  auto t = constant_dfa(true);
  return minimize(detail::product(a, t, ctx, detail::first_order_only(extra), [](bool x, bool) { return x; },
                                  [](bool x, bool) { return x; }, opts));
}

/// Existential projection of one track (subset construction).
inline Dfa project(const Dfa& a, Var x, const AutomataOptions& opts = {}) {
  int t = a.track_index(x);
  if (t < 0) throw ContextError("cannot project missing track '" + x.name() + "'");
  std::vector<Var> tracks = a.tracks();
  tracks.erase(tracks.begin() + t);
  const std::size_t k = std::size_t{2} << tracks.size();
  const Dfa::Symbol low_mask = (Dfa::Symbol{1} << (t + 1)) - 1;
  auto widen = [&](Dfa::Symbol s, Dfa::Symbol bit) {
    return (s & low_mask) | (bit << (t + 1)) | ((s & ~low_mask) << 1);
  };

  using Subset = std::vector<Dfa::State>;
  struct SubsetHash {
    std::size_t operator()(const Subset& s) const noexcept {
      std::size_t h = 1469598103934665603ULL;
      for (auto q : s) h = (h ^ q) * 1099511628211ULL;
      return h;
    }
  };
  auto dead = detail::dead_states(a);
  std::unordered_map<Subset, std::uint32_t, SubsetHash> ids;
  std::vector<Subset> subsets;
  auto lookup = [&](Subset s) {
    std::erase_if(s, [&](Dfa::State q) { return dead[q] != 0; });
    auto [it, inserted] = ids.emplace(s, static_cast<std::uint32_t>(subsets.size()));
    if (inserted) {
      subsets.push_back(std::move(s));
      detail::check_budget(subsets.size(), opts);
    }
    return it->second;
  };
  auto start = lookup({a.start()});
  std::vector<std::uint32_t> delta;
  Subset next;
  for (std::uint32_t id = 0; id < subsets.size(); ++id) {
    for (std::size_t s = 0; s < k; ++s) {
      next.clear();
      for (auto q : subsets[id]) {
        next.push_back(a.next(q, widen(static_cast<Dfa::Symbol>(s), 0)));
        next.push_back(a.next(q, widen(static_cast<Dfa::Symbol>(s), 1)));
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      auto to = lookup(next);
      delta.push_back(to);
    }
  }
  Dfa out(tracks, static_cast<std::uint32_t>(subsets.size()));
  out.set_start(start);
  for (std::uint32_t id = 0; id < subsets.size(); ++id) {
    bool acc = false;
    for (auto q : subsets[id]) acc = acc || a.accepting(q);
    out.set_accepting(id, acc);
    for (std::size_t s = 0; s < k; ++s)
      out.set_next(id, static_cast<Dfa::Symbol>(s), delta[std::size_t{id} * k + s]);
  }
  return minimize(out);
}

/// Words of length at least one, over no tracks.
inline Dfa nonempty_words() {
  Dfa d({}, 2);
  d.set_start(0);
  d.set_accepting(1, true);
  for (Dfa::Symbol s = 0; s < 2; ++s) {
    d.set_next(0, s, 1);
    d.set_next(1, s, 1);
  }
  return d;
}

/// The empty word only, over no tracks.
inline Dfa empty_word_only() {
  Dfa d({}, 2);
  d.set_start(0);
  d.set_accepting(0, true);
  for (Dfa::Symbol s = 0; s < 2; ++s) {
    d.set_next(0, s, 1);
    d.set_next(1, s, 1);
  }
  return d;
}

// ---------------------------------------------------------------------------
// Language analytics on sentence automata.

enum class LengthStatus { Finite, Infinite, Empty };

inline const char* to_string(LengthStatus s) {
  switch (s) {
    case LengthStatus::Finite: return "finite";
    case LengthStatus::Infinite: return "infinite";
    case LengthStatus::Empty: return "empty";
  }
  return "?";
}

struct LanguageReport {
  bool emptiness = true;
  bool finiteness = true;
  std::uint64_t mu = 0;
  std::uint64_t nu = 0;
  LengthStatus nu_status = LengthStatus::Empty;
};

namespace detail {

inline void require_sentence_automaton(const Dfa& a) {
  if (!a.tracks().empty()) throw ContextError("operation requires an automaton without tracks");
}

/// Live = reachable from start and co-reachable to acceptance.
inline std::vector<char> live_states(const Dfa& a) {
  auto reach = reachable_states(a);
  auto dead = dead_states(a);
  std::vector<char> live(a.num_states());
  for (Dfa::State q = 0; q < a.num_states(); ++q) live[q] = reach[q] && !dead[q];
  return live;
}

/// Topological order of the live subgraph, or nullopt if it has a cycle.
inline std::optional<std::vector<Dfa::State>> live_topological_order(const Dfa& a, const std::vector<char>& live) {
  std::vector<std::uint32_t> indegree(a.num_states(), 0);
  for (Dfa::State q = 0; q < a.num_states(); ++q)
    if (live[q])
      for (Dfa::Symbol s = 0; s < a.num_symbols(); ++s)
        if (live[a.next(q, s)]) ++indegree[a.next(q, s)];
  std::vector<Dfa::State> order, stack;
  for (Dfa::State q = 0; q < a.num_states(); ++q)
    if (live[q] && indegree[q] == 0) stack.push_back(q);
  while (!stack.empty()) {
    auto q = stack.back();
    stack.pop_back();
    order.push_back(q);
    for (Dfa::Symbol s = 0; s < a.num_symbols(); ++s) {
      auto to = a.next(q, s);
      if (live[to] && --indegree[to] == 0) stack.push_back(to);
    }
  }
  std::size_t live_count = static_cast<std::size_t>(std::count(live.begin(), live.end(), 1));
  if (order.size() != live_count) return std::nullopt;
  return order;
}

}  // namespace detail

/// μ, ν and finiteness of the accepted language restricted to nonempty words.
inline LanguageReport analyze(const Dfa& a) {
  detail::require_sentence_automaton(a);
  LanguageReport rep;
  // Shortest nonempty accepted word: BFS seeded with the successors of start.
  std::vector<std::int64_t> dist(a.num_states(), -1);
  std::deque<Dfa::State> queue;
  for (Dfa::Symbol s = 0; s < 2; ++s) {
    auto to = a.next(a.start(), s);
    if (dist[to] < 0) {
      dist[to] = 1;
      queue.push_back(to);
    }
  }
  while (!queue.empty()) {
    auto q = queue.front();
    queue.pop_front();
    for (Dfa::Symbol s = 0; s < 2; ++s) {
      auto to = a.next(q, s);
      if (dist[to] < 0) {
        dist[to] = dist[q] + 1;
        queue.push_back(to);
      }
    }
  }
  std::int64_t best = -1;
  for (Dfa::State q = 0; q < a.num_states(); ++q)
    if (a.accepting(q) && dist[q] > 0 && (best < 0 || dist[q] < best)) best = dist[q];
  if (best < 0) return rep;  // empty over Σ⁺: μ = ν = 0
  rep.emptiness = false;
  rep.mu = static_cast<std::uint64_t>(best);

  auto live = detail::live_states(a);
  auto order = detail::live_topological_order(a, live);
  if (!order) {
    rep.finiteness = false;
    rep.nu_status = LengthStatus::Infinite;
    rep.nu = 0;
    return rep;
  }
  std::vector<std::int64_t> longest(a.num_states(), -1);
  longest[a.start()] = 0;
  for (auto q : *order) {
    if (longest[q] < 0) continue;
    for (Dfa::Symbol s = 0; s < 2; ++s) {
      auto to = a.next(q, s);
      if (live[to]) longest[to] = std::max(longest[to], longest[q] + 1);
    }
  }
  std::int64_t nu = 0;
  for (Dfa::State q = 0; q < a.num_states(); ++q)
    if (live[q] && a.accepting(q)) nu = std::max(nu, longest[q]);
  rep.finiteness = true;
  rep.nu_status = LengthStatus::Finite;
  rep.nu = static_cast<std::uint64_t>(nu);
  return rep;
}

/// The unique accepted nonempty word, if the language over Σ⁺ is a singleton.
inline std::optional<Word> is_singleton(const Dfa& a) {
  detail::require_sentence_automaton(a);
  auto live = detail::live_states(a);
  auto order = detail::live_topological_order(a, live);
  if (!order) return std::nullopt;
  // count[q] = number of words (capped at 2) leading from q to acceptance.
  std::vector<int> count(a.num_states(), 0);
  for (auto it = order->rbegin(); it != order->rend(); ++it) {
    auto q = *it;
    int c = a.accepting(q) ? 1 : 0;
    for (Dfa::Symbol s = 0; s < 2; ++s)
      if (live[a.next(q, s)]) c += count[a.next(q, s)];
    count[q] = std::min(c, 2);
  }
  if (!live[a.start()]) return std::nullopt;
  int nonempty = count[a.start()] - (a.accepting(a.start()) ? 1 : 0);
  if (a.accepting(a.start())) {
    // Recount without the empty word at the start.
    int c = 0;
    for (Dfa::Symbol s = 0; s < 2; ++s)
      if (live[a.next(a.start(), s)]) c += count[a.next(a.start(), s)];
    nonempty = std::min(c, 2);
  }
  if (nonempty != 1) return std::nullopt;
  Word w;
  Dfa::State q = a.start();
  while (true) {
    if (a.accepting(q) && !w.empty()) break;
    bool moved = false;
    for (Dfa::Symbol s = 0; s < 2; ++s) {
      auto to = a.next(q, s);
      if (live[to] && count[to] > 0) {
        w.push_back(s ? Letter::R : Letter::L);
        q = to;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  return w;
}

/// Up to `count` accepted nonempty words in shortlex order (l < r).
inline std::vector<Word> shortest_words(const Dfa& a, std::size_t count) {
  detail::require_sentence_automaton(a);
  std::vector<Word> out;
  auto n = a.num_states();
  // can[len][q]: some word of length len leads from q to acceptance.
  std::vector<std::vector<char>> can{std::vector<char>(n)};
  for (Dfa::State q = 0; q < n; ++q) can[0][q] = a.accepting(q);
  auto max_len = 2 * n + 2;
  for (std::size_t len = 1; len <= max_len && out.size() < count; ++len) {
    std::vector<char> next(n);
    for (Dfa::State q = 0; q < n; ++q) next[q] = can[len - 1][a.next(q, 0)] || can[len - 1][a.next(q, 1)];
    can.push_back(std::move(next));
    // Depth-first in l < r order through states that can still finish.
    std::vector<std::pair<Dfa::State, Word>> stack{{a.start(), Word{}}};
    while (!stack.empty() && out.size() < count) {
      auto [q, w] = std::move(stack.back());
      stack.pop_back();
      if (w.size() == len) {
        out.push_back(std::move(w));
        continue;
      }
      auto rest = len - w.size() - 1;
      for (int s = 1; s >= 0; --s) {
        auto to = a.next(q, static_cast<Dfa::Symbol>(s));
        if (!can[rest][to]) continue;
        Word v = w;
        v.push_back(s ? Letter::R : Letter::L);
        stack.emplace_back(to, std::move(v));
      }
    }
  }
  return out;
}

inline bool language_equal(const Dfa& a, const Dfa& b) {
  if (a.tracks() != b.tracks()) throw ContextError("language_equal: track contexts differ");
  return minimize(a) == minimize(b);
}

/// Runs the tracked encoding of I. Second-order tracks take I.sets and
/// first-order tracks take I.points, both in track order.
inline bool accepts(const Dfa& a, const Interpretation& I) {
  I.validate();
  std::size_t sets = 0, points = 0;
  for (Var x : a.tracks()) (x.first_order() ? points : sets)++;
  if (sets != I.sets.size() || points != I.points.size())
    throw ContextError("interpretation arity does not match the automaton tracks");
  Dfa::State q = a.start();
  for (std::size_t p = 1; p <= I.word.size(); ++p) {
    Dfa::Symbol s = I.word.at(p) == Letter::R ? 1 : 0;
    std::size_t si = 0, pi = 0;
    for (std::size_t t = 0; t < a.tracks().size(); ++t) {
      bool mark = a.tracks()[t].first_order() ? I.points[pi++] == p : I.sets[si++].contains(p);
      if (mark) s |= Dfa::Symbol{1} << (t + 1);
    }
    q = a.next(q, s);
  }
  return a.accepting(q);
}

inline bool accepts(const Dfa& a, const Word& w) { return accepts(a, Interpretation{w, {}, {}}); }

// ---------------------------------------------------------------------------
// Export.

inline nlohmann::ordered_json to_json(const Dfa& a) {
  nlohmann::ordered_json j;
  auto alphabet = nlohmann::ordered_json::array();
  for (Dfa::Symbol s = 0; s < a.num_symbols(); ++s) alphabet.push_back(a.symbol_label(s));
  auto tracks = nlohmann::ordered_json::array();
  for (Var x : a.tracks())
    tracks.push_back({{"name", x.name()}, {"order", x.first_order() ? "first" : "second"}});
  auto accepting = nlohmann::ordered_json::array();
  for (Dfa::State q = 0; q < a.num_states(); ++q)
    if (a.accepting(q)) accepting.push_back(q);
  auto transitions = nlohmann::ordered_json::array();
  for (Dfa::State q = 0; q < a.num_states(); ++q)
    for (Dfa::Symbol s = 0; s < a.num_symbols(); ++s) transitions.push_back({q, s, a.next(q, s)});
  j["alphabet"] = alphabet;
  j["tracks"] = tracks;
  j["states"] = a.num_states();
  j["start"] = a.start();
  j["accepting"] = accepting;
  j["transitions"] = transitions;
  return j;
}

inline void to_dot(std::ostream& os, const Dfa& a) {
  os << "digraph dfa {\n  rankdir=LR;\n  node [shape=circle];\n  init [shape=point];\n";
  for (Dfa::State q = 0; q < a.num_states(); ++q)
    os << "  q" << q << (a.accepting(q) ? " [shape=doublecircle]" : "") << ";\n";
  os << "  init -> q" << a.start() << ";\n";
  for (Dfa::State q = 0; q < a.num_states(); ++q) {
    std::vector<std::pair<Dfa::State, std::vector<Dfa::Symbol>>> edges;
    for (Dfa::Symbol s = 0; s < a.num_symbols(); ++s) {
      auto to = a.next(q, s);
      auto it = std::find_if(edges.begin(), edges.end(), [&](auto& e) { return e.first == to; });
      if (it == edges.end()) edges.push_back({to, {s}});
      else it->second.push_back(s);
    }
    for (auto& [to, syms] : edges) {
      os << "  q" << q << " -> q" << to << " [label=\"";
      if (syms.size() == a.num_symbols()) {
        os << "*";
      } else {
        for (std::size_t i = 0; i < syms.size() && i < 8; ++i) os << (i ? "," : "") << a.symbol_label(syms[i]);
        if (syms.size() > 8) os << ",... (" << syms.size() << ")";
      }
      os << "\"];\n";
    }
  }
  os << "}\n";
}

inline std::string to_dot(const Dfa& a) {
  std::ostringstream os;
  to_dot(os, a);
  return os.str();
}

}  // namespace succinct
