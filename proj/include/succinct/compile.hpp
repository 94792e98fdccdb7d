#pragma once

// Büchi–Elgot–Trakhtenbrot translation: atoms become small automata, ∧/∨ are
// products, ¬ is complement within valid words, and quantifiers are track
// projections followed by determinization. Every intermediate result is
// minimized. Results are cached per formula node, so shared subformulas are
// compiled once.

#include <algorithm>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "succinct/dfa.hpp"
#include "succinct/error.hpp"
#include "succinct/formula.hpp"

namespace succinct {

namespace detail {

/// P_l(x) / P_r(x) over the single track x.
inline Dfa point_atom(Var x, Letter required) {
  // States: 0 = unmarked, 1 = marked, 2 = sink.
  Dfa d({x}, 3);
  for (Dfa::Symbol s = 0; s < 4; ++s) {
    bool mark = (s >> 1) & 1;
    bool letter_ok = (s & 1) == (required == Letter::R ? 1u : 0u);
    d.set_next(0, s, mark ? (letter_ok ? 1 : 2) : 0);
    d.set_next(1, s, mark ? 2 : 1);
    d.set_next(2, s, 2);
  }
  d.set_accepting(1, true);
  return d;
}

/// Two distinct first-order variables; `rel` is Lt (x strictly before y) or Eq.
inline Dfa two_point_atom(Kind rel, Var x, Var y) {
  std::vector<Var> tracks{x, y};
  std::sort(tracks.begin(), tracks.end(), VarNameLess{});
  Dfa::Symbol xbit = Dfa::Symbol{1} << (tracks[0] == x ? 1 : 2);
  Dfa::Symbol ybit = Dfa::Symbol{1} << (tracks[0] == y ? 1 : 2);
  // States: 0 none, 1 x seen, 2 y seen, 3 both seen, 4 sink.
  Dfa d(tracks, 5);
  for (Dfa::Symbol s = 0; s < 8; ++s) {
    bool mx = s & xbit, my = s & ybit;
    auto step = [&](Dfa::State q) -> Dfa::State {
      if (q == 4) return 4;
      bool seen_x = q == 1 || q == 3, seen_y = q == 2 || q == 3;
      if ((mx && seen_x) || (my && seen_y)) return 4;
      if (rel == Kind::Eq) {
        if (mx != my) return 4;
        return (mx && my) ? 3 : q;
      }
      if (mx && my) return 4;
      if (my && !seen_x) return 4;
      if (mx) return 1;
      if (my) return 3;
      return q;
    };
    for (Dfa::State q = 0; q < 5; ++q) d.set_next(q, s, step(q));
  }
  d.set_accepting(3, true);
  return d;
}

inline Dfa membership_atom(Var x, Var set) {
  std::vector<Var> tracks{x, set};
  std::sort(tracks.begin(), tracks.end(), VarNameLess{});
  Dfa::Symbol xbit = Dfa::Symbol{1} << (tracks[0] == x ? 1 : 2);
  Dfa::Symbol setbit = Dfa::Symbol{1} << (tracks[0] == set ? 1 : 2);
  Dfa d(tracks, 3);
  for (Dfa::Symbol s = 0; s < 8; ++s) {
    bool mx = s & xbit, ms = s & setbit;
    d.set_next(0, s, mx ? (ms ? 1 : 2) : 0);
    d.set_next(1, s, mx ? 2 : 1);
    d.set_next(2, s, 2);
  }
  d.set_accepting(1, true);
  return d;
}

}  // namespace detail

class Compiler {
 public:
  explicit Compiler(AutomataOptions options = {}) : options_(options) {}

  /// Automaton over exactly the free variables of f, in name order.
  std::shared_ptr<const Dfa> compile(const Formula& f) { return rec(f); }

  std::size_t largest_state_count() const noexcept { return largest_; }
  const AutomataOptions& options() const noexcept { return options_; }

 private:
  std::shared_ptr<const Dfa> rec(const Formula& f) {
    if (auto it = cache_.find(f.node()); it != cache_.end()) return it->second;
    Dfa out = build(f);
    largest_ = std::max<std::size_t>(largest_, out.num_states());
    auto ptr = std::make_shared<const Dfa>(std::move(out));
    cache_.emplace(f.node(), ptr);
    keep_.push_back(f);
    return ptr;
  }

  Dfa build(const Formula& f) {
    switch (f.kind()) {
      case Kind::True: return constant_dfa(true);
      case Kind::False: return constant_dfa(false);
      case Kind::LetterL: return minimize(detail::point_atom(f.arg0(), Letter::L));
      case Kind::LetterR: return minimize(detail::point_atom(f.arg0(), Letter::R));
      case Kind::In: return minimize(detail::membership_atom(f.arg0(), f.arg1()));
      case Kind::Lt:
      case Kind::Eq:
        if (f.arg0() == f.arg1()) {
          auto valid = valid_words({f.arg0()}, options_);
          return f.kind() == Kind::Eq ? valid : complement(valid, options_);
        }
        return minimize(detail::two_point_atom(f.kind(), f.arg0(), f.arg1()));
      case Kind::Not: return complement(*rec(f.child()), options_);
      case Kind::And: return intersect(*rec(f.lhs()), *rec(f.rhs()), options_);
      case Kind::Or: return unite(*rec(f.lhs()), *rec(f.rhs()), options_);
      case Kind::Exists1:
      case Kind::Exists2: return exists(f.binder(), *rec(f.child()));
      case Kind::Forall1:
      case Kind::Forall2:
        return complement(exists(f.binder(), complement(*rec(f.child()), options_)), options_);
    }
    throw Error("unknown formula kind");
  }

  Dfa exists(Var x, const Dfa& body) {
    if (body.track_index(x) >= 0) return project(body, x, options_);
    // x does not occur: a first-order witness only needs a nonempty word.
    if (x.first_order()) return intersect(body, nonempty_words(), options_);
    return body;
  }

  AutomataOptions options_;
  std::unordered_map<const FormulaNode*, std::shared_ptr<const Dfa>> cache_;
  std::vector<Formula> keep_;  // pins cached nodes so their addresses stay unique
  std::size_t largest_ = 0;
};

/// Compiles f into a minimal automaton over `context` (sorted by name), which
/// must contain every free variable of f.
inline Dfa compile(const Formula& f, std::span<const Var> context = {}, AutomataOptions options = {}) {
  std::vector<Var> ctx(context.begin(), context.end());
  std::sort(ctx.begin(), ctx.end(), VarNameLess{});
  ctx.erase(std::unique(ctx.begin(), ctx.end()), ctx.end());
  for (Var x : f.free_variables())
    if (!std::binary_search(ctx.begin(), ctx.end(), x, VarNameLess{}))
      throw ContextError("free variable '" + x.name() + "' missing from the compile context");
  Compiler c(options);
  auto d = c.compile(f);
  if (d->tracks() == ctx) return *d;
  return cylindrify(*d, ctx, options);
}

}  // namespace succinct
