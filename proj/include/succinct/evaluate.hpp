#pragma once

// Direct recursive model checker on word models. It is the semantic reference
// the automata and the set oracle are compared against.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "succinct/error.hpp"
#include "succinct/formula.hpp"
#include "succinct/word.hpp"

namespace succinct {

struct EvalOptions {
  bool memoize = true;
  std::uint64_t memo_budget = 100'000'000;
  std::uint64_t node_budget = 20'000'000'000ULL;
};

/// Values for free variables: positions (1-based) for first-order variables,
/// position sets for second-order ones.
class Assignment {
 public:
  Assignment& bind(Var x, std::size_t position) {
    if (!x.first_order()) throw SortError("'" + x.name() + "' is second-order");
    set(x, position);
    return *this;
  }
  Assignment& bind(Var x, PositionSet s) {
    if (x.first_order()) throw SortError("'" + x.name() + "' is first-order");
    set(x, s.mask());
    return *this;
  }
  Assignment& bind(VarPair p, std::pair<std::size_t, std::size_t> span) {
    return bind(p.first, span.first).bind(p.second, span.second);
  }

  const std::vector<std::pair<Var, std::uint64_t>>& entries() const { return entries_; }

 private:
  void set(Var x, std::uint64_t value) {
    for (auto& [v, val] : entries_)
      if (v == x) {
        val = value;
        return;
      }
    entries_.emplace_back(x, value);
  }
  std::vector<std::pair<Var, std::uint64_t>> entries_;
};

class Evaluator {
 public:
  Evaluator(const Word& word, EvalOptions options = {}) : word_(word), options_(options) {
    if (word.empty()) throw WordError("models must be nonempty words");
    n_ = word.size();
  }

  bool evaluate(const Formula& f, const Assignment& env = {}) {
    for (auto& [v, val] : env.entries()) bind(v, val);
    for (Var x : f.free_variables())
      if (!is_bound(x)) throw UnboundVariableError("unbound variable '" + x.name() + "'");
    bool out = eval(f.node());
    for (auto& [v, val] : env.entries()) unbind(v);
    return out;
  }

  std::uint64_t memo_entries() const noexcept { return memo_size_; }
  std::uint64_t nodes_visited() const noexcept { return steps_; }

 private:
  struct Key {
    const FormulaNode* node;
    std::vector<std::uint64_t> values;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      std::size_t h = std::hash<const void*>{}(k.node);
      for (auto v : k.values) h ^= std::hash<std::uint64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      return h;
    }
  };

  void ensure(std::uint32_t id) {
    if (id >= values_.size()) {
      values_.resize(id + 1, 0);
      bound_.resize(id + 1, 0);
    }
  }
  void bind(Var x, std::uint64_t value) {
    ensure(x.id());
    values_[x.id()] = value;
    ++bound_[x.id()];
  }
  void unbind(Var x) { --bound_[x.id()]; }
  bool is_bound(Var x) const { return x.id() < bound_.size() && bound_[x.id()] > 0; }
  std::uint64_t value(Var x) const {
    if (!is_bound(x)) throw UnboundVariableError("unbound variable '" + x.name() + "'");
    return values_[x.id()];
  }

  Letter letter(std::uint64_t p) const { return word_.at(p); }

  bool eval(const FormulaNode* n) {
    if (++steps_ > options_.node_budget) throw BudgetExceeded("evaluation node budget exceeded");
    switch (n->kind) {
      case Kind::True: return true;
      case Kind::False: return false;
      case Kind::Lt: return value(n->u) < value(n->v);
      case Kind::Eq: return value(n->u) == value(n->v);
      case Kind::LetterL: return letter(value(n->u)) == Letter::L;
      case Kind::LetterR: return letter(value(n->u)) == Letter::R;
      case Kind::In: {
        auto p = value(n->u);
        return (value(n->v) >> (p - 1)) & 1;
      }
      case Kind::Not: return !eval(n->left.get());
      case Kind::And: return eval(n->left.get()) && eval(n->right.get());
      case Kind::Or: return eval(n->left.get()) || eval(n->right.get());
      default: break;
    }
    if (!options_.memoize) return quantify(n);
    Key key{n, {}};
    key.values.reserve(n->free.size());
    for (Var x : n->free) key.values.push_back(value(x));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool out = quantify(n);
    if (++memo_size_ > options_.memo_budget) throw BudgetExceeded("evaluation memo budget exceeded");
    memo_.emplace(std::move(key), out);
    return out;
  }

  bool quantify(const FormulaNode* n) {
    bool existential = n->kind == Kind::Exists1 || n->kind == Kind::Exists2;
    Var x = n->u;
    const FormulaNode* body = n->left.get();
    ensure(x.id());
    auto saved = values_[x.id()];
    bound_[x.id()]++;
    bool result = !existential;
    if (x.first_order()) {
      for (std::uint64_t p = 1; p <= n_; ++p) {
        values_[x.id()] = p;
        if (eval(body) == existential) {
          result = existential;
          break;
        }
      }
    } else {
      if (n_ > 30) throw BudgetExceeded("second-order quantification over more than 30 positions");
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n_); ++m) {
        values_[x.id()] = m;
        if (eval(body) == existential) {
          result = existential;
          break;
        }
      }
    }
    bound_[x.id()]--;
    values_[x.id()] = saved;
    return result;
  }

  const Word& word_;
  EvalOptions options_;
  std::size_t n_ = 0;
  std::vector<std::uint64_t> values_;
  std::vector<std::uint32_t> bound_;
  std::unordered_map<Key, bool, KeyHash> memo_;
  std::uint64_t memo_size_ = 0;
  std::uint64_t steps_ = 0;
};

/// Truth of f on the word model under env. The memo cache lives for this call only.
inline bool evaluate(const Word& w, const Formula& f, const Assignment& env = {}, EvalOptions options = {}) {
  return Evaluator(w, options).evaluate(f, env);
}

/// Binds the context variables, in name order, to the interpretation:
/// second-order ones to I.sets and first-order ones to I.points.
inline Assignment assignment_for(const Interpretation& I, std::span<const Var> context) {
  std::vector<Var> sorted(context.begin(), context.end());
  std::sort(sorted.begin(), sorted.end(), VarNameLess{});
  Assignment env;
  std::size_t si = 0, pi = 0;
  for (Var x : sorted) {
    if (x.first_order()) {
      if (pi >= I.points.size()) throw ContextError("interpretation has too few points for the context");
      env.bind(x, I.points[pi++]);
    } else {
      if (si >= I.sets.size()) throw ContextError("interpretation has too few sets for the context");
      env.bind(x, I.sets[si++]);
    }
  }
  if (si != I.sets.size() || pi != I.points.size())
    throw ContextError("interpretation arity does not match the context");
  return env;
}

inline bool evaluate(const Interpretation& I, const Formula& f, std::span<const Var> context,
                     EvalOptions options = {}) {
  I.validate();
  return evaluate(I.word, f, assignment_for(I, context), options);
}

}  // namespace succinct
