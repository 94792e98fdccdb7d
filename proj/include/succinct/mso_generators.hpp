#pragma once

// Monadic second-order formulas for V_i: the braces are partitioned into
// levels D_0..D_i, and ψ_i selects the shortlex-least encoding by comparing
// against every relabelling P_1/P_2 of the word.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "succinct/error.hpp"
#include "succinct/evaluate.hpp"
#include "succinct/fo_generators.hpp"
#include "succinct/formula.hpp"
#include "succinct/set_oracle.hpp"

namespace succinct::mso {

enum class Family { Set, Levels, Elem, Sim, Add, Vlevel, Phi, PhiPrimed, Psi };

inline constexpr std::array<Family, 9> kFamilies{Family::Set,    Family::Levels, Family::Elem,
                                                 Family::Sim,    Family::Add,    Family::Vlevel,
                                                 Family::Phi,    Family::PhiPrimed, Family::Psi};

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::Set: return "set";
    case Family::Levels: return "levels";
    case Family::Elem: return "elem";
    case Family::Sim: return "sim";
    case Family::Add: return "add";
    case Family::Vlevel: return "vlevel";
    case Family::Phi: return "phi";
    case Family::PhiPrimed: return "phi_primed";
    case Family::Psi: return "psi";
  }
  return "?";
}

inline Family parse_family(std::string_view name) {
  for (auto f : kFamilies)
    if (family_name(f) == name) return f;
  throw DomainError("unknown second-order family '" + std::string(name) + "'");
}

inline Var level_var(std::size_t j) { return so_var("D" + std::to_string(j)); }

class Builder {
 public:
  /// set_i(x̄) over the level variable D_i.
  Formula set(std::size_t i, VarPair x) {
    return memo("set", i, {x.first, x.second}, [&] {
      using namespace fml;
      auto D = level_var(i);
      if (i == 0)
        return conj({successor(x.first, x.second, fo_var("sz")), L(x.first), R(x.second), in(x.first, D),
                      in(x.second, D)});
      auto y = fo_var("set" + std::to_string(i) + "y");
      return conj({lt(x.first, x.second), L(x.first), R(x.second), in(x.first, D), in(x.second, D),
                   forall(y, implies(chain({x.first, y, x.second}), !in(y, D)))});
    });
  }

  Formula levels(std::size_t i) {
    return memo("levels", i, {}, [&] {
      using namespace fml;
      auto x = fo_var("lx"), y = fo_var("ly");
      VarPair xs{fo_var("lx1"), fo_var("lx2")};
      std::vector<Formula> some, exclusive, nested, opens, closes;
      for (std::size_t j = 0; j <= i; ++j) {
        some.push_back(in(x, level_var(j)));
        for (std::size_t k = 0; k <= i; ++k)
          if (j != k) exclusive.push_back(!(in(x, level_var(j)) && in(x, level_var(k))));
        std::vector<Formula> below;
        for (std::size_t k = 0; k < j; ++k) below.push_back(in(y, level_var(k)));
        nested.push_back(implies(set(j, xs), forall(y, implies(chain({xs.first, y, xs.second}), disj(below)))));
        opens.push_back(implies(L(xs.first) && in(xs.first, level_var(j)), exists(xs.second, set(j, xs))));
        closes.push_back(implies(R(xs.first) && in(xs.first, level_var(j)),
                                 exists(xs.second, set(j, {xs.second, xs.first}))));
      }
      return forall(x, conj({disj(some), conj(exclusive), forall(xs, conj(nested))})) &&
             forall(xs.first, conj(opens) && conj(closes));
    });
  }

  /// x̄ ∈ ȳ
  Formula elem(VarPair x, VarPair y) { return Formula::land(fml::lt(y.first, x.first), fml::lt(x.second, y.second)); }

  /// x̄ ∼_i ȳ
  Formula sim(std::size_t i, VarPair x, VarPair y) {
    return memo("sim", i, {x.first, x.second, y.first, y.second}, [&] {
      using namespace fml;
      if (i == 0) return top();
      auto a = bound("sim", i, "a"), b = bound("sim", i, "b");
      return forall(a, implies(set(i - 1, a),
                               exists(b, conj({set(i - 1, b), implies(elem(a, x), elem(b, y)),
                                               implies(elem(a, y), elem(b, x)), sim(i - 1, a, b)}))));
    });
  }

  /// add_i(x̄, ȳ, z̄); defined for i ≥ 1.
  Formula add(std::size_t i, VarPair x, VarPair y, VarPair z) {
    if (i == 0) throw DomainError("add_i is defined for i >= 1");
    return memo("add", i, {x.first, x.second, y.first, y.second, z.first, z.second}, [&] {
      using namespace fml;
      auto j = i - 1;
      auto a = bound("add", i, "a"), b = bound("add", i, "b"), c = bound("add", i, "c");
      auto d = bound("add", i, "d"), e = bound("add", i, "e");
      auto grows = forall(a, implies(set(j, a) && elem(a, y), exists(b, conj({set(j, b), elem(b, x), sim(j, a, b)}))));
      auto rest = forall(d, implies(conj({set(j, d), elem(d, x), neq(d.first, c.first)}),
                                    exists(e, conj({set(j, e), elem(e, y), sim(j, e, d)}))));
      return grows && exists(c, conj({set(j, c), elem(c, x), sim(j, c, z), rest}));
    });
  }

  Formula vlevel(std::size_t i, VarPair x) {
    return memo("v", i, {x.first, x.second}, [&] {
      using namespace fml;
      if (i == 0) return set(0, x);
      auto j = i - 1;
      auto a = bound("v", i, "a"), b = bound("v", i, "b");
      auto has_empty = exists(a, conj({set(j, a), elem(a, x), successor(a.first, a.second, fo_var("v" + std::to_string(i) + "s"))}));
      std::vector<Formula> last{vlevel(j, b), elem(b, x)};
      if (j > 0) {
        // Closure under adding elements of V_{i-1}; vacuous for V_1.
        auto c = bound("v", i, "c"), d = bound("v", i, "d"), e = bound("v", i, "e");
        last.push_back(forall(c, forall(d, implies(conj({set(j, c), elem(c, x), set(j - 1, d), elem(d, b)}),
                                                   exists(e, conj({set(j, e), elem(e, x), add(j, e, c, d)}))))));
      }
      return conj({set(i, x), has_empty, exists(b, conj(last))});
    });
  }

  /// φ_i(x, y) := ∃D_0 … ∃D_i (levels_i ∧ V_i(x, y))
  Formula phi(std::size_t i, Var x, Var y) {
    return memo("phi", i, {x, y}, [&] {
      Formula body = Formula::land(levels(i), vlevel(i, {x, y}));
      for (std::size_t j = i + 1; j-- > 0;) body = fml::exists(level_var(j), body);
      return body;
    });
  }

  /// φ_i with L(·) read as P1(·) and R(·) as P2(·).
  Formula phi_primed(std::size_t i, Var x, Var y) {
    return memo("phip", i, {x, y}, [&] { return substitute_letter_atoms(phi(i, x, y), so_var("P1"), so_var("P2")); });
  }

  /// ψ_i: the whole word encodes V_i and no shorter or lexicographically
  /// smaller labelling of the positions does.
  Formula psi(std::size_t i) {
    return memo("psi", i, {}, [&] {
      using namespace fml;
      auto x = fo_var("x"), y = fo_var("y"), z = fo_var("z"), yp = fo_var("y'"), a = fo_var("a");
      auto P1 = so_var("P1"), P2 = so_var("P2");
      auto partition = forall(z, (in(z, P1) || in(z, P2)) && !(in(z, P1) && in(z, P2)));
      auto agree_before = forall(a, implies(lt(a, z), iff(L(a), in(a, P1)) && iff(R(a), in(a, P2))));
      auto smaller = lt(yp, y) || exists(z, agree_before && (in(z, P1) && R(z)));
      auto least = forall(P1, forall(P2, implies(partition, forall(yp, implies(smaller, !phi_primed(i, x, yp))))));
      return exists(x, exists(y, conj({forall(z, le(x, z) && le(z, y)), phi(i, x, y), least})));
    });
  }

 private:
  static VarPair bound(std::string_view family, std::size_t level, std::string_view letter) {
    auto stem = std::string(family) + std::to_string(level) + std::string(letter);
    return {fo_var(stem + "1"), fo_var(stem + "2")};
  }

  template <class Make>
  Formula memo(std::string_view family, std::size_t level, std::vector<Var> args, Make make) {
    std::vector<std::uint32_t> ids;
    for (auto v : args) ids.push_back(v.id());
    auto key = std::make_tuple(std::string(family), level, std::move(ids));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Formula f = make();
    memo_.emplace(std::move(key), f);
    return f;
  }

  std::map<std::tuple<std::string, std::size_t, std::vector<std::uint32_t>>, Formula> memo_;
};

/// The family member at level i over x̄ = (x1, x2), ȳ, z̄; phi and
/// phi_primed have free x, y (plus P1, P2 for phi_primed). elem ignores i.
inline Formula build(Builder& b, Family name, std::size_t i) {
  auto x = fo::pair("x"), y = fo::pair("y"), z = fo::pair("z");
  switch (name) {
    case Family::Set: return b.set(i, x);
    case Family::Levels: return b.levels(i);
    case Family::Elem: return b.elem(x, y);
    case Family::Sim: return b.sim(i, x, y);
    case Family::Add: return b.add(i, x, y, z);
    case Family::Vlevel: return b.vlevel(i, x);
    case Family::Phi: return b.phi(i, fo_var("x"), fo_var("y"));
    case Family::PhiPrimed: return b.phi_primed(i, fo_var("x"), fo_var("y"));
    case Family::Psi: return b.psi(i);
  }
  throw DomainError("unknown second-order family");
}

inline Formula build_mso(Family name, std::size_t i) {
  Builder b;
  return build(b, name, i);
}

inline std::vector<SizeRow> size_table_mso(std::size_t max_i) {
  Builder b;
  std::vector<SizeRow> rows;
  for (std::size_t i = 0; i <= max_i; ++i)
    for (auto f : kFamilies) {
      if ((f == Family::Add && i == 0) || (f == Family::Elem && i > 0)) continue;
      auto g = build(b, f, i);
      rows.push_back({i, std::string(family_name(f)), g.size(), g.quantifier_rank()});
    }
  return rows;
}

/// Every assignment of levels 0..i to the brace pairs of a balanced forest
/// in which each pair sits strictly below its parent. Words that are not a
/// concatenation of balanced sets admit no partition satisfying levels_i.
inline std::vector<std::vector<PositionSet>> level_labelings(const Word& u, std::size_t i) {
  struct Pair {
    std::size_t open, close;
    int parent;
  };
  std::vector<Pair> pairs;
  std::vector<std::size_t> stack;
  for (std::size_t p = 1; p <= u.size(); ++p) {
    if (u.at(p) == Letter::L) {
      pairs.push_back({p, 0, stack.empty() ? -1 : static_cast<int>(stack.back())});
      stack.push_back(pairs.size() - 1);
    } else {
      if (stack.empty()) return {};
      pairs[stack.back()].close = p;
      stack.pop_back();
    }
  }
  if (!stack.empty()) return {};
  std::vector<std::vector<PositionSet>> out;
  std::vector<std::size_t> level(pairs.size());
  std::function<void(std::size_t)> assign = [&](std::size_t k) {
    if (k == pairs.size()) {
      std::vector<PositionSet> D(i + 1);
      for (std::size_t m = 0; m < pairs.size(); ++m) {
        D[level[m]].insert(pairs[m].open);
        D[level[m]].insert(pairs[m].close);
      }
      out.push_back(std::move(D));
      return;
    }
    if (pairs[k].parent >= 0 && level[pairs[k].parent] == 0) return;
    std::size_t cap = pairs[k].parent < 0 ? i : level[pairs[k].parent] - 1;
    for (std::size_t l = 0; l <= cap; ++l) {
      level[k] = l;
      assign(k + 1);
    }
  };
  assign(0);
  return out;
}

/// Evaluates ψ_i on w without enumerating the second-order quantifiers:
/// the level partitions are the tree-consistent labelings, and P1/P2 range
/// over relabellings of w, one word u of the same length each.
class PsiEvaluator {
 public:
  explicit PsiEvaluator(std::size_t i) : i_(i) {
    Builder b;
    auto x = fo_var("x"), y = fo_var("y");
    body_ = Formula::land(b.levels(i), b.vlevel(i, {x, y}));
    x_ = x;
    y_ = y;
  }

  /// φ_i(1, end) on u.
  bool phi(const Word& u, std::size_t end) const {
    for (const auto& D : level_labelings(u, i_)) {
      Assignment env;
      for (std::size_t j = 0; j <= i_; ++j) env.bind(level_var(j), D[j]);
      env.bind(x_, std::size_t{1}).bind(y_, end);
      if (evaluate(u, body_, env)) return true;
    }
    return false;
  }

  bool psi(const Word& w) const {
    auto n = w.size();
    if (n > 24) throw BudgetExceeded("psi evaluation enumerates all relabellings; word too long");
    if (!phi(w, n)) return false;
    for (const auto& u : all_words(n))
      for (std::size_t end = 1; end <= n; ++end) {
        bool smaller = end < n || u < w;
        if (smaller && phi(u, end)) return false;
      }
    return true;
  }

 private:
  std::size_t i_;
  Formula body_;
  Var x_, y_;
};

inline bool evaluate_psi(const Word& w, std::size_t i) { return PsiEvaluator(i).psi(w); }

}  // namespace succinct::mso
