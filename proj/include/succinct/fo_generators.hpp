#pragma once

// First-order formulas whose unique model is the ordered encoding of V_i.
// Subformulas are built once per (family, level, arguments) and shared, so
// the result is a DAG far smaller than its tree size.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "succinct/error.hpp"
#include "succinct/formula.hpp"

namespace succinct {

struct SizeRow {
  std::size_t i;
  std::string name;
  std::uint64_t size;
  std::uint32_t qr;
};

namespace fo {

enum class Family { Core, Set, Elem, Sim, Prec, Oset, Add, Vlevel, Psi, PsiNoOrder };

inline constexpr std::array<Family, 10> kFamilies{Family::Core, Family::Set,    Family::Elem, Family::Sim,
                                                  Family::Prec, Family::Oset,   Family::Add,  Family::Vlevel,
                                                  Family::Psi,  Family::PsiNoOrder};

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::Core: return "core";
    case Family::Set: return "set";
    case Family::Elem: return "elem";
    case Family::Sim: return "sim";
    case Family::Prec: return "prec";
    case Family::Oset: return "oset";
    case Family::Add: return "add";
    case Family::Vlevel: return "vlevel";
    case Family::Psi: return "psi";
    case Family::PsiNoOrder: return "psi_no_order";
  }
  return "?";
}

inline Family parse_family(std::string_view name) {
  for (auto f : kFamilies)
    if (family_name(f) == name) return f;
  throw DomainError("unknown first-order family '" + std::string(name) + "'");
}

/// The documented free variables: x̄ = (x1, x2), ȳ = (y1, y2), z̄ = (z1, z2).
inline VarPair pair(std::string_view letter) {
  return {fo_var(std::string(letter) + "1"), fo_var(std::string(letter) + "2")};
}

class Builder {
 public:

  /// x̄ brackets a nonempty word in which every position has a partner z
  /// such that θ holds of the pair (s, t) = (min, max).
  Formula core(VarPair x, Formula theta, Var s, Var t, Var y, Var z) {
    using namespace fml;
    auto inner = exists(s, exists(t, conj({implies(lt(y, z), eq(s, y) && eq(t, z)),
                                          implies(lt(z, y), eq(s, z) && eq(t, y)), theta})));
    return conj({lt(x.first, x.second), L(x.first), R(x.second),
                  forall(y, implies(chain({x.first, y, x.second}),
                                    exists(z, conj({chain({x.first, z, x.second}), neq(y, z), inner}))))});
  }

  Formula set(std::size_t i, VarPair x) {
    return memo("set", i, {x.first, x.second}, [&] {
      if (i == 0) return set0(x);
      auto [y, z, s, t] = core_vars("set", i);
      return core(x, set(i - 1, {s, t}), s, t, y, z);
    });
  }

  /// x̄ ∈_i ȳ
  Formula elem(std::size_t i, VarPair x, VarPair y) {
    return memo("elem", i, {x.first, x.second, y.first, y.second}, [&] {
      using namespace fml;
      auto z = bound("elem", i, "z");
      return chain({y.first, x.first, x.second, y.second}) &&
             !exists(z, conj({set(i, z), chain({y.first, z.first, x.first}), chain({x.second, z.second, y.second})}));
    });
  }

  /// x̄ ∼_i ȳ
  Formula sim(std::size_t i, VarPair x, VarPair y) {
    return memo("sim", i, {x.first, x.second, y.first, y.second}, [&] {
      using namespace fml;
      if (i == 0) return top();
      auto a = bound("sim", i, "a"), b = bound("sim", i, "b");
      return forall(a, implies(set(i - 1, a),
                               exists(b, conj({set(i - 1, b), implies(elem(i - 1, a, x), elem(i - 1, b, y)),
                                               implies(elem(i - 1, a, y), elem(i - 1, b, x)), sim(i - 1, a, b)}))));
    });
  }

  /// x̄ ≺_i ȳ
  Formula prec(std::size_t i, VarPair x, VarPair y) {
    return memo("prec", i, {x.first, x.second, y.first, y.second}, [&] {
      using namespace fml;
      if (i == 0) return bottom();
      auto z = bound("prec", i, "z"), a = bound("prec", i, "a"), b = bound("prec", i, "b");
      auto j = i - 1;
      auto a_not_in_y = forall(b, implies(set(j, b) && elem(j, b, y), !sim(j, a, b)));
      return exists(z, conj({set(j, z), elem(j, z, y),
                             forall(a, implies(set(j, a) && elem(j, a, x),
                                               !sim(j, a, z) && implies(a_not_in_y, prec(j, a, z))))}));
    });
  }

  Formula oset(std::size_t i, VarPair x) {
    return memo("oset", i, {x.first, x.second}, [&] {
      using namespace fml;
      if (i == 0) return set0(x);
      auto [y, z, s, t] = core_vars("oset", i);
      auto a = bound("oset", i, "a"), b = bound("oset", i, "b");
      auto j = i - 1;
      auto ordered = forall(a, forall(b, implies(conj({set(j, a), set(j, b), elem(j, a, x), elem(j, b, x),
                                                       lt(a.first, b.first)}),
                                                 prec(j, a, b))));
      return core(x, oset(j, {s, t}), s, t, y, z) && ordered;
    });
  }

  /// add_i(x̄, ȳ, z̄): x̄ = ȳ ∪ {z̄}; defined for i ≥ 1.
  Formula add(std::size_t i, VarPair x, VarPair y, VarPair z) {
    if (i == 0) throw DomainError("add_i is defined for i >= 1");
    return memo("add", i, {x.first, x.second, y.first, y.second, z.first, z.second}, [&] {
      using namespace fml;
      auto j = i - 1;
      auto a = bound("add", i, "a"), b = bound("add", i, "b"), c = bound("add", i, "c");
      auto d = bound("add", i, "d"), e = bound("add", i, "e");
      auto grows = forall(a, implies(set(j, a) && elem(j, a, y), exists(b, conj({set(j, b), elem(j, b, x), sim(j, a, b)}))));
      auto rest = forall(d, implies(conj({set(j, d), elem(j, d, x), neq(d.first, c.first)}),
                                    exists(e, conj({set(j, e), elem(j, e, y), sim(j, e, d)}))));
      return grows && exists(c, conj({set(j, c), elem(j, c, x), sim(j, c, z), rest}));
    });
  }

  /// V_i(x̄). With ordered = false every oset in the recursion is replaced by
  /// set and the elements may come in any order, which leaves a formula of
  /// size O(i^3) satisfied by every encoding, duplicates included.
  Formula vlevel(std::size_t i, VarPair x, bool ordered = true) {
    return memo(ordered ? "v" : "vu", i, {x.first, x.second}, [&] {
      using namespace fml;
      if (i == 0) return set(0, x);
      auto j = i - 1;
      auto tag = ordered ? "v" : "vu";
      auto a = bound(tag, i, "a"), b = bound(tag, i, "b");
      // Unordered, ∅ and V_{i-1} only have to be elements; ordered, they are the first and last.
      auto first_empty = exists(a, vlevel(0, a) && (ordered ? successor(x.first, a.first, bound(tag, i, "s").first)
                                                             : elem(j, a, x)));
      std::vector<Formula> last{vlevel(j, b, ordered),
                                ordered ? successor(b.second, x.second, bound(tag, i, "s").second) : elem(j, b, x)};
      if (j > 0) {
        // Closure under adding elements of the last element; vacuous for V_1.
        auto c = bound(tag, i, "c"), d = bound(tag, i, "d"), e = bound(tag, i, "e");
        last.push_back(forall(c, forall(d, implies(conj({set(j, c), elem(j, c, x), set(j - 1, d), elem(j - 1, d, b)}),
                                                   exists(e, conj({set(j, e), elem(j, e, x), add(j, e, c, d)}))))));
      }
      return conj({ordered ? oset(i, x) : set(i, x), first_empty, exists(b, conj(last))});
    });
  }

  /// ψ_i := ∃x∃y∀z (x ≤ z ∧ z ≤ y ∧ V_i(x, y))
  Formula psi(std::size_t i, bool ordered = true) {
    using namespace fml;
    auto x = fo_var("x"), y = fo_var("y"), z = fo_var("z");
    return exists(x, exists(y, forall(z, conj({le(x, z), le(z, y), vlevel(i, {x, y}, ordered)}))));
  }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  Formula set0(VarPair x) {
    using namespace fml;
    return conj({L(x.first), R(x.second), successor(x.first, x.second, fo_var("sz"))});
  }

  static VarPair bound(std::string_view family, std::size_t level, std::string_view letter) {
    auto stem = std::string(family) + std::to_string(level) + std::string(letter);
    return {fo_var(stem + "1"), fo_var(stem + "2")};
  }

  static std::tuple<Var, Var, Var, Var> core_vars(std::string_view family, std::size_t level) {
    auto stem = std::string(family) + std::to_string(level);
    return {fo_var(stem + "y"), fo_var(stem + "z"), fo_var(stem + "s"), fo_var(stem + "t")};
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

/// The family member at level i over the documented free variables.
inline Formula build(Builder& b, Family name, std::size_t i) {
  auto x = pair("x"), y = pair("y"), z = pair("z");
  switch (name) {
    case Family::Core: {
      // θ is a parameter of core; standalone it is instantiated with ⊤.
      auto s = fo_var("s"), t = fo_var("t");
      return b.core(x, fml::top(), s, t, fo_var("y"), fo_var("z"));
    }
    case Family::Set: return b.set(i, x);
    case Family::Elem: return b.elem(i, x, y);
    case Family::Sim: return b.sim(i, x, y);
    case Family::Prec: return b.prec(i, x, y);
    case Family::Oset: return b.oset(i, x);
    case Family::Add: return b.add(i, x, y, z);
    case Family::Vlevel: return b.vlevel(i, x);
    case Family::Psi: return b.psi(i);
    case Family::PsiNoOrder: return b.psi(i, false);
  }
  throw DomainError("unknown first-order family");
}

inline Formula build_fo(Family name, std::size_t i) {
  Builder b;
  return build(b, name, i);
}

/// Sizes and quantifier ranks of every family for 0 ≤ i ≤ max_i. The add
/// family starts at i = 1 and core is reported once, at i = 0.
inline std::vector<SizeRow> size_table_fo(std::size_t max_i) {
  Builder b;
  std::vector<SizeRow> rows;
  for (std::size_t i = 0; i <= max_i; ++i)
    for (auto f : kFamilies) {
      if ((f == Family::Add && i == 0) || (f == Family::Core && i > 0)) continue;
      auto g = build(b, f, i);
      rows.push_back({i, std::string(family_name(f)), g.size(), g.quantifier_rank()});
    }
  return rows;
}

}  // namespace fo
}  // namespace succinct
