#pragma once

// Formula AST over the word vocabulary {<, =, P_l, P_r} with first- and
// second-order binders. Nodes are immutable and may be shared, so a Formula is
// a DAG; size() and quantifier_rank() are the tree measures regardless.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <limits>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "succinct/error.hpp"

namespace succinct {

enum class Sort : std::uint8_t { First, Second };

namespace detail {

class NameTable {
 public:
  static NameTable& instance() {
    static NameTable table;
    return table;
  }

  std::uint32_t intern(std::string_view name) {
    std::lock_guard lock(mutex_);
    auto it = ids_.find(std::string(name));
    if (it != ids_.end()) return it->second;
    auto id = static_cast<std::uint32_t>(names_.size());
    names_.emplace_back(name);
    ids_.emplace(names_.back(), id);
    return id;
  }

  const std::string& name(std::uint32_t id) {
    std::lock_guard lock(mutex_);
    return names_[id];
  }

 private:
  std::mutex mutex_;
  std::deque<std::string> names_;  // deque keeps references stable
  std::unordered_map<std::string, std::uint32_t> ids_;
};

inline bool valid_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
  if (!alpha(name[0])) return false;
  for (char c : name) {
    if (!(alpha(c) || (c >= '0' && c <= '9') || c == '_' || c == '\'')) return false;
  }
  return true;
}

}  // namespace detail

/// A variable identifier. Second-order variables start with an uppercase
/// letter; everything else is first-order.
class Var {
 public:
  Var() = default;

  explicit Var(std::string_view name) {
    if (!detail::valid_identifier(name))
      throw SyntaxError("invalid identifier '" + std::string(name) + "'", 0);
    id_ = detail::NameTable::instance().intern(name);
    sort_ = (name[0] >= 'A' && name[0] <= 'Z') ? Sort::Second : Sort::First;
  }

  bool valid() const noexcept { return id_ != kInvalid; }
  std::uint32_t id() const noexcept { return id_; }
  Sort sort() const noexcept { return sort_; }
  bool first_order() const noexcept { return sort_ == Sort::First; }
  const std::string& name() const { return detail::NameTable::instance().name(id_); }

  friend bool operator==(Var a, Var b) noexcept { return a.id_ == b.id_; }
  friend bool operator!=(Var a, Var b) noexcept { return a.id_ != b.id_; }

 private:
  static constexpr std::uint32_t kInvalid = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t id_ = kInvalid;
  Sort sort_ = Sort::First;
};

/// Lexicographic order on names; this is the track order of automata.
struct VarNameLess {
  bool operator()(Var a, Var b) const { return a != b && a.name() < b.name(); }
};

inline Var fo_var(std::string_view name) {
  Var v(name);
  if (!v.first_order()) throw SortError("'" + std::string(name) + "' is not a first-order name");
  return v;
}

inline Var so_var(std::string_view name) {
  Var v(name);
  if (v.first_order()) throw SortError("'" + std::string(name) + "' is not a second-order name");
  return v;
}

/// A pair of first-order variables (x_1, x_2) naming the outer braces of an
/// encoded set.
struct VarPair {
  Var first;
  Var second;
};

enum class Kind : std::uint8_t {
  Lt,
  Eq,
  LetterL,
  LetterR,
  In,
  True,
  False,
  Not,
  And,
  Or,
  Exists1,
  Forall1,
  Exists2,
  Forall2,
};

inline bool is_atomic(Kind k) { return k <= Kind::False; }
inline bool is_quantifier(Kind k) { return k >= Kind::Exists1; }
inline bool is_binary(Kind k) { return k == Kind::And || k == Kind::Or; }

class Formula;

struct FormulaNode {
  Kind kind;
  Var u;  // first atom argument, or the binder of a quantifier
  Var v;  // second atom argument
  std::shared_ptr<const FormulaNode> left;
  std::shared_ptr<const FormulaNode> right;
  std::uint64_t size;
  std::uint32_t qr;
  bool first_order;
  std::vector<Var> free;  // sorted by name
};

namespace detail {

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max()
                                                            : a + b;
}

inline std::vector<Var> merge_free(const std::vector<Var>& a, const std::vector<Var>& b) {
  std::vector<Var> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), VarNameLess{});
  return out;
}

}  // namespace detail

class Formula {
 public:
  using Node = FormulaNode;

  Formula() : Formula(top()) {}

  // Atoms.
  static Formula lt(Var x, Var y) { return atom(Kind::Lt, expect_first(x), expect_first(y)); }
  static Formula eq(Var x, Var y) { return atom(Kind::Eq, expect_first(x), expect_first(y)); }
  static Formula letter_l(Var x) { return atom(Kind::LetterL, expect_first(x), Var{}); }
  static Formula letter_r(Var x) { return atom(Kind::LetterR, expect_first(x), Var{}); }
  static Formula in(Var x, Var set) { return atom(Kind::In, expect_first(x), expect_second(set)); }

  static Formula top() {
    static const Formula t = atom(Kind::True, Var{}, Var{});
    return t;
  }
  static Formula bottom() {
    static const Formula f = atom(Kind::False, Var{}, Var{});
    return f;
  }

  static Formula negate(const Formula& f) {
    auto n = make(Kind::Not);
    n->left = f.node_;
    n->size = detail::saturating_add(f.size(), 1);
    n->qr = f.quantifier_rank();
    n->first_order = f.is_first_order();
    n->free = f.node_->free;
    return Formula(std::move(n));
  }

  static Formula land(const Formula& a, const Formula& b) { return binary(Kind::And, a, b); }
  static Formula lor(const Formula& a, const Formula& b) { return binary(Kind::Or, a, b); }

  static Formula exists(Var x, const Formula& body) {
    return quantifier(x.first_order() ? Kind::Exists1 : Kind::Exists2, x, body);
  }
  static Formula forall(Var x, const Formula& body) {
    return quantifier(x.first_order() ? Kind::Forall1 : Kind::Forall2, x, body);
  }

  Kind kind() const noexcept { return node_->kind; }
  /// Atom arguments; for quantifiers, arg0() is the binder.
  Var arg0() const noexcept { return node_->u; }
  Var arg1() const noexcept { return node_->v; }
  Var binder() const noexcept { return node_->u; }
  Formula child() const { return Formula(node_->left); }
  Formula lhs() const { return Formula(node_->left); }
  Formula rhs() const { return Formula(node_->right); }

  std::uint64_t size() const noexcept { return node_->size; }
  std::uint32_t quantifier_rank() const noexcept { return node_->qr; }
  bool is_first_order() const noexcept { return node_->first_order; }
  bool is_sentence() const noexcept { return node_->free.empty(); }
  const std::vector<Var>& free_variables() const noexcept { return node_->free; }
  bool has_free(Var x) const {
    return std::binary_search(node_->free.begin(), node_->free.end(), x, VarNameLess{});
  }

  const Node* node() const noexcept { return node_.get(); }
  const std::shared_ptr<const Node>& shared() const noexcept { return node_; }

  /// Structural equality (pointer-equal subtrees short-circuit).
  friend bool operator==(const Formula& a, const Formula& b) { return structurally_equal(a.node_.get(), b.node_.get()); }

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

 private:
  static std::shared_ptr<Node> make(Kind k) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    return n;
  }

  static Var expect_first(Var x) {
    if (!x.first_order()) throw SortError("'" + x.name() + "' used as a first-order variable");
    return x;
  }
  static Var expect_second(Var x) {
    if (x.first_order()) throw SortError("'" + x.name() + "' used as a second-order variable");
    return x;
  }

  static Formula atom(Kind k, Var u, Var v) {
    auto n = make(k);
    n->u = u;
    n->v = v;
    n->size = 1;
    n->qr = 0;
    n->first_order = k != Kind::In;
    if (u.valid()) n->free.push_back(u);
    if (v.valid() && v != u) {
      n->free.push_back(v);
      std::sort(n->free.begin(), n->free.end(), VarNameLess{});
    }
    return Formula(std::move(n));
  }

  static Formula binary(Kind k, const Formula& a, const Formula& b) {
    auto n = make(k);
    n->left = a.node_;
    n->right = b.node_;
    n->size = detail::saturating_add(detail::saturating_add(a.size(), b.size()), 1);
    n->qr = std::max(a.quantifier_rank(), b.quantifier_rank());
    n->first_order = a.is_first_order() && b.is_first_order();
    n->free = detail::merge_free(a.node_->free, b.node_->free);
    return Formula(std::move(n));
  }

  static Formula quantifier(Kind k, Var x, const Formula& body) {
    auto n = make(k);
    n->u = x;
    n->left = body.node_;
    n->size = detail::saturating_add(body.size(), 1);
    n->qr = body.quantifier_rank() + 1;
    n->first_order = body.is_first_order() && x.first_order();
    n->free = body.node_->free;
    std::erase(n->free, x);
    return Formula(std::move(n));
  }

  static bool structurally_equal(const Node* a, const Node* b) {
    if (a == b) return true;
    if (a->kind != b->kind || a->u != b->u || a->v != b->v || a->size != b->size) return false;
    if (a->left && !structurally_equal(a->left.get(), b->left.get())) return false;
    if (a->right && !structurally_equal(a->right.get(), b->right.get())) return false;
    return true;
  }

  std::shared_ptr<const Node> node_;
};

/// Tree size: atoms and the constants count 1, every connective, negation and
/// quantifier adds 1.
inline std::uint64_t size(const Formula& f) { return f.size(); }
inline std::uint32_t quantifier_rank(const Formula& f) { return f.quantifier_rank(); }
inline bool is_first_order(const Formula& f) { return f.is_first_order(); }

/// Number of distinct nodes in the shared representation.
inline std::size_t dag_node_count(const Formula& f) {
  std::unordered_set<const FormulaNode*> seen;
  std::vector<const FormulaNode*> stack{f.node()};
  while (!stack.empty()) {
    auto* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    if (n->left) stack.push_back(n->left.get());
    if (n->right) stack.push_back(n->right.get());
  }
  return seen.size();
}

/// Replaces letter atoms L(t) by t ∈ l_target and R(t) by t ∈ r_target.
inline Formula substitute_letter_atoms(const Formula& f, Var l_target, Var r_target) {
  if (l_target.first_order() || r_target.first_order())
    throw SortError("letter substitution targets must be second-order variables");
  std::unordered_map<const FormulaNode*, Formula> memo;
  auto rec = [&](auto&& self, const Formula& g) -> Formula {
    if (auto it = memo.find(g.node()); it != memo.end()) return it->second;
    Formula out = g;
    switch (g.kind()) {
      case Kind::LetterL: out = Formula::in(g.arg0(), l_target); break;
      case Kind::LetterR: out = Formula::in(g.arg0(), r_target); break;
      case Kind::Not: out = Formula::negate(self(self, g.child())); break;
      case Kind::And: out = Formula::land(self(self, g.lhs()), self(self, g.rhs())); break;
      case Kind::Or: out = Formula::lor(self(self, g.lhs()), self(self, g.rhs())); break;
      case Kind::Exists1:
      case Kind::Forall1:
      case Kind::Exists2:
      case Kind::Forall2: {
        if (g.binder() == l_target || g.binder() == r_target)
          throw CaptureError("substitution target '" + g.binder().name() + "' is bound in the formula");
        auto body = self(self, g.child());
        out = (g.kind() == Kind::Exists1 || g.kind() == Kind::Exists2) ? Formula::exists(g.binder(), body)
                                                                        : Formula::forall(g.binder(), body);
        break;
      }
      default: break;
    }
    memo.emplace(g.node(), out);
    return out;
  };
  return rec(rec, f);
}

// Derived forms. Each expands to the core kinds with a fixed shape so that
// sizes stay reproducible.
namespace fml {

inline Formula operator!(const Formula& f) { return Formula::negate(f); }
inline Formula operator&&(const Formula& a, const Formula& b) { return Formula::land(a, b); }
inline Formula operator||(const Formula& a, const Formula& b) { return Formula::lor(a, b); }

inline Formula lt(Var x, Var y) { return Formula::lt(x, y); }
inline Formula eq(Var x, Var y) { return Formula::eq(x, y); }
inline Formula L(Var x) { return Formula::letter_l(x); }
inline Formula R(Var x) { return Formula::letter_r(x); }
inline Formula in(Var x, Var set) { return Formula::in(x, set); }
inline Formula top() { return Formula::top(); }
inline Formula bottom() { return Formula::bottom(); }
inline Formula exists(Var x, const Formula& f) { return Formula::exists(x, f); }
inline Formula forall(Var x, const Formula& f) { return Formula::forall(x, f); }
inline Formula exists(VarPair p, const Formula& f) { return exists(p.first, exists(p.second, f)); }
inline Formula forall(VarPair p, const Formula& f) { return forall(p.first, forall(p.second, f)); }

/// a → b  ≡  ¬a ∨ b
inline Formula implies(const Formula& a, const Formula& b) { return !a || b; }
/// a ↔ b  ≡  (¬a ∨ b) ∧ (¬b ∨ a)
inline Formula iff(const Formula& a, const Formula& b) { return implies(a, b) && implies(b, a); }
inline Formula neq(Var x, Var y) { return !eq(x, y); }
/// x ≤ y  ≡  x < y ∨ x = y
inline Formula le(Var x, Var y) { return lt(x, y) || eq(x, y); }

/// Right-associated conjunction; the empty conjunction is ⊤.
inline Formula conj(std::span<const Formula> parts) {
  if (parts.empty()) return top();
  Formula acc = parts.back();
  for (auto i = parts.size() - 1; i-- > 0;) acc = parts[i] && acc;
  return acc;
}
inline Formula conj(std::initializer_list<Formula> parts) {
  return conj(std::span<const Formula>(parts.begin(), parts.size()));
}

/// Right-associated disjunction; the empty disjunction is ⊥.
inline Formula disj(std::span<const Formula> parts) {
  if (parts.empty()) return bottom();
  Formula acc = parts.back();
  for (auto i = parts.size() - 1; i-- > 0;) acc = parts[i] || acc;
  return acc;
}
inline Formula disj(std::initializer_list<Formula> parts) {
  return disj(std::span<const Formula>(parts.begin(), parts.size()));
}

/// x_0 < x_1 < … < x_n as a right-associated conjunction.
inline Formula chain(std::initializer_list<Var> vars) {
  std::vector<Formula> parts;
  for (auto it = vars.begin(); std::next(it) != vars.end(); ++it) parts.push_back(lt(*it, *std::next(it)));
  return conj(parts);
}

/// S(x, y) := x < y ∧ ¬∃z (x < z < y)
inline Formula successor(Var x, Var y, Var z) { return lt(x, y) && !exists(z, chain({x, z, y})); }

}  // namespace fml

}  // namespace succinct
