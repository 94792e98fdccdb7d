#pragma once

// Hereditarily finite sets and their brace encodings, with l for '{' and r for
// '}'. This is the ground truth the generated formulas are checked against.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "succinct/error.hpp"
#include "succinct/word.hpp"

namespace succinct {

/// A hereditarily finite set, stored canonically: elements duplicate-free and
/// sorted increasingly under the ≺ order.
class HFSet {
 public:
  HFSet() = default;

  static HFSet of(std::vector<HFSet> elements) {
    std::sort(elements.begin(), elements.end(), [](const HFSet& a, const HFSet& b) { return compare(a, b) < 0; });
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    HFSet s;
    s.elements_ = std::move(elements);
    return s;
  }

  const std::vector<HFSet>& elements() const noexcept { return elements_; }
  std::size_t cardinality() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }

  bool contains(const HFSet& x) const {
    return std::binary_search(elements_.begin(), elements_.end(), x,
                              [](const HFSet& a, const HFSet& b) { return compare(a, b) < 0; });
  }

  /// Nesting depth: 0 for ∅, otherwise one more than the deepest element.
  std::size_t rank() const {
    std::size_t r = 0;
    for (const auto& e : elements_) r = std::max(r, e.rank() + 1);
    return r;
  }

  /// Three-way ≺ comparison: a ≺ b iff the greatest element of the
  /// symmetric difference lies in b. Elements are scanned from the top.
  static int compare(const HFSet& a, const HFSet& b) {
    auto i = a.elements_.size(), j = b.elements_.size();
    while (i > 0 && j > 0) {
      int c = compare(a.elements_[i - 1], b.elements_[j - 1]);
      if (c > 0) return 1;
      if (c < 0) return -1;
      --i;
      --j;
    }
    if (i > 0) return 1;
    if (j > 0) return -1;
    return 0;
  }

  std::string braces() const {
    std::string s = "{";
    for (const auto& e : elements_) s += e.braces();
    return s + "}";
  }

  friend bool operator==(const HFSet& a, const HFSet& b) { return a.elements_ == b.elements_; }
  friend bool operator<(const HFSet& a, const HFSet& b) { return compare(a, b) < 0; }

 private:
  std::vector<HFSet> elements_;
};

inline HFSet insert(const HFSet& s, const HFSet& x) {
  auto els = s.elements();
  els.push_back(x);
  return HFSet::of(std::move(els));
}

constexpr std::size_t kMaxOracleLevel = 4;

/// V_0 = ∅ and V_{i+1} = P(V_i).
inline HFSet v_level(std::size_t i) {
  if (i > kMaxOracleLevel) throw DomainError("level too large: V_" + std::to_string(i) + " is not representable");
  HFSet v;
  for (std::size_t level = 0; level < i; ++level) {
    const auto& base = v.elements();
    std::vector<HFSet> subsets;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << base.size()); ++m) {
      std::vector<HFSet> members;
      for (std::size_t b = 0; b < base.size(); ++b)
        if ((m >> b) & 1) members.push_back(base[b]);
      subsets.push_back(HFSet::of(std::move(members)));
    }
    v = HFSet::of(std::move(subsets));
  }
  return v;
}

/// Semantic ≺ on members of V_i.
inline bool prec(std::size_t i, const HFSet& a, const HFSet& b) {
  auto v = v_level(i);
  if (!v.contains(a) || !v.contains(b)) throw DomainError("prec: arguments are not members of V_" + std::to_string(i));
  return HFSet::compare(a, b) < 0;
}

/// Encoding with every set's elements in ≺-increasing order, recursively.
inline Word encode_ordered(const HFSet& s) {
  Word w{Letter::L};
  for (const auto& e : s.elements()) w = w.concat(encode_ordered(e));
  w.push_back(Letter::R);
  return w;
}

/// Shortlex-least duplicate-free encoding (l < r). Encodings of sets are
/// prefix-free, so sorting element encodings lexicographically minimizes
/// their concatenation.
inline Word encode_least(const HFSet& s) {
  std::vector<Word> parts;
  for (const auto& e : s.elements()) parts.push_back(encode_least(e));
  std::sort(parts.begin(), parts.end());
  Word w{Letter::L};
  for (const auto& p : parts) w = w.concat(p);
  w.push_back(Letter::R);
  return w;
}

/// All duplicate-free encodings of s under every recursive element order.
inline std::vector<Word> all_encodings(const HFSet& s) {
  std::vector<std::vector<Word>> options;
  for (const auto& e : s.elements()) options.push_back(all_encodings(e));
  std::vector<std::size_t> perm(options.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::set<Word> out;
  do {
    std::vector<Word> partial{Word{Letter::L}};
    for (auto idx : perm) {
      std::vector<Word> grown;
      for (const auto& prefix : partial)
        for (const auto& option : options[idx]) grown.push_back(prefix.concat(option));
      partial = std::move(grown);
    }
    for (auto& p : partial) {
      p.push_back(Letter::R);
      out.insert(p);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {out.begin(), out.end()};
}

inline Word encode_fo(std::size_t i) { return encode_ordered(v_level(i)); }

inline std::vector<Word> enumerate_encodings(std::size_t i) {
  if (i > 2) throw DomainError("level too large: encodings are enumerated for i <= 2");
  return all_encodings(v_level(i));
}

inline Word encode_mso(std::size_t i) {
  Word w = encode_least(v_level(i));
  if (i <= 2) {
    auto all = enumerate_encodings(i);
    auto best = *std::min_element(all.begin(), all.end(), [](const Word& a, const Word& b) { return shortlex_less(a, b); });
    if (best != w) throw Error("internal: greedy least encoding disagrees with enumeration");
  }
  return w;
}

/// |encode_fo(i)| by the closed recursion T(0) = 2,
/// T(i+1) = 2 + 2·2^{|V_i|} + 2^{|V_i|-1}·(T(i) - 2): each of the 2^{|V_i|}
/// subsets contributes its braces, and each element of V_i lies in half of them.
inline std::uint64_t encoding_length(std::size_t i) {
  if (i > kMaxOracleLevel) throw DomainError("level too large");
  std::uint64_t t = 2, card = 0;
  for (std::size_t level = 0; level < i; ++level) {
    std::uint64_t subsets = std::uint64_t{1} << card;
    t = 2 + 2 * subsets + (card == 0 ? 0 : (subsets / 2) * (t - 2));
    card = subsets;
  }
  return t;
}

/// A matched brace pair of an encoding, with its 1-based positions.
struct BraceSpan {
  std::size_t open;
  std::size_t close;
  int parent;  // index into BraceWord::spans, -1 for the root
  std::vector<std::size_t> children;
  HFSet value;
};

/// Parse of a balanced word that encodes a single set.
struct BraceWord {
  Word word;
  std::vector<BraceSpan> spans;  // spans[0] is the outermost pair; ordered by opening position

  const BraceSpan& root() const { return spans.front(); }
  std::pair<std::size_t, std::size_t> span(std::size_t k) const { return {spans[k].open, spans[k].close}; }
};

inline BraceWord parse_braces(const Word& w) {
  BraceWord out{w, {}};
  std::vector<std::size_t> stack;
  for (std::size_t p = 1; p <= w.size(); ++p) {
    if (w.at(p) == Letter::L) {
      if (stack.empty() && !out.spans.empty())
        throw WordError("unbalanced braces: second top-level set at position " + std::to_string(p));
      int parent = stack.empty() ? -1 : static_cast<int>(stack.back());
      out.spans.push_back({p, 0, parent, {}, {}});
      if (parent >= 0) out.spans[parent].children.push_back(out.spans.size() - 1);
      stack.push_back(out.spans.size() - 1);
    } else {
      if (stack.empty()) throw WordError("unbalanced braces: unmatched r at position " + std::to_string(p));
      out.spans[stack.back()].close = p;
      stack.pop_back();
    }
  }
  if (out.spans.empty()) throw WordError("unbalanced braces: empty word");
  if (!stack.empty())
    throw WordError("unbalanced braces: unmatched l at position " + std::to_string(out.spans[stack.back()].open));
  for (std::size_t k = out.spans.size(); k-- > 0;) {
    std::vector<HFSet> els;
    for (auto c : out.spans[k].children) els.push_back(out.spans[c].value);
    out.spans[k].value = HFSet::of(std::move(els));
  }
  return out;
}

/// The set denoted by a balanced word; duplicate elements collapse.
inline HFSet decode(const Word& w) { return parse_braces(w).root().value; }

/// Level of every position: the root pair gets its rank, every element pair
/// one less than its parent.
inline std::map<std::size_t, std::size_t> levels_of(const Word& w) {
  auto parsed = parse_braces(w);
  std::vector<std::size_t> level(parsed.spans.size());
  std::map<std::size_t, std::size_t> out;
  for (std::size_t k = 0; k < parsed.spans.size(); ++k) {
    const auto& s = parsed.spans[k];
    level[k] = s.parent < 0 ? s.value.rank() : level[s.parent] - 1;
    out[s.open] = level[k];
    out[s.close] = level[k];
  }
  return out;
}

}  // namespace succinct
