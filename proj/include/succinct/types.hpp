#pragma once

// Quantifier-rank types of (r, s)-interpretations. A rank-0 type is the
// atomic diagram of the parameters; a rank-(k+1) type is the set of rank-k
// types of all one-step extensions (a new point, and for MSO also a new set).
// Canonical forms are interned, so a type is identified by a table id.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "succinct/bounds.hpp"
#include "succinct/error.hpp"
#include "succinct/word.hpp"

namespace succinct {

/// Interns canonical type serializations. Safe to share between threads.
class TypeTable {
 public:
  std::uint32_t intern(const std::string& canonical) {
    std::lock_guard lock(mu_);
    auto [it, fresh] = ids_.try_emplace(canonical, static_cast<std::uint32_t>(forms_.size()));
    if (fresh) forms_.push_back(canonical);
    return it->second;
  }
  std::string canonical(std::uint32_t id) const {
    std::lock_guard lock(mu_);
    return forms_.at(id);
  }
  std::size_t size() const {
    std::lock_guard lock(mu_);
    return forms_.size();
  }

 private:
  mutable std::mutex mu_;
  std::unordered_map<std::string, std::uint32_t> ids_;
  std::vector<std::string> forms_;
};

inline TypeTable& default_type_table() {
  static TypeTable table;
  return table;
}

struct TypeFingerprint {
  Logic logic;
  std::uint32_t rank;
  std::uint32_t id;

  friend bool operator==(const TypeFingerprint&, const TypeFingerprint&) = default;
  friend auto operator<=>(const TypeFingerprint&, const TypeFingerprint&) = default;
};

struct TypeOptions {
  std::uint64_t leaf_budget = 200'000'000;
};

namespace detail {

/// Letters of the points, the order between every two of them, and which
/// sets contain which points.
inline std::string atomic_diagram(const Word& w, const std::vector<std::uint64_t>& sets,
                                  const std::vector<std::size_t>& points) {
  std::string s = std::to_string(sets.size()) + "," + std::to_string(points.size()) + ":";
  for (auto p : points) s.push_back(to_char(w.at(p)));
  s.push_back(';');
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b)
      s.push_back(points[a] < points[b] ? '<' : points[a] == points[b] ? '=' : '>');
  s.push_back(';');
  for (auto p : points)
    for (auto m : sets) s.push_back((m >> (p - 1)) & 1 ? '1' : '0');
  return s;
}

class Fingerprinter {
 public:
  Fingerprinter(Logic logic, const Word& w, TypeTable& table, TypeOptions options)
      : logic_(logic), w_(w), table_(table), options_(options) {
    if (logic == Logic::MSO && w.size() > 20) throw BudgetExceeded("MSO types enumerate all subsets; word too long");
  }

  std::uint32_t type(std::uint32_t k, std::vector<std::uint64_t>& sets, std::vector<std::size_t>& points) {
    if (k == 0) {
      if (++leaves_ > options_.leaf_budget) throw BudgetExceeded("type fingerprint leaf budget exceeded");
      return table_.intern(atomic_diagram(w_, sets, points));
    }
    std::set<std::uint32_t> children;
    auto n = w_.size();
    for (std::size_t p = 1; p <= n; ++p) {
      points.push_back(p);
      children.insert(type(k - 1, sets, points));
      points.pop_back();
    }
    if (logic_ == Logic::MSO)
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        sets.push_back(m);
        children.insert(type(k - 1, sets, points));
        sets.pop_back();
      }
    std::string key = (logic_ == Logic::FO ? "F" : "M") + std::to_string(k) + "/" + std::to_string(sets.size()) + "," +
                      std::to_string(points.size()) + "{";
    for (auto c : children) key += std::to_string(c) + ",";
    key += "}";
    return table_.intern(key);
  }

 private:
  Logic logic_;
  const Word& w_;
  TypeTable& table_;
  TypeOptions options_;
  std::uint64_t leaves_ = 0;
};

}  // namespace detail

inline TypeFingerprint qr_type(Logic logic, std::uint32_t k, const Interpretation& I,
                               TypeTable& table = default_type_table(), TypeOptions options = {}) {
  I.validate();
  if (I.word.empty()) throw WordError("interpretations need a nonempty word");
  if (logic == Logic::FO && !I.sets.empty()) throw DomainError("first-order interpretations carry no sets");
  std::vector<std::uint64_t> sets;
  for (const auto& s : I.sets) sets.push_back(s.mask());
  auto points = I.points;
  detail::Fingerprinter fp(logic, I.word, table, options);
  return {logic, k, fp.type(k, sets, points)};
}

inline TypeFingerprint qr_type(Logic logic, std::uint32_t k, const Word& w, TypeTable& table = default_type_table(),
                               TypeOptions options = {}) {
  return qr_type(logic, k, Interpretation{w, {}, {}}, table, options);
}

struct TypeCount {
  std::uint64_t types;
  std::size_t saturation_length;  // longest representative needed
  std::map<std::uint32_t, Word> representatives;
};

/// N_L by closure: extend every newly found representative by one letter
/// until a length adds no type. Types are a congruence for concatenation, so
/// the type of w·a depends only on the type of w and every word is reached.
inline TypeCount count_types_detailed(Logic logic, std::uint32_t k, TypeTable& table = default_type_table(),
                                      TypeOptions options = {}) {
  TypeCount out{0, 0, {}};
  std::vector<Word> frontier{Word{Letter::L}, Word{Letter::R}};
  std::size_t length = 1;
  while (!frontier.empty()) {
    std::vector<Word> fresh;
    for (const auto& w : frontier) {
      auto t = qr_type(logic, k, w, table, options);
      if (out.representatives.emplace(t.id, w).second) fresh.push_back(w);
    }
    if (!fresh.empty()) out.saturation_length = length;
    frontier.clear();
    for (const auto& w : fresh)
      for (auto a : {Letter::L, Letter::R}) {
        auto v = w;
        v.push_back(a);
        frontier.push_back(std::move(v));
      }
    ++length;
  }
  out.types = out.representatives.size();
  return out;
}

inline std::uint64_t count_types(Logic logic, std::uint32_t k, TypeTable& table = default_type_table(),
                                 TypeOptions options = {}) {
  return count_types_detailed(logic, k, table, options).types;
}

/// Number of distinct types among all words of length 1..max_length.
inline std::uint64_t count_types_exhaustive(Logic logic, std::uint32_t k, std::size_t max_length,
                                            TypeTable& table = default_type_table(), TypeOptions options = {}) {
  std::set<std::uint32_t> seen;
  for (std::size_t n = 1; n <= max_length; ++n)
    for (const auto& w : all_words(n)) seen.insert(qr_type(logic, k, w, table, options).id);
  return seen.size();
}

/// Distinct rank-0 types of (r, s)-interpretations on words of length up to
/// the cap. Only the membership of the points matters at rank 0, so the sets
/// are enumerated restricted to the point positions.
inline std::uint64_t count_qf_interpretation_types(std::size_t r, std::size_t s, std::size_t cap) {
  if (r + s > 4 || cap > 6) throw DomainError("count_qf_interpretation_types needs r+s <= 4 and cap <= 6");
  std::set<std::string> seen;
  for (std::size_t n = 1; n <= cap; ++n)
    for (const auto& w : all_words(n)) {
      std::vector<std::size_t> points(s, 1);
      while (true) {
        std::uint64_t support = 0;
        for (auto p : points) support |= std::uint64_t{1} << (p - 1);
        std::vector<std::uint64_t> sets(r, 0);
        // Enumerate each set as a subset of the support.
        std::function<void(std::size_t)> choose = [&](std::size_t idx) {
          if (idx == r) {
            seen.insert(detail::atomic_diagram(w, sets, points));
            return;
          }
          for (std::uint64_t sub = support;; sub = (sub - 1) & support) {
            sets[idx] = sub;
            choose(idx + 1);
            if (sub == 0) break;
          }
        };
        choose(0);
        std::size_t pos = 0;
        while (pos < s && points[pos] == n) points[pos++] = 1;
        if (pos == s) break;
        ++points[pos];
      }
    }
  return seen.size();
}

/// M_0(m) = Σ_{r+s=m} O_0(r, s), each term counted up to the cap.
inline std::uint64_t count_qf_mso_types(std::size_t m, std::size_t cap) {
  std::uint64_t total = 0;
  for (std::size_t r = 0; r <= m; ++r) total += count_qf_interpretation_types(r, m - r, cap);
  return total;
}

}  // namespace succinct
