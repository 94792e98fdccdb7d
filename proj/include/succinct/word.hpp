#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "succinct/error.hpp"

namespace succinct {

enum class Letter : std::uint8_t { L = 0, R = 1 };

inline char to_char(Letter a) { return a == Letter::L ? 'l' : 'r'; }

/// A word over {l, r}. Positions are 1-based when used as a model.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  /// Letter at 1-based position p.
  Letter at(std::size_t p) const { return letters_.at(p - 1); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  void push_back(Letter a) { letters_.push_back(a); }
  Word concat(const Word& other) const {
    Word out = *this;
    out.letters_.insert(out.letters_.end(), other.letters_.begin(), other.letters_.end());
    return out;
  }

  std::string str() const {
    std::string s;
    s.reserve(letters_.size());
    for (auto a : letters_) s.push_back(to_char(a));
    return s;
  }

  /// Shortlex order with l < r.
  friend bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.letters_ < b.letters_;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }
  friend std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

 private:
  std::vector<Letter> letters_;
};

/// Parses a string over [lr]+.
inline Word word_from_text(std::string_view text) {
  if (text.empty()) throw WordError("empty word");
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == 'l')
      letters.push_back(Letter::L);
    else if (text[i] == 'r')
      letters.push_back(Letter::R);
    else
      throw WordError(std::string("bad character '") + text[i] + "' at position " + std::to_string(i));
  }
  return Word(std::move(letters));
}

/// All words of exactly the given length, in lexicographic order (l < r).
inline std::vector<Word> all_words(std::size_t length) {
  std::vector<Word> out;
  if (length >= 63) throw DomainError("word length too large to enumerate");
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << length); ++bits) {
    std::vector<Letter> letters(length);
    for (std::size_t i = 0; i < length; ++i)
      letters[i] = ((bits >> (length - 1 - i)) & 1) ? Letter::R : Letter::L;
    out.emplace_back(std::move(letters));
  }
  return out;
}

/// A set of 1-based positions of a word of length at most 64.
class PositionSet {
 public:
  PositionSet() = default;
  explicit PositionSet(std::uint64_t mask) : mask_(mask) {}
  PositionSet(std::initializer_list<std::size_t> positions) {
    for (auto p : positions) insert(p);
  }

  void insert(std::size_t p) {
    if (p == 0 || p > 64) throw DomainError("position out of range for a position set");
    mask_ |= std::uint64_t{1} << (p - 1);
  }
  void erase(std::size_t p) { mask_ &= ~(std::uint64_t{1} << (p - 1)); }
  bool contains(std::size_t p) const { return p >= 1 && p <= 64 && ((mask_ >> (p - 1)) & 1); }
  std::uint64_t mask() const noexcept { return mask_; }

  friend bool operator==(const PositionSet&, const PositionSet&) = default;

 private:
  std::uint64_t mask_ = 0;
};

/// An (r, s)-interpretation: a word with r set parameters and s point
/// parameters.
struct Interpretation {
  Word word;
  std::vector<PositionSet> sets;
  std::vector<std::size_t> points;

  void validate() const {
    for (auto p : points)
      if (p < 1 || p > word.size()) throw DomainError("point parameter outside the word");
    if (!sets.empty() && word.size() > 64) throw DomainError("set parameters need words of length at most 64");
    std::uint64_t allowed = word.size() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << word.size()) - 1;
    for (const auto& s : sets)
      if (s.mask() & ~allowed) throw DomainError("set parameter contains a position outside the word");
  }
};

}  // namespace succinct
