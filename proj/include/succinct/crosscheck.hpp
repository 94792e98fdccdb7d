#pragma once

// Semantic validation of the generated subformulas: each relation is
// evaluated on the oracle word at every tuple of brace spans and compared
// with the set-theoretic relation the oracle computes directly.

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "succinct/evaluate.hpp"
#include "succinct/fo_generators.hpp"
#include "succinct/mso_generators.hpp"
#include "succinct/set_oracle.hpp"

namespace succinct {

struct Disagreement {
  std::string relation;
  std::size_t level;
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  bool formula;
  bool oracle;
};

struct CrosscheckReport {
  std::string logic;
  std::size_t i;
  Word word;
  std::size_t checks = 0;
  std::vector<Disagreement> disagreements;

  bool ok() const { return disagreements.empty(); }
};

inline nlohmann::ordered_json to_json(const CrosscheckReport& r) {
  nlohmann::ordered_json j;
  j["logic"] = r.logic;
  j["i"] = r.i;
  j["word"] = r.word.str();
  j["checks"] = r.checks;
  auto& list = j["disagreements"] = nlohmann::ordered_json::array();
  for (const auto& d : r.disagreements) {
    nlohmann::ordered_json spans = nlohmann::ordered_json::array();
    for (auto [a, b] : d.spans) spans.push_back({a, b});
    list.push_back({{"relation", d.relation}, {"level", d.level}, {"spans", spans}, {"formula", d.formula}, {"oracle", d.oracle}});
  }
  return j;
}

namespace detail {

class SpanChecker {
 public:
  SpanChecker(CrosscheckReport& report, const BraceWord& parsed, Evaluator& ev, Assignment base)
      : report_(report), parsed_(parsed), ev_(ev), base_(std::move(base)) {}

  void check(const std::string& relation, std::size_t level, const Formula& f, std::vector<std::size_t> spans,
             bool oracle) {
    static const char* letters[] = {"x", "y", "z"};
    Assignment env = base_;
    std::vector<std::pair<std::size_t, std::size_t>> where;
    for (std::size_t k = 0; k < spans.size(); ++k) {
      auto s = parsed_.span(spans[k]);
      env.bind(fo::pair(letters[k]), s);
      where.push_back(s);
    }
    bool got = ev_.evaluate(f, env);
    ++report_.checks;
    if (got != oracle) report_.disagreements.push_back({relation, level, std::move(where), got, oracle});
  }

 private:
  CrosscheckReport& report_;
  const BraceWord& parsed_;
  Evaluator& ev_;
  Assignment base_;
};

inline bool is_child(const BraceWord& p, std::size_t child, std::size_t parent) {
  return p.spans[child].parent == static_cast<int>(parent);
}

inline bool adds(const HFSet& x, const HFSet& y, const HFSet& z) { return x == insert(y, z); }

}  // namespace detail

/// Checks set_j, ∈_j, ∼_j, ≺_j and add_j for every j ≤ i on encode_fo(i). Arguments are restricted to spans whose
/// rank meets each formula's assumption.
inline CrosscheckReport crosscheck_fo(std::size_t i, EvalOptions options = {}) {
  if (i > 3) throw DomainError("crosscheck_fo supports i <= 3");
  CrosscheckReport report{"fo", i, encode_fo(i)};
  auto parsed = parse_braces(report.word);
  auto n = parsed.spans.size();
  std::vector<std::size_t> rank(n);
  for (std::size_t k = 0; k < n; ++k) rank[k] = parsed.spans[k].value.rank();
  const auto& val = [&](std::size_t k) -> const HFSet& { return parsed.spans[k].value; };
  fo::Builder b;
  Evaluator ev(report.word, options);
  detail::SpanChecker chk(report, parsed, ev, {});
  auto x = fo::pair("x"), y = fo::pair("y"), z = fo::pair("z");
  for (std::size_t j = 0; j <= i; ++j) {
    auto set = b.set(j, x), elem = b.elem(j, x, y), sim = b.sim(j, x, y), prec = b.prec(j, x, y);
    for (std::size_t p = 0; p < n; ++p) {
      chk.check("set", j, set, {p}, rank[p] <= j);
      for (std::size_t q = 0; q < n; ++q) {
        if (rank[p] <= j && rank[q] <= j + 1) chk.check("elem", j, elem, {p, q}, detail::is_child(parsed, p, q));
        if (rank[p] <= j && rank[q] <= j) {
          chk.check("sim", j, sim, {p, q}, val(p) == val(q));
          chk.check("prec", j, prec, {p, q}, HFSet::compare(val(p), val(q)) < 0);
        }
      }
    }
    if (j == 0) continue;
    auto add = b.add(j, x, y, z);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t r = 0; r < n; ++r)
          if (rank[p] <= j && rank[q] <= j && rank[r] + 1 <= j)
            chk.check("add", j, add, {p, q, r}, detail::adds(val(p), val(q), val(r)));
  }
  chk.check("vlevel", i, b.vlevel(i, x), {0}, true);
  return report;
}

/// Checks levels_i, set_j, ∈, ∼_j, add_j and V_i on encode_mso(i) under the
/// parent-minus-one level partition.
inline CrosscheckReport crosscheck_mso(std::size_t i, EvalOptions options = {}) {
  if (i > 2) throw DomainError("crosscheck_mso supports i <= 2");
  CrosscheckReport report{"mso", i, encode_mso(i)};
  auto parsed = parse_braces(report.word);
  auto n = parsed.spans.size();
  auto levels = levels_of(report.word);
  std::vector<PositionSet> D(i + 1);
  for (auto [pos, lvl] : levels) D[lvl].insert(pos);
  Assignment base;
  for (std::size_t j = 0; j <= i; ++j) base.bind(mso::level_var(j), D[j]);
  std::vector<std::size_t> level(n);
  for (std::size_t k = 0; k < n; ++k) level[k] = levels.at(parsed.spans[k].open);
  const auto& val = [&](std::size_t k) -> const HFSet& { return parsed.spans[k].value; };
  mso::Builder b;
  Evaluator ev(report.word, options);
  detail::SpanChecker chk(report, parsed, ev, base);
  auto x = fo::pair("x"), y = fo::pair("y"), z = fo::pair("z");
  chk.check("levels", i, b.levels(i), {}, true);
  auto elem = b.elem(x, y);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (level[p] + 1 == level[q]) chk.check("elem", level[p], elem, {p, q}, detail::is_child(parsed, p, q));
  for (std::size_t j = 0; j <= i; ++j) {
    auto set = b.set(j, x), sim = b.sim(j, x, y);
    for (std::size_t p = 0; p < n; ++p) {
      chk.check("set", j, set, {p}, level[p] == j);
      for (std::size_t q = 0; q < n; ++q)
        if (level[p] == j && level[q] == j) chk.check("sim", j, sim, {p, q}, val(p) == val(q));
    }
    if (j == 0) continue;
    auto add = b.add(j, x, y, z);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t r = 0; r < n; ++r)
          if (level[p] == j && level[q] == j && level[r] + 1 == j)
            chk.check("add", j, add, {p, q, r}, detail::adds(val(p), val(q), val(r)));
  }
  chk.check("vlevel", i, b.vlevel(i, x), {0}, true);
  return report;
}

}  // namespace succinct
