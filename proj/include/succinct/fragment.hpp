#pragma once

// Definability, Löwenheim-Skolem and Hanf numbers of an explicit finite list
// of sentences, computed from their minimal automata.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "succinct/compile.hpp"
#include "succinct/formula_io.hpp"

namespace succinct {

struct SentenceResult {
  std::size_t index;
  bool completed = false;
  std::string error;  // set when compilation hit a budget
  LanguageReport report;
  std::optional<Word> defines;
};

struct FragmentReport {
  std::uint64_t dn = 0, ls = 0, h = 0;
  bool def_empty = true;  // no sentence in the list defines a single word
  bool partial = false;   // some sentence could not be compiled
  std::optional<std::size_t> dn_witness, ls_witness, h_witness;
  std::vector<SentenceResult> items;
};

inline FragmentReport fragment_numbers(const std::vector<Formula>& sentences, AutomataOptions options = {}) {
  FragmentReport out;
  for (std::size_t k = 0; k < sentences.size(); ++k) {
    const auto& f = sentences[k];
    if (!f.is_sentence()) throw ContextError("item " + std::to_string(k) + " is not a sentence");
    SentenceResult item{k};
    try {
      auto d = compile(f, {}, options);
      item.report = analyze(d);
      item.defines = is_singleton(d);
      item.completed = true;
    } catch (const BudgetExceeded& e) {
      item.error = e.what();
      out.partial = true;
      out.items.push_back(std::move(item));
      continue;
    }
    const auto& r = item.report;
    if (!out.ls_witness || r.mu > out.ls) {
      out.ls = r.mu;
      out.ls_witness = k;
    }
    if (!out.h_witness || r.nu > out.h) {
      out.h = r.nu;
      out.h_witness = k;
    }
    if (item.defines && (out.def_empty || item.defines->size() > out.dn)) {
      out.dn = item.defines->size();
      out.dn_witness = k;
      out.def_empty = false;
    }
    out.items.push_back(std::move(item));
  }
  return out;
}

inline nlohmann::ordered_json to_json(const FragmentReport& r, const std::vector<Formula>& sentences) {
  nlohmann::ordered_json j;
  j["dn"] = r.dn;
  j["ls"] = r.ls;
  j["h"] = r.h;
  j["def_empty"] = r.def_empty;
  j["partial"] = r.partial;
  auto witness = [&](const std::optional<std::size_t>& w) -> nlohmann::ordered_json {
    if (!w) return nullptr;
    return {{"index", *w}, {"formula", print(sentences[*w])}};
  };
  j["witnesses"] = {{"dn", witness(r.dn_witness)}, {"ls", witness(r.ls_witness)}, {"h", witness(r.h_witness)}};
  auto& items = j["items"] = nlohmann::ordered_json::array();
  for (const auto& it : r.items) {
    nlohmann::ordered_json e{{"index", it.index}, {"completed", it.completed}};
    if (it.completed) {
      e["mu"] = it.report.mu;
      e["nu"] = it.report.nu;
      e["infinite"] = !it.report.finiteness;
      e["defines"] = it.defines ? nlohmann::ordered_json(it.defines->str()) : nlohmann::ordered_json(nullptr);
    } else {
      e["error"] = it.error;
    }
    items.push_back(std::move(e));
  }
  return j;
}

}  // namespace succinct
