#pragma once

// Command-line front end. run() parses an argument list, writes to the given
// streams and returns the exit status: 0 success, 1 usage or input error,
// 2 budget exceeded, 3 verification failure.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "succinct/bounds.hpp"
#include "succinct/compile.hpp"
#include "succinct/constants.hpp"
#include "succinct/crosscheck.hpp"
#include "succinct/evaluate.hpp"
#include "succinct/fo_generators.hpp"
#include "succinct/formula_io.hpp"
#include "succinct/fragment.hpp"
#include "succinct/mso_generators.hpp"
#include "succinct/random.hpp"
#include "succinct/set_oracle.hpp"
#include "succinct/types.hpp"

namespace succinct::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitVerify = 3;

namespace detail {

using json = nlohmann::ordered_json;

struct Globals {
  bool json = false;
  std::uint64_t seed = 1;
  std::size_t state_budget = AutomataOptions{}.state_budget;
  std::uint64_t eval_budget = EvalOptions{}.node_budget;

  AutomataOptions automata() const {
    AutomataOptions o;
    o.state_budget = state_budget;
    return o;
  }
  EvalOptions eval() const {
    EvalOptions o;
    o.node_budget = eval_budget;
    return o;
  }
};

inline std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

inline std::string braces(const Word& w) {
  std::string s = w.str();
  for (auto& c : s) c = c == 'l' ? '{' : '}';
  return s;
}

inline Formula generate(Logic logic, const std::string& family, std::size_t i) {
  if (logic == Logic::FO) return fo::build_fo(fo::parse_family(family), i);
  return mso::build_mso(mso::parse_family(family), i);
}

inline Formula read_formula(const std::string& text, const std::string& file) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw DomainError("cannot open '" + file + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
  }
  if (text.empty()) throw DomainError("give --formula or --file");
  return parse(text);
}

inline std::vector<Formula> read_sentences(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw DomainError("cannot open '" + file + "'");
  std::vector<Formula> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.push_back(parse(line, ParseMode::Sentence));
    } catch (const Error& e) {
      throw DomainError(file + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

inline json report_json(const LanguageReport& r) {
  return {{"empty", r.emptiness}, {"finite", r.finiteness}, {"mu", r.mu}, {"nu", r.nu},
          {"nu_status", to_string(r.nu_status)}};
}

inline void print_report(std::ostream& out, const LanguageReport& r) {
  out << "empty: " << (r.emptiness ? "yes" : "no") << "\n";
  out << "finite: " << (r.finiteness ? "yes" : "no") << "\n";
  out << "mu: " << r.mu << "\n";
  out << "nu: " << r.nu << (r.nu_status == LengthStatus::Infinite ? " (infinite language)" : "") << "\n";
}

// Each command returns its exit status.

inline int cmd_gen(const Globals& g, std::ostream& out, Logic logic, const std::string& family, std::size_t i) {
  auto f = generate(logic, family, i);
  if (g.json) {
    out << json{{"logic", to_string(logic)}, {"family", family}, {"i", i}, {"size", size(f)},
                {"qr", quantifier_rank(f)}, {"formula", print(f)}}.dump()
        << "\n";
  } else {
    out << print(f) << "\n";
  }
  return kExitOk;
}

inline int cmd_size_table(const Globals& g, std::ostream& out, Logic logic, std::size_t max_i, const std::string& family) {
  auto rows = logic == Logic::FO ? fo::size_table_fo(max_i) : mso::size_table_mso(max_i);
  std::erase_if(rows, [&](const SizeRow& r) { return !family.empty() && r.name != family; });
  if (g.json) {
    auto arr = json::array();
    for (const auto& r : rows) arr.push_back(json{{"i", r.i}, {"family", r.name}, {"size", r.size}, {"qr", r.qr}});
    out << json{{"logic", to_string(logic)}, {"rows", arr}}.dump() << "\n";
    return kExitOk;
  }
  out << std::left << std::setw(4) << "i" << std::setw(14) << "family" << std::setw(14) << "size" << "qr\n";
  for (const auto& r : rows)
    out << std::setw(4) << r.i << std::setw(14) << r.name << std::setw(14) << r.size << r.qr << "\n";
  return kExitOk;
}

inline int cmd_compile(const Globals& g, std::ostream& out, const Formula& f, bool dot) {
  auto d = compile(f, f.free_variables(), g.automata());
  if (dot) {
    to_dot(out, d);
    return kExitOk;
  }
  if (g.json) {
    auto j = to_json(d);
    if (f.is_sentence()) j["report"] = report_json(analyze(d));
    out << j.dump() << "\n";
    return kExitOk;
  }
  out << "states: " << d.num_states() << "\n";
  out << "tracks:";
  for (Var x : d.tracks()) out << " " << x.name();
  out << (d.tracks().empty() ? " none\n" : "\n");
  if (f.is_sentence()) print_report(out, analyze(d));
  return kExitOk;
}

inline int cmd_analyze(const Globals& g, std::ostream& out, const Formula& f) {
  if (!f.is_sentence()) throw ContextError("analyze needs a sentence");
  auto d = compile(f, {}, g.automata());
  auto r = analyze(d);
  auto single = is_singleton(d);
  if (g.json) {
    auto j = report_json(r);
    j["states"] = d.num_states();
    j["defines"] = single ? json(single->str()) : json(nullptr);
    out << j.dump() << "\n";
    return kExitOk;
  }
  out << "states: " << d.num_states() << "\n";
  print_report(out, r);
  if (single) out << "defines: " << single->str() << "\n";
  return kExitOk;
}

inline int cmd_check_defines(const Globals& g, std::ostream& out, Logic logic, const std::string& family,
                             std::size_t i) {
  auto f = generate(logic, family, i);
  auto d = compile(f, {}, g.automata());
  auto single = is_singleton(d);
  std::optional<Word> expected;
  if (family == "psi") expected = logic == Logic::FO ? encode_fo(i) : encode_mso(i);
  if (single) {
    bool match = !expected || *single == *expected;
    if (g.json) {
      json j{{"defines", single->str()}, {"length", single->size()}};
      if (expected) j["matches_oracle"] = match;
      out << j.dump() << "\n";
    } else {
      out << "defines: " << single->str() << " (length " << single->size() << ")\n";
      if (!match) out << "oracle expects: " << expected->str() << "\n";
    }
    return match ? kExitOk : kExitVerify;
  }
  auto words = shortest_words(d, 2);
  if (g.json) {
    auto arr = json::array();
    for (const auto& w : words) arr.push_back(w.str());
    out << json{{"defines", nullptr}, {"accepted", arr}, {"infinite", !analyze(d).finiteness}}.dump() << "\n";
  } else if (words.empty()) {
    out << "defines nothing: the language is empty\n";
  } else {
    out << "not a singleton: accepts " << words[0].str();
    if (words.size() > 1) out << " and " << words[1].str();
    out << "\n";
  }
  return kExitVerify;
}

inline int cmd_encode(const Globals& g, std::ostream& out, Logic logic, std::size_t i, bool all, bool pretty) {
  std::vector<Word> words;
  if (all) words = enumerate_encodings(i);
  else words.push_back(logic == Logic::FO ? encode_fo(i) : encode_mso(i));
  if (g.json) {
    auto arr = json::array();
    for (const auto& w : words) arr.push_back(pretty ? braces(w) : w.str());
    out << json{{"logic", to_string(logic)}, {"i", i}, {"length", words.front().size()}, {"encodings", arr}}.dump()
        << "\n";
    return kExitOk;
  }
  for (const auto& w : words) out << (pretty ? braces(w) : w.str()) << "\n";
  if (!all) out << "length: " << words.front().size() << "\n";
  else out << "count: " << words.size() << "\n";
  return kExitOk;
}

inline int cmd_crosscheck(const Globals& g, std::ostream& out, Logic logic, std::size_t i) {
  auto r = logic == Logic::FO ? crosscheck_fo(i, g.eval()) : crosscheck_mso(i, g.eval());
  if (g.json) {
    out << to_json(r).dump() << "\n";
  } else {
    out << r.logic << " level " << r.i << " on " << r.word.str() << ": " << r.checks << " checks, "
        << r.disagreements.size() << " disagreements\n";
    for (const auto& d : r.disagreements) {
      out << "  " << d.relation << "_" << d.level;
      for (auto [a, b] : d.spans) out << " [" << a << "," << b << "]";
      out << ": formula " << d.formula << ", oracle " << d.oracle << "\n";
    }
  }
  return r.ok() ? kExitOk : kExitVerify;
}

inline std::string upper_types_expr(Logic logic, std::uint64_t k) {
  auto inner = logic == Logic::FO ? k * k + k : (k + 1) * (k + 1);
  return "twr(" + std::to_string(k) + " + log*(" + std::to_string(inner) + ") + 1)";
}

inline int cmd_types(const Globals& g, std::ostream& out, Logic logic, std::uint32_t k, std::size_t exhaustive,
                     std::uint64_t leaf_budget) {
  TypeTable table;
  TypeOptions opts;
  opts.leaf_budget = leaf_budget;
  auto count = count_types_detailed(logic, k, table, opts);
  auto bound = upper_bound_types(logic, k);
  bool within = bound.admits(count.types);
  std::optional<std::uint64_t> exh;
  if (exhaustive > 0) exh = count_types_exhaustive(logic, k, exhaustive, table, opts);
  bool agree = !exh || *exh == count.types;
  if (g.json) {
    json j{{"logic", to_string(logic)}, {"k", k}, {"types", count.types},
           {"saturation_length", count.saturation_length}, {"bound", bound.str()}, {"within_bound", within}};
    if (exh) j["exhaustive"] = {{"max_length", exhaustive}, {"types", *exh}};
    out << j.dump() << "\n";
  } else {
    out << "N_" << to_string(logic) << "_" << k << " = " << count.types << " (saturated at length "
        << count.saturation_length << ")\n";
    out << "bound: " << upper_types_expr(logic, k) << " = " << bound.str() << "\n";
    if (exh) out << "exhaustive up to length " << exhaustive << ": " << *exh << "\n";
  }
  return within && agree ? kExitOk : kExitVerify;
}

inline int cmd_numbers(const Globals& g, std::ostream& out, const std::string& file, std::size_t random_count,
                       RandomFormulaOptions ropts) {
  std::vector<Formula> sentences;
  if (!file.empty()) {
    sentences = read_sentences(file);
  } else if (random_count > 0) {
    RandomFormulas gen(g.seed, ropts);
    for (std::size_t k = 0; k < random_count; ++k) sentences.push_back(gen.sentence());
  } else {
    throw DomainError("give a formula file or --random COUNT");
  }
  auto r = fragment_numbers(sentences, g.automata());
  if (g.json) {
    out << to_json(r, sentences).dump() << "\n";
  } else {
    std::size_t done = 0;
    for (const auto& it : r.items) done += it.completed;
    out << "sentences: " << sentences.size() << " (" << done << " compiled)\n";
    auto line = [&](const char* name, std::uint64_t v, const std::optional<std::size_t>& w) {
      out << name << " = " << v;
      if (w) out << "  witness #" << *w << ": " << print(sentences[*w]);
      out << "\n";
    };
    if (r.def_empty) out << "DN = 0  no sentence defines a single word\n";
    else line("DN", r.dn, r.dn_witness);
    line("LS", r.ls, r.ls_witness);
    line("H", r.h, r.h_witness);
    for (const auto& it : r.items)
      if (!it.completed) out << "#" << it.index << " skipped: " << it.error << "\n";
  }
  return r.partial ? kExitBudget : kExitOk;
}

inline int cmd_bounds(const Globals& g, std::ostream& out, Logic logic, std::uint64_t n) {
  struct Lower {
    const char* what;
    SizeConstant c;
  };
  std::vector<Lower> lowers;
  if (logic == Logic::FO) lowers = {{"DN", kFoConstant}, {"LS", kFoNoOrderConstant}};
  else lowers = {{"DN", kMsoConstant}};
  auto h = n / 2;
  auto inner = logic == Logic::FO ? h * h + h : (h + 1) * (h + 1);
  auto upper = upper_bound_size(logic, n);
  std::string upper_expr = "twr(" + (n % 2 ? fixed(n / 2.0, 1) : std::to_string(h)) + " + log*(" +
                           (n % 2 ? fixed(logic == Logic::FO ? n / 2.0 * (n / 2.0 + 1) : (n / 2.0 + 1) * (n / 2.0 + 1), 2)
                                  : std::to_string(inner)) +
                           ") + 1)";
  if (g.json) {
    auto arr = json::array();
    for (const auto& l : lowers) {
      double arg = std::pow(static_cast<double>(n) / l.c.value(), 1.0 / l.c.degree);
      arr.push_back(json{{"number", l.what}, {"c", l.c.value()}, {"degree", l.c.degree}, {"argument", arg},
                     {"value", lower_bound_size(n, l.c.value(), l.c.degree).str()}});
    }
    out << json{{"logic", to_string(logic)}, {"n", n}, {"lower", arr}, {"upper", upper.str()}}.dump() << "\n";
    return kExitOk;
  }
  for (const auto& l : lowers) {
    double c = l.c.value();
    double arg = std::pow(static_cast<double>(n) / c, 1.0 / l.c.degree);
    out << "lower " << l.what << ": twr((" << n << "/" << fixed(c, 3) << ")^(1/" << l.c.degree << ")) = twr("
        << fixed(arg, 3) << ") = " << lower_bound_size(n, c, l.c.degree).str() << "\n";
  }
  out << "upper DN, LS, H: " << upper_expr << " = " << upper.str() << "\n";
  return kExitOk;
}

inline int cmd_eval(const Globals& g, std::ostream& out, const Formula& f, const std::string& text) {
  if (!f.is_sentence()) throw ContextError("eval needs a sentence");
  auto w = word_from_text(text);
  bool v = evaluate(w, f, {}, g.eval());
  if (g.json) out << json{{"word", w.str()}, {"value", v}}.dump() << "\n";
  else out << (v ? "true" : "false") << "\n";
  return kExitOk;
}

}  // namespace detail

/// Runs one command. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace detail;
  CLI::App app{"Succinctness experiments for FO and MSO over words", "succinct"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Emit JSON");
  app.add_option("--seed", g.seed, "Seed for randomized commands");
  app.add_option("--state-budget", g.state_budget, "Largest automaton allowed");
  app.add_option("--eval-budget", g.eval_budget, "Evaluator node budget");

  std::string logic_s = "fo", family = "psi", formula_text, file, word_text;
  std::size_t level = 0, max_i = 5, exhaustive = 0, random_count = 0;
  std::uint64_t n = 100, leaf_budget = TypeOptions{}.leaf_budget;
  std::uint32_t k = 1;
  bool dot = false, all = false, pretty = false, second_order = false;
  RandomFormulaOptions ropts;
  auto logic_opt = [&](CLI::App* sub) {
    sub->add_option("--logic", logic_s, "fo or mso")->check(CLI::IsMember({"fo", "mso"}));
  };
  auto formula_opts = [&](CLI::App* sub) {
    sub->add_option("--formula", formula_text, "Formula text");
    sub->add_option("--file", file, "File holding one formula");
  };

  auto* gen = app.add_subcommand("gen", "Print a generated formula");
  logic_opt(gen);
  gen->add_option("--family", family, "Formula family");
  gen->add_option("--i", level, "Level")->required();
  gen->footer("Example: succinct gen --logic fo --family psi --i 0");

  auto* table = app.add_subcommand("size-table", "Sizes and quantifier ranks of the generator families");
  logic_opt(table);
  table->add_option("--max-i", max_i, "Largest level");
  table->add_option("--family", family, "Only this family")->default_str("");
  table->footer("Example: succinct size-table --logic mso --max-i 2 --family psi");

  auto* comp = app.add_subcommand("compile", "Compile a formula to its minimal automaton");
  formula_opts(comp);
  comp->add_flag("--dot", dot, "Print Graphviz DOT");
  comp->footer("Example: succinct compile --formula '(exists1 x (and (letter-l x) (forall1 y (not (lt y x)))))'");

  auto* check = app.add_subcommand("check-defines", "Check that a generated sentence defines exactly one word");
  logic_opt(check);
  check->add_option("--family", family, "psi, or psi_no_order for fo");
  check->add_option("--i", level, "Level")->required();
  check->footer("Example: succinct check-defines --logic fo --i 1");

  auto* an = app.add_subcommand("analyze", "Emptiness, finiteness and model lengths of a sentence");
  formula_opts(an);
  an->footer("Example: succinct analyze --formula '(forall1 x (letter-r x))'");

  auto* enc = app.add_subcommand("encode", "Print the set encoding of a cumulative level");
  logic_opt(enc);
  enc->add_option("--i", level, "Level")->required();
  enc->add_flag("--all", all, "Every encoding (i <= 2)");
  enc->add_flag("--braces", pretty, "Print with { and }");
  enc->footer("Example: succinct encode --logic fo --i 2 --braces");

  auto* cross = app.add_subcommand("crosscheck", "Compare generator formulas with the set oracle on the encoding");
  logic_opt(cross);
  cross->add_option("--i", level, "Level")->required();
  cross->footer("Example: succinct crosscheck --logic mso --i 1");

  auto* ty = app.add_subcommand("types", "Count quantifier-rank types and compare with the upper bound");
  logic_opt(ty);
  ty->add_option("--k", k, "Quantifier rank")->required();
  ty->add_option("--exhaustive", exhaustive, "Also fingerprint every word up to this length");
  ty->add_option("--leaf-budget", leaf_budget, "Atomic diagrams allowed per word");
  ty->footer("Example: succinct types --logic fo --k 1 --exhaustive 6");

  auto* num = app.add_subcommand("numbers", "DN, LS and H of a list of sentences");
  num->add_option("file", file, "One sentence per line; '#' starts a comment");
  num->add_option("--random", random_count, "Use this many seeded random sentences");
  num->add_option("--max-size", ropts.max_size, "Size cap for random sentences");
  num->add_option("--max-qr", ropts.max_qr, "Quantifier rank cap for random sentences");
  num->add_flag("--mso", second_order, "Random sentences may quantify sets");
  num->footer("Example: succinct numbers --random 8 --seed 7");

  auto* bo = app.add_subcommand("bounds", "Lower and upper bounds for formulas of size n");
  logic_opt(bo);
  bo->add_option("--n", n, "Formula size")->required();
  bo->footer("Example: succinct bounds --logic mso --n 100");

  auto* ev = app.add_subcommand("eval", "Evaluate a sentence on a word");
  formula_opts(ev);
  ev->add_option("--word", word_text, "Word over l, r")->required();
  ev->footer("Example: succinct eval --formula '(exists1 x (letter-l x))' --word rrl");

  std::vector<std::string> argv_store{"succinct"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    auto logic = parse_logic(logic_s);
    ropts.second_order = second_order;
    if (*gen) return cmd_gen(g, out, logic, family, level);
    if (*table) return cmd_size_table(g, out, logic, max_i, table->count("--family") ? family : "");
    if (*comp) return cmd_compile(g, out, read_formula(formula_text, file), dot);
    if (*check) return cmd_check_defines(g, out, logic, family, level);
    if (*an) return cmd_analyze(g, out, read_formula(formula_text, file));
    if (*enc) return cmd_encode(g, out, logic, level, all, pretty);
    if (*cross) return cmd_crosscheck(g, out, logic, level);
    if (*ty) return cmd_types(g, out, logic, k, exhaustive, leaf_budget);
    if (*num) return cmd_numbers(g, out, file, random_count, ropts);
    if (*bo) return cmd_bounds(g, out, logic, n);
    if (*ev) return cmd_eval(g, out, read_formula(formula_text, file), word_text);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace succinct::cli
