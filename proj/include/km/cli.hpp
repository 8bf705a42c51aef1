#pragma once

// `km` command-line front end. `run` is the whole program minus `main`, so
// tests drive it in-process with string streams.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "km/analysis.hpp"
#include "km/io.hpp"
#include "km/report.hpp"

namespace km::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kInternal = 1, kInput = 2, kBudget = 3 };

using report::Json;

/// Parses "1,3" (1-based) into 0-based indices. Empty string or "{}" is empty.
inline std::vector<int> parse_index_list(const std::string& text, int rank) {
  std::vector<int> out;
  std::string s = text;
  if (s == "{}" || s == "-") s.clear();
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) throw Error(Errc::ParseError, "empty entry in index list '" + text + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw Error(Errc::ParseError, "not an index: '" + tok + "'");
    if (v < 1 || v > rank)
      throw Error(Errc::IndexOutOfRange, "IndexOutOfRange(" + std::to_string(v) + ")",
                  "index out of range 1.." + std::to_string(rank));
    out.push_back(v - 1);
  }
  return out;
}

inline Subset parse_set(const std::string& text, int rank) { return Subset::of(parse_index_list(text, rank)); }

namespace detail {

struct Options {
  std::string file;
  std::string format = "json";
  std::size_t budget = Budget{}.max_elements;
  std::string set;
  bool has_set = false;
  std::string word;
  std::string from;
  std::string to;
  std::uint64_t q = 0;
  int n = 10;
  std::int64_t max_height = 11;
  std::size_t max_len = 2;
  std::size_t depth = 2;
};

inline Json envelope(const std::string& command, const CartanMatrix& a, Json parameters, Json payload,
                     std::optional<Json> bounds = std::nullopt, Json warnings = Json::array()) {
  Json out;
  out["tool"] = "km";
  out["version"] = kVersion;
  out["command"] = command;
  out["input"] = io::to_json(a);
  out["parameters"] = std::move(parameters);
  if (bounds) out["bounds"] = std::move(*bounds);
  out["payload"] = std::move(payload);
  out["warnings"] = std::move(warnings);
  return out;
}

inline Json budget_param(const Options& o) { return Json{{"budget", o.budget}}; }

inline Json run_command(const std::string& command, const Options& o, const CartanMatrix& a, std::ostream& out) {
  const Budget budget{o.budget};
  const CoxeterDiagram d = coxeter_matrix(a);

  if (command == "validate")
    return envelope(command, a, Json::object(), Json{{"valid", true}, {"rank", a.rank()}});
  if (command == "classify") return envelope(command, a, Json::object(), report::classify_json(a));
  if (command == "coxeter") return envelope(command, a, Json::object(), report::coxeter_json(d));
  if (command == "decompose") {
    const Subset j = parse_set(o.set, a.rank());
    return envelope(command, a, Json{{"set", report::set_json(j)}}, report::decompose_json(d, j));
  }
  if (command == "poset") {
    const EssentialPoset p = essential_poset(a);
    if (o.format == "dot") {
      out << report::poset_dot(a, p);
      return nullptr;
    }
    return envelope(command, a, Json::object(), report::poset_json(p));
  }
  if (command == "nerve") {
    const Nerve n = nerve(d);
    if (o.format == "dot") {
      out << report::nerve_dot(a, n);
      return nullptr;
    }
    return envelope(command, a, Json::object(), report::nerve_json(n));
  }
  if (command == "ends") return envelope(command, a, Json::object(), report::ends_json(ends_verdict(a)));
  if (command == "indec")
    return envelope(command, a, Json{{"q", o.q}}, report::indec_json(indecomposability_verdict(a, o.q)));
  if (command == "report") {
    Json payload{{"classify", report::classify_json(a)},
                 {"ends", report::ends_json(ends_verdict(a))},
                 {"indecomposability", report::indec_json(indecomposability_verdict(a, o.q))},
                 {"structure", report::structure_json(locally_normal_report(a))}};
    return envelope(command, a, Json{{"q", o.q}}, std::move(payload));
  }

  const WeylGroup group(a);
  if (command == "weyl word") {
    const std::vector<int> word = parse_index_list(o.word, a.rank());
    const WeylElement w = group.from_word(word);
    Json payload{{"word", report::word_json(word)},
                 {"canonical_word", report::word_json(group.canonical_word(w))},
                 {"length", group.length(w)},
                 {"support", report::set_json(group.support(w))},
                 {"order", report::element_order_json(group.element_order(w))},
                 {"matrix", report::matrix_json(w.matrix())}};
    return envelope(command, a, Json{{"word", report::word_json(word)}}, std::move(payload));
  }
  if (command == "weyl straight") {
    const std::vector<int> word = parse_index_list(o.word, a.rank());
    const WeylElement w = group.from_word(word);
    Json lengths = Json::array();
    WeylElement p = group.identity();
    for (int k = 1; k <= o.n; ++k) {
      p = p * w;
      lengths.push_back(group.length(p));
    }
    Json payload{{"word", report::word_json(word)},
                 {"length", group.length(w)},
                 {"straight", group.is_straight(w, o.n)},
                 {"power_lengths", std::move(lengths)}};
    return envelope(command, a, Json{{"word", report::word_json(word)}}, std::move(payload), Json{{"N", o.n}},
                    Json::array({"straightness is certified only for powers up to N"}));
  }
  if (command == "roots") {
    const std::vector<RealRoot> roots = enumerate_positive_real_roots(group, o.max_height, budget);
    Json list = Json::array();
    for (const RealRoot& r : roots) list.push_back(report::root_json(group, r));
    Json payload{{"count", roots.size()}, {"roots", std::move(list)}};
    Json params = budget_param(o);
    if (o.has_set) {
      const Subset j = parse_set(o.set, a.rank());
      const RootSplit split = split_by_subset(roots, j);
      params["set"] = report::set_json(j);
      payload["in_set_count"] = split.in_subset.size();
      payload["off_set_count"] = split.off_subset.size();
      Json in = Json::array();
      for (const RealRoot& r : split.in_subset) in.push_back(r.coords());
      payload["in_set"] = std::move(in);
    }
    return envelope(command, a, std::move(params), std::move(payload), Json{{"max_height", o.max_height}},
                    Json::array({"only real roots of height at most max_height are listed"}));
  }
  if (command == "conj") {
    const Subset from = parse_set(o.from, a.rank());
    const Subset to = parse_set(o.to, a.rank());
    const ConjugacyResult res = standard_conjugacy(group, from, to);
    Json chain = Json::array();
    for (const DeodharMove& m : res.chain) chain.push_back(report::move_json(group, m));
    Json payload{{"conjugate", res.conjugate},
                 {"witness", res.conjugate ? report::word_json(group.canonical_word(res.witness)) : Json()},
                 {"chain", std::move(chain)},
                 {"explored", res.explored}};
    Json warnings = Json::array();
    if (!res.conjugate) warnings.push_back("not conjugate relative to exhaustion of the elementary-move graph");
    return envelope(command, a, Json{{"from", report::set_json(from)}, {"to", report::set_json(to)}},
                    std::move(payload), std::nullopt, std::move(warnings));
  }
  if (command == "closure") {
    const std::vector<int> word = parse_index_list(o.word, a.rank());
    const WeylElement w = group.from_word(word);
    const ClosureCertificate c = parabolic_closure_search(group, w, o.depth, budget);
    Json params = budget_param(o);
    params["word"] = report::word_json(word);
    return envelope(command, a, std::move(params), report::closure_json(group, c), Json{{"depth", o.depth}},
                    Json::array({"upper bound for the parabolic closure; minimality beyond the search radius is not claimed"}));
  }
  if (command == "jregular") {
    const Subset j = parse_set(o.set, a.rank());
    const JRegularBounds b{o.max_len, o.n, o.max_height, o.depth};
    const auto cert = find_j_regular(group, j, b, budget);
    Json payload{{"found", cert.has_value()}};
    if (cert) {
      payload["word"] = report::word_json(cert->word);
      payload["order"] = report::element_order_json(cert->order);
      payload["straight"] = cert->straight;
      payload["closure"] = report::closure_json(group, cert->closure);
      payload["roots_checked"] = cert->roots_checked;
      payload["periodic_roots"] = Json::array();
      payload["candidates_examined"] = cert->candidates_examined;
    }
    Json params = budget_param(o);
    params["set"] = report::set_json(j);
    return envelope(command, a, std::move(params), std::move(payload),
                    Json{{"max_len", o.max_len}, {"N", o.n}, {"max_height", o.max_height}, {"depth", o.depth}},
                    Json::array({"J-regularity is certified only up to the stated bounds"}));
  }
  throw Error(Errc::InvalidArgument, "unknown command '" + command + "'");
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorics of complete Kac-Moody groups from a generalised Cartan matrix", "km"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  detail::Options o;
  app.add_option("--budget", o.budget, "element cap for enumerations")->check(CLI::PositiveNumber);

  auto file_arg = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("file", o.file, "GCM file (JSON or plain text)")->required();
    return sub;
  };
  auto format_opt = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "dot"}));
  };

  std::vector<std::pair<std::string, CLI::App*>> commands;
  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = file_arg(app.add_subcommand(name, help));
    commands.emplace_back(name, sub);
    return sub;
  };
  add("validate", "check the GCM axioms");
  add("classify", "finite/affine/indefinite type per component, M_A, 2-sphericity");
  add("coxeter", "Coxeter matrix and diagrams");
  add("decompose", "spherical/essential parts and perp of a subset")->add_option("--set", o.set)->required();
  format_opt(add("poset", "essential-subset poset"));
  format_opt(add("nerve", "nerve of the Coxeter system"));
  add("ends", "one-endedness verdict");
  add("indec", "local indecomposability verdict")->add_option("--q", o.q, "field size")->required();
  add("report", "full structure report")->add_option("--q", o.q, "field size")->required();

  CLI::App* weyl = app.add_subcommand("weyl", "Weyl group word computations");
  weyl->fallthrough();
  weyl->require_subcommand(1);
  CLI::App* word = file_arg(weyl->add_subcommand("word", "canonical reduced word of a word"));
  word->add_option("--word", o.word)->required();
  CLI::App* straight = file_arg(weyl->add_subcommand("straight", "bounded straightness certificate"));
  straight->add_option("--word", o.word)->required();
  straight->add_option("--n", o.n, "power bound N")->check(CLI::Range(2, 1000000));
  commands.emplace_back("weyl word", word);
  commands.emplace_back("weyl straight", straight);

  CLI::App* roots = add("roots", "positive real roots up to a height");
  roots->add_option("--max-height", o.max_height)->required()->check(CLI::PositiveNumber);
  roots->add_option("--set", o.set);
  CLI::App* conj = add("conj", "standard parabolic conjugacy via elementary moves");
  conj->add_option("--from", o.from)->required();
  conj->add_option("--to", o.to)->required();
  CLI::App* closure = add("closure", "bounded parabolic closure search");
  closure->add_option("--word", o.word)->required();
  closure->add_option("--depth", o.depth)->required();
  CLI::App* jreg = add("jregular", "bounded J-regular element search");
  jreg->add_option("--set", o.set)->required();
  jreg->add_option("--max-len", o.max_len)->required();
  jreg->add_option("--n", o.n)->required()->check(CLI::Range(2, 1000000));
  jreg->add_option("--max-height", o.max_height)->required()->check(CLI::PositiveNumber);
  jreg->add_option("--depth", o.depth)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInput;
  }

  o.has_set = roots->count("--set") > 0;
  std::string command;
  for (const auto& [name, sub] : commands)
    if (sub->parsed()) command = name;

  try {
    const io::GcmDocument doc = io::load(o.file);
    const Json result = detail::run_command(command, o, doc.matrix, out);
    if (!result.is_null()) out << result.dump(2) << "\n";
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (is_input_error(e.code())) return kInput;
    if (e.code() == Errc::BudgetExceeded || e.code() == Errc::Overflow) return kBudget;
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace km::cli
