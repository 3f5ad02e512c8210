#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cgsb/completion.hpp"
#include "cgsb/text.hpp"
#include "cgsb/window.hpp"

namespace cgsb::cli {

namespace {

using json = nlohmann::json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::string command;
  std::vector<std::string> operands;
  std::string file;
  std::string example;
  std::optional<std::int64_t> window;
  std::optional<std::int64_t> multiplier;
  std::optional<std::size_t> max_length;
  std::uint32_t max_dpow = 1;
  std::uint64_t mult_bound = 0;
  std::size_t max_iters = 100;
  std::size_t max_basis = 200;
  std::string strategy = "leftmost";
  std::string json_out;
  bool trace = false;
  bool parallel = false;
  bool timings = false;
};

// The relation set a command works on: the plain relations, or the windowed
// instantiation when the presentation has indexed families.
struct Loaded {
  Presentation pres;
  std::string source;
  RelationSet set;
  CheckParams params;
  std::vector<Letter> letters;
  std::optional<WindowedSystem> sys;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

Loaded load(const Settings& s) {
  Loaded L;
  if (!s.example.empty()) {
    L.pres = builtin(s.example);
    L.source = "example:" + s.example;
  } else if (!s.file.empty()) {
    L.pres = parse_presentation(read_file(s.file));
    L.source = s.file;
  } else {
    throw InputError("no presentation given (use --file FILE or 'example NAME')");
  }
  const Signature& sig = L.pres.sig;
  if (L.pres.has_families()) {
    IndexWindow w = window_from(L.pres);
    if (s.window) w.W = *s.window;
    if (s.multiplier) w.M = *s.multiplier;
    if (w.W < 0 || w.M < 1) throw InputError("window needs W >= 0 and M >= 1");
    L.sys = instantiate_window(L.pres, w);
    L.set = L.sys->set;
    L.params = L.sys->params();
    L.letters = L.sys->letters;
  } else {
    if (!L.pres.schemas.empty()) throw InputError("relation schemas need indexed families");
    L.set = RelationSet::monic(L.pres.relations);
    L.letters = plain_letters(sig);
  }
  L.params.left_mult_bound = L.params.right_mult_bound = s.mult_bound;
  L.params.strategy = s.strategy == "rightmost" ? MatchStrategy::Rightmost : MatchStrategy::Leftmost;
  L.params.record_steps = s.trace;
  L.params.parallel = s.parallel;
  return L;
}

json trace_json(const Signature& sig, const RelationSet& S, const ReductionTrace& t) {
  json steps = json::array();
  for (const auto& st : t.steps)
    steps.push_back({{"word", print_word(sig, st.word)},
                     {"substitution", describe(sig, S, st.pattern)},
                     {"coefficient", st.coeff.get_str()}});
  return {{"steps", steps}, {"step_count", t.step_count}, {"remainder", print_canonical(sig, t.remainder)}};
}

json record_json(const Signature& sig, const RelationSet& S, const CompositionRecord& r, bool trace) {
  json j = {{"type", to_string(r.type)},
            {"f", S[r.f].name},
            {"g", S[r.g].name},
            {"verdict", to_string(r.verdict)},
            {"composition", print_canonical(sig, r.poly)},
            {"remainder", print_canonical(sig, r.trace.remainder)}};
  if (r.w) j["ambiguity"] = print_word(sig, *r.w);
  if (r.b) {
    j["multiplier"] = sig.spell(*r.b);
    j["n"] = r.n;
  }
  if (trace) j["trace"] = trace_json(sig, S, r.trace);
  return j;
}

std::string record_line(const Signature& sig, const RelationSet& S, const CompositionRecord& r) {
  std::string s = std::string(to_string(r.type)) + " " + S[r.f].name;
  if (r.g != r.f || r.w) s += " " + S[r.g].name;
  if (r.w) s += " at " + print_word(sig, *r.w);
  if (r.b) s += r.type == CompositionType::LeftMult ? " with " + sig.spell(*r.b) + " (" + std::to_string(r.n) + ") f"
                                                    : " with f (" + std::to_string(r.n) + ") " + sig.spell(*r.b);
  s += ": " + std::string(to_string(r.verdict));
  if (r.verdict != Verdict::Trivial) s += ", remainder " + print_canonical(sig, r.trace.remainder);
  return s;
}

const char* outcome_word(Verdict v) {
  switch (v) {
    case Verdict::Trivial:
      return "ok";
    case Verdict::Nontrivial:
      return "fail";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

int exit_for(Verdict v) { return v == Verdict::Trivial ? kOk : v == Verdict::Nontrivial ? kFail : kInconclusive; }
int exit_for(Outcome o) { return o == Outcome::Ok ? kOk : o == Outcome::Fail ? kFail : kInconclusive; }

std::string need_operand(const Settings& s, std::size_t k, const char* what) {
  if (s.operands.size() <= k) throw InputError(s.command + " needs " + what);
  return s.operands[k];
}

int dispatch(const Settings& s, json& report, std::ostream& out) {
  Loaded L = load(s);
  const Signature& sig = L.pres.sig;
  report["input"] = {{"source", L.source}, {"digest", digest(print_presentation(L.pres))}};
  if (L.sys) report["input"]["window"] = {{"W", L.sys->window.W}, {"M", L.sys->window.M}};
  report["input"]["relations"] = L.set.size();

  const std::string& cmd = s.command;
  if (cmd == "show") {
    out << print_presentation(L.pres);
    report["verdict"] = "ok";
    report["presentation"] = print_presentation(L.pres);
    return kOk;
  }
  if (cmd == "normalize") {
    Polynomial p = normalize(*parse_expr_ast(need_operand(s, 0, "an expression"))->instantiate(sig), sig);
    out << print_canonical(sig, p) << "\n";
    report["verdict"] = "ok";
    report["result"] = print_canonical(sig, p);
    return kOk;
  }
  if (cmd == "order") {
    NormalWord u = parse_word(sig, need_operand(s, 0, "two words")), v = parse_word(sig, need_operand(s, 1, "two words"));
    auto c = compare_words(sig, u, v);
    const char* word = c < 0 ? "less" : c > 0 ? "greater" : "equal";
    out << word << "\n";
    report["verdict"] = "ok";
    report["result"] = word;
    return kOk;
  }
  if (cmd == "reduce") {
    Polynomial p = parse_polynomial(sig, need_operand(s, 0, "a polynomial"));
    ReductionTrace t = reduce(sig, L.set, p, {L.params.strategy, s.trace});
    Verdict v = Verdict::Trivial;
    if (L.sys)
      for (const auto& term : t.remainder.terms())
        if (L.sys->probe(term.word)) v = Verdict::Inconclusive;
    out << print_canonical(sig, t.remainder) << "\n";
    if (s.trace)
      for (const auto& st : t.steps)
        out << "  " << st.coeff.get_str() << " * " << describe(sig, L.set, st.pattern) << "\n";
    if (v == Verdict::Inconclusive) out << "note: the remainder reaches outside the relation window\n";
    report["verdict"] = outcome_word(v);
    report["result"] = print_canonical(sig, t.remainder);
    report["step_count"] = t.step_count;
    if (s.trace) report["trace"] = trace_json(sig, L.set, t);
    return exit_for(v);
  }
  if (cmd == "check" || cmd == "compositions") {
    GsbReport rep = check_gsb(sig, L.set, L.params);
    json counts;
    for (int k = 0; k < 6; ++k) counts[to_string(static_cast<CompositionType>(k))] = rep.counts[k];
    json recs = json::array();
    const bool all = cmd == "compositions";
    for (const auto& r : rep.records) {
      if (!all && r.verdict == Verdict::Trivial && !s.trace) continue;
      recs.push_back(record_json(sig, L.set, r, s.trace));
      if (all || r.verdict != Verdict::Trivial) out << record_line(sig, L.set, r) << "\n";
    }
    const char* verdict = rep.is_gsb() ? "GSB" : rep.nontrivial ? "not a GSB" : "inconclusive";
    out << "verdict: " << verdict << " (" << rep.records.size() << " compositions, " << rep.nontrivial
        << " nontrivial, " << rep.inconclusive << " inconclusive)\n";
    report["verdict"] = outcome_word(rep.verdict());
    report["gsb"] = verdict;
    report["counts"] = counts;
    report["nontrivial"] = rep.nontrivial;
    report["inconclusive"] = rep.inconclusive;
    report["records"] = recs;
    return exit_for(rep.verdict());
  }
  if (cmd == "complete") {
    CompletionLimits lim;
    lim.max_length = s.max_length.value_or(lim.max_length);
    lim.max_iters = s.max_iters;
    lim.max_basis = s.max_basis;
    CompletionResult res = complete(sig, L.set, lim, L.params);
    RelationSet basis = res.complete ? reduce_basis(sig, res.basis) : res.basis;
    json rels = json::array();
    for (const auto& r : basis.relations()) {
      out << r.name << " = " << print_canonical(sig, r.poly) << "\n";
      rels.push_back({{"name", r.name}, {"polynomial", print_canonical(sig, r.poly)}});
    }
    out << (res.complete ? "complete" : "incomplete: " + res.diagnostic) << " (" << basis.size() << " relations, "
        << res.rounds << " rounds)\n";
    report["verdict"] = res.complete ? "ok" : "inconclusive";
    report["basis"] = rels;
    report["size"] = basis.size();
    report["rounds"] = res.rounds;
    report["compositions_checked"] = res.compositions_checked;
    if (!res.complete) report["diagnostic"] = res.diagnostic;
    return res.complete ? kOk : kInconclusive;
  }
  if (cmd == "irr" || cmd == "kdbasis") {
    IrrBounds b;
    b.max_length = s.max_length.value_or(3);
    b.max_dpow = s.max_dpow;
    b.letters = L.letters;
    std::vector<NormalWord> words;
    try {
      words = cmd == "irr" ? irr_enumerate(sig, L.set, b) : kd_basis(sig, L.set, b);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    json list = json::array();
    for (const auto& w : words) {
      out << print_word(sig, w) << "\n";
      list.push_back(print_word(sig, w));
    }
    report["verdict"] = "ok";
    report["words"] = list;
    report["count"] = words.size();
    report["bounds"] = {{"max_length", b.max_length}, {"max_dpow", b.max_dpow}};
    return kOk;
  }
  if (cmd == "embed") {
    if (!L.sys) throw InputError("embed needs a presentation with indexed families");
    EmbeddingReport rep = embedding_check(*L.sys, s.max_dpow);
    json red = json::array(), und = json::array();
    for (const auto& w : rep.reducible) red.push_back(print_word(sig, w));
    for (const auto& w : rep.undecided) und.push_back(print_word(sig, w));
    out << "embedding: " << (rep.outcome == Outcome::Ok ? "embedded" : to_string(rep.outcome)) << " ("
        << rep.checked << " words D^t b checked)\n";
    for (const auto& w : rep.reducible) out << "  reducible " << print_word(sig, w) << "\n";
    report["verdict"] = to_string(rep.outcome);
    report["checked"] = rep.checked;
    report["reducible"] = red;
    report["undecided"] = und;
    return exit_for(rep.outcome);
  }
  if (cmd == "envelope") {
    if (!L.sys) throw InputError("envelope needs a presentation with indexed families");
    if (L.pres.table.empty()) throw InputError("envelope needs a table block");
    WindowedSystem minus = enveloping_window(L.pres, L.sys->window);
    CompletionLimits lim;
    lim.max_length = s.max_length.value_or(3);
    lim.max_iters = std::min<std::size_t>(s.max_iters, 3);
    lim.max_basis = std::max<std::size_t>(s.max_basis, 20000);
    IdealEqualityReport rep = ideal_equality(minus, *L.sys, lim);
    out << "ideal equality: " << to_string(rep.outcome) << "\n";
    for (const auto& n : rep.lhs_not_in_rhs) out << "  enveloping relation not reduced by the presentation: " << n << "\n";
    for (const auto& n : rep.rhs_not_in_lhs) out << "  relation not reached from the enveloping relations: " << n << "\n";
    report["verdict"] = to_string(rep.outcome);
    report["enveloping_not_in_presentation"] = rep.lhs_not_in_rhs;
    report["presentation_not_in_enveloping"] = rep.rhs_not_in_lhs;
    report["completed_size"] = rep.completed_size;
    return exit_for(rep.outcome);
  }
  throw InputError("unknown command '" + cmd + "'");
}

const char* kCommands[] = {"show", "normalize", "order", "reduce", "compositions", "check",
                           "complete", "irr", "kdbasis", "embed", "envelope"};

}  // namespace

int run(const std::vector<std::string>& raw, std::ostream& out, std::ostream& err) {
  Settings s;
  std::vector<std::string> args = raw;
  // `example NAME` selects a built-in presentation and may precede the command.
  for (std::size_t k = 0; k + 1 < args.size(); ++k)
    if (args[k] == "example") {
      s.example = args[k + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(k), args.begin() + static_cast<std::ptrdiff_t>(k + 2));
      break;
    }
  if (!args.empty() && args.back() == "example") {
    err << "example needs a NAME; built-in examples:";
    for (const auto& n : builtin_names()) err << " " << n;
    err << "\n";
    return kInputError;
  }

  CLI::App app{"Gröbner–Shirshov bases in free associative conformal algebras"};
  app.name("confgsb");
  app.footer(
      "Commands: show | normalize EXPR | order U V | reduce POLY | compositions | check | complete | irr | kdbasis |\n"
      "          embed | envelope. Prefix with `example NAME` to use a built-in presentation.\n"
      "Exit codes: 0 ok, 1 definite failure, 2 inconclusive, 3 input error.");
  std::vector<std::string> positional;
  app.add_option("command", positional, "command and its operands");
  app.add_option("-f,--file", s.file, "presentation file");
  app.add_option("--window", s.window, "composition window W")->envname("CONFGSB_WINDOW");
  app.add_option("--relation-multiplier", s.multiplier, "relation window multiplier M")
      ->envname("CONFGSB_RELATION_MULTIPLIER");
  app.add_option("--max-length", s.max_length, "word length bound (irr: 3, complete: 8)")
      ->envname("CONFGSB_MAX_LENGTH");
  app.add_option("--max-dpow", s.max_dpow, "D-power bound for irr and embed")->envname("CONFGSB_MAX_DPOW");
  app.add_option("--mult-bound", s.mult_bound, "extra bound on n for multiplication compositions");
  app.add_option("--max-iters", s.max_iters, "completion rounds")->envname("CONFGSB_MAX_ITERS");
  app.add_option("--max-basis", s.max_basis, "completion basis size")->envname("CONFGSB_MAX_BASIS");
  app.add_option("--strategy", s.strategy, "leftmost or rightmost")->check(CLI::IsMember({"leftmost", "rightmost"}));
  app.add_option("--json", s.json_out, "write a JSON report to this file ('-' for stdout)");
  app.add_flag("--trace", s.trace, "include reduction traces");
  app.add_flag("--parallel", s.parallel, "check compositions in parallel");
  app.add_flag("--timings", s.timings, "add wall-clock timings to the JSON report");
  app.allow_extras(false);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "confgsb: " << e.what() << "\n";
    return kInputError;
  }
  if (positional.empty()) {
    if (s.example.empty()) {
      err << "confgsb: missing command\n" << app.help();
      return kInputError;
    }
    positional.push_back("show");
  }
  s.command = positional.front();
  s.operands.assign(positional.begin() + 1, positional.end());
  if (std::find(std::begin(kCommands), std::end(kCommands), s.command) == std::end(kCommands)) {
    err << "confgsb: unknown command '" << s.command << "'\n";
    return kInputError;
  }

  json report = {{"command", s.command}, {"operands", s.operands}};
  std::ostringstream text;
  int code = kOk;
  auto t0 = std::chrono::steady_clock::now();
  try {
    code = dispatch(s, report, text);
  } catch (const ParseError& e) {
    err << "confgsb: parse error at " << e.what() << "\n";
    return kInputError;
  } catch (const SignatureError& e) {
    err << "confgsb: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    err << "confgsb: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "confgsb: " << e.what() << "\n";
    return kInputError;
  }
  if (s.timings)
    report["timings"] = {
        {"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
  report["exit_code"] = code;

  if (s.json_out == "-") {
    out << report.dump(2) << "\n";
  } else {
    out << text.str();
    if (!s.json_out.empty()) {
      std::ofstream f(s.json_out);
      if (!f) {
        err << "confgsb: cannot write '" << s.json_out << "'\n";
        return kInputError;
      }
      f << report.dump(2) << "\n";
    }
  }
  return code;
}

}  // namespace cgsb::cli
