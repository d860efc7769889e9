// Command-line front end: check file sets, normalize expressions against
// the checked standard library, and run the winding-number demo.
//
// Exit codes: 0 ok, 1 type error, 2 parse or word error, 3 budget
// exceeded, 4 I/O failure. With several diagnostics the highest-severity
// class wins; severity orders io > parse > budget > type.

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hott/check.hpp"
#include "hott/eval.hpp"
#include "hott/parser.hpp"
#include "hott/pretty.hpp"

#ifndef HOTTLOOP_STDLIB_DIR
#define HOTTLOOP_STDLIB_DIR ""
#endif

namespace {

using namespace hott;

const char* kStdlibFiles[] = {
    "prelude.hott", "coprod_codes.hott", "integers.hott",
    "pi1s1.hott",   "hedberg.hott",
};

int severity(DiagKind k) {
  switch (k) {
  case DiagKind::Io: return 3;
  case DiagKind::Parse: return 2;
  case DiagKind::Budget: return 1;
  case DiagKind::Type: return 0;
  }
  return 0;
}

int exit_code_for(DiagKind k) {
  switch (k) {
  case DiagKind::Io: return 4;
  case DiagKind::Parse: return 2;
  case DiagKind::Budget: return 3;
  case DiagKind::Type: return 1;
  }
  return 1;
}

struct Session {
  GlobalTable globals;
  int worst_sev = -1;
  int exit_code = 0;

  void report(const Diagnostic& d) {
    std::cerr << d.render() << "\n";
    if (severity(d.kind) > worst_sev) {
      worst_sev = severity(d.kind);
      exit_code = exit_code_for(d.kind);
    }
  }

  std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      report({path, {1, 1, 1}, "cannot open file", {}, DiagKind::Io});
      return std::nullopt;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  bool check_file(const std::string& path, const ElabOptions& opt, bool verbose) {
    auto text = read_file(path);
    if (!text) return false;
    auto parsed = parse_module(*text, path);
    if (auto* diag = std::get_if<Diagnostic>(&parsed)) {
      report(*diag);
      return false;
    }
    auto& decls = std::get<std::vector<Decl>>(parsed);
    Elaborator elab(globals, opt, path);
    bool ok = true;
    for (const auto& d : decls) {
      try {
        elab.add_decl(d);
        if (verbose) std::cout << "ok " << d.name << "\n";
      } catch (const TypeError& e) {
        report(e.diag);
        ok = false;
      } catch (const BudgetExceeded&) {
        report({path, d.name_span,
                "normalization budget exceeded while checking '" + d.name + "'",
                {}, DiagKind::Budget});
        ok = false;
      }
    }
    return ok;
  }

  bool load_stdlib(const std::string& dir, uint64_t budget) {
    ElabOptions opt;
    opt.budget = budget;
    bool ok = true;
    for (const char* leaf : kStdlibFiles)
      ok = check_file(dir + "/" + leaf, opt, false) && ok;
    return ok;
  }
};

// Loop words: `refl`, or `loop`/`!loop` joined by `*`.
std::optional<TermPtr> parse_word(const std::string& word) {
  std::vector<std::string> toks;
  size_t i = 0;
  while (i < word.size()) {
    if (std::isspace(static_cast<unsigned char>(word[i]))) { ++i; continue; }
    if (word[i] == '*') { toks.push_back("*"); ++i; continue; }
    if (word.compare(i, 5, "!loop") == 0) { toks.push_back("!loop"); i += 5; continue; }
    if (word.compare(i, 4, "loop") == 0) { toks.push_back("loop"); i += 4; continue; }
    if (word.compare(i, 4, "refl") == 0) { toks.push_back("refl"); i += 4; continue; }
    return std::nullopt;
  }
  if (toks.empty()) return std::nullopt;
  if (toks[0] == "refl")
    return toks.size() == 1 ? std::optional<TermPtr>(mk::refl(mk::s1(), mk::base()))
                            : std::nullopt;
  auto letter = [](const std::string& t) -> std::optional<TermPtr> {
    if (t == "loop") return mk::loop();
    if (t == "!loop") return mk::path_inv(mk::loop());
    return std::nullopt;
  };
  auto head = letter(toks[0]);
  if (!head) return std::nullopt;
  TermPtr acc = *head;
  for (size_t k = 1; k < toks.size(); k += 2) {
    if (toks[k] != "*" || k + 1 >= toks.size()) return std::nullopt;
    auto next = letter(toks[k + 1]);
    if (!next) return std::nullopt;
    acc = mk::path_concat(acc, *next);
  }
  return acc;
}

// Reads an integer back out of a normal form over Sum Nat (Sum Unit Nat).
std::optional<long long> int_of_value(const ValuePtr& v) {
  auto nat_of = [](ValuePtr n) -> std::optional<long long> {
    long long count = 0;
    while (n->tag == VTag::Succ) { ++count; n = n->item[0]; }
    if (n->tag != VTag::Zero) return std::nullopt;
    return count;
  };
  if (v->tag == VTag::Inl) {
    auto n = nat_of(v->item[0]);
    if (!n) return std::nullopt;
    return -(*n + 1);
  }
  if (v->tag != VTag::Inr) return std::nullopt;
  const ValuePtr& s = v->item[0];
  if (s->tag == VTag::Inl) return 0;
  if (s->tag != VTag::Inr) return std::nullopt;
  auto n = nat_of(s->item[0]);
  if (!n) return std::nullopt;
  return *n + 1;
}

int run_check(Session& s, const std::vector<std::string>& files, bool verbose) {
  for (const auto& f : files) s.check_file(f, ElabOptions{}, verbose);
  return s.exit_code;
}

int run_normalize(Session& s, const std::string& expr, bool compute,
                  uint64_t budget, bool no_prelude, const std::string& stdlib_dir) {
  if (!no_prelude && !s.load_stdlib(stdlib_dir, budget)) return s.exit_code;
  auto parsed = parse_term(expr, "<expr>");
  if (auto* diag = std::get_if<Diagnostic>(&parsed)) {
    s.report(*diag);
    return s.exit_code;
  }
  ElabOptions opt;
  opt.budget = budget;
  auto elab = elaborate_expr(s.globals, std::get<RawPtr>(parsed), "<expr>", opt);
  if (auto* diag = std::get_if<Diagnostic>(&elab)) {
    s.report(*diag);
    return s.exit_code;
  }
  auto& res = std::get<Elaborated>(elab);
  EvalOptions eopt;
  eopt.compute = compute;
  eopt.budget = budget;
  try {
    Evaluator ev(s.globals, eopt);
    ValuePtr tv = ev.eval_closed(res.type);
    ValuePtr v = ev.eval_closed(res.core);
    TermPtr nf = ev.readback_at(v, tv, 0);
    TermPtr tnf = ev.readback(tv, 0);
    Context empty;
    auto names = s.globals.names();
    std::cout << pretty_print(nf, empty, names) << " : "
              << pretty_print(tnf, empty, names) << "\n";
  } catch (const BudgetExceeded&) {
    s.report({"<expr>", {1, 1, 1}, "normalization budget exceeded", {}, DiagKind::Budget});
  }
  return s.exit_code;
}

int run_winding(Session& s, const std::string& word, const std::string& stdlib_dir) {
  auto path = parse_word(word);
  if (!path) {
    std::cerr << "hottloop: malformed loop word; expected 'refl' or "
                 "'loop'/'!loop' joined by '*'\n";
    return 2;
  }
  if (!s.load_stdlib(stdlib_dir, EvalOptions{}.budget)) return s.exit_code;
  TermPtr core = mk::app(mk::app(mk::global("encode"), mk::base()), *path);
  EvalOptions eopt;
  eopt.compute = true;
  try {
    Evaluator ev(s.globals, eopt);
    ValuePtr v = ev.eval_closed(core);
    auto n = int_of_value(v);
    if (!n) {
      std::cerr << "hottloop: internal: winding did not produce an integer normal form\n";
      return 4;
    }
    std::cout << *n << "\n";
  } catch (const BudgetExceeded&) {
    s.report({"<word>", {1, 1, 1}, "normalization budget exceeded", {}, DiagKind::Budget});
  }
  return s.exit_code;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"hottloop: a proof checker for a small homotopy type theory"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  bool verbose = false;
  auto* check = app.add_subcommand("check", "Type-check .hott files in order");
  check->add_option("files", files, "files to check")->required()->expected(-1);
  check->add_flag("-v,--verbose", verbose, "print ok per declaration");

  std::string expr;
  bool compute = false;
  uint64_t budget = EvalOptions{}.budget;
  bool no_prelude = false;
  std::string stdlib_dir = HOTTLOOP_STDLIB_DIR;
  auto* normalize = app.add_subcommand("normalize", "Normalize an expression");
  normalize->add_option("-e,--expr", expr, "expression to normalize")->required();
  normalize->add_flag("-c,--compute", compute, "enable closed computation rules");
  normalize->add_option("--budget", budget, "evaluation step budget");
  normalize->add_flag("--no-prelude", no_prelude, "skip the standard library");
  normalize->add_option("--stdlib", stdlib_dir, "standard library directory");

  std::string word;
  auto* winding = app.add_subcommand("winding", "Winding number of a loop word");
  winding->add_option("word", word, "loop word")->required();

  CLI11_PARSE(app, argc, argv);

  Session s;
  try {
    hott::seed_kernel(s.globals);
  } catch (const std::exception& e) {
    std::cerr << "hottloop: internal: " << e.what() << "\n";
    return 4;
  }

  if (check->parsed()) return run_check(s, files, verbose);
  if (normalize->parsed())
    return run_normalize(s, expr, compute, budget, no_prelude, stdlib_dir);
  if (winding->parsed()) return run_winding(s, word, stdlib_dir);
  return 0;
}
