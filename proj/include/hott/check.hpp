#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hott/diag.hpp"
#include "hott/eval.hpp"
#include "hott/raw.hpp"
#include "hott/term.hpp"
#include "hott/value.hpp"

namespace hott {

struct TypeError {
  Diagnostic diag;
};

struct ElabOptions {
  bool allow_large_elim = true; // eliminator motives may land in U1
  uint64_t budget = 1'000'000;
};

struct Elaborated {
  TermPtr core;
  TermPtr type; // read back, closed
  ValuePtr type_value;
};

// Bidirectional elaboration of surface terms plus a checker for fully
// annotated kernel terms (as produced by read-back). Each public entry point
// starts a fresh step budget. Throws TypeError and BudgetExceeded.
class Elaborator {
public:
  Elaborator(GlobalTable& globals, ElabOptions opt, std::string file);
  ~Elaborator();

  void add_decl(const Decl& d);
  void add_axiom(const std::string& name, const RawPtr& type_raw);
  Elaborated infer_expr(const RawPtr& r);

  // Kernel-term checking; ctx and env must describe the same telescope, with
  // env the identity environment (level i at slot i).
  ValuePtr infer_core(const Context& ctx, const Env& env, const TermPtr& t);
  void check_core(const Context& ctx, const Env& env, const TermPtr& t, const ValuePtr& ty);

  // True when the failed declaration name was recorded (for recovery tests).
  bool poisoned(const std::string& name) const;

  Evaluator& evaluator();

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Kernel axioms every checking session assumes. Throws std::logic_error if
// they fail to elaborate (an internal invariant, not a user error).
void seed_kernel(GlobalTable& globals);

// Elaborate declarations into globals; failed names are poisoned so later
// uses fail with a clean message. Diagnostics come back in source order.
std::vector<Diagnostic> check_module(GlobalTable& globals, const std::vector<Decl>& decls,
                                     const std::string& file, const ElabOptions& opt);

// Boundary wrapper for single expressions.
std::variant<Elaborated, Diagnostic> elaborate_expr(GlobalTable& globals, const RawPtr& r,
                                                    const std::string& file,
                                                    const ElabOptions& opt);

} // namespace hott
