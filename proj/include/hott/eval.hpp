#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hott/term.hpp"
#include "hott/value.hpp"

namespace hott {

// Global definitions. Bodies are closed elaborated terms; a missing body is
// an axiom and evaluates to a stuck head.
struct GlobalDef {
  TermPtr type;
  std::optional<TermPtr> body;
};

class GlobalTable {
public:
  bool contains(const std::string& name) const { return defs_.count(name) != 0; }
  const GlobalDef* find(const std::string& name) const {
    auto it = defs_.find(name);
    return it == defs_.end() ? nullptr : &it->second;
  }
  void add(std::string name, TermPtr type, std::optional<TermPtr> body) {
    order_.push_back(name);
    defs_[std::move(name)] = GlobalDef{std::move(type), std::move(body)};
  }
  const std::vector<std::string>& order() const { return order_; }
  std::set<std::string> names() const {
    std::set<std::string> out;
    for (const auto& kv : defs_) out.insert(kv.first);
    return out;
  }

private:
  std::map<std::string, GlobalDef> defs_;
  std::vector<std::string> order_;
};

struct EvalOptions {
  bool compute = false; // enable the extra non-definitional rewrite rules
  uint64_t budget = 1'000'000;
};

struct BudgetExceeded {
  uint64_t budget;
};

// One evaluator per top-level operation: the step budget and the global value
// cache live here. Globals always unfold, so read-back normal forms are free
// of defined names (axioms remain).
class Evaluator {
public:
  Evaluator(const GlobalTable& globals, EvalOptions opt) : globals_(globals), opt_(opt) {}

  ValuePtr eval(const TermPtr& t, const Env& env);
  ValuePtr eval_closed(const TermPtr& t) { return eval(t, {}); }

  ValuePtr apply(const ValuePtr& f, const ValuePtr& a);
  ValuePtr apply_closure(const Closure& c, const ValuePtr& a);
  ValuePtr do_projl(const ValuePtr& p);
  ValuePtr do_projr(const ValuePtr& p);
  ValuePtr do_inv(const ValuePtr& p);
  ValuePtr do_concat(const ValuePtr& p, const ValuePtr& q);
  ValuePtr do_ap(const ValuePtr& f, const ValuePtr& p, const ValuePtr& cod);
  ValuePtr do_coe(const ValuePtr& p, const ValuePtr& v);

  // Plain read-back: eta-expands closures with fresh variables, leaves
  // neutrals as the matching eliminator nodes. depth = binders in scope.
  TermPtr readback(const ValuePtr& v, size_t depth);

  // Type-directed read-back: eta-long at Pi and Sigma, collapses Unit
  // inhabitants to tt, descends into Sum payloads and refl. Falls back to the
  // plain read-back where the type gives no guidance.
  TermPtr readback_at(const ValuePtr& v, const ValuePtr& ty, size_t depth);

  // Definitional equality at a type, in a context with depth variables.
  bool convertible(const ValuePtr& a, const ValuePtr& b, const ValuePtr& ty, size_t depth);

  uint64_t steps() const { return steps_; }
  const EvalOptions& options() const { return opt_; }

private:
  const GlobalTable& globals_;
  EvalOptions opt_;
  uint64_t steps_ = 0;
  std::map<std::string, ValuePtr> cache_;

  void tick();
  ValuePtr do_case(const ValuePtr& motive, const ValuePtr& onl, const ValuePtr& onr,
                   const ValuePtr& scrut);
  ValuePtr do_natrec(const ValuePtr& motive, const ValuePtr& z, const ValuePtr& s,
                     const ValuePtr& scrut);
  ValuePtr do_j(const ValuePtr& motive, const ValuePtr& d, const ValuePtr& l, const ValuePtr& r,
                const ValuePtr& p);
};

// Convenience: evaluate a closed term and read it back (untyped).
TermPtr normalize_closed(const GlobalTable& globals, const TermPtr& t, EvalOptions opt);

} // namespace hott
