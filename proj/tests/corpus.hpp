#pragma once

// Shared test fixture: the standard library loaded once per test binary,
// plus small helpers for elaborating and normalizing closed surface terms.

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>

#include "hott/check.hpp"
#include "hott/eval.hpp"
#include "hott/parser.hpp"

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline hott::GlobalTable& corpus() {
  static hott::GlobalTable table = [] {
    hott::GlobalTable t;
    hott::seed_kernel(t);
    for (const char* f : {"prelude.hott", "coprod_codes.hott", "integers.hott", "pi1s1.hott",
                          "hedberg.hott"}) {
      std::string path = std::string(HOTTLOOP_STDLIB_DIR) + "/" + f;
      auto parsed = hott::parse_module(read_file(path), path);
      if (auto* d = std::get_if<hott::Diagnostic>(&parsed))
        throw std::runtime_error(d->render());
      auto diags = hott::check_module(t, std::get<std::vector<hott::Decl>>(parsed), path,
                                      hott::ElabOptions{});
      if (!diags.empty()) throw std::runtime_error(diags[0].render());
    }
    return t;
  }();
  return table;
}

// Elaborates a closed surface expression against the loaded corpus.
inline hott::Elaborated elab(const std::string& src) {
  auto parsed = hott::parse_term(src, "<test>");
  if (auto* d = std::get_if<hott::Diagnostic>(&parsed)) throw std::runtime_error(d->render());
  auto e = hott::elaborate_expr(corpus(), std::get<hott::RawPtr>(parsed), "<test>",
                                hott::ElabOptions{});
  if (auto* d = std::get_if<hott::Diagnostic>(&e)) throw std::runtime_error(d->render());
  return std::get<hott::Elaborated>(e);
}

inline hott::TermPtr nf(const std::string& src, bool compute) {
  return hott::normalize_closed(corpus(), elab(src).core, hott::EvalOptions{compute, 10'000'000});
}

inline hott::TermPtr nat_core(long long n) {
  hott::TermPtr t = hott::mk::zero();
  for (long long i = 0; i < n; ++i) t = hott::mk::succ(t);
  return t;
}

// The canonical representation: inl k is -(k+1), inr (inl tt) is 0,
// inr (inr k) is k+1.
inline hott::TermPtr int_core(long long n) {
  using namespace hott;
  if (n < 0) return mk::inl(nat_core(-n - 1));
  if (n == 0) return mk::inr(mk::inl(mk::star()));
  return mk::inr(mk::inr(nat_core(n - 1)));
}

inline std::optional<long long> int_of(const hott::ValuePtr& v) {
  using hott::VTag;
  auto nat_of = [](const hott::ValuePtr& n) -> std::optional<long long> {
    long long k = 0;
    const hott::Value* c = n.get();
    while (c->tag == VTag::Succ) {
      ++k;
      c = c->item[0].get();
    }
    if (c->tag != VTag::Zero) return std::nullopt;
    return k;
  };
  if (v->tag == VTag::Inl) {
    auto n = nat_of(v->item[0]);
    return n ? std::optional(-(*n + 1)) : std::nullopt;
  }
  if (v->tag != VTag::Inr) return std::nullopt;
  const hott::ValuePtr& inner = v->item[0];
  if (inner->tag == VTag::Inl)
    return inner->item[0]->tag == VTag::Star ? std::optional(0LL) : std::nullopt;
  if (inner->tag != VTag::Inr) return std::nullopt;
  auto n = nat_of(inner->item[0]);
  return n ? std::optional(*n + 1) : std::nullopt;
}
