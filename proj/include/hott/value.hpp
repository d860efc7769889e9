#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hott/term.hpp"

namespace hott {

// Weak-head values for normalization by evaluation. Binders become closures;
// everything blocked on a variable or axiom becomes a flat stuck node that
// reads back to the matching kernel eliminator. Path values (Inv, Concat, Ua,
// ApStuck, CoeStuck) stay first class so the compute-mode rules can
// restructure them after the fact.

struct Value;
using ValuePtr = std::shared_ptr<const Value>;
using Env = std::vector<ValuePtr>; // innermost binding last

struct Closure {
  Env env;
  TermPtr body; // one binder's worth of open term
  std::string hint;
};

enum class VTag : uint8_t {
  // canonical
  Lam,     // clo
  Pi,      // item[0] = dom, clo = cod
  Sigma,   // item[0] = dom, clo = cod
  Pair,    // (fst, snd)
  Inl,     // (payload)
  Inr,     // (payload)
  SumTy,   // (left, right)
  NatTy,   //
  Zero,    //
  Succ,    // (pred)
  UnitTy,  //
  Star,    //
  VoidTy,  //
  Univ,    // datum = level
  IdTy,    // (ty, lhs, rhs)
  Refl,    // (ty, tm)
  S1Ty,    //
  Base,    //
  Loop,    //
  Inv,     // (path)
  Concat,  // (lhs, rhs)
  Ua,      // (equiv)
  S1RecFn, // (onBase, onLoop)            datum = level; applies like a function
  S1IndFn, // (motive, onBase, onLoop)
  // stuck
  ApStuck,  // (fun, path, cod)
  CoeStuck, // (path, tm)
  Var,      // datum = de Bruijn level
  Global,   // text = axiom name
  App,      // (fun, arg)
  ProjL,    // (pair)
  ProjR,    // (pair)
  Case,     // (motive, onL, onR, scrut)
  NatRec,   // (motive, onZero, onSucc, scrut)
  VoidElim, // (motive, scrut)
  JElim,    // (motive, onRefl, lhs, rhs, path)
};

struct Value {
  VTag tag;
  uint32_t datum = 0;
  std::string text;
  std::vector<ValuePtr> item;
  std::optional<Closure> clo;

  Value(VTag t, uint32_t d, std::string s, std::vector<ValuePtr> i,
        std::optional<Closure> c)
      : tag(t), datum(d), text(std::move(s)), item(std::move(i)), clo(std::move(c)) {}
};

namespace vmk {

ValuePtr node(VTag t, std::vector<ValuePtr> item = {}, uint32_t datum = 0,
              std::string text = {}, std::optional<Closure> clo = std::nullopt);

inline ValuePtr lam(Closure c) { return node(VTag::Lam, {}, 0, {}, std::move(c)); }
inline ValuePtr pi(ValuePtr dom, Closure cod) {
  return node(VTag::Pi, {std::move(dom)}, 0, {}, std::move(cod));
}
inline ValuePtr sigma(ValuePtr dom, Closure cod) {
  return node(VTag::Sigma, {std::move(dom)}, 0, {}, std::move(cod));
}
inline ValuePtr pair(ValuePtr a, ValuePtr b) {
  return node(VTag::Pair, {std::move(a), std::move(b)});
}
inline ValuePtr inl(ValuePtr a) { return node(VTag::Inl, {std::move(a)}); }
inline ValuePtr inr(ValuePtr b) { return node(VTag::Inr, {std::move(b)}); }
inline ValuePtr sum_ty(ValuePtr a, ValuePtr b) {
  return node(VTag::SumTy, {std::move(a), std::move(b)});
}
inline ValuePtr nat() { return node(VTag::NatTy); }
inline ValuePtr zero() { return node(VTag::Zero); }
inline ValuePtr succ(ValuePtr n) { return node(VTag::Succ, {std::move(n)}); }
inline ValuePtr unit() { return node(VTag::UnitTy); }
inline ValuePtr star() { return node(VTag::Star); }
inline ValuePtr void_ty() { return node(VTag::VoidTy); }
inline ValuePtr univ(uint32_t level) { return node(VTag::Univ, {}, level); }
inline ValuePtr id_ty(ValuePtr ty, ValuePtr l, ValuePtr r) {
  return node(VTag::IdTy, {std::move(ty), std::move(l), std::move(r)});
}
inline ValuePtr refl(ValuePtr ty, ValuePtr tm) {
  return node(VTag::Refl, {std::move(ty), std::move(tm)});
}
inline ValuePtr s1() { return node(VTag::S1Ty); }
inline ValuePtr base() { return node(VTag::Base); }
inline ValuePtr loop() { return node(VTag::Loop); }
inline ValuePtr inv(ValuePtr p) { return node(VTag::Inv, {std::move(p)}); }
inline ValuePtr concat(ValuePtr p, ValuePtr q) {
  return node(VTag::Concat, {std::move(p), std::move(q)});
}
inline ValuePtr ua(ValuePtr e) { return node(VTag::Ua, {std::move(e)}); }
inline ValuePtr s1_rec(uint32_t level, ValuePtr b, ValuePtr l) {
  return node(VTag::S1RecFn, {std::move(b), std::move(l)}, level);
}
inline ValuePtr s1_ind(ValuePtr motive, ValuePtr b, ValuePtr l) {
  return node(VTag::S1IndFn, {std::move(motive), std::move(b), std::move(l)});
}
inline ValuePtr ap_stuck(ValuePtr f, ValuePtr p, ValuePtr cod) {
  return node(VTag::ApStuck, {std::move(f), std::move(p), std::move(cod)});
}
inline ValuePtr coe_stuck(ValuePtr p, ValuePtr t) {
  return node(VTag::CoeStuck, {std::move(p), std::move(t)});
}
inline ValuePtr var(uint32_t level) { return node(VTag::Var, {}, level); }
inline ValuePtr global(std::string name) { return node(VTag::Global, {}, 0, std::move(name)); }
inline ValuePtr app(ValuePtr f, ValuePtr a) {
  return node(VTag::App, {std::move(f), std::move(a)});
}
inline ValuePtr projl(ValuePtr p) { return node(VTag::ProjL, {std::move(p)}); }
inline ValuePtr projr(ValuePtr p) { return node(VTag::ProjR, {std::move(p)}); }
inline ValuePtr sum_case(ValuePtr motive, ValuePtr f, ValuePtr g, ValuePtr s) {
  return node(VTag::Case, {std::move(motive), std::move(f), std::move(g), std::move(s)});
}
inline ValuePtr nat_rec(ValuePtr motive, ValuePtr z, ValuePtr s, ValuePtr n) {
  return node(VTag::NatRec, {std::move(motive), std::move(z), std::move(s), std::move(n)});
}
inline ValuePtr void_elim(ValuePtr motive, ValuePtr s) {
  return node(VTag::VoidElim, {std::move(motive), std::move(s)});
}
inline ValuePtr j_elim(ValuePtr motive, ValuePtr d, ValuePtr l, ValuePtr r, ValuePtr p) {
  return node(VTag::JElim,
              {std::move(motive), std::move(d), std::move(l), std::move(r), std::move(p)});
}

} // namespace vmk

inline bool is_neutral(VTag t) {
  switch (t) {
  case VTag::ApStuck:
  case VTag::CoeStuck:
  case VTag::Var:
  case VTag::Global:
  case VTag::App:
  case VTag::ProjL:
  case VTag::ProjR:
  case VTag::Case:
  case VTag::NatRec:
  case VTag::VoidElim:
  case VTag::JElim: return true;
  default: return false;
  }
}

} // namespace hott
