#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hott/diag.hpp"

namespace hott {

// Surface syntax as parsed, names unresolved. Kids follow source order;
// eliminator keywords become dedicated nodes with fixed arity.

enum class RTag : uint8_t {
  Name,    // text
  Lam,     // text = binder; (body)
  App,     // (fun, arg)
  Pi,      // text = binder ("_" for the arrow sugar); (dom, cod)
  Sigma,   // text = binder ("_" for the product sugar); (dom, cod)
  Pair,    // (fst, snd)
  Fst,     // (pair)
  Snd,     // (pair)
  SumTy,   // (left, right)
  Inl,     // (payload)
  Inr,     // (payload)
  Case,    // (motive, onL, onR, scrut)
  NatTy,   //
  Zero,    //
  Succ,    // (pred)
  NatRec,  // (motive, onZero, onSucc, scrut)
  UnitTy,  //
  Star,    //
  VoidTy,  //
  Abort,   // (target, scrut)
  U0,      //
  U1,      //
  IdTy,    // (ty, lhs, rhs)
  Refl,    // (ty, tm)
  JElim,   // (motive, onRefl, path)
  Inv,     // (path)
  Concat,  // (lhs, rhs)
  ApFn,    // (fun, path)
  Coe,     // (path, tm)
  Ua,      // (equiv)
  S1Ty,    //
  BasePt,  //
  LoopPath,//
  S1Rec,   // (onBase, onLoop)
  S1Ind,   // (motive, onBase, onLoop)
};

struct RawTerm;
using RawPtr = std::shared_ptr<const RawTerm>;

struct RawTerm {
  RTag tag;
  std::string text;
  std::vector<RawPtr> kid;
  Span span;

  RawTerm(RTag t, std::string s, std::vector<RawPtr> k, Span sp)
      : tag(t), text(std::move(s)), kid(std::move(k)), span(sp) {}
};

inline RawPtr raw(RTag t, std::vector<RawPtr> kid, Span sp, std::string text = {}) {
  return std::make_shared<RawTerm>(t, std::move(text), std::move(kid), sp);
}

struct Decl {
  std::string name;
  Span name_span;
  RawPtr type;
  RawPtr body;
};

} // namespace hott
