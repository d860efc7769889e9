#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace hott {

// Kernel syntax. Immutable trees shared freely; variables are de Bruijn
// indices with a printing hint kept off to the side. Lam, Pi and Sigma are
// the only binding forms: each binds exactly one variable in its last child.
// Eliminators are fully applied primitives carrying their motives.

enum class Tag : uint8_t {
  Var,        // datum = index
  Global,     // text = environment name
  Lam,        // (body)*                 text = hint
  App,        // (fun, arg)
  Pi,         // (dom, cod*)             text = hint
  Sigma,      // (dom, cod*)             text = hint
  Pair,       // (fst, snd)
  ProjL,      // (pair)
  ProjR,      // (pair)
  SumTy,      // (left, right)
  Inl,        // (payload)
  Inr,        // (payload)
  SumCase,    // (motive, onL, onR, scrut)
  NatTy,      //
  Zero,       //
  Succ,       // (pred)
  NatRec,     // (motive, onZero, onSucc, scrut)
  UnitTy,     //
  Star,       //
  VoidTy,     //
  VoidElim,   // (motive, scrut)         motive is the target type
  Univ,       // datum = level (0 or 1)
  IdTy,       // (ty, lhs, rhs)
  Refl,       // (ty, tm)
  J,          // (motive, onRefl, lhs, rhs, path)
  PathInv,    // (path)
  PathConcat, // (lhs, rhs)
  Ap,         // (fun, path, cod)        cod = codomain of fun, elaborator-filled
  Coe,        // (path, tm)              path lives in a universe
  Ua,         // (equiv)
  S1Ty,       //
  BasePt,     //
  LoopPath,   //
  S1Rec,      // (onBase, onLoop)        datum = target universe level
  S1Ind,      // (motive, onBase, onLoop)
};

class Term;
using TermPtr = std::shared_ptr<const Term>;

class Term {
public:
  Tag tag;
  uint32_t datum = 0;        // Var index, Univ level, S1Rec level
  std::string text;          // binder hint or Global name
  std::vector<TermPtr> kid;

  Term(Tag t, uint32_t d, std::string s, std::vector<TermPtr> k)
      : tag(t), datum(d), text(std::move(s)), kid(std::move(k)) {}
};

// Number of extra binders in scope for child i of a node with this tag.
inline int binder_depth(Tag t, size_t i) {
  switch (t) {
  case Tag::Lam: return 1;
  case Tag::Pi:
  case Tag::Sigma: return i == 1 ? 1 : 0;
  default: return 0;
  }
}

namespace mk {

TermPtr node(Tag t, std::vector<TermPtr> kid = {}, uint32_t datum = 0,
             std::string text = {});

inline TermPtr var(uint32_t i) { return node(Tag::Var, {}, i); }
inline TermPtr global(std::string n) { return node(Tag::Global, {}, 0, std::move(n)); }
inline TermPtr lam(std::string hint, TermPtr body) {
  return node(Tag::Lam, {std::move(body)}, 0, std::move(hint));
}
inline TermPtr app(TermPtr f, TermPtr a) { return node(Tag::App, {std::move(f), std::move(a)}); }
inline TermPtr pi(std::string hint, TermPtr dom, TermPtr cod) {
  return node(Tag::Pi, {std::move(dom), std::move(cod)}, 0, std::move(hint));
}
inline TermPtr sigma(std::string hint, TermPtr dom, TermPtr cod) {
  return node(Tag::Sigma, {std::move(dom), std::move(cod)}, 0, std::move(hint));
}
inline TermPtr pair(TermPtr a, TermPtr b) { return node(Tag::Pair, {std::move(a), std::move(b)}); }
inline TermPtr projl(TermPtr p) { return node(Tag::ProjL, {std::move(p)}); }
inline TermPtr projr(TermPtr p) { return node(Tag::ProjR, {std::move(p)}); }
inline TermPtr sum_ty(TermPtr a, TermPtr b) { return node(Tag::SumTy, {std::move(a), std::move(b)}); }
inline TermPtr inl(TermPtr a) { return node(Tag::Inl, {std::move(a)}); }
inline TermPtr inr(TermPtr b) { return node(Tag::Inr, {std::move(b)}); }
inline TermPtr sum_case(TermPtr motive, TermPtr onl, TermPtr onr, TermPtr scrut) {
  return node(Tag::SumCase, {std::move(motive), std::move(onl), std::move(onr), std::move(scrut)});
}
inline TermPtr nat() { return node(Tag::NatTy); }
inline TermPtr zero() { return node(Tag::Zero); }
inline TermPtr succ(TermPtr n) { return node(Tag::Succ, {std::move(n)}); }
inline TermPtr nat_rec(TermPtr motive, TermPtr z, TermPtr s, TermPtr scrut) {
  return node(Tag::NatRec, {std::move(motive), std::move(z), std::move(s), std::move(scrut)});
}
inline TermPtr unit() { return node(Tag::UnitTy); }
inline TermPtr star() { return node(Tag::Star); }
inline TermPtr void_ty() { return node(Tag::VoidTy); }
inline TermPtr void_elim(TermPtr motive, TermPtr scrut) {
  return node(Tag::VoidElim, {std::move(motive), std::move(scrut)});
}
inline TermPtr univ(uint32_t level) { return node(Tag::Univ, {}, level); }
inline TermPtr id_ty(TermPtr ty, TermPtr l, TermPtr r) {
  return node(Tag::IdTy, {std::move(ty), std::move(l), std::move(r)});
}
inline TermPtr refl(TermPtr ty, TermPtr tm) {
  return node(Tag::Refl, {std::move(ty), std::move(tm)});
}
inline TermPtr j(TermPtr motive, TermPtr on_refl, TermPtr lhs, TermPtr rhs, TermPtr path) {
  return node(Tag::J, {std::move(motive), std::move(on_refl), std::move(lhs), std::move(rhs),
                       std::move(path)});
}
inline TermPtr path_inv(TermPtr p) { return node(Tag::PathInv, {std::move(p)}); }
inline TermPtr path_concat(TermPtr p, TermPtr q) {
  return node(Tag::PathConcat, {std::move(p), std::move(q)});
}
inline TermPtr ap(TermPtr f, TermPtr p, TermPtr cod) {
  return node(Tag::Ap, {std::move(f), std::move(p), std::move(cod)});
}
inline TermPtr coe(TermPtr p, TermPtr tm) { return node(Tag::Coe, {std::move(p), std::move(tm)}); }
inline TermPtr ua(TermPtr e) { return node(Tag::Ua, {std::move(e)}); }
inline TermPtr s1() { return node(Tag::S1Ty); }
inline TermPtr base() { return node(Tag::BasePt); }
inline TermPtr loop() { return node(Tag::LoopPath); }
inline TermPtr s1_rec(uint32_t level, TermPtr on_base, TermPtr on_loop) {
  return node(Tag::S1Rec, {std::move(on_base), std::move(on_loop)}, level);
}
inline TermPtr s1_ind(TermPtr motive, TermPtr on_base, TermPtr on_loop) {
  return node(Tag::S1Ind, {std::move(motive), std::move(on_base), std::move(on_loop)});
}

} // namespace mk

// shift(t, cutoff, amount): add amount to every free index >= cutoff.
// amount may be negative; the caller guarantees no variable is mapped below
// its binder (used for strengthening non-dependent codomains).
TermPtr shift(const TermPtr& t, uint32_t cutoff, int32_t amount);

// subst(t, j, s): replace Var j by s (shifted under binders), lowering the
// indices above j by one.
TermPtr subst(const TermPtr& t, uint32_t j, const TermPtr& s);

// Instantiate the bound variable of a binder body with s: subst(body, 0, s).
inline TermPtr open_binder(const TermPtr& body, const TermPtr& s) { return subst(body, 0, s); }

// Alpha-equality: hints are ignored, global names and all structure compared.
bool structural_eq(const TermPtr& a, const TermPtr& b);

// True when Var i does not occur free in t.
bool var_unused(const TermPtr& t, uint32_t i);

// Typing context: a telescope of (hint, type). Entry i's type is well formed
// in the prefix before it; lookup shifts it into the full context.
class Context {
public:
  struct Entry {
    std::string hint;
    TermPtr type;
  };

  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Innermost binder is index 0.
  const Entry& at_index(uint32_t index) const { return entries_[entries_.size() - 1 - index]; }

  // Type of Var index, shifted to be well formed in the whole context.
  TermPtr type_of(uint32_t index) const {
    return shift(at_index(index).type, 0, static_cast<int32_t>(index) + 1);
  }

  // Index of the innermost entry whose hint is name, or -1.
  int32_t find(const std::string& name) const {
    for (size_t k = 0; k < entries_.size(); ++k) {
      if (entries_[entries_.size() - 1 - k].hint == name) return static_cast<int32_t>(k);
    }
    return -1;
  }

  Context extended(std::string hint, TermPtr type) const {
    Context c = *this;
    c.entries_.push_back({std::move(hint), std::move(type)});
    return c;
  }

  const std::vector<Entry>& entries() const { return entries_; }

private:
  std::vector<Entry> entries_;
};

} // namespace hott
