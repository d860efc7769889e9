#include "hott/eval.hpp"

#include <cassert>

namespace hott {

namespace vmk {

ValuePtr node(VTag t, std::vector<ValuePtr> item, uint32_t datum, std::string text,
              std::optional<Closure> clo) {
  return std::make_shared<const Value>(t, datum, std::move(text), std::move(item),
                                       std::move(clo));
}

} // namespace vmk

void Evaluator::tick() {
  if (++steps_ > opt_.budget) throw BudgetExceeded{opt_.budget};
}

ValuePtr Evaluator::eval(const TermPtr& t, const Env& env) {
  tick();
  switch (t->tag) {
  case Tag::Var: {
    uint32_t i = t->datum;
    assert(i < env.size());
    return env[env.size() - 1 - i];
  }
  case Tag::Global: {
    auto it = cache_.find(t->text);
    if (it != cache_.end()) return it->second;
    const GlobalDef* def = globals_.find(t->text);
    ValuePtr v = def && def->body ? eval(*def->body, {}) : vmk::global(t->text);
    cache_.emplace(t->text, v);
    return v;
  }
  case Tag::Lam: return vmk::lam(Closure{env, t->kid[0], t->text});
  case Tag::App: return apply(eval(t->kid[0], env), eval(t->kid[1], env));
  case Tag::Pi: return vmk::pi(eval(t->kid[0], env), Closure{env, t->kid[1], t->text});
  case Tag::Sigma: return vmk::sigma(eval(t->kid[0], env), Closure{env, t->kid[1], t->text});
  case Tag::Pair: return vmk::pair(eval(t->kid[0], env), eval(t->kid[1], env));
  case Tag::ProjL: return do_projl(eval(t->kid[0], env));
  case Tag::ProjR: return do_projr(eval(t->kid[0], env));
  case Tag::SumTy: return vmk::sum_ty(eval(t->kid[0], env), eval(t->kid[1], env));
  case Tag::Inl: return vmk::inl(eval(t->kid[0], env));
  case Tag::Inr: return vmk::inr(eval(t->kid[0], env));
  case Tag::SumCase:
    return do_case(eval(t->kid[0], env), eval(t->kid[1], env), eval(t->kid[2], env),
                   eval(t->kid[3], env));
  case Tag::NatTy: return vmk::nat();
  case Tag::Zero: return vmk::zero();
  case Tag::Succ: return vmk::succ(eval(t->kid[0], env));
  case Tag::NatRec:
    return do_natrec(eval(t->kid[0], env), eval(t->kid[1], env), eval(t->kid[2], env),
                     eval(t->kid[3], env));
  case Tag::UnitTy: return vmk::unit();
  case Tag::Star: return vmk::star();
  case Tag::VoidTy: return vmk::void_ty();
  case Tag::VoidElim: return vmk::void_elim(eval(t->kid[0], env), eval(t->kid[1], env));
  case Tag::Univ: return vmk::univ(t->datum);
  case Tag::IdTy:
    return vmk::id_ty(eval(t->kid[0], env), eval(t->kid[1], env), eval(t->kid[2], env));
  case Tag::Refl: return vmk::refl(eval(t->kid[0], env), eval(t->kid[1], env));
  case Tag::J:
    return do_j(eval(t->kid[0], env), eval(t->kid[1], env), eval(t->kid[2], env),
                eval(t->kid[3], env), eval(t->kid[4], env));
  case Tag::PathInv: return do_inv(eval(t->kid[0], env));
  case Tag::PathConcat: return do_concat(eval(t->kid[0], env), eval(t->kid[1], env));
  case Tag::Ap:
    return do_ap(eval(t->kid[0], env), eval(t->kid[1], env), eval(t->kid[2], env));
  case Tag::Coe: return do_coe(eval(t->kid[0], env), eval(t->kid[1], env));
  case Tag::Ua: return vmk::ua(eval(t->kid[0], env));
  case Tag::S1Ty: return vmk::s1();
  case Tag::BasePt: return vmk::base();
  case Tag::LoopPath: return vmk::loop();
  case Tag::S1Rec: return vmk::s1_rec(t->datum, eval(t->kid[0], env), eval(t->kid[1], env));
  case Tag::S1Ind:
    return vmk::s1_ind(eval(t->kid[0], env), eval(t->kid[1], env), eval(t->kid[2], env));
  }
  assert(false);
  return nullptr;
}

ValuePtr Evaluator::apply_closure(const Closure& c, const ValuePtr& a) {
  Env env = c.env;
  env.push_back(a);
  return eval(c.body, env);
}

ValuePtr Evaluator::apply(const ValuePtr& f, const ValuePtr& a) {
  tick();
  switch (f->tag) {
  case VTag::Lam: return apply_closure(*f->clo, a);
  case VTag::S1RecFn:
    if (a->tag == VTag::Base) return f->item[0];
    return vmk::app(f, a);
  case VTag::S1IndFn:
    if (a->tag == VTag::Base) return f->item[1];
    return vmk::app(f, a);
  default: return vmk::app(f, a);
  }
}

ValuePtr Evaluator::do_projl(const ValuePtr& p) {
  tick();
  if (p->tag == VTag::Pair) return p->item[0];
  return vmk::projl(p);
}

ValuePtr Evaluator::do_projr(const ValuePtr& p) {
  tick();
  if (p->tag == VTag::Pair) return p->item[1];
  return vmk::projr(p);
}

ValuePtr Evaluator::do_case(const ValuePtr& motive, const ValuePtr& onl, const ValuePtr& onr,
                            const ValuePtr& scrut) {
  tick();
  if (scrut->tag == VTag::Inl) return apply(onl, scrut->item[0]);
  if (scrut->tag == VTag::Inr) return apply(onr, scrut->item[0]);
  return vmk::sum_case(motive, onl, onr, scrut);
}

ValuePtr Evaluator::do_natrec(const ValuePtr& motive, const ValuePtr& z, const ValuePtr& s,
                              const ValuePtr& scrut) {
  tick();
  if (scrut->tag == VTag::Zero) return z;
  if (scrut->tag == VTag::Succ) {
    const ValuePtr& pred = scrut->item[0];
    return apply(apply(s, pred), do_natrec(motive, z, s, pred));
  }
  return vmk::nat_rec(motive, z, s, scrut);
}

ValuePtr Evaluator::do_j(const ValuePtr& motive, const ValuePtr& d, const ValuePtr& l,
                         const ValuePtr& r, const ValuePtr& p) {
  tick();
  if (p->tag == VTag::Refl) return apply(d, p->item[1]);
  return vmk::j_elim(motive, d, l, r, p);
}

ValuePtr Evaluator::do_inv(const ValuePtr& p) {
  tick();
  if (p->tag == VTag::Refl) return p;
  return vmk::inv(p);
}

ValuePtr Evaluator::do_concat(const ValuePtr& p, const ValuePtr& q) {
  tick();
  if (p->tag == VTag::Refl) return q;
  if (q->tag == VTag::Refl) return p;
  return vmk::concat(p, q);
}

ValuePtr Evaluator::do_ap(const ValuePtr& f, const ValuePtr& p, const ValuePtr& cod) {
  tick();
  if (p->tag == VTag::Refl) return vmk::refl(cod, apply(f, p->item[1]));
  if (f->tag == VTag::S1RecFn && p->tag == VTag::Loop) return f->item[1];
  if (opt_.compute) {
    if (p->tag == VTag::Concat)
      return do_concat(do_ap(f, p->item[0], cod), do_ap(f, p->item[1], cod));
    if (p->tag == VTag::Inv) return do_inv(do_ap(f, p->item[0], cod));
  }
  return vmk::ap_stuck(f, p, cod);
}

ValuePtr Evaluator::do_coe(const ValuePtr& p, const ValuePtr& v) {
  tick();
  if (p->tag == VTag::Refl) return v;
  if (p->tag == VTag::Ua) return apply(do_projl(p->item[0]), v);
  if (opt_.compute) {
    if (p->tag == VTag::Concat) return do_coe(p->item[1], do_coe(p->item[0], v));
    if (p->tag == VTag::Inv && p->item[0]->tag == VTag::Ua)
      return apply(do_projl(do_projr(p->item[0]->item[0])), v);
  }
  return vmk::coe_stuck(p, v);
}

TermPtr Evaluator::readback(const ValuePtr& v, size_t depth) {
  switch (v->tag) {
  case VTag::Lam: {
    ValuePtr body = apply_closure(*v->clo, vmk::var(static_cast<uint32_t>(depth)));
    return mk::lam(v->clo->hint, readback(body, depth + 1));
  }
  case VTag::Pi:
  case VTag::Sigma: {
    TermPtr dom = readback(v->item[0], depth);
    ValuePtr cod = apply_closure(*v->clo, vmk::var(static_cast<uint32_t>(depth)));
    TermPtr codt = readback(cod, depth + 1);
    return v->tag == VTag::Pi ? mk::pi(v->clo->hint, dom, codt)
                              : mk::sigma(v->clo->hint, dom, codt);
  }
  case VTag::Pair: return mk::pair(readback(v->item[0], depth), readback(v->item[1], depth));
  case VTag::Inl: return mk::inl(readback(v->item[0], depth));
  case VTag::Inr: return mk::inr(readback(v->item[0], depth));
  case VTag::SumTy: return mk::sum_ty(readback(v->item[0], depth), readback(v->item[1], depth));
  case VTag::NatTy: return mk::nat();
  case VTag::Zero: return mk::zero();
  case VTag::Succ: return mk::succ(readback(v->item[0], depth));
  case VTag::UnitTy: return mk::unit();
  case VTag::Star: return mk::star();
  case VTag::VoidTy: return mk::void_ty();
  case VTag::Univ: return mk::univ(v->datum);
  case VTag::IdTy:
    // Endpoints read back at the carried type so eta at Unit and Sum payloads
    // reaches inside identity types.
    return mk::id_ty(readback(v->item[0], depth), readback_at(v->item[1], v->item[0], depth),
                     readback_at(v->item[2], v->item[0], depth));
  case VTag::Refl:
    return mk::refl(readback(v->item[0], depth), readback_at(v->item[1], v->item[0], depth));
  case VTag::S1Ty: return mk::s1();
  case VTag::Base: return mk::base();
  case VTag::Loop: return mk::loop();
  case VTag::Inv: return mk::path_inv(readback(v->item[0], depth));
  case VTag::Concat:
    return mk::path_concat(readback(v->item[0], depth), readback(v->item[1], depth));
  case VTag::Ua: return mk::ua(readback(v->item[0], depth));
  case VTag::S1RecFn:
    return mk::s1_rec(v->datum, readback(v->item[0], depth), readback(v->item[1], depth));
  case VTag::S1IndFn:
    return mk::s1_ind(readback(v->item[0], depth), readback(v->item[1], depth),
                      readback(v->item[2], depth));
  case VTag::ApStuck:
    return mk::ap(readback(v->item[0], depth), readback(v->item[1], depth),
                  readback(v->item[2], depth));
  case VTag::CoeStuck:
    return mk::coe(readback(v->item[0], depth), readback(v->item[1], depth));
  case VTag::Var: {
    assert(v->datum < depth);
    return mk::var(static_cast<uint32_t>(depth) - 1 - v->datum);
  }
  case VTag::Global: return mk::global(v->text);
  case VTag::App: return mk::app(readback(v->item[0], depth), readback(v->item[1], depth));
  case VTag::ProjL: return mk::projl(readback(v->item[0], depth));
  case VTag::ProjR: return mk::projr(readback(v->item[0], depth));
  case VTag::Case:
    return mk::sum_case(readback(v->item[0], depth), readback(v->item[1], depth),
                        readback(v->item[2], depth), readback(v->item[3], depth));
  case VTag::NatRec:
    return mk::nat_rec(readback(v->item[0], depth), readback(v->item[1], depth),
                       readback(v->item[2], depth), readback(v->item[3], depth));
  case VTag::VoidElim:
    return mk::void_elim(readback(v->item[0], depth), readback(v->item[1], depth));
  case VTag::JElim:
    return mk::j(readback(v->item[0], depth), readback(v->item[1], depth),
                 readback(v->item[2], depth), readback(v->item[3], depth),
                 readback(v->item[4], depth));
  }
  assert(false);
  return nullptr;
}

TermPtr Evaluator::readback_at(const ValuePtr& v, const ValuePtr& ty, size_t depth) {
  switch (ty->tag) {
  case VTag::Pi: {
    ValuePtr fresh = vmk::var(static_cast<uint32_t>(depth));
    ValuePtr body = apply(v, fresh);
    ValuePtr cod = apply_closure(*ty->clo, fresh);
    std::string hint = v->tag == VTag::Lam ? v->clo->hint : ty->clo->hint;
    return mk::lam(std::move(hint), readback_at(body, cod, depth + 1));
  }
  case VTag::Sigma: {
    ValuePtr a = do_projl(v);
    ValuePtr b = do_projr(v);
    ValuePtr bty = apply_closure(*ty->clo, a);
    return mk::pair(readback_at(a, ty->item[0], depth), readback_at(b, bty, depth));
  }
  case VTag::UnitTy: return mk::star();
  case VTag::SumTy:
    if (v->tag == VTag::Inl) return mk::inl(readback_at(v->item[0], ty->item[0], depth));
    if (v->tag == VTag::Inr) return mk::inr(readback_at(v->item[0], ty->item[1], depth));
    return readback(v, depth);
  case VTag::IdTy:
    if (v->tag == VTag::Refl)
      return mk::refl(readback(ty->item[0], depth),
                      readback_at(v->item[1], ty->item[0], depth));
    return readback(v, depth);
  default: return readback(v, depth);
  }
}

bool Evaluator::convertible(const ValuePtr& a, const ValuePtr& b, const ValuePtr& ty,
                            size_t depth) {
  if (a == b) return true;
  return structural_eq(readback_at(a, ty, depth), readback_at(b, ty, depth));
}

TermPtr normalize_closed(const GlobalTable& globals, const TermPtr& t, EvalOptions opt) {
  Evaluator ev(globals, opt);
  return ev.readback(ev.eval_closed(t), 0);
}

} // namespace hott
