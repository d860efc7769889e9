#include "hott/check.hpp"

#include <cassert>
#include <functional>
#include <set>
#include <stdexcept>
#include <utility>

#include "hott/parser.hpp"
#include "hott/pretty.hpp"

namespace hott {

namespace {

// Closed type of an equivalence, as a two-argument function. ua arguments
// must have a type convertible to an instance of this.
const TermPtr& equiv_fn() {
  static const TermPtr t = [] {
    using namespace mk;
    TermPtr fwd = pi("x", var(1), var(1));
    TermPtr bwd = pi("y", var(1), var(3));
    TermPtr linv = pi("x", var(3), id_ty(var(4), app(var(1), app(var(2), var(0))), var(0)));
    TermPtr rinv = pi("y", var(3), id_ty(var(4), app(var(3), app(var(2), var(0))), var(0)));
    return lam("A", lam("B", sigma("f", fwd, sigma("g", bwd, sigma("li", linv, rinv)))));
  }();
  return t;
}

} // namespace

struct Elaborator::Impl {
  GlobalTable& globals;
  ElabOptions opt;
  std::string file;
  std::set<std::string> poisoned;
  std::unique_ptr<Evaluator> ev;

  Impl(GlobalTable& g, ElabOptions o, std::string f)
      : globals(g), opt(o), file(std::move(f)) {
    reset();
  }

  void reset() { ev = std::make_unique<Evaluator>(globals, EvalOptions{false, opt.budget}); }

  // ---- scopes ----

  struct Scope {
    Context ctx;
    Env env;                   // identity environment
    std::vector<ValuePtr> tys; // type values, outermost first
    size_t depth() const { return env.size(); }
  };

  Scope extend(const Scope& s, std::string hint, TermPtr ty_term, ValuePtr ty_val) const {
    Scope out{s.ctx.extended(std::move(hint), std::move(ty_term)), s.env, s.tys};
    out.env.push_back(vmk::var(static_cast<uint32_t>(s.env.size())));
    out.tys.push_back(std::move(ty_val));
    return out;
  }

  // ---- failure and display ----

  [[noreturn]] void fail(const Span& sp, std::string msg, std::vector<std::string> notes = {}) {
    throw TypeError{Diagnostic{file, sp, std::move(msg), std::move(notes), DiagKind::Type}};
  }

  std::string show_ty(const Context& ctx, const ValuePtr& ty, size_t depth) {
    return pretty_print(ev->readback(ty, depth), ctx, globals.names());
  }
  std::string show_ty(const Scope& s, const ValuePtr& ty) { return show_ty(s.ctx, ty, s.depth()); }
  std::string show_tm(const Scope& s, const ValuePtr& v, const ValuePtr& ty) {
    return pretty_print(ev->readback_at(v, ty, s.depth()), s.ctx, globals.names());
  }

  bool types_eq(const ValuePtr& a, const ValuePtr& b, size_t depth) {
    return a == b || structural_eq(ev->readback(a, depth), ev->readback(b, depth));
  }

  // ---- type values built from captured values and small open terms ----

  ValuePtr pi_ct(ValuePtr dom, std::string hint, Env captured, TermPtr body) const {
    return vmk::pi(std::move(dom), Closure{std::move(captured), std::move(body), std::move(hint)});
  }
  ValuePtr pi_const(ValuePtr dom, ValuePtr cod) const {
    return pi_ct(std::move(dom), "_", Env{std::move(cod)}, mk::var(1));
  }
  ValuePtr sigma_const(ValuePtr dom, ValuePtr cod) const {
    return vmk::sigma(std::move(dom), Closure{Env{std::move(cod)}, mk::var(1), "_"});
  }

  // The universe a type inhabits, read off its shape. Neutral types can only
  // come from U0-valued families, so they count as small.
  uint32_t level_of_type(const ValuePtr& ty, size_t depth) {
    switch (ty->tag) {
    case VTag::Univ: return ty->datum + 1;
    case VTag::Pi:
    case VTag::Sigma: {
      uint32_t a = level_of_type(ty->item[0], depth);
      ValuePtr cod = ev->apply_closure(*ty->clo, vmk::var(static_cast<uint32_t>(depth)));
      uint32_t b = level_of_type(cod, depth + 1);
      return a > b ? a : b;
    }
    case VTag::SumTy: {
      uint32_t a = level_of_type(ty->item[0], depth);
      uint32_t b = level_of_type(ty->item[1], depth);
      return a > b ? a : b;
    }
    case VTag::IdTy: return level_of_type(ty->item[0], depth);
    default: return 0;
    }
  }

  // ---- surface elaboration ----

  struct Inf {
    TermPtr core;
    ValuePtr type;
  };

  // Motives may land in U0 or U1; try small first and keep its error when
  // neither fits. The large attempt is also how the disabled-gate case is
  // told apart from a plainly ill-typed motive.
  TermPtr check_motive(const Scope& s, const RawPtr& r,
                       const std::function<ValuePtr(uint32_t)>& ty_at) {
    try {
      return check(s, r, ty_at(0));
    } catch (TypeError& e0) {
      TermPtr large;
      try {
        large = check(s, r, ty_at(1));
      } catch (TypeError&) {
        throw e0;
      }
      if (!opt.allow_large_elim)
        fail(r->span, "this motive needs large elimination, which is disabled here");
      return large;
    }
  }

  std::pair<TermPtr, uint32_t> check_type(const Scope& s, const RawPtr& r) {
    Inf i = infer(s, r);
    if (i.type->tag != VTag::Univ)
      fail(r->span, "expected a type", {"this term has type " + show_ty(s, i.type)});
    return {i.core, i.type->datum};
  }

  Inf infer(const Scope& s, const RawPtr& r) {
    switch (r->tag) {
    case RTag::Name: {
      int32_t i = s.ctx.find(r->text);
      if (i >= 0)
        return {mk::var(static_cast<uint32_t>(i)), s.tys[s.tys.size() - 1 - static_cast<size_t>(i)]};
      if (poisoned.count(r->text))
        fail(r->span, "'" + r->text + "' has no usable definition; its declaration failed");
      if (const GlobalDef* def = globals.find(r->text))
        return {mk::global(r->text), ev->eval(def->type, {})};
      fail(r->span, "unbound identifier '" + r->text + "'");
    }
    case RTag::Lam: fail(r->span, "cannot infer the type of a bare lambda");
    case RTag::App: {
      Inf f = infer(s, r->kid[0]);
      if (f.type->tag != VTag::Pi)
        fail(r->kid[0]->span, "applied a non-function", {"it has type " + show_ty(s, f.type)});
      TermPtr a = check(s, r->kid[1], f.type->item[0]);
      return {mk::app(f.core, a), ev->apply_closure(*f.type->clo, ev->eval(a, s.env))};
    }
    case RTag::Pi:
    case RTag::Sigma: {
      auto [domc, l1] = check_type(s, r->kid[0]);
      Scope s2 = extend(s, r->text, domc, ev->eval(domc, s.env));
      auto [codc, l2] = check_type(s2, r->kid[1]);
      TermPtr core = r->tag == RTag::Pi ? mk::pi(r->text, domc, codc)
                                        : mk::sigma(r->text, domc, codc);
      return {core, vmk::univ(l1 > l2 ? l1 : l2)};
    }
    case RTag::Pair: {
      // Unannotated pairs only ever infer a non-dependent product.
      Inf a = infer(s, r->kid[0]);
      Inf b = infer(s, r->kid[1]);
      return {mk::pair(a.core, b.core), sigma_const(a.type, b.type)};
    }
    case RTag::Fst: {
      Inf p = infer(s, r->kid[0]);
      if (p.type->tag != VTag::Sigma)
        fail(r->kid[0]->span, "'fst' needs a pair", {"it has type " + show_ty(s, p.type)});
      return {mk::projl(p.core), p.type->item[0]};
    }
    case RTag::Snd: {
      Inf p = infer(s, r->kid[0]);
      if (p.type->tag != VTag::Sigma)
        fail(r->kid[0]->span, "'snd' needs a pair", {"it has type " + show_ty(s, p.type)});
      ValuePtr pv = ev->eval(p.core, s.env);
      return {mk::projr(p.core), ev->apply_closure(*p.type->clo, ev->do_projl(pv))};
    }
    case RTag::SumTy: {
      auto [ac, l1] = check_type(s, r->kid[0]);
      auto [bc, l2] = check_type(s, r->kid[1]);
      return {mk::sum_ty(ac, bc), vmk::univ(l1 > l2 ? l1 : l2)};
    }
    case RTag::Inl:
    case RTag::Inr: fail(r->span, "cannot infer the type of a sum injection");
    case RTag::Case: {
      Inf sc = infer(s, r->kid[3]);
      if (sc.type->tag != VTag::SumTy)
        fail(r->kid[3]->span, "case needs a sum scrutinee",
             {"it has type " + show_ty(s, sc.type)});
      ValuePtr sumv = sc.type;
      TermPtr Cc = check_motive(s, r->kid[0],
                                [&](uint32_t l) { return pi_const(sumv, vmk::univ(l)); });
      ValuePtr Cv = ev->eval(Cc, s.env);
      TermPtr fc = check(s, r->kid[1], pi_ct(sumv->item[0], "a", Env{Cv},
                                             mk::app(mk::var(1), mk::inl(mk::var(0)))));
      TermPtr gc = check(s, r->kid[2], pi_ct(sumv->item[1], "b", Env{Cv},
                                             mk::app(mk::var(1), mk::inr(mk::var(0)))));
      return {mk::sum_case(Cc, fc, gc, sc.core), ev->apply(Cv, ev->eval(sc.core, s.env))};
    }
    case RTag::NatTy: return {mk::nat(), vmk::univ(0)};
    case RTag::Zero: return {mk::zero(), vmk::nat()};
    case RTag::Succ: return {mk::succ(check(s, r->kid[0], vmk::nat())), vmk::nat()};
    case RTag::NatRec: {
      TermPtr nc = check(s, r->kid[3], vmk::nat());
      TermPtr Cc = check_motive(s, r->kid[0],
                                [&](uint32_t l) { return pi_const(vmk::nat(), vmk::univ(l)); });
      ValuePtr Cv = ev->eval(Cc, s.env);
      TermPtr zc = check(s, r->kid[1], ev->apply(Cv, vmk::zero()));
      TermPtr stepc = check(s, r->kid[2],
                            pi_ct(vmk::nat(), "k", Env{Cv},
                                  mk::pi("_", mk::app(mk::var(1), mk::var(0)),
                                         mk::app(mk::var(2), mk::succ(mk::var(1))))));
      return {mk::nat_rec(Cc, zc, stepc, nc), ev->apply(Cv, ev->eval(nc, s.env))};
    }
    case RTag::UnitTy: return {mk::unit(), vmk::univ(0)};
    case RTag::Star: return {mk::star(), vmk::unit()};
    case RTag::VoidTy: return {mk::void_ty(), vmk::univ(0)};
    case RTag::Abort: {
      TermPtr tc = check_type(s, r->kid[0]).first;
      TermPtr sc = check(s, r->kid[1], vmk::void_ty());
      return {mk::void_elim(tc, sc), ev->eval(tc, s.env)};
    }
    case RTag::U0: return {mk::univ(0), vmk::univ(1)};
    case RTag::U1: fail(r->span, "U1 is a classifier only; no type contains it");
    case RTag::IdTy: {
      auto [ac, l] = check_type(s, r->kid[0]);
      ValuePtr Av = ev->eval(ac, s.env);
      TermPtr lc = check(s, r->kid[1], Av);
      TermPtr rc = check(s, r->kid[2], Av);
      return {mk::id_ty(ac, lc, rc), vmk::univ(l)};
    }
    case RTag::Refl: {
      TermPtr ac = check_type(s, r->kid[0]).first;
      ValuePtr Av = ev->eval(ac, s.env);
      TermPtr tc = check(s, r->kid[1], Av);
      ValuePtr tv = ev->eval(tc, s.env);
      return {mk::refl(ac, tc), vmk::id_ty(Av, tv, tv)};
    }
    case RTag::JElim: {
      Inf p = infer(s, r->kid[2]);
      if (p.type->tag != VTag::IdTy)
        fail(r->kid[2]->span, "J needs an identity path", {"it has type " + show_ty(s, p.type)});
      ValuePtr A = p.type->item[0];
      ValuePtr lv = p.type->item[1];
      ValuePtr rv = p.type->item[2];
      TermPtr Cc = check_motive(s, r->kid[0], [&](uint32_t l) {
        return pi_ct(A, "x", Env{A},
                     mk::pi("y", mk::var(1),
                            mk::pi("q", mk::id_ty(mk::var(2), mk::var(1), mk::var(0)),
                                   mk::univ(l))));
      });
      ValuePtr Cv = ev->eval(Cc, s.env);
      TermPtr dc = check(s, r->kid[1],
                         pi_ct(A, "x", Env{A, Cv},
                               mk::app(mk::app(mk::app(mk::var(1), mk::var(0)), mk::var(0)),
                                       mk::refl(mk::var(2), mk::var(0)))));
      ValuePtr res = ev->apply(ev->apply(ev->apply(Cv, lv), rv), ev->eval(p.core, s.env));
      return {mk::j(Cc, dc, ev->readback(lv, s.depth()), ev->readback(rv, s.depth()), p.core),
              res};
    }
    case RTag::Inv: {
      Inf p = infer(s, r->kid[0]);
      if (p.type->tag != VTag::IdTy)
        fail(r->kid[0]->span, "'!' needs an identity path",
             {"it has type " + show_ty(s, p.type)});
      return {mk::path_inv(p.core),
              vmk::id_ty(p.type->item[0], p.type->item[2], p.type->item[1])};
    }
    case RTag::Concat: {
      Inf p = infer(s, r->kid[0]);
      Inf q = infer(s, r->kid[1]);
      if (p.type->tag != VTag::IdTy)
        fail(r->kid[0]->span, "'*' needs identity paths",
             {"the left side has type " + show_ty(s, p.type)});
      if (q.type->tag != VTag::IdTy)
        fail(r->kid[1]->span, "'*' needs identity paths",
             {"the right side has type " + show_ty(s, q.type)});
      if (!types_eq(p.type->item[0], q.type->item[0], s.depth()))
        fail(r->span, "path concatenation over different types",
             {"left:  " + show_ty(s, p.type), "right: " + show_ty(s, q.type)});
      if (!ev->convertible(p.type->item[2], q.type->item[1], p.type->item[0], s.depth()))
        fail(r->span, "path concatenation endpoint mismatch",
             {"the left path ends at " + show_tm(s, p.type->item[2], p.type->item[0]),
              "the right path starts at " + show_tm(s, q.type->item[1], q.type->item[0])});
      return {mk::path_concat(p.core, q.core),
              vmk::id_ty(p.type->item[0], p.type->item[1], q.type->item[2])};
    }
    case RTag::ApFn: {
      Inf f = infer(s, r->kid[0]);
      if (f.type->tag != VTag::Pi)
        fail(r->kid[0]->span, "ap needs a function", {"it has type " + show_ty(s, f.type)});
      ValuePtr codv =
          ev->apply_closure(*f.type->clo, vmk::var(static_cast<uint32_t>(s.depth())));
      TermPtr codt = ev->readback(codv, s.depth() + 1);
      if (!var_unused(codt, 0))
        fail(r->kid[0]->span, "ap needs a non-dependent function",
             {"it has type " + show_ty(s, f.type)});
      ValuePtr Bv = ev->eval(shift(codt, 0, -1), s.env);
      Inf p = infer(s, r->kid[1]);
      if (p.type->tag != VTag::IdTy)
        fail(r->kid[1]->span, "ap needs a path", {"it has type " + show_ty(s, p.type)});
      if (!types_eq(p.type->item[0], f.type->item[0], s.depth()))
        fail(r->span, "the function's domain does not match the path",
             {"domain:    " + show_ty(s, f.type->item[0]),
              "path over: " + show_ty(s, p.type->item[0])});
      ValuePtr fv = ev->eval(f.core, s.env);
      return {mk::ap(f.core, p.core, ev->readback(Bv, s.depth())),
              vmk::id_ty(Bv, ev->apply(fv, p.type->item[1]), ev->apply(fv, p.type->item[2]))};
    }
    case RTag::Coe: {
      Inf p = infer(s, r->kid[0]);
      if (p.type->tag != VTag::IdTy || p.type->item[0]->tag != VTag::Univ)
        fail(r->kid[0]->span, "coe needs a path between types",
             {"it has type " + show_ty(s, p.type)});
      TermPtr tc = check(s, r->kid[1], p.type->item[1]);
      return {mk::coe(p.core, tc), p.type->item[2]};
    }
    case RTag::Ua: {
      Inf e = infer(s, r->kid[0]);
      ValuePtr A, B;
      bool ok = e.type->tag == VTag::Sigma && e.type->item[0]->tag == VTag::Pi;
      if (ok) {
        const ValuePtr& fn_ty = e.type->item[0];
        A = fn_ty->item[0];
        ValuePtr codv =
            ev->apply_closure(*fn_ty->clo, vmk::var(static_cast<uint32_t>(s.depth())));
        TermPtr codt = ev->readback(codv, s.depth() + 1);
        if (var_unused(codt, 0)) {
          B = ev->eval(shift(codt, 0, -1), s.env);
          ValuePtr expect = ev->apply(ev->apply(ev->eval(equiv_fn(), {}), A), B);
          ok = level_of_type(A, s.depth()) == 0 && level_of_type(B, s.depth()) == 0 &&
               types_eq(e.type, expect, s.depth());
        } else {
          ok = false;
        }
      }
      if (!ok)
        fail(r->kid[0]->span, "ua needs an equivalence between U0 types",
             {"it has type " + show_ty(s, e.type)});
      return {mk::ua(e.core), vmk::id_ty(vmk::univ(0), A, B)};
    }
    case RTag::S1Ty: return {mk::s1(), vmk::univ(0)};
    case RTag::BasePt: return {mk::base(), vmk::s1()};
    case RTag::LoopPath: return {mk::loop(), vmk::id_ty(vmk::s1(), vmk::base(), vmk::base())};
    case RTag::S1Rec: {
      Inf b = infer(s, r->kid[0]);
      uint32_t level = level_of_type(b.type, s.depth());
      if (level >= 1 && !opt.allow_large_elim)
        fail(r->span, "large circle recursion is disabled here");
      ValuePtr bv = ev->eval(b.core, s.env);
      TermPtr lc = check(s, r->kid[1], vmk::id_ty(b.type, bv, bv));
      return {mk::s1_rec(level, b.core, lc), pi_const(vmk::s1(), b.type)};
    }
    case RTag::S1Ind: {
      TermPtr Cc;
      try {
        Cc = check(s, r->kid[0], pi_const(vmk::s1(), vmk::univ(0)));
      } catch (TypeError& e0) {
        bool large = false;
        try {
          check(s, r->kid[0], pi_const(vmk::s1(), vmk::univ(1)));
          large = true;
        } catch (TypeError&) {
        }
        if (large) fail(r->kid[0]->span, "S1ind motive must land in U0");
        throw e0;
      }
      ValuePtr Cv = ev->eval(Cc, s.env);
      ValuePtr at_base = ev->apply(Cv, vmk::base());
      TermPtr bc = check(s, r->kid[1], at_base);
      ValuePtr bv = ev->eval(bc, s.env);
      ValuePtr ob =
          vmk::id_ty(at_base, ev->do_coe(ev->do_ap(Cv, vmk::loop(), vmk::univ(0)), bv), bv);
      TermPtr lc = check(s, r->kid[2], ob);
      return {mk::s1_ind(Cc, bc, lc),
              pi_ct(vmk::s1(), "x", Env{Cv}, mk::app(mk::var(1), mk::var(0)))};
    }
    }
    assert(false);
    throw TypeError{};
  }

  TermPtr check(const Scope& s, const RawPtr& r, const ValuePtr& ty) {
    switch (r->tag) {
    case RTag::Lam: {
      if (ty->tag != VTag::Pi)
        fail(r->span, "a lambda cannot have this type", {"expected " + show_ty(s, ty)});
      const ValuePtr& dom = ty->item[0];
      Scope s2 = extend(s, r->text, ev->readback(dom, s.depth()), dom);
      ValuePtr cod = ev->apply_closure(*ty->clo, vmk::var(static_cast<uint32_t>(s.depth())));
      return mk::lam(r->text, check(s2, r->kid[0], cod));
    }
    case RTag::Pair: {
      if (ty->tag != VTag::Sigma)
        fail(r->span, "a pair cannot have this type", {"expected " + show_ty(s, ty)});
      TermPtr a = check(s, r->kid[0], ty->item[0]);
      TermPtr b = check(s, r->kid[1], ev->apply_closure(*ty->clo, ev->eval(a, s.env)));
      return mk::pair(a, b);
    }
    case RTag::Inl: {
      if (ty->tag != VTag::SumTy)
        fail(r->span, "a sum injection cannot have this type", {"expected " + show_ty(s, ty)});
      return mk::inl(check(s, r->kid[0], ty->item[0]));
    }
    case RTag::Inr: {
      if (ty->tag != VTag::SumTy)
        fail(r->span, "a sum injection cannot have this type", {"expected " + show_ty(s, ty)});
      return mk::inr(check(s, r->kid[0], ty->item[1]));
    }
    case RTag::U1: fail(r->span, "U1 is a classifier only; no type contains it");
    case RTag::Ua:
      // Checking mode reaches arguments (literal tuples of lambdas) that
      // inference cannot.
      if (ty->tag == VTag::IdTy && ty->item[0]->tag == VTag::Univ && ty->item[0]->datum == 0) {
        ValuePtr expect =
            ev->apply(ev->apply(ev->eval(equiv_fn(), {}), ty->item[1]), ty->item[2]);
        return mk::ua(check(s, r->kid[0], expect));
      }
      [[fallthrough]];
    default: {
      Inf i = infer(s, r);
      if (!types_eq(i.type, ty, s.depth()))
        fail(r->span, "type mismatch",
             {"expected: " + show_ty(s, ty), "actual:   " + show_ty(s, i.type)});
      return i.core;
    }
    }
  }

  // ---- declarations ----

  void add_decl_body(const Decl& d) {
    Scope top;
    TermPtr typec;
    if (d.type->tag == RTag::U1) typec = mk::univ(1);
    else typec = check_type(top, d.type).first;
    ValuePtr tyv = ev->eval(typec, {});
    TermPtr bodyc = check(top, d.body, tyv);
    globals.add(d.name, typec, bodyc);
  }

  // ---- kernel-term checking ----

  struct CScope {
    Context ctx;
    Env env;
    size_t depth() const { return env.size(); }
  };

  CScope cextend(const CScope& s, std::string hint, TermPtr ty) const {
    CScope out{s.ctx.extended(std::move(hint), std::move(ty)), s.env};
    out.env.push_back(vmk::var(static_cast<uint32_t>(s.env.size())));
    return out;
  }

  [[noreturn]] void cfail(std::string msg, std::vector<std::string> notes = {}) {
    throw TypeError{Diagnostic{file, Span{}, std::move(msg), std::move(notes), DiagKind::Type}};
  }

  void cmotive(const CScope& s, const TermPtr& m,
               const std::function<ValuePtr(uint32_t)>& ty_at) {
    try {
      ccheck(s, m, ty_at(0));
    } catch (TypeError& e0) {
      try {
        ccheck(s, m, ty_at(1));
      } catch (TypeError&) {
        throw e0;
      }
      if (!opt.allow_large_elim)
        cfail("this motive needs large elimination, which is disabled here");
    }
  }

  uint32_t ctype(const CScope& s, const TermPtr& t) {
    ValuePtr ty = cinfer(s, t);
    if (ty->tag != VTag::Univ)
      cfail("expected a type", {"this term has type " + show_ty(s.ctx, ty, s.depth())});
    return ty->datum;
  }

  ValuePtr cinfer(const CScope& s, const TermPtr& t) {
    switch (t->tag) {
    case Tag::Var: {
      if (t->datum >= s.depth()) cfail("unbound variable in kernel term");
      return ev->eval(s.ctx.type_of(t->datum), s.env);
    }
    case Tag::Global: {
      const GlobalDef* def = globals.find(t->text);
      if (!def) cfail("unbound global '" + t->text + "'");
      return ev->eval(def->type, {});
    }
    case Tag::Lam: cfail("cannot infer the type of a bare lambda");
    case Tag::App: {
      ValuePtr fty = cinfer(s, t->kid[0]);
      if (fty->tag != VTag::Pi)
        cfail("applied a non-function", {"it has type " + show_ty(s.ctx, fty, s.depth())});
      ccheck(s, t->kid[1], fty->item[0]);
      return ev->apply_closure(*fty->clo, ev->eval(t->kid[1], s.env));
    }
    case Tag::Pi:
    case Tag::Sigma: {
      uint32_t l1 = ctype(s, t->kid[0]);
      CScope s2 = cextend(s, t->text, t->kid[0]);
      uint32_t l2 = ctype(s2, t->kid[1]);
      return vmk::univ(l1 > l2 ? l1 : l2);
    }
    case Tag::Pair: cfail("cannot infer the type of a pair");
    case Tag::ProjL: {
      ValuePtr pty = cinfer(s, t->kid[0]);
      if (pty->tag != VTag::Sigma) cfail("'fst' needs a pair");
      return pty->item[0];
    }
    case Tag::ProjR: {
      ValuePtr pty = cinfer(s, t->kid[0]);
      if (pty->tag != VTag::Sigma) cfail("'snd' needs a pair");
      return ev->apply_closure(*pty->clo, ev->do_projl(ev->eval(t->kid[0], s.env)));
    }
    case Tag::SumTy: {
      uint32_t l1 = ctype(s, t->kid[0]);
      uint32_t l2 = ctype(s, t->kid[1]);
      return vmk::univ(l1 > l2 ? l1 : l2);
    }
    case Tag::Inl:
    case Tag::Inr: cfail("cannot infer the type of a sum injection");
    case Tag::SumCase: {
      ValuePtr sty = cinfer(s, t->kid[3]);
      if (sty->tag != VTag::SumTy) cfail("case needs a sum scrutinee");
      cmotive(s, t->kid[0], [&](uint32_t l) { return pi_const(sty, vmk::univ(l)); });
      ValuePtr Cv = ev->eval(t->kid[0], s.env);
      ccheck(s, t->kid[1],
             pi_ct(sty->item[0], "a", Env{Cv}, mk::app(mk::var(1), mk::inl(mk::var(0)))));
      ccheck(s, t->kid[2],
             pi_ct(sty->item[1], "b", Env{Cv}, mk::app(mk::var(1), mk::inr(mk::var(0)))));
      return ev->apply(Cv, ev->eval(t->kid[3], s.env));
    }
    case Tag::NatTy: return vmk::univ(0);
    case Tag::Zero: return vmk::nat();
    case Tag::Succ: {
      ccheck(s, t->kid[0], vmk::nat());
      return vmk::nat();
    }
    case Tag::NatRec: {
      ccheck(s, t->kid[3], vmk::nat());
      cmotive(s, t->kid[0], [&](uint32_t l) { return pi_const(vmk::nat(), vmk::univ(l)); });
      ValuePtr Cv = ev->eval(t->kid[0], s.env);
      ccheck(s, t->kid[1], ev->apply(Cv, vmk::zero()));
      ccheck(s, t->kid[2],
             pi_ct(vmk::nat(), "k", Env{Cv},
                   mk::pi("_", mk::app(mk::var(1), mk::var(0)),
                          mk::app(mk::var(2), mk::succ(mk::var(1))))));
      return ev->apply(Cv, ev->eval(t->kid[3], s.env));
    }
    case Tag::UnitTy: return vmk::univ(0);
    case Tag::Star: return vmk::unit();
    case Tag::VoidTy: return vmk::univ(0);
    case Tag::VoidElim: {
      ctype(s, t->kid[0]);
      ccheck(s, t->kid[1], vmk::void_ty());
      return ev->eval(t->kid[0], s.env);
    }
    case Tag::Univ:
      if (t->datum >= 1) cfail("U1 is a classifier only; no type contains it");
      return vmk::univ(1);
    case Tag::IdTy: {
      uint32_t l = ctype(s, t->kid[0]);
      ValuePtr Av = ev->eval(t->kid[0], s.env);
      ccheck(s, t->kid[1], Av);
      ccheck(s, t->kid[2], Av);
      return vmk::univ(l);
    }
    case Tag::Refl: {
      ctype(s, t->kid[0]);
      ValuePtr Av = ev->eval(t->kid[0], s.env);
      ccheck(s, t->kid[1], Av);
      ValuePtr tv = ev->eval(t->kid[1], s.env);
      return vmk::id_ty(Av, tv, tv);
    }
    case Tag::J: {
      ValuePtr pty = cinfer(s, t->kid[4]);
      if (pty->tag != VTag::IdTy) cfail("J needs an identity path");
      const ValuePtr& A = pty->item[0];
      cmotive(s, t->kid[0], [&](uint32_t l) {
        return pi_ct(A, "x", Env{A},
                     mk::pi("y", mk::var(1),
                            mk::pi("q", mk::id_ty(mk::var(2), mk::var(1), mk::var(0)),
                                   mk::univ(l))));
      });
      ValuePtr Cv = ev->eval(t->kid[0], s.env);
      ccheck(s, t->kid[1],
             pi_ct(A, "x", Env{A, Cv},
                   mk::app(mk::app(mk::app(mk::var(1), mk::var(0)), mk::var(0)),
                           mk::refl(mk::var(2), mk::var(0)))));
      ccheck(s, t->kid[2], A);
      ccheck(s, t->kid[3], A);
      if (!ev->convertible(ev->eval(t->kid[2], s.env), pty->item[1], A, s.depth()) ||
          !ev->convertible(ev->eval(t->kid[3], s.env), pty->item[2], A, s.depth()))
        cfail("J endpoint annotations do not match the path");
      return ev->apply(ev->apply(ev->apply(Cv, pty->item[1]), pty->item[2]),
                       ev->eval(t->kid[4], s.env));
    }
    case Tag::PathInv: {
      ValuePtr pty = cinfer(s, t->kid[0]);
      if (pty->tag != VTag::IdTy) cfail("'!' needs an identity path");
      return vmk::id_ty(pty->item[0], pty->item[2], pty->item[1]);
    }
    case Tag::PathConcat: {
      ValuePtr pty = cinfer(s, t->kid[0]);
      ValuePtr qty = cinfer(s, t->kid[1]);
      if (pty->tag != VTag::IdTy || qty->tag != VTag::IdTy)
        cfail("'*' needs identity paths");
      if (!types_eq(pty->item[0], qty->item[0], s.depth()))
        cfail("path concatenation over different types");
      if (!ev->convertible(pty->item[2], qty->item[1], pty->item[0], s.depth()))
        cfail("path concatenation endpoint mismatch");
      return vmk::id_ty(pty->item[0], pty->item[1], qty->item[2]);
    }
    case Tag::Ap: {
      ValuePtr pty = cinfer(s, t->kid[1]);
      if (pty->tag != VTag::IdTy) cfail("ap needs a path");
      ctype(s, t->kid[2]);
      ValuePtr codv = ev->eval(t->kid[2], s.env);
      ccheck(s, t->kid[0], pi_const(pty->item[0], codv));
      ValuePtr fv = ev->eval(t->kid[0], s.env);
      return vmk::id_ty(codv, ev->apply(fv, pty->item[1]), ev->apply(fv, pty->item[2]));
    }
    case Tag::Coe: {
      ValuePtr pty = cinfer(s, t->kid[0]);
      if (pty->tag != VTag::IdTy || pty->item[0]->tag != VTag::Univ)
        cfail("coe needs a path between types");
      ccheck(s, t->kid[1], pty->item[1]);
      return pty->item[2];
    }
    case Tag::Ua: {
      ValuePtr ety = cinfer(s, t->kid[0]);
      ValuePtr A, B;
      bool ok = ety->tag == VTag::Sigma && ety->item[0]->tag == VTag::Pi;
      if (ok) {
        const ValuePtr& fn_ty = ety->item[0];
        A = fn_ty->item[0];
        ValuePtr codv =
            ev->apply_closure(*fn_ty->clo, vmk::var(static_cast<uint32_t>(s.depth())));
        TermPtr codt = ev->readback(codv, s.depth() + 1);
        if (var_unused(codt, 0)) {
          B = ev->eval(shift(codt, 0, -1), s.env);
          ValuePtr expect = ev->apply(ev->apply(ev->eval(equiv_fn(), {}), A), B);
          ok = level_of_type(A, s.depth()) == 0 && level_of_type(B, s.depth()) == 0 &&
               types_eq(ety, expect, s.depth());
        } else {
          ok = false;
        }
      }
      if (!ok) cfail("ua needs an equivalence between U0 types");
      return vmk::id_ty(vmk::univ(0), A, B);
    }
    case Tag::S1Ty: return vmk::univ(0);
    case Tag::BasePt: return vmk::s1();
    case Tag::LoopPath: return vmk::id_ty(vmk::s1(), vmk::base(), vmk::base());
    case Tag::S1Rec: {
      ValuePtr Cv = cinfer(s, t->kid[0]);
      uint32_t level = level_of_type(Cv, s.depth());
      if (level != t->datum) cfail("circle recursion level annotation mismatch");
      if (level >= 1 && !opt.allow_large_elim)
        cfail("large circle recursion is disabled here");
      ValuePtr bv = ev->eval(t->kid[0], s.env);
      ccheck(s, t->kid[1], vmk::id_ty(Cv, bv, bv));
      return pi_const(vmk::s1(), Cv);
    }
    case Tag::S1Ind: {
      ccheck(s, t->kid[0], pi_const(vmk::s1(), vmk::univ(0)));
      ValuePtr Cv = ev->eval(t->kid[0], s.env);
      ValuePtr at_base = ev->apply(Cv, vmk::base());
      ccheck(s, t->kid[1], at_base);
      ValuePtr bv = ev->eval(t->kid[1], s.env);
      ccheck(s, t->kid[2],
             vmk::id_ty(at_base, ev->do_coe(ev->do_ap(Cv, vmk::loop(), vmk::univ(0)), bv), bv));
      return pi_ct(vmk::s1(), "x", Env{Cv}, mk::app(mk::var(1), mk::var(0)));
    }
    }
    assert(false);
    throw TypeError{};
  }

  void ccheck(const CScope& s, const TermPtr& t, const ValuePtr& ty) {
    switch (t->tag) {
    case Tag::Lam: {
      if (ty->tag != VTag::Pi)
        cfail("a lambda cannot have this type",
              {"expected " + show_ty(s.ctx, ty, s.depth())});
      CScope s2 = cextend(s, t->text, ev->readback(ty->item[0], s.depth()));
      ValuePtr cod = ev->apply_closure(*ty->clo, vmk::var(static_cast<uint32_t>(s.depth())));
      ccheck(s2, t->kid[0], cod);
      return;
    }
    case Tag::Pair: {
      if (ty->tag != VTag::Sigma)
        cfail("a pair cannot have this type", {"expected " + show_ty(s.ctx, ty, s.depth())});
      ccheck(s, t->kid[0], ty->item[0]);
      ccheck(s, t->kid[1], ev->apply_closure(*ty->clo, ev->eval(t->kid[0], s.env)));
      return;
    }
    case Tag::Inl: {
      if (ty->tag != VTag::SumTy)
        cfail("a sum injection cannot have this type",
              {"expected " + show_ty(s.ctx, ty, s.depth())});
      ccheck(s, t->kid[0], ty->item[0]);
      return;
    }
    case Tag::Inr: {
      if (ty->tag != VTag::SumTy)
        cfail("a sum injection cannot have this type",
              {"expected " + show_ty(s.ctx, ty, s.depth())});
      ccheck(s, t->kid[0], ty->item[1]);
      return;
    }
    case Tag::Ua:
      // Normalization unfolds a named equivalence into a literal tuple, which
      // only re-checks in checking mode.
      if (ty->tag == VTag::IdTy && ty->item[0]->tag == VTag::Univ && ty->item[0]->datum == 0) {
        ValuePtr expect =
            ev->apply(ev->apply(ev->eval(equiv_fn(), {}), ty->item[1]), ty->item[2]);
        ccheck(s, t->kid[0], expect);
        return;
      }
      [[fallthrough]];
    default: {
      ValuePtr ity = cinfer(s, t);
      if (!types_eq(ity, ty, s.depth()))
        cfail("type mismatch", {"expected: " + show_ty(s.ctx, ty, s.depth()),
                                "actual:   " + show_ty(s.ctx, ity, s.depth())});
      return;
    }
    }
  }
};

Elaborator::Elaborator(GlobalTable& globals, ElabOptions opt, std::string file)
    : impl_(std::make_unique<Impl>(globals, opt, std::move(file))) {}

Elaborator::~Elaborator() = default;

void Elaborator::add_decl(const Decl& d) {
  impl_->reset();
  if (impl_->globals.contains(d.name) || impl_->poisoned.count(d.name))
    impl_->fail(d.name_span, "duplicate definition of '" + d.name + "'");
  try {
    impl_->add_decl_body(d);
  } catch (...) {
    impl_->poisoned.insert(d.name);
    throw;
  }
}

void Elaborator::add_axiom(const std::string& name, const RawPtr& type_raw) {
  impl_->reset();
  Impl::Scope top;
  TermPtr typec = impl_->check_type(top, type_raw).first;
  impl_->globals.add(name, typec, std::nullopt);
}

Elaborated Elaborator::infer_expr(const RawPtr& r) {
  impl_->reset();
  Impl::Scope top;
  Impl::Inf i = impl_->infer(top, r);
  return {i.core, impl_->ev->readback(i.type, 0), i.type};
}

ValuePtr Elaborator::infer_core(const Context& ctx, const Env& env, const TermPtr& t) {
  impl_->reset();
  return impl_->cinfer(Impl::CScope{ctx, env}, t);
}

void Elaborator::check_core(const Context& ctx, const Env& env, const TermPtr& t,
                            const ValuePtr& ty) {
  impl_->reset();
  impl_->ccheck(Impl::CScope{ctx, env}, t, ty);
}

bool Elaborator::poisoned(const std::string& name) const {
  return impl_->poisoned.count(name) != 0;
}

Evaluator& Elaborator::evaluator() { return *impl_->ev; }

void seed_kernel(GlobalTable& globals) {
  static const struct {
    const char* name;
    const char* type;
  } kAxioms[] = {
      {"funext",
       "(A : U0) -> (C : A -> U0) -> (f : (x : A) -> C x) -> (g : (x : A) -> C x) -> "
       "((x : A) -> Id (C x) (f x) (g x)) -> Id ((x : A) -> C x) f g"},
      {"S1ind_loop_beta",
       "(C : S1 -> U0) -> (b : C base) -> (l : Id (C base) (coe (ap C loop) b) b) -> "
       "Id (Id (C base) (coe (ap C loop) b) b) "
       "   (J (\\u. \\v. \\q. Id (C v) (coe (ap C q) (S1ind C b l u)) (S1ind C b l v)) "
       "      (\\u. refl (C u) (S1ind C b l u)) "
       "      loop) "
       "   l"},
  };
  Elaborator elab(globals, ElabOptions{}, "<kernel>");
  for (const auto& ax : kAxioms) {
    auto parsed = parse_term(ax.type, "<kernel>");
    if (auto* d = std::get_if<Diagnostic>(&parsed))
      throw std::logic_error("kernel axiom failed to parse: " + d->render());
    try {
      elab.add_axiom(ax.name, std::get<RawPtr>(parsed));
    } catch (TypeError& e) {
      throw std::logic_error("kernel axiom failed to check: " + e.diag.render());
    }
  }
}

std::vector<Diagnostic> check_module(GlobalTable& globals, const std::vector<Decl>& decls,
                                     const std::string& file, const ElabOptions& opt) {
  Elaborator elab(globals, opt, file);
  std::vector<Diagnostic> out;
  for (const Decl& d : decls) {
    try {
      elab.add_decl(d);
    } catch (TypeError& e) {
      out.push_back(e.diag);
    } catch (BudgetExceeded&) {
      out.push_back(Diagnostic{file, d.name_span,
                               "normalization budget exceeded while checking '" + d.name + "'",
                               {},
                               DiagKind::Budget});
    }
  }
  return out;
}

std::variant<Elaborated, Diagnostic> elaborate_expr(GlobalTable& globals, const RawPtr& r,
                                                    const std::string& file,
                                                    const ElabOptions& opt) {
  Elaborator elab(globals, opt, file);
  try {
    return elab.infer_expr(r);
  } catch (TypeError& e) {
    return e.diag;
  } catch (BudgetExceeded&) {
    return Diagnostic{file, r->span, "normalization budget exceeded", {}, DiagKind::Budget};
  }
}

} // namespace hott
