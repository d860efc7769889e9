#include <variant>

#include "corpus.hpp"
#include "doctest.h"
#include "hott/check.hpp"

using namespace hott;

namespace {

std::variant<Elaborated, Diagnostic> try_elab(const std::string& src, ElabOptions opt = {}) {
  auto parsed = parse_term(src, "<t>");
  REQUIRE(std::holds_alternative<RawPtr>(parsed));
  return elaborate_expr(corpus(), std::get<RawPtr>(parsed), "<t>", opt);
}

Diagnostic expect_diag(const std::string& src, ElabOptions opt = {}) {
  auto r = try_elab(src, opt);
  REQUIRE_MESSAGE(std::holds_alternative<Diagnostic>(r), src << " elaborated");
  return std::get<Diagnostic>(r);
}

} // namespace

TEST_CASE("inference of literals, projections, and unannotated pairs") {
  CHECK(structural_eq(elab("succ zero").type, mk::nat()));
  CHECK(structural_eq(elab("fst <zero , base>").type, mk::nat()));
  CHECK(structural_eq(elab("<zero , tt>").type, mk::sigma("_", mk::nat(), mk::unit())));
  CHECK(structural_eq(elab("U0 -> U0").type, mk::univ(1)));
  CHECK(structural_eq(elab("loop * ! loop").type,
                      mk::id_ty(mk::s1(), mk::base(), mk::base())));
}

TEST_CASE("the classifier universe is not a term") {
  CHECK(expect_diag("U1").kind == DiagKind::Type);
  CHECK(expect_diag("(x : U1) -> Nat").kind == DiagKind::Type);
}

TEST_CASE("eliminator motives may land in either universe, behind the gate") {
  // Small motive: plain recursion.
  auto small = try_elab("natrec (\\k. Nat) zero (\\k. \\ih. succ ih) (succ zero)");
  CHECK(std::holds_alternative<Elaborated>(small));

  // Large motive: the result is a type.
  auto large = try_elab("case (\\z. U0) (\\n. Nat) (\\s. Unit) zeroInt");
  REQUIRE(std::holds_alternative<Elaborated>(large));
  CHECK(structural_eq(std::get<Elaborated>(large).type, mk::univ(0)));

  ElabOptions gated;
  gated.allow_large_elim = false;
  CHECK(std::holds_alternative<Diagnostic>(
      try_elab("case (\\z. U0) (\\n. Nat) (\\s. Unit) zeroInt", gated)));
  CHECK(std::holds_alternative<Elaborated>(
      try_elab("natrec (\\k. Nat) zero (\\k. \\ih. succ ih) (succ zero)", gated)));
}

TEST_CASE("checking failures carry messages aimed at the offending term") {
  CHECK(expect_diag("zero zero").message == "applied a non-function");
  CHECK(expect_diag("flurb").message == "unbound identifier 'flurb'");
  CHECK(expect_diag("fst zero").message == "'fst' needs a pair");
  CHECK(expect_diag("coe (refl Nat zero) zero").message == "coe needs a path between types");
  CHECK(expect_diag("loop * refl Nat zero").message ==
        "path concatenation over different types");
}

TEST_CASE("duplicate and poisoned names are rejected") {
  GlobalTable g;
  seed_kernel(g);
  Elaborator el(g, ElabOptions{}, "<t>");
  auto decl = [](const char* name, const char* ty, const char* body) {
    return Decl{name, Span{}, std::get<RawPtr>(parse_term(ty, "<t>")),
                std::get<RawPtr>(parse_term(body, "<t>"))};
  };
  el.add_decl(decl("a", "Nat", "zero"));
  CHECK(g.contains("a"));
  CHECK_THROWS_AS(el.add_decl(decl("a", "Nat", "zero")), TypeError);

  CHECK_THROWS_AS(el.add_decl(decl("b", "Nat", "tt")), TypeError);
  CHECK(el.poisoned("b"));
  CHECK(!g.contains("b"));
  // A poisoned name stays burned even for a now-valid body.
  CHECK_THROWS_AS(el.add_decl(decl("b", "Nat", "zero")), TypeError);
}

TEST_CASE("module checking recovers after a failed declaration") {
  GlobalTable g;
  seed_kernel(g);
  auto mod = parse_module(
      "def a : Nat := zero;\ndef b : Nat := tt;\ndef c : Nat := succ a;\ndef d : Nat := b;",
      "<m>");
  auto diags = check_module(g, std::get<std::vector<Decl>>(mod), "<m>", ElabOptions{});
  REQUIRE(diags.size() == 2);
  CHECK(diags[0].span.line == 2); // b's bad body
  CHECK(diags[1].span.line == 4); // d uses the poisoned b
  CHECK(g.contains("a"));
  CHECK(g.contains("c"));
  CHECK(!g.contains("b"));
}

TEST_CASE("the core checker validates annotations instead of trusting them") {
  Elaborator el(corpus(), ElabOptions{}, "<core>");
  auto rzero = mk::refl(mk::global("Int"), mk::app(mk::global("zeroInt"), mk::star()));
  // Honest term: ap succInt over refl zeroInt, with the true codomain.
  auto good = mk::ap(mk::global("succInt"), mk::refl(mk::global("Int"), mk::global("zeroInt")),
                     mk::global("Int"));
  CHECK(el.infer_core(Context{}, Env{}, good)->tag == VTag::IdTy);
  // Forged codomain annotation.
  auto forged = mk::ap(mk::global("succInt"), mk::refl(mk::global("Int"), mk::global("zeroInt")),
                       mk::unit());
  CHECK_THROWS_AS(el.infer_core(Context{}, Env{}, forged), TypeError);
  (void)rzero;
}

TEST_CASE("core checking works in open contexts over the identity environment") {
  Elaborator el(corpus(), ElabOptions{}, "<core>");
  Context ctx;
  ctx = ctx.extended("n", mk::nat());
  Env env{vmk::var(0)};
  CHECK(el.infer_core(ctx, env, mk::succ(mk::var(0)))->tag == VTag::NatTy);
  CHECK_THROWS_AS(el.infer_core(ctx, env, mk::app(mk::var(0), mk::zero())), TypeError);
  Evaluator ev(corpus(), EvalOptions{});
  el.check_core(Context{}, Env{}, int_core(3), ev.eval_closed(mk::global("Int")));
  CHECK_THROWS_AS(el.check_core(Context{}, Env{}, mk::star(), ev.eval_closed(mk::global("Int"))),
                  TypeError);
}

TEST_CASE("ua checks against an identity of small types") {
  // The argument is a literal tuple, reachable only in checking mode.
  GlobalTable g;
  seed_kernel(g);
  auto mod = parse_module(read_file(std::string(HOTTLOOP_STDLIB_DIR) + "/prelude.hott")
                              .append(read_file(std::string(HOTTLOOP_STDLIB_DIR) +
                                                "/integers.hott"))
                              .append("\ndef uaLit : Id U0 Int Int := ua <succInt , <predInt , "
                                      "<pred_succ_id , succ_pred_id>>>;"),
                          "<m>");
  auto diags = check_module(g, std::get<std::vector<Decl>>(mod), "<m>", ElabOptions{});
  CHECK(diags.empty());
  CHECK(g.contains("uaLit"));
}

namespace {

bool mentions_u1(const TermPtr& t) {
  if (t->tag == Tag::Univ && t->datum == 1) return true;
  for (const auto& k : t->kid)
    if (mentions_u1(k)) return true;
  return false;
}

} // namespace

TEST_CASE("universe discipline: U1 classifies type expressions and nothing contains it") {
  // Type formers are level polymorphic, so these land in the classifier.
  for (const char* src : {"U0", "Sum U0 U0", "Id U0 Nat Nat", "U0 ** U0", "(A : U0) -> A",
                          "Nat -> U0"})
    CHECK_MESSAGE(structural_eq(elab(src).type, mk::univ(1)), src);
  // U1 itself is banned from every term position.
  for (const char* src : {"Id U1 U0 U0", "U1 -> Nat", "Sum U1 Nat", "<U1 , zero>", "succ U1"})
    CHECK_MESSAGE(std::holds_alternative<Diagnostic>(try_elab(src)), src);
  // Nothing the corpus checked ever stores a U1 node.
  auto& g = corpus();
  for (const auto& name : g.order()) {
    const GlobalDef* def = g.find(name);
    CAPTURE(name);
    CHECK(!mentions_u1(def->type));
    if (def->body) CHECK(!mentions_u1(*def->body));
  }
}

TEST_CASE("convertibility is an equivalence relation on sampled types") {
  Evaluator ev(corpus(), EvalOptions{});
  auto u0 = ev.eval_closed(mk::univ(0));
  auto a = ev.eval_closed(mk::app(mk::global("Cover"), mk::base()));
  auto b = ev.eval_closed(mk::global("Int"));
  auto c = ev.eval_closed(mk::sum_ty(mk::nat(), mk::sum_ty(mk::unit(), mk::nat())));
  CHECK(ev.convertible(a, a, u0, 0));
  CHECK(ev.convertible(b, b, u0, 0));
  CHECK(ev.convertible(a, b, u0, 0));
  CHECK(ev.convertible(b, a, u0, 0));
  CHECK(ev.convertible(b, c, u0, 0));
  CHECK(ev.convertible(a, c, u0, 0)); // transitively, through Int
  CHECK(!ev.convertible(ev.eval_closed(mk::nat()), c, u0, 0));
}

TEST_CASE("exhausting the elaboration budget is a Budget diagnostic") {
  ElabOptions tiny;
  tiny.budget = 10;
  CHECK(expect_diag("decEqInt zeroInt zeroInt", tiny).kind == DiagKind::Budget);
}
