#include <cstdio>
#include <filesystem>
#include <variant>

#include "corpus.hpp"
#include "doctest.h"
#include "hott/pretty.hpp"

using namespace hott;

TEST_CASE("the whole corpus loads and the key names are defined") {
  auto& g = corpus();
  for (const char* name :
       {"Equiv", "transport", "J_based", "Codes", "encode_sum", "decode_sum", "inj_inl",
        "inj_inr", "disjoint", "disjoint_r", "Int", "succInt", "predInt", "succEquiv", "Cover",
        "loopPow", "encode", "decode", "encode_decode", "decode_encode", "omega1_equiv_int",
        "decEqNat", "decEqInt", "int_is_set"})
    CHECK_MESSAGE(g.contains(name), name);
  // The two postulates stay bodiless; everything else is defined.
  CHECK(!g.find("funext")->body.has_value());
  CHECK(!g.find("S1ind_loop_beta")->body.has_value());
  CHECK(g.find("encode")->body.has_value());
}

TEST_CASE("winding numbers of small words") {
  auto wind = [](const std::string& word) {
    Evaluator ev(corpus(), EvalOptions{true, 10'000'000});
    return int_of(ev.eval_closed(elab("encode base (" + word + ")").core));
  };
  CHECK(wind("loop * loop * loop") == 3);
  CHECK(wind("! loop * loop") == 0);
  CHECK(wind("refl S1 base") == 0);
  CHECK(wind("! loop * ! loop * loop * ! loop") == -2);
}

TEST_CASE("integer successor and predecessor cancel on literals") {
  CHECK(structural_eq(nf("succInt (predInt zeroInt)", false), int_core(0)));
  CHECK(structural_eq(nf("predInt (succInt (succInt zeroInt))", false), int_core(1)));
  CHECK(structural_eq(nf("predInt (predInt zeroInt)", false), int_core(-2)));
  CHECK(nf("pred_succ_id (predInt zeroInt)", false)->tag == Tag::Refl);
  CHECK(nf("succ_pred_id (succInt zeroInt)", false)->tag == Tag::Refl);
}

TEST_CASE("loopPow turns literals into concatenation chains") {
  CHECK(structural_eq(nf("loopPow zeroInt", false), mk::refl(mk::s1(), mk::base())));
  CHECK(structural_eq(nf("loopPow (succInt zeroInt)", false), mk::loop()));
  CHECK(structural_eq(nf("loopPow (succInt (succInt zeroInt))", false),
                      mk::path_concat(mk::loop(), mk::loop())));
  CHECK(structural_eq(nf("loopPow (predInt zeroInt)", false), mk::path_inv(mk::loop())));
}

TEST_CASE("coproduct code theorems compute") {
  CHECK(structural_eq(
      nf("inj_inl Nat Nat zero zero (refl (Sum Nat Nat) (inl zero))", false),
      mk::refl(mk::nat(), mk::zero())));
  CHECK(structural_eq(
      nf("inj_inr Nat Unit tt tt (refl (Sum Nat Unit) (inr tt))", false),
      mk::refl(mk::unit(), mk::star())));
}

TEST_CASE("decidable equality on integers returns the right injection") {
  CHECK(nf("decEqInt (succInt zeroInt) (succInt zeroInt)", false)->tag == Tag::Inl);
  CHECK(nf("decEqInt zeroInt (succInt zeroInt)", false)->tag == Tag::Inr);
  CHECK(nf("decEqInt (predInt zeroInt) (predInt zeroInt)", false)->tag == Tag::Inl);
  CHECK(nf("decEqInt (predInt zeroInt) (succInt zeroInt)", false)->tag == Tag::Inr);
}

TEST_CASE("the set proof collapses parallel refls to refl of refl") {
  auto got = nf("int_is_set zeroInt zeroInt (refl Int zeroInt) (refl Int zeroInt)", false);
  auto int_nf = mk::sum_ty(mk::nat(), mk::sum_ty(mk::unit(), mk::nat()));
  auto want = mk::refl(mk::id_ty(int_nf, int_core(0), int_core(0)),
                       mk::refl(int_nf, int_core(0)));
  CHECK(structural_eq(got, want));
}

TEST_CASE("encode after decode is the identity on literals") {
  Evaluator ev(corpus(), EvalOptions{true, 10'000'000});
  auto t = elab("encode base (decode base (succInt (succInt zeroInt)))").core;
  CHECK(int_of(ev.eval_closed(t)) == 2);
}

TEST_CASE("decode_encode is well typed at a concrete loop and normalizes") {
  auto e = elab("decode_encode base (loop * loop)");
  auto ty = elab("Id (Id S1 base base) (decode base (encode base (loop * loop))) (loop * loop)");
  Evaluator ev(corpus(), EvalOptions{});
  CHECK(ev.convertible(ev.eval_closed(e.type), ev.eval_closed(ty.core),
                       ev.eval_closed(mk::univ(0)), 0));
  CHECK(normalize_closed(corpus(), e.core, EvalOptions{true, 10'000'000}) != nullptr);
}

TEST_CASE("the loop-space equivalence has the declared equivalence type") {
  auto stored = corpus().find("omega1_equiv_int");
  REQUIRE(stored != nullptr);
  auto want = elab("Equiv (Id S1 base base) Int").core;
  Evaluator ev(corpus(), EvalOptions{});
  CHECK(ev.convertible(ev.eval_closed(stored->type), ev.eval_closed(want),
                       ev.eval_closed(mk::univ(0)), 0));
}

TEST_CASE("every negative file fails in-process at its annotated position") {
  namespace fs = std::filesystem;
  size_t n = 0;
  for (const auto& entry : fs::directory_iterator(HOTTLOOP_NEGATIVE_DIR)) {
    if (entry.path().extension() != ".hott") continue;
    std::string src = read_file(entry.path().string());
    unsigned line = 0, col = 0;
    REQUIRE_MESSAGE(std::sscanf(src.c_str(), "-- expect %u:%u", &line, &col) == 2,
                    entry.path().filename().string() << ": missing expect header");
    auto parsed = parse_module(src, entry.path().string());
    REQUIRE(std::holds_alternative<std::vector<Decl>>(parsed));
    GlobalTable g;
    seed_kernel(g);
    auto diags = check_module(g, std::get<std::vector<Decl>>(parsed), entry.path().string(),
                              ElabOptions{});
    REQUIRE_MESSAGE(!diags.empty(), entry.path().filename().string() << ": checked cleanly");
    bool at_annotated = diags[0].span.line == line && diags[0].span.col == col;
    CHECK_MESSAGE(at_annotated,
                  entry.path().filename().string()
                      << ": diagnostic at " << diags[0].span.line << ":" << diags[0].span.col
                      << ", annotated " << line << ":" << col);
    CHECK(diags[0].kind == DiagKind::Type);
    ++n;
  }
  CHECK(n >= 15);
}

TEST_CASE("pretty printing the corpus reparses") {
  auto& g = corpus();
  auto names = g.names();
  for (const auto& name : g.order()) {
    const GlobalDef* def = g.find(name);
    if (!def->body) continue;
    auto src = pretty_print(*def->body, Context{}, names);
    CAPTURE(name);
    CHECK(std::holds_alternative<RawPtr>(parse_term(src, "<pp>")));
  }
}
