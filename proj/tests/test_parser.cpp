#include <variant>

#include "doctest.h"
#include "hott/parser.hpp"

using namespace hott;

namespace {

RawPtr ok(const std::string& src) {
  auto r = parse_term(src, "<p>");
  REQUIRE_MESSAGE(std::holds_alternative<RawPtr>(r),
                  src << ": " << std::get<Diagnostic>(r).render());
  return std::get<RawPtr>(r);
}

Diagnostic err(const std::string& src) {
  auto r = parse_term(src, "<p>");
  REQUIRE_MESSAGE(std::holds_alternative<Diagnostic>(r), src << " parsed");
  return std::get<Diagnostic>(r);
}

} // namespace

TEST_CASE("application is left associative") {
  auto t = ok("f a b");
  REQUIRE(t->tag == RTag::App);
  CHECK(t->kid[1]->text == "b");
  REQUIRE(t->kid[0]->tag == RTag::App);
  CHECK(t->kid[0]->kid[0]->text == "f");
  CHECK(t->kid[0]->kid[1]->text == "a");
}

TEST_CASE("lambdas nest and keep their binder names") {
  auto t = ok("\\x. \\y. x");
  REQUIRE(t->tag == RTag::Lam);
  CHECK(t->text == "x");
  REQUIRE(t->kid[0]->tag == RTag::Lam);
  CHECK(t->kid[0]->text == "y");
  CHECK(t->kid[0]->kid[0]->tag == RTag::Name);
}

TEST_CASE("arrows are right associative with the anonymous binder") {
  auto t = ok("Nat -> Nat -> Nat");
  REQUIRE(t->tag == RTag::Pi);
  CHECK(t->text == "_");
  CHECK(t->kid[0]->tag == RTag::NatTy);
  REQUIRE(t->kid[1]->tag == RTag::Pi);
  CHECK(t->kid[1]->kid[1]->tag == RTag::NatTy);
}

TEST_CASE("named binders parse for both Pi and Sigma") {
  auto t = ok("(x : Nat) -> Id Nat x x");
  REQUIRE(t->tag == RTag::Pi);
  CHECK(t->text == "x");
  CHECK(t->kid[0]->tag == RTag::NatTy);
  CHECK(t->kid[1]->tag == RTag::IdTy);

  auto s = ok("(p : Nat) ** Id Nat p p");
  REQUIRE(s->tag == RTag::Sigma);
  CHECK(s->text == "p");
}

TEST_CASE("product and arrow share the lowest precedence level") {
  // Nat ** (Nat -> Nat): the product grabs the rest of the term.
  auto t = ok("Nat ** Nat -> Nat");
  REQUIRE(t->tag == RTag::Sigma);
  CHECK(t->kid[1]->tag == RTag::Pi);
  auto u = ok("Nat -> Nat ** Nat");
  REQUIRE(u->tag == RTag::Pi);
  CHECK(u->kid[1]->tag == RTag::Sigma);
}

TEST_CASE("path operators: ! binds tighter than *, * is left associative") {
  auto t = ok("! p * q");
  REQUIRE(t->tag == RTag::Concat);
  CHECK(t->kid[0]->tag == RTag::Inv);
  CHECK(t->kid[1]->tag == RTag::Name);

  auto u = ok("p * q * r");
  REQUIRE(u->tag == RTag::Concat);
  CHECK(u->kid[0]->tag == RTag::Concat);

  auto v = ok("! ! p");
  REQUIRE(v->tag == RTag::Inv);
  CHECK(v->kid[0]->tag == RTag::Inv);
}

TEST_CASE("pairs parse angle-bracketed and nested") {
  auto t = ok("<a , <b , c>>");
  REQUIRE(t->tag == RTag::Pair);
  CHECK(t->kid[1]->tag == RTag::Pair);
}

TEST_CASE("eliminator keywords take a fixed number of atoms") {
  CHECK(ok("natrec m z s n")->tag == RTag::NatRec);
  CHECK(ok("natrec m z s n")->kid.size() == 4);
  CHECK(ok("case m l r s")->tag == RTag::Case);
  CHECK(ok("case m l r s")->kid.size() == 4);
  CHECK(ok("J m d p")->kid.size() == 3);
  CHECK(ok("refl A a")->kid.size() == 2);
  CHECK(ok("ap f p")->kid.size() == 2);
  CHECK(ok("coe p a")->kid.size() == 2);
  CHECK(ok("ua e")->kid.size() == 1);
  CHECK(ok("S1rec b l")->kid.size() == 2);
  CHECK(ok("S1ind m b l")->kid.size() == 3);
  CHECK(ok("abort T e")->kid.size() == 2);
  CHECK(ok("succ zero")->tag == RTag::Succ);
  CHECK(ok("fst p")->tag == RTag::Fst);
  CHECK(ok("snd p")->tag == RTag::Snd);
  CHECK(ok("inl a")->tag == RTag::Inl);
  CHECK(ok("Sum Nat Unit")->tag == RTag::SumTy);
}

TEST_CASE("keyword atoms") {
  CHECK(ok("U0")->tag == RTag::U0);
  CHECK(ok("U1")->tag == RTag::U1);
  CHECK(ok("Nat")->tag == RTag::NatTy);
  CHECK(ok("Unit")->tag == RTag::UnitTy);
  CHECK(ok("Void")->tag == RTag::VoidTy);
  CHECK(ok("S1")->tag == RTag::S1Ty);
  CHECK(ok("base")->tag == RTag::BasePt);
  CHECK(ok("loop")->tag == RTag::LoopPath);
  CHECK(ok("tt")->tag == RTag::Star);
  CHECK(ok("zero")->tag == RTag::Zero);
}

TEST_CASE("a keyword cannot be another keyword's bare argument") {
  CHECK(err("succ succ zero").kind == DiagKind::Parse);
  CHECK(ok("succ (succ zero)")->kid[0]->tag == RTag::Succ);
}

TEST_CASE("a keyword spine head applies to trailing atoms") {
  // The remaining atoms after an eliminator's own arguments are applications.
  auto t = ok("fst p q");
  REQUIRE(t->tag == RTag::App);
  CHECK(t->kid[0]->tag == RTag::Fst);
}

TEST_CASE("spans are one-based and survive leading trivia") {
  auto t = ok("  zero");
  CHECK(t->span.line == 1);
  CHECK(t->span.col == 3);
  auto u = ok("-- comment\nloop");
  CHECK(u->span.line == 2);
  CHECK(u->span.col == 1);
}

TEST_CASE("parse errors carry positions and the Parse kind") {
  auto d = err("(zero");
  CHECK(d.kind == DiagKind::Parse);
  CHECK(d.span.line == 1);
  CHECK(err("<a , b").kind == DiagKind::Parse);
  CHECK(err("\\x x").kind == DiagKind::Parse);
  CHECK(err("").kind == DiagKind::Parse);
  CHECK(err("(x : ) -> Nat").kind == DiagKind::Parse);
}

TEST_CASE("modules are def name : type := body sequences") {
  auto m = parse_module("def a : Nat := zero;\ndef b : Nat := succ a;", "<m>");
  auto& decls = std::get<std::vector<Decl>>(m);
  REQUIRE(decls.size() == 2);
  CHECK(decls[0].name == "a");
  CHECK(decls[1].name == "b");
  CHECK(decls[1].name_span.line == 2);
  CHECK(decls[1].body->tag == RTag::Succ);
}

TEST_CASE("module syntax errors are diagnostics, not crashes") {
  CHECK(std::get<Diagnostic>(parse_module("def a : Nat zero;", "<m>")).kind == DiagKind::Parse);
  CHECK(std::get<Diagnostic>(parse_module("def a : Nat := zero", "<m>")).kind ==
        DiagKind::Parse);
  CHECK(std::get<Diagnostic>(parse_module("def : Nat := zero;", "<m>")).kind == DiagKind::Parse);
  CHECK(std::get<Diagnostic>(parse_module("@@", "<m>")).kind == DiagKind::Parse);
}
