#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hott/diag.hpp"

namespace hott {

enum class Tok : uint8_t {
  Ident,
  Keyword,
  LParen,
  RParen,
  LAngle,
  RAngle,
  Comma,
  Colon,
  ColonEq,
  Semi,
  Arrow,
  StarStar,
  Star,
  Bang,
  Backslash,
  Dot,
  End,
};

enum class Kw : uint8_t {
  Def,
  U0,
  U1,
  Nat,
  Zero,
  Succ,
  Natrec,
  Unit,
  Tt,
  Void,
  Abort,
  S1,
  Base,
  Loop,
  S1rec,
  S1ind,
  Id,
  Refl,
  J,
  Sum,
  Inl,
  Inr,
  Case,
  Fst,
  Snd,
  Coe,
  Ap,
  Ua,
};

struct Token {
  Tok kind;
  Kw kw = Kw::Def; // valid when kind == Keyword
  std::string text;
  Span span;
};

const char* keyword_spelling(Kw k);
std::optional<Kw> keyword_of(const std::string& s);

// Number of argument atoms a term keyword consumes (Def is not a term head).
int keyword_arity(Kw k);

// Whole-input tokenizer; stops at the first illegal character. The final
// token is always Tok::End on success.
std::variant<std::vector<Token>, Diagnostic> tokenize(const std::string& source,
                                                      const std::string& file);

} // namespace hott
