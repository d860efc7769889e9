#include "hott/lexer.hpp"

#include <array>
#include <cctype>
#include <unordered_map>

namespace hott {

namespace {

struct KwInfo {
  Kw kw;
  const char* spelling;
  int arity;
};

constexpr std::array<KwInfo, 28> kKeywords = {{
    {Kw::Def, "def", 0},      {Kw::U0, "U0", 0},         {Kw::U1, "U1", 0},
    {Kw::Nat, "Nat", 0},      {Kw::Zero, "zero", 0},     {Kw::Succ, "succ", 1},
    {Kw::Natrec, "natrec", 4},{Kw::Unit, "Unit", 0},     {Kw::Tt, "tt", 0},
    {Kw::Void, "Void", 0},    {Kw::Abort, "abort", 2},   {Kw::S1, "S1", 0},
    {Kw::Base, "base", 0},    {Kw::Loop, "loop", 0},     {Kw::S1rec, "S1rec", 2},
    {Kw::S1ind, "S1ind", 3},  {Kw::Id, "Id", 3},         {Kw::Refl, "refl", 2},
    {Kw::J, "J", 3},          {Kw::Sum, "Sum", 2},       {Kw::Inl, "inl", 1},
    {Kw::Inr, "inr", 1},      {Kw::Case, "case", 4},     {Kw::Fst, "fst", 1},
    {Kw::Snd, "snd", 1},      {Kw::Coe, "coe", 2},       {Kw::Ap, "ap", 2},
    {Kw::Ua, "ua", 1},
}};

const std::unordered_map<std::string, Kw>& keyword_table() {
  static const auto* table = [] {
    auto* m = new std::unordered_map<std::string, Kw>;
    for (const auto& k : kKeywords) (*m)[k.spelling] = k.kw;
    return m;
  }();
  return *table;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_cont(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

} // namespace

const char* keyword_spelling(Kw k) {
  for (const auto& e : kKeywords) {
    if (e.kw == k) return e.spelling;
  }
  return "?";
}

std::optional<Kw> keyword_of(const std::string& s) {
  auto it = keyword_table().find(s);
  if (it == keyword_table().end()) return std::nullopt;
  return it->second;
}

int keyword_arity(Kw k) {
  for (const auto& e : kKeywords) {
    if (e.kw == k) return e.arity;
  }
  return 0;
}

std::variant<std::vector<Token>, Diagnostic> tokenize(const std::string& source,
                                                      const std::string& file) {
  std::vector<Token> out;
  uint32_t line = 1, col = 1;
  size_t i = 0;
  const size_t n = source.size();

  auto emit = [&](Tok kind, uint32_t len, std::string text = {}, Kw kw = Kw::Def) {
    out.push_back({kind, kw, std::move(text), {line, col, len}});
    col += len;
    i += len;
  };
  auto fail = [&](std::string msg) {
    return Diagnostic{file, {line, col, 1}, std::move(msg), {}, DiagKind::Parse};
  };

  while (i < n) {
    char c = source[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++col;
      ++i;
      continue;
    }
    if (c == '-') {
      if (i + 1 < n && source[i + 1] == '-') {
        while (i < n && source[i] != '\n') {
          ++i;
          ++col;
        }
        continue;
      }
      if (i + 1 < n && source[i + 1] == '>') {
        emit(Tok::Arrow, 2);
        continue;
      }
      return fail("stray '-' (expected '->' or a '--' comment)");
    }
    if (ident_start(c)) {
      size_t j = i + 1;
      while (j < n && ident_cont(source[j])) ++j;
      std::string text = source.substr(i, j - i);
      auto kw = keyword_of(text);
      if (kw) {
        emit(Tok::Keyword, static_cast<uint32_t>(j - i), std::move(text), *kw);
      } else {
        emit(Tok::Ident, static_cast<uint32_t>(j - i), std::move(text));
      }
      continue;
    }
    switch (c) {
    case '(': emit(Tok::LParen, 1); continue;
    case ')': emit(Tok::RParen, 1); continue;
    case '<': emit(Tok::LAngle, 1); continue;
    case '>': emit(Tok::RAngle, 1); continue;
    case ',': emit(Tok::Comma, 1); continue;
    case ';': emit(Tok::Semi, 1); continue;
    case '.': emit(Tok::Dot, 1); continue;
    case '!': emit(Tok::Bang, 1); continue;
    case '\\': emit(Tok::Backslash, 1); continue;
    case ':':
      if (i + 1 < n && source[i + 1] == '=') {
        emit(Tok::ColonEq, 2);
      } else {
        emit(Tok::Colon, 1);
      }
      continue;
    case '*':
      if (i + 1 < n && source[i + 1] == '*') {
        emit(Tok::StarStar, 2);
      } else {
        emit(Tok::Star, 1);
      }
      continue;
    default:
      return fail("illegal character");
    }
  }
  out.push_back({Tok::End, Kw::Def, "", {line, col, 0}});
  return out;
}

} // namespace hott
