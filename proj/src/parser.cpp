#include "hott/parser.hpp"

#include <optional>

namespace hott {

namespace {

struct ParseError {
  Diagnostic diag;
};

std::string describe(const Token& t) {
  switch (t.kind) {
  case Tok::Ident: return "identifier '" + t.text + "'";
  case Tok::Keyword: return "'" + t.text + "'";
  case Tok::LParen: return "'('";
  case Tok::RParen: return "')'";
  case Tok::LAngle: return "'<'";
  case Tok::RAngle: return "'>'";
  case Tok::Comma: return "','";
  case Tok::Colon: return "':'";
  case Tok::ColonEq: return "':='";
  case Tok::Semi: return "';'";
  case Tok::Arrow: return "'->'";
  case Tok::StarStar: return "'**'";
  case Tok::Star: return "'*'";
  case Tok::Bang: return "'!'";
  case Tok::Backslash: return "'\\'";
  case Tok::Dot: return "'.'";
  case Tok::End: return "end of input";
  }
  return "?";
}

Span join(Span a, Span b) {
  if (a.line == b.line && b.col + b.len >= a.col) {
    return {a.line, a.col, b.col + b.len - a.col};
  }
  return a;
}

// An appspine item: either a finished term or a keyword still waiting for
// its arguments (legal only at the head of the spine).
struct SpineItem {
  RawPtr term;            // null when pending
  std::optional<Kw> pending;
  Span span;
};

class Parser {
public:
  Parser(std::vector<Token> toks, std::string file)
      : toks_(std::move(toks)), file_(std::move(file)) {}

  std::vector<Decl> module_entry() {
    std::vector<Decl> decls;
    while (peek().kind != Tok::End) {
      decls.push_back(decl());
    }
    return decls;
  }

  RawPtr term_entry() {
    RawPtr t = term();
    if (peek().kind != Tok::End) fail("expected end of input, found " + describe(peek()));
    return t;
  }

private:
  std::vector<Token> toks_;
  std::string file_;
  size_t pos_ = 0;

  const Token& peek(size_t k = 0) const {
    size_t i = pos_ + k;
    if (i >= toks_.size()) i = toks_.size() - 1;
    return toks_[i];
  }
  const Token& advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(std::string msg, std::optional<Span> at = std::nullopt) {
    throw ParseError{
        {file_, at.value_or(peek().span), std::move(msg), {}, DiagKind::Parse}};
  }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what + ", found " + describe(peek()));
    return advance();
  }

  bool at_keyword(Kw k) const { return peek().kind == Tok::Keyword && peek().kw == k; }

  Decl decl() {
    if (!at_keyword(Kw::Def)) fail("expected 'def', found " + describe(peek()));
    advance();
    const Token& name = expect(Tok::Ident, "a declaration name");
    expect(Tok::Colon, "':'");
    RawPtr type = term();
    expect(Tok::ColonEq, "':='");
    RawPtr body = term();
    expect(Tok::Semi, "';'");
    return Decl{name.text, name.span, std::move(type), std::move(body)};
  }

  RawPtr term() {
    if (peek().kind == Tok::Backslash) return lambda();
    if (peek().kind == Tok::LParen && peek(1).kind == Tok::Ident && peek(2).kind == Tok::Colon) {
      return binder();
    }
    return arrow_or_product();
  }

  RawPtr lambda() {
    Span start = peek().span;
    advance(); // backslash
    const Token& name = expect(Tok::Ident, "a binder name");
    expect(Tok::Dot, "'.'");
    RawPtr body = term();
    return raw(RTag::Lam, {body}, join(start, body->span), name.text);
  }

  RawPtr binder() {
    Span start = peek().span;
    advance(); // (
    const Token& name = advance();
    advance(); // :
    RawPtr dom = term();
    expect(Tok::RParen, "')'");
    RTag tag;
    if (peek().kind == Tok::Arrow) {
      tag = RTag::Pi;
    } else if (peek().kind == Tok::StarStar) {
      tag = RTag::Sigma;
    } else {
      fail("expected '->' or '**' after the binder, found " + describe(peek()));
    }
    advance();
    RawPtr cod = term();
    return raw(tag, {dom, cod}, join(start, cod->span), name.text);
  }

  RawPtr arrow_or_product() {
    RawPtr lhs = concat();
    if (peek().kind == Tok::Arrow) {
      advance();
      RawPtr cod = term();
      return raw(RTag::Pi, {lhs, cod}, join(lhs->span, cod->span), "_");
    }
    if (peek().kind == Tok::StarStar) {
      advance();
      RawPtr cod = term();
      return raw(RTag::Sigma, {lhs, cod}, join(lhs->span, cod->span), "_");
    }
    return lhs;
  }

  RawPtr concat() {
    RawPtr lhs = unary();
    while (peek().kind == Tok::Star) {
      advance();
      RawPtr rhs = unary();
      lhs = raw(RTag::Concat, {lhs, rhs}, join(lhs->span, rhs->span));
    }
    return lhs;
  }

  RawPtr unary() {
    if (peek().kind == Tok::Bang) {
      Span start = peek().span;
      advance();
      RawPtr p = unary();
      return raw(RTag::Inv, {p}, join(start, p->span));
    }
    return appspine();
  }

  bool starts_atom() const {
    switch (peek().kind) {
    case Tok::Ident:
    case Tok::LParen:
    case Tok::LAngle:
      return true;
    case Tok::Keyword:
      return peek().kw != Kw::Def;
    default:
      return false;
    }
  }

  RawPtr appspine() {
    if (!starts_atom()) fail("expected a term, found " + describe(peek()));
    std::vector<SpineItem> items;
    items.push_back(atom());
    while (starts_atom()) items.push_back(atom());

    size_t next = 1;
    RawPtr head;
    if (items[0].pending) {
      Kw kw = *items[0].pending;
      int arity = keyword_arity(kw);
      if (items.size() - 1 < static_cast<size_t>(arity)) {
        fail(std::string("'") + keyword_spelling(kw) + "' expects " + std::to_string(arity) +
                 (arity == 1 ? " argument" : " arguments"),
             items[0].span);
      }
      std::vector<RawPtr> args;
      for (int k = 0; k < arity; ++k) args.push_back(arg_term(items[1 + k]));
      next = 1 + arity;
      Span sp = join(items[0].span, items[next - 1].span);
      head = keyword_node(kw, std::move(args), sp);
    } else {
      head = items[0].term;
    }
    for (; next < items.size(); ++next) {
      RawPtr arg = arg_term(items[next]);
      head = raw(RTag::App, {head, arg}, join(head->span, arg->span));
    }
    return head;
  }

  RawPtr arg_term(const SpineItem& it) {
    if (it.pending) {
      fail(std::string("'") + keyword_spelling(*it.pending) +
               "' needs its own arguments; parenthesize its application",
           it.span);
    }
    return it.term;
  }

  RawPtr keyword_node(Kw kw, std::vector<RawPtr> args, Span sp) {
    switch (kw) {
    case Kw::Succ: return raw(RTag::Succ, std::move(args), sp);
    case Kw::Natrec: return raw(RTag::NatRec, std::move(args), sp);
    case Kw::Abort: return raw(RTag::Abort, std::move(args), sp);
    case Kw::S1rec: return raw(RTag::S1Rec, std::move(args), sp);
    case Kw::S1ind: return raw(RTag::S1Ind, std::move(args), sp);
    case Kw::Id: return raw(RTag::IdTy, std::move(args), sp);
    case Kw::Refl: return raw(RTag::Refl, std::move(args), sp);
    case Kw::J: return raw(RTag::JElim, std::move(args), sp);
    case Kw::Sum: return raw(RTag::SumTy, std::move(args), sp);
    case Kw::Inl: return raw(RTag::Inl, std::move(args), sp);
    case Kw::Inr: return raw(RTag::Inr, std::move(args), sp);
    case Kw::Case: return raw(RTag::Case, std::move(args), sp);
    case Kw::Fst: return raw(RTag::Fst, std::move(args), sp);
    case Kw::Snd: return raw(RTag::Snd, std::move(args), sp);
    case Kw::Coe: return raw(RTag::Coe, std::move(args), sp);
    case Kw::Ap: return raw(RTag::ApFn, std::move(args), sp);
    case Kw::Ua: return raw(RTag::Ua, std::move(args), sp);
    default: fail("unexpected keyword", sp);
    }
  }

  SpineItem atom() {
    const Token& t = peek();
    switch (t.kind) {
    case Tok::Ident: {
      advance();
      return {raw(RTag::Name, {}, t.span, t.text), std::nullopt, t.span};
    }
    case Tok::Keyword: {
      advance();
      switch (t.kw) {
      case Kw::U0: return {raw(RTag::U0, {}, t.span), std::nullopt, t.span};
      case Kw::U1: return {raw(RTag::U1, {}, t.span), std::nullopt, t.span};
      case Kw::Nat: return {raw(RTag::NatTy, {}, t.span), std::nullopt, t.span};
      case Kw::Zero: return {raw(RTag::Zero, {}, t.span), std::nullopt, t.span};
      case Kw::Unit: return {raw(RTag::UnitTy, {}, t.span), std::nullopt, t.span};
      case Kw::Tt: return {raw(RTag::Star, {}, t.span), std::nullopt, t.span};
      case Kw::Void: return {raw(RTag::VoidTy, {}, t.span), std::nullopt, t.span};
      case Kw::S1: return {raw(RTag::S1Ty, {}, t.span), std::nullopt, t.span};
      case Kw::Base: return {raw(RTag::BasePt, {}, t.span), std::nullopt, t.span};
      case Kw::Loop: return {raw(RTag::LoopPath, {}, t.span), std::nullopt, t.span};
      case Kw::Def: fail("unexpected 'def'", t.span);
      default: return {nullptr, t.kw, t.span};
      }
    }
    case Tok::LParen: {
      Span start = t.span;
      advance();
      RawPtr inner = term();
      const Token& close = expect(Tok::RParen, "')'");
      Span sp = join(start, close.span);
      auto wrapped = raw(inner->tag, inner->kid, sp, inner->text);
      return {wrapped, std::nullopt, sp};
    }
    case Tok::LAngle: {
      Span start = t.span;
      advance();
      RawPtr a = term();
      expect(Tok::Comma, "','");
      RawPtr b = term();
      const Token& close = expect(Tok::RAngle, "'>'");
      Span sp = join(start, close.span);
      return {raw(RTag::Pair, {a, b}, sp), std::nullopt, sp};
    }
    default:
      fail("expected a term, found " + describe(t));
    }
  }
};

} // namespace

std::variant<std::vector<Decl>, Diagnostic> parse_module(const std::string& source,
                                                         const std::string& file) {
  auto toks = tokenize(source, file);
  if (auto* d = std::get_if<Diagnostic>(&toks)) return *d;
  try {
    Parser p(std::move(std::get<std::vector<Token>>(toks)), file);
    return p.module_entry();
  } catch (ParseError& e) {
    return std::move(e.diag);
  }
}

std::variant<RawPtr, Diagnostic> parse_term(const std::string& source, const std::string& file) {
  auto toks = tokenize(source, file);
  if (auto* d = std::get_if<Diagnostic>(&toks)) return *d;
  try {
    Parser p(std::move(std::get<std::vector<Token>>(toks)), file);
    return p.term_entry();
  } catch (ParseError& e) {
    return std::move(e.diag);
  }
}

} // namespace hott
