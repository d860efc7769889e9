#include "hott/pretty.hpp"

#include <algorithm>

#include "hott/lexer.hpp"

namespace hott {

namespace {

// Levels mirror the grammar: 0 term, 1 concat operand, 2 unary, 3 application,
// 4 atom.
constexpr int kTerm = 0, kConcat = 1, kUnary = 2, kApp = 3, kAtom = 4;

class Printer {
public:
  Printer(const std::set<std::string>& globals) : globals_(globals) {}

  void print(const TermPtr& t, std::vector<std::string>& names, int need, std::string& out) {
    switch (t->tag) {
    case Tag::Var: {
      uint32_t i = t->datum;
      if (i < names.size()) {
        out += names[names.size() - 1 - i];
      } else {
        out += "#" + std::to_string(i);
      }
      return;
    }
    case Tag::Global: out += t->text; return;
    case Tag::Lam: {
      open(need, kTerm, out);
      std::string x = fresh(t->text, names);
      out += "\\" + x + ". ";
      names.push_back(x);
      print(t->kid[0], names, kTerm, out);
      names.pop_back();
      close(need, kTerm, out);
      return;
    }
    case Tag::Pi:
    case Tag::Sigma: {
      const char* op = t->tag == Tag::Pi ? " -> " : " ** ";
      open(need, kTerm, out);
      if (var_unused(t->kid[1], 0)) {
        print(t->kid[0], names, kConcat, out);
        out += op;
        names.push_back("_");
        print(t->kid[1], names, kTerm, out);
        names.pop_back();
      } else {
        std::string x = fresh(t->text, names);
        out += "(" + x + " : ";
        print(t->kid[0], names, kTerm, out);
        out += ")";
        out += op;
        names.push_back(x);
        print(t->kid[1], names, kTerm, out);
        names.pop_back();
      }
      close(need, kTerm, out);
      return;
    }
    case Tag::App: {
      open(need, kApp, out);
      print(t->kid[0], names, kApp, out);
      out += " ";
      print(t->kid[1], names, kAtom, out);
      close(need, kApp, out);
      return;
    }
    case Tag::Pair: {
      out += "<";
      print(t->kid[0], names, kTerm, out);
      out += " , ";
      print(t->kid[1], names, kTerm, out);
      out += ">";
      return;
    }
    case Tag::PathConcat: {
      open(need, kConcat, out);
      print(t->kid[0], names, kConcat, out);
      out += " * ";
      print(t->kid[1], names, kUnary, out);
      close(need, kConcat, out);
      return;
    }
    case Tag::PathInv: {
      open(need, kUnary, out);
      out += "! ";
      print(t->kid[0], names, kUnary, out);
      close(need, kUnary, out);
      return;
    }
    case Tag::ProjL: keyword_form("fst", {t->kid[0]}, names, need, out); return;
    case Tag::ProjR: keyword_form("snd", {t->kid[0]}, names, need, out); return;
    case Tag::SumTy: keyword_form("Sum", {t->kid[0], t->kid[1]}, names, need, out); return;
    case Tag::Inl: keyword_form("inl", {t->kid[0]}, names, need, out); return;
    case Tag::Inr: keyword_form("inr", {t->kid[0]}, names, need, out); return;
    case Tag::SumCase:
      keyword_form("case", {t->kid[0], t->kid[1], t->kid[2], t->kid[3]}, names, need, out);
      return;
    case Tag::NatTy: out += "Nat"; return;
    case Tag::Zero: out += "zero"; return;
    case Tag::Succ: keyword_form("succ", {t->kid[0]}, names, need, out); return;
    case Tag::NatRec:
      keyword_form("natrec", {t->kid[0], t->kid[1], t->kid[2], t->kid[3]}, names, need, out);
      return;
    case Tag::UnitTy: out += "Unit"; return;
    case Tag::Star: out += "tt"; return;
    case Tag::VoidTy: out += "Void"; return;
    case Tag::VoidElim: keyword_form("abort", {t->kid[0], t->kid[1]}, names, need, out); return;
    case Tag::Univ: out += t->datum == 0 ? "U0" : "U1"; return;
    case Tag::IdTy: keyword_form("Id", {t->kid[0], t->kid[1], t->kid[2]}, names, need, out); return;
    case Tag::Refl: keyword_form("refl", {t->kid[0], t->kid[1]}, names, need, out); return;
    case Tag::J:
      // Endpoints re-derive from the path's type on re-elaboration.
      keyword_form("J", {t->kid[0], t->kid[1], t->kid[4]}, names, need, out);
      return;
    case Tag::Ap: keyword_form("ap", {t->kid[0], t->kid[1]}, names, need, out); return;
    case Tag::Coe: keyword_form("coe", {t->kid[0], t->kid[1]}, names, need, out); return;
    case Tag::Ua: keyword_form("ua", {t->kid[0]}, names, need, out); return;
    case Tag::S1Ty: out += "S1"; return;
    case Tag::BasePt: out += "base"; return;
    case Tag::LoopPath: out += "loop"; return;
    case Tag::S1Rec: keyword_form("S1rec", {t->kid[0], t->kid[1]}, names, need, out); return;
    case Tag::S1Ind:
      keyword_form("S1ind", {t->kid[0], t->kid[1], t->kid[2]}, names, need, out);
      return;
    }
  }

private:
  const std::set<std::string>& globals_;

  static void open(int need, int mine, std::string& out) {
    if (mine < need) out += "(";
  }
  static void close(int need, int mine, std::string& out) {
    if (mine < need) out += ")";
  }

  bool taken(const std::string& name, const std::vector<std::string>& names) const {
    if (keyword_of(name) || globals_.count(name)) return true;
    return std::find(names.begin(), names.end(), name) != names.end();
  }

  std::string fresh(const std::string& hint, const std::vector<std::string>& names) const {
    std::string base = hint.empty() || hint == "_" ? "x" : hint;
    std::string cand = base;
    while (taken(cand, names)) cand += "'";
    return cand;
  }

  void keyword_form(const char* kw, std::vector<TermPtr> args, std::vector<std::string>& names,
                    int need, std::string& out) {
    open(need, kApp, out);
    out += kw;
    for (const auto& a : args) {
      out += " ";
      print(a, names, kAtom, out);
    }
    close(need, kApp, out);
  }
};

} // namespace

std::string pretty_print(const TermPtr& t, const Context& ctx,
                         const std::set<std::string>& globals) {
  std::vector<std::string> names;
  names.reserve(ctx.size());
  for (const auto& e : ctx.entries()) names.push_back(e.hint);
  Printer p(globals);
  std::string out;
  p.print(t, names, kTerm, out);
  return out;
}

} // namespace hott
