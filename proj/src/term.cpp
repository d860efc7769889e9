#include "hott/term.hpp"

namespace hott {

namespace mk {

TermPtr node(Tag t, std::vector<TermPtr> kid, uint32_t datum, std::string text) {
  return std::make_shared<Term>(t, datum, std::move(text), std::move(kid));
}

} // namespace mk

TermPtr shift(const TermPtr& t, uint32_t cutoff, int32_t amount) {
  if (amount == 0) return t;
  if (t->tag == Tag::Var) {
    if (t->datum < cutoff) return t;
    return mk::var(static_cast<uint32_t>(static_cast<int64_t>(t->datum) + amount));
  }
  if (t->kid.empty()) return t;
  std::vector<TermPtr> kid;
  kid.reserve(t->kid.size());
  bool changed = false;
  for (size_t i = 0; i < t->kid.size(); ++i) {
    TermPtr k = shift(t->kid[i], cutoff + binder_depth(t->tag, i), amount);
    changed = changed || k != t->kid[i];
    kid.push_back(std::move(k));
  }
  if (!changed) return t;
  return mk::node(t->tag, std::move(kid), t->datum, t->text);
}

TermPtr subst(const TermPtr& t, uint32_t j, const TermPtr& s) {
  if (t->tag == Tag::Var) {
    if (t->datum == j) return shift(s, 0, static_cast<int32_t>(j));
    if (t->datum > j) return mk::var(t->datum - 1);
    return t;
  }
  if (t->kid.empty()) return t;
  std::vector<TermPtr> kid;
  kid.reserve(t->kid.size());
  bool changed = false;
  for (size_t i = 0; i < t->kid.size(); ++i) {
    TermPtr k = subst(t->kid[i], j + binder_depth(t->tag, i), s);
    changed = changed || k != t->kid[i];
    kid.push_back(std::move(k));
  }
  if (!changed) return t;
  return mk::node(t->tag, std::move(kid), t->datum, t->text);
}

bool structural_eq(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (a->tag != b->tag || a->datum != b->datum) return false;
  if (a->tag == Tag::Global && a->text != b->text) return false;
  if (a->kid.size() != b->kid.size()) return false;
  for (size_t i = 0; i < a->kid.size(); ++i) {
    if (!structural_eq(a->kid[i], b->kid[i])) return false;
  }
  return true;
}

bool var_unused(const TermPtr& t, uint32_t i) {
  if (t->tag == Tag::Var) return t->datum != i;
  for (size_t k = 0; k < t->kid.size(); ++k) {
    if (!var_unused(t->kid[k], i + binder_depth(t->tag, k))) return false;
  }
  return true;
}

} // namespace hott
