#pragma once

// Independent winding-number oracle. A loop word is a list of signed steps
// (+1 for loop, -1 for its inverse); the winding number is the exponent sum.
// Deliberately kernel-free so it cannot inherit a kernel bug.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using Word = std::vector<int>;

inline long long exponent_sum(const Word& w) {
  long long n = 0;
  for (int s : w) n += s;
  return n;
}

// The grammar the CLI accepts: factors joined by '*', the empty word is refl.
inline std::string render(const Word& w) {
  if (w.empty()) return "refl";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += " * ";
    out += w[i] > 0 ? "loop" : "!loop";
  }
  return out;
}

// Every word of the given length, one per bit pattern. len <= 20.
inline std::vector<Word> all_words(int len) {
  std::vector<Word> out;
  out.reserve(static_cast<size_t>(1) << len);
  for (uint64_t bits = 0; bits < (uint64_t(1) << len); ++bits) {
    Word w(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) w[static_cast<size_t>(i)] = (bits >> i) & 1 ? 1 : -1;
    out.push_back(std::move(w));
  }
  return out;
}

inline Word random_word(std::mt19937_64& rng, int min_len, int max_len) {
  std::uniform_int_distribution<int> len(min_len, max_len);
  int n = len(rng);
  Word w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = rng() & 1 ? 1 : -1;
  return w;
}

} // namespace oracle
