#pragma once

// Lyndon words over distinct letters, the associated shuffle basis, and the
// triangular decomposition of arbitrary word combinations in that basis.
//
// With all letters distinct, a word is Lyndon exactly when its minimal letter
// stands first, and the Chen-Fox-Lyndon factorization of any word splits it
// before each left-to-right minimum, giving a strictly decreasing sequence of
// Lyndon factors. Conversely, concatenating a set of disjoint Lyndon words in
// decreasing order is injective, so words on an alphabet correspond exactly
// to (multi)sets of disjoint Lyndon words covering the same letters.
//
// For such a set M, the shuffle product of its factors expands as the
// concatenation word plus lexicographically smaller words, all coefficients
// positive. That triangularity drives lyndon_decompose below.

#include <algorithm>
#include <string>
#include <vector>

#include "cellzeta/shuffle.hpp"

namespace cellzeta {

inline bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (int i = 1; i < w.size(); ++i)
    if (w[i] < w[0]) return false;
  return true;
}

// Chen-Fox-Lyndon factors of a distinct-letter word, in the order they appear
// (which is strictly decreasing lexicographically).
inline std::vector<Word> cfl_factors(const Word& w) {
  std::vector<Word> out;
  int start = 0;
  for (int i = 1; i <= w.size(); ++i) {
    if (i == w.size() || w[i] < w[start]) {
      out.push_back(w.subword(start, i - start));
      start = i;
    }
  }
  return out;
}

// A formal shuffle of pairwise-disjoint Lyndon words, kept sorted in
// decreasing lexicographic order so equal sets compare equal.
struct LyndonShuffle {
  std::vector<Word> factors;

  LyndonShuffle() = default;
  explicit LyndonShuffle(std::vector<Word> fs) : factors(std::move(fs)) {
    std::sort(factors.begin(), factors.end(),
              [](const Word& a, const Word& b) { return b < a; });
  }

  // The concatenation in decreasing order: the lexicographic leader of the
  // shuffle expansion.
  Word leader() const {
    Word w;
    for (const Word& f : factors)
      for (Letter l : f) w.push_back(l);
    return w;
  }

  WordSum expand() const { return shuffle_all(factors); }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) s += "*";  // shuffle product
      s += factors[i].str();
    }
    return s;
  }

  friend auto operator<=>(const LyndonShuffle& a, const LyndonShuffle& b) = default;
};

inline LyndonShuffle lyndon_multiset(const Word& w) {
  return LyndonShuffle(cfl_factors(w));
}

using LyndonSum = LinComb<LyndonShuffle>;

// Rewrites a combination of words as a combination of Lyndon shuffles.
// Repeatedly eliminates the lexicographically largest surviving word against
// the basis element whose leader it is; each step strictly lowers the leading
// word, so this terminates, and exactness keeps it lossless.
inline LyndonSum lyndon_decompose(WordSum x) {
  LyndonSum out;
  while (!x.is_zero()) {
    const auto& [w, c] = *x.terms().rbegin();
    LyndonShuffle m = lyndon_multiset(w);
    Rational coeff = c;
    out.add(m, coeff);
    WordSum e = m.expand();
    e *= coeff;
    x -= e;
  }
  return out;
}

// Inverse direction, for round-trip checks.
inline WordSum lyndon_expand(const LyndonSum& x) {
  WordSum out;
  for (const auto& [m, c] : x.terms()) {
    WordSum e = m.expand();
    e *= c;
    out += e;
  }
  return out;
}

// Enumerates all Lyndon words on a given sorted letter set (as subsequences
// of any arrangement): each word uses the minimal letter first and any
// arrangement of the rest, so there are (k-1)! of them.
inline void lyndon_words_on(const std::vector<Letter>& sorted,
                            std::vector<Word>& out) {
  if (sorted.empty()) return;
  std::vector<Letter> rest(sorted.begin() + 1, sorted.end());
  std::sort(rest.begin(), rest.end());
  do {
    Word w;
    w.push_back(sorted[0]);
    for (Letter l : rest) w.push_back(l);
    out.push_back(w);
  } while (std::next_permutation(rest.begin(), rest.end()));
}

}  // namespace cellzeta
