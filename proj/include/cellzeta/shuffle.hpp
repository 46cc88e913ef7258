#pragma once

// Shuffle products of words with distinct letters.
//
// The ambient algebra is spanned by words with no repeated letter; a shuffle
// of two words that share a letter would only produce words with repeats, so
// such products are zero here. For disjoint words the product is the plain
// sum over interleavings (all coefficients 1).

#include <vector>

#include "cellzeta/lincomb.hpp"
#include "cellzeta/word.hpp"

namespace cellzeta {

using WordSum = LinComb<Word>;

namespace detail {
inline void shuffle_rec(const Word& x, int i, const Word& y, int j, Word& cur,
                        WordSum& out) {
  if (i == x.size() && j == y.size()) {
    out.add(cur, 1);
    return;
  }
  if (i < x.size()) {
    cur.push_back(x[i]);
    shuffle_rec(x, i + 1, y, j, cur, out);
    cur = cur.subword(0, cur.size() - 1);
  }
  if (j < y.size()) {
    cur.push_back(y[j]);
    shuffle_rec(x, i, y, j + 1, cur, out);
    cur = cur.subword(0, cur.size() - 1);
  }
}
}  // namespace detail

inline WordSum shuffle(const Word& x, const Word& y) {
  if (x.shares_letter(y)) return WordSum::zero();
  WordSum out;
  Word cur;
  detail::shuffle_rec(x, 0, y, 0, cur, out);
  return out;
}

inline WordSum shuffle(const WordSum& x, const WordSum& y) {
  WordSum out;
  for (const auto& [wx, cx] : x.terms()) {
    for (const auto& [wy, cy] : y.terms()) {
      WordSum s = shuffle(wx, wy);
      s *= cx * cy;
      out += s;
    }
  }
  return out;
}

// Shuffle product of several words (associative; zero on any shared letter).
inline WordSum shuffle_all(const std::vector<Word>& ws) {
  if (ws.empty()) return WordSum(Word{});
  WordSum acc(ws[0]);
  for (std::size_t i = 1; i < ws.size(); ++i) acc = shuffle(acc, WordSum(ws[i]));
  return acc;
}

// Concatenation extended bilinearly.
inline WordSum concat(const WordSum& x, const WordSum& y) {
  WordSum out;
  for (const auto& [wx, cx] : x.terms())
    for (const auto& [wy, cy] : y.terms()) out.add(wx.concat(wy), cx * cy);
  return out;
}

}  // namespace cellzeta
