#pragma once

// Splitting of the span of full words on {1..m} into
//   W  = span of words where letter 1 immediately precedes letter m, and
//   I  = span of proper shuffles u * v covering {1..m},
// together with the projection onto W along I.
//
// The projection works on the cyclic picture: append a marker letter d to a
// word w and read (w, d) as a cycle. I is equally the span of cycles
// (X * Y, e) for any fixed element e of the cycle, so choosing e = 1 and
// rotating 1 to the end turns the task into straightening the remaining word
// z (over {2..m, d}) into words that begin with m: whenever z = p m q with p
// nonempty, the shuffle p * (m q) lies in I, hence z is congruent to minus
// the other interleavings, each of which moves m strictly closer to the
// front. Rotating the marker d back to the end of the straightened cycles
// yields words where 1 immediately precedes m.
//
// Straightening is equivariant under every relabeling of the letters other
// than m, so only one cached combination per starting position of m is ever
// computed; general words are handled by normalizing their letter pattern,
// looking up the cached result, and renaming back.

#include <cassert>
#include <utility>
#include <vector>

#include "cellzeta/shuffle.hpp"

namespace cellzeta {

inline bool is_1n_word(const Word& w, int m) {
  if (m == 1) return w.size() == 1 && w[0] == 1;
  for (int i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == 1) return w[i + 1] == static_cast<Letter>(m);
  }
  return false;
}

// All words on {1..m} with 1 immediately before m; there are (m-1)! of them.
inline std::vector<Word> all_1n_words(int m) {
  std::vector<Word> out;
  if (m == 1) {
    out.push_back(Word{1});
    return out;
  }
  std::vector<Letter> rest;
  for (int l = 2; l < m; ++l) rest.push_back(static_cast<Letter>(l));
  std::sort(rest.begin(), rest.end());
  // Place the fused pair (1, m) at each slot among the remaining letters.
  std::vector<Letter> arr(rest);
  do {
    for (std::size_t pos = 0; pos <= arr.size(); ++pos) {
      Word w;
      for (std::size_t i = 0; i < pos; ++i) w.push_back(arr[i]);
      w.push_back(1);
      w.push_back(static_cast<Letter>(m));
      for (std::size_t i = pos; i < arr.size(); ++i) w.push_back(arr[i]);
      out.push_back(w);
    }
  } while (std::next_permutation(arr.begin(), arr.end()));
  std::sort(out.begin(), out.end());
  return out;
}

class WordSplitter {
 public:
  explicit WordSplitter(int m) : m_(m) {
    if (m_ >= 2) build_canonical();
  }

  // Projection of a full word on {1..m} onto the span of 1n-words.
  WordSum project_word(const Word& w) const {
    assert(w.size() == m_);
    if (m_ == 1) return WordSum(w);
    // Rotate the cycle (w, d) so letter 1 sits at the end: z = v d u where
    // w = u 1 v. The marker d is represented by the letter value m+1.
    const Letter d = static_cast<Letter>(m_ + 1);
    int p1 = w.find(1);
    Word z;
    for (int i = p1 + 1; i < w.size(); ++i) z.push_back(w[i]);
    z.push_back(d);
    for (int i = 0; i < p1; ++i) z.push_back(w[i]);

    WordSum straightened = straighten(z);

    // Straightened words read m y1 d y2 around the cycle ending in 1;
    // rotating d back to the end gives the word y2 1 m y1.
    WordSum out;
    for (const auto& [s, c] : straightened.terms()) {
      int pd = s.find(d);
      Word back;
      for (int i = pd + 1; i < s.size(); ++i) back.push_back(s[i]);
      back.push_back(1);
      for (int i = 0; i < pd; ++i) back.push_back(s[i]);
      out.add(back, c);
    }
    return out;
  }

  WordSum project(const WordSum& x) const {
    WordSum out;
    for (const auto& [w, c] : x.terms()) {
      WordSum p = project_word(w);
      p *= c;
      out += p;
    }
    return out;
  }

 private:
  int m_;
  // canon_[k]: straightening of the canonical word with m at position k and
  // the other letters in appearance order 1, 2, ..., m-1 (these stand for
  // arbitrary distinct letters; position 0 means already straight).
  std::vector<WordSum> canon_;

  // Canonical pattern word for m at position k: 1 2 .. k m k+1 .. m-1.
  Word canonical_word(int k) const {
    Word z;
    for (int i = 1; i <= k; ++i) z.push_back(static_cast<Letter>(i));
    z.push_back(static_cast<Letter>(m_));
    for (int i = k + 1; i <= m_ - 1; ++i) z.push_back(static_cast<Letter>(i));
    return z;
  }

  // Rewrites an arbitrary word over {letters, m} as the relabeled cached
  // combination for its pattern.
  WordSum straighten(const Word& z) const {
    int k = z.find(static_cast<Letter>(m_));
    assert(k >= 0);
    if (k == 0) return WordSum(z);
    // map: canonical letter i+1 -> actual letter at the i-th non-m slot.
    std::array<Letter, Word::kMaxLen + 1> name{};
    int next = 1;
    for (Letter l : z) {
      if (l != static_cast<Letter>(m_)) name[next++] = l;
    }
    WordSum out;
    for (const auto& [cw, c] : canon_[k].terms()) {
      Word t;
      for (Letter l : cw) {
        t.push_back(l == static_cast<Letter>(m_) ? l : name[l]);
      }
      out.add(t, c);
    }
    return out;
  }

  void build_canonical() {
    canon_.resize(m_);
    canon_[0] = WordSum(canonical_word(0));
    for (int k = 1; k <= m_ - 1; ++k) {
      Word z = canonical_word(k);
      Word p = z.subword(0, k);
      Word mq = z.subword(k, z.size() - k);
      WordSum interleavings = shuffle(p, mq);
      WordSum acc;
      for (const auto& [t, c] : interleavings.terms()) {
        if (t == z) continue;  // the term being rewritten
        assert(c == 1);
        // Every other interleaving has m strictly earlier, so its pattern
        // cache entry is already built.
        assert(t.find(static_cast<Letter>(m_)) < k);
        acc += straighten(t);
      }
      acc *= Rational(-1);
      canon_[k] = std::move(acc);
    }
  }
};

// w_part lives in the span of 1n-words, i_part in the shuffle span; the two
// add back to x.
struct SplitResult {
  WordSum w_part;
  WordSum i_part;
};

inline SplitResult split_V(const WordSum& x, int m) {
  WordSplitter s(m);
  WordSum w = s.project(x);
  return SplitResult{w, x - w};
}

}  // namespace cellzeta
