#pragma once
// Shuffles of cyclic structures: the shuffle of two polygons relative to the
// set of letters they share.  The shared letters cut each polygon into gaps;
// the result interleaves corresponding gaps in all possible ways.
//
// Two layers:
//   * gap_shuffle_aligned: both inputs already induce the same cyclic order
//     on the shared letters; pure combinatorial interleaving, no signs.
//   * shuffle3: the signed version on three shared letters.  Inputs whose
//     restriction to the shared triple is reversed are flipped first, which
//     costs a sign of (-1)^{|T|} in the signed-class quotient.

#include <stdexcept>
#include <utility>
#include <vector>

#include "lincomb.hpp"
#include "polygon.hpp"
#include "shuffle.hpp"
#include "word.hpp"

namespace cellzeta {

// Split a cyclic word into the gaps between consecutive shared letters.
// anchors = the shared letters in the cyclic order induced by c (starting at
// anchors[0]); gaps[i] = the letters of c strictly between anchors[i] and
// anchors[i+1 mod r].
struct GapDecomposition {
  std::vector<Letter> anchors;
  std::vector<Word> gaps;
};

// Decompose c relative to the shared set E (given in any order).  The anchor
// cycle starts at the smallest element of E and follows c's orientation.
// Throws if some element of E is missing from c.
inline GapDecomposition gap_decompose(const CyclicWord& c,
                                      const std::vector<Letter>& shared) {
  auto in_shared = [&](Letter l) {
    for (Letter s : shared)
      if (s == l) return true;
    return false;
  };
  Letter start = 0;
  bool have_start = false;
  for (Letter s : shared) {
    if (c.find(s) < 0) throw std::invalid_argument("shared letter not in polygon");
    if (!have_start || s < start) {
      start = s;
      have_start = true;
    }
  }
  if (!have_start) throw std::invalid_argument("empty shared set");

  GapDecomposition out;
  int n = static_cast<int>(c.size());
  int pos = c.find(start);
  out.anchors.push_back(start);
  Word gap;
  for (int i = 1; i < n; ++i) {
    Letter l = c[pos + i];
    if (in_shared(l)) {
      out.gaps.push_back(gap);
      gap = Word{};
      out.anchors.push_back(l);
    } else {
      gap.push_back(l);
    }
  }
  out.gaps.push_back(gap);  // gap wrapping back to the starting anchor
  return out;
}

// Interleave two gap decompositions with identical anchor cycles.  Result is
// the sum over all ways to shuffle each pair of corresponding gaps.
inline PolySum gap_shuffle_aligned(const GapDecomposition& a,
                                   const GapDecomposition& b) {
  if (a.anchors != b.anchors)
    throw std::invalid_argument("gap shuffle requires identical anchor cycles");
  size_t r = a.anchors.size();
  // Per-gap shuffles, then a cartesian product over gaps.
  std::vector<std::vector<Word>> choices(r);
  for (size_t i = 0; i < r; ++i) {
    WordSum s = shuffle(a.gaps[i], b.gaps[i]);
    if (s.is_zero()) return PolySum{};  // shared letter inside a gap
    for (const auto& [w, coeff] : s.terms()) {
      (void)coeff;  // all coefficients are 1 for distinct-letter shuffles
      choices[i].push_back(w);
    }
  }
  PolySum out;
  std::vector<size_t> idx(r, 0);
  while (true) {
    std::vector<Letter> labels;
    for (size_t i = 0; i < r; ++i) {
      labels.push_back(a.anchors[i]);
      for (Letter l : choices[i][idx[i]]) labels.push_back(l);
    }
    out.add(CyclicWord(labels), Rational(1));
    size_t k = 0;
    while (k < r && ++idx[k] == choices[k].size()) {
      idx[k] = 0;
      ++k;
    }
    if (k == r) break;
  }
  return out;
}

// Does c restrict to the cyclic order (e1,e2,e3) (true), to its reverse
// (false)?  e must be listed in the reference cyclic order.
inline bool restriction_matches(const CyclicWord& c, const std::vector<Letter>& e) {
  if (e.size() != 3) throw std::invalid_argument("three shared letters expected");
  GapDecomposition d = gap_decompose(c, e);
  // d.anchors starts at min(e) and follows c.  Rotate the reference so it
  // starts at the same letter and compare.
  std::vector<Letter> ref = e;
  while (ref[0] != d.anchors[0]) {
    std::rotate(ref.begin(), ref.begin() + 1, ref.end());
  }
  if (d.anchors == ref) return true;
  std::vector<Letter> rev{ref[0], ref[2], ref[1]};
  if (d.anchors == rev) return false;
  throw std::logic_error("restriction matches neither orientation");
}

// Signed polygon-class combination, used when the inputs live in the
// sign-quotient (reversal costs (-1)^n).
using SignedPolySum = LinComb<CyclicWord>;

// Shuffle of c1 and c2 relative to their three shared letters e (listed in the
// reference cyclic order, typically increasing).  Each input is first lifted
// so that its restriction to e matches the reference orientation; lifting by a
// reversal multiplies by (-1)^{size} in the signed quotient.  track_signs=false
// drops those signs (used for plain cell decompositions).
inline PolySum shuffle3(const CyclicWord& c1, const CyclicWord& c2,
                        const std::vector<Letter>& e, bool track_signs,
                        Rational* sign_out = nullptr) {
  if (e.size() != 3) throw std::invalid_argument("shuffle3 needs exactly three shared letters");
  for (Letter l : c1.labels())
    if (c2.find(l) >= 0 && std::find(e.begin(), e.end(), l) == e.end())
      throw std::invalid_argument("polygons share a letter outside the given triple");
  Rational sign(1);
  CyclicWord a = c1, b = c2;
  if (!restriction_matches(a, e)) {
    a = a.reversed();
    if (track_signs && a.size() % 2 != 0) sign = -sign;
  }
  if (!restriction_matches(b, e)) {
    b = b.reversed();
    if (track_signs && b.size() % 2 != 0) sign = -sign;
  }
  GapDecomposition da = gap_decompose(a, e);
  GapDecomposition db = gap_decompose(b, e);
  PolySum res = gap_shuffle_aligned(da, db);
  if (sign_out) *sign_out = sign;
  if (sign != 1) res *= sign;
  return res;
}

// Shuffle with respect to one letter: the sum of polygons (w, e) over all
// w in A sh B.  This is the defining generator family of the one-element
// shuffle subspace.
inline PolySum shuffle1(const Word& a, const Word& b, Letter e) {
  if (a.contains(e) || b.contains(e))
    throw std::invalid_argument("marker letter occurs in a shuffle factor");
  if (a.empty() || b.empty())
    throw std::invalid_argument("shuffle factors must be nonempty");
  PolySum out;
  WordSum s = shuffle(a, b);
  for (const auto& [w, coeff] : s.terms()) out.add(polygon_of_word(w, e), coeff);
  return out;
}

// Shuffle product of two cell-type cyclic structures along a common
// intersection of any size r >= 1 (the generic product rule for the
// associated rational functions).  Inputs must induce identical cyclic orders
// on the shared letters.
inline PolySum multiply_polygons(const CyclicWord& c1, const CyclicWord& c2,
                                 const std::vector<Letter>& shared) {
  GapDecomposition d1 = gap_decompose(c1, shared);
  GapDecomposition d2 = gap_decompose(c2, shared);
  if (d1.anchors != d2.anchors)
    throw std::invalid_argument("incompatible induced cyclic orders on the shared set");
  return gap_shuffle_aligned(d1, d2);
}

}  // namespace cellzeta
