#pragma once
// Convergence along the standard polygon.
//
// A combination of polygons over {1..n, d} (d = n+1) defines an integral
// over the standard cell; it converges exactly when, for every chord whose
// d-free side T is a run of consecutive integers, the residue along that
// chord is a combination of proper shuffles on T. This header provides the
// interval-block word predicates, the bad-chord scan, the grouped residue
// test, and enumerations of convergent words and polygons.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cellzeta/basis_split.hpp"
#include "cellzeta/lyndon.hpp"
#include "cellzeta/polygon.hpp"

namespace cellzeta {

// ---------------------------------------------------------------------------
// Interval-block predicates on distinct-letter words.

// True when some contiguous subword of w with length in [lo, hi] covers an
// integer interval. Letters are distinct, so a window of length L is an
// interval exactly when max - min == L - 1.
inline bool has_interval_block(const Word& w, int lo, int hi) {
  int n = w.size();
  hi = std::min(hi, n);
  for (int s = 0; s < n; ++s) {
    Letter mn = w[s], mx = w[s];
    for (int e = s + 1; e < n; ++e) {
      mn = std::min(mn, w[e]);
      mx = std::max(mx, w[e]);
      int len = e - s + 1;
      if (len > hi) break;
      if (len >= lo && len >= 2 && mx - mn == len - 1) return true;
    }
  }
  return false;
}

// A word of length n >= 4 is convergent when no contiguous subword of length
// 2..n-2 covers an integer interval. A single letter is convergent; words of
// length 2 and 3 never are (their cell integrals diverge outright).
inline bool is_convergent_word(const Word& w) {
  int n = w.size();
  if (n <= 1) return n == 1;
  if (n <= 3) return false;
  return !has_interval_block(w, 2, n - 2);
}

// Stricter rule used for the factors of Lyndon insertion shuffles: interval
// blocks of every length up to the full word are forbidden. Single letters
// pass.
inline bool is_convergent_factor(const Word& w) {
  return w.size() <= 1 || !has_interval_block(w, 2, w.size());
}

// Strongest rule: windows of length 2..n-1 must avoid intervals, which is
// the same as saying the polygon (w, d) shares no chord with the standard
// polygon (1, ..., n, d). Words shorter than 4 letters never qualify.
inline bool is_special_convergent_word(const Word& w) {
  int n = w.size();
  if (n <= 3) return false;
  return !has_interval_block(w, 2, n - 1);
}

// ---------------------------------------------------------------------------
// Bad chords of a polygon combination.

// A chord of a polygon over {1..n, d} whose d-free side is a run of
// consecutive integers inside {1..n}; the run determines the partition.
struct BadChord {
  std::vector<Letter> block;  // the run, sorted increasingly

  BadChord() = default;
  explicit BadChord(std::vector<Letter> b) : block(std::move(b)) {
    std::sort(block.begin(), block.end());
    if (block.size() < 2 || block.back() - block.front() !=
                                static_cast<Letter>(block.size()) - 1)
      throw std::invalid_argument("chord block must be a consecutive run");
  }
  BadChord(int lo, int hi) {
    if (hi - lo < 1) throw std::invalid_argument("chord block too small");
    for (int l = lo; l <= hi; ++l) block.push_back(static_cast<Letter>(l));
  }

  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(static_cast<int>(block[i]));
    }
    return s + "}";
  }

  friend auto operator<=>(const BadChord&, const BadChord&) = default;
};

namespace detail {
// Largest label over all terms; by convention this is the marker d.
inline Letter top_label(const PolySum& x) {
  Letter d = 0;
  for (const auto& [c, coeff] : x.terms())
    for (Letter l : c.labels()) d = std::max(d, l);
  return d;
}
}  // namespace detail

// Every consecutive run T inside {1..n} that occurs as a chord of at least
// one term of x (terms are polygons over {1..n, d}, d = largest label).
inline std::vector<BadChord> bad_chords(const PolySum& x) {
  std::vector<BadChord> out;
  if (x.is_zero()) return out;
  int n = detail::top_label(x) - 1;
  for (int lo = 1; lo <= n; ++lo) {
    for (int hi = lo + 1; hi <= n && hi - lo + 1 <= n - 1; ++hi) {
      BadChord e(lo, hi);
      for (const auto& [c, coeff] : x.terms()) {
        if (admits_chord(c, e.block)) {
          out.push_back(e);
          break;
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Residues along a bad chord and the convergence test.

// Whether a combination of words on a common letter set of size full_len
// lies in the span of proper shuffles: its Lyndon-shuffle decomposition must
// have no single-factor component of full length.
inline bool in_shuffle_ideal(const WordSum& x, int full_len) {
  LyndonSum dec = lyndon_decompose(x);
  for (const auto& [m, c] : dec.terms())
    if (m.factors.size() == 1 && m.factors[0].size() == full_len) return false;
  return true;
}

// The residue of x along the chord with block T: drop terms not admitting
// the chord, cut the rest (both sides gain one fresh edge), and group the
// cut-off T-side -- read as the word ending at the fresh edge -- by the
// complementary polygon.
inline std::map<CyclicWord, WordSum> residue_groups(const PolySum& x,
                                                    const BadChord& e) {
  std::map<CyclicWord, WordSum> groups;
  Letter fresh = detail::top_label(x) + 1;
  for (const auto& [c, coeff] : x.terms()) {
    if (!admits_chord(c, e.block)) continue;
    auto [part, rest] = cut_along(c, e.block, fresh);
    groups[rest].add(part.word_after(fresh), coeff);
  }
  for (auto it = groups.begin(); it != groups.end();)
    it = it->second.is_zero() ? groups.erase(it) : std::next(it);
  return groups;
}

// x converges along the chord when within every group of the residue the
// cut-off words form a combination of proper shuffles on the block.
inline bool converges_along(const PolySum& x, const BadChord& e) {
  int len = static_cast<int>(e.block.size());
  for (const auto& [rest, combo] : residue_groups(x, e))
    if (!in_shuffle_ideal(combo, len)) return false;
  return true;
}

// Convergent: converges along every bad chord.
inline bool is_convergent(const PolySum& x) {
  for (const BadChord& e : bad_chords(x))
    if (!converges_along(x, e)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration of convergent words.

// All distinct-letter words on {1..len} whose windows of length 2..len-2
// (2..len-1 when special) avoid integer intervals, in lexicographic order;
// restrict_1n keeps only words where 1 immediately precedes len. Lengths
// 1..3 follow the small-length conventions of the predicates above.
inline std::vector<Word> enumerate_convergent_words(int len, bool special,
                                                    bool restrict_1n) {
  std::vector<Word> out;
  if (len < 1) return out;
  if (len <= 3) {
    if (!special && len == 1 && !restrict_1n) out.push_back(Word{1});
    return out;
  }
  int max_win = special ? len - 1 : len - 2;
  std::vector<Letter> cur(len);
  std::vector<bool> used(len + 1, false);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == len) {
      Word w(cur);
      if (!restrict_1n || is_1n_word(w, len)) out.push_back(w);
      return;
    }
    for (Letter l = 1; l <= len; ++l) {
      if (used[l]) continue;
      cur[pos] = l;
      bool ok = true;
      Letter mn = l, mx = l;
      for (int s = pos - 1; s >= 0 && ok; --s) {
        mn = std::min(mn, cur[s]);
        mx = std::max(mx, cur[s]);
        int win = pos - s + 1;
        if (win > max_win) break;
        if (mx - mn == win - 1) ok = false;
      }
      if (!ok) continue;
      used[l] = true;
      self(self, pos + 1);
      used[l] = false;
    }
  };
  rec(rec, 0);
  return out;
}

// The 1(n-1)-restricted special convergent words of length n-1; these index
// the convergent 01 cell-forms attached to n marked points, and c0(n) is
// their count.
inline std::vector<Word> enumerate_special_convergent_words(int n) {
  if (n < 2) return {};
  return enumerate_convergent_words(n - 1, true, true);
}

inline int c0(int n) {
  return static_cast<int>(enumerate_special_convergent_words(n).size());
}

// ---------------------------------------------------------------------------
// Enumeration of convergent polygons.

// Whether the cycle avoids arcs of length 2..n-2 covering integer intervals
// (wrap-around arcs included): no chord in common with the standard cycle.
inline bool is_convergent_polygon(const CyclicWord& c) {
  int n = c.size();
  for (int s = 0; s < n; ++s) {
    Letter mn = c[s], mx = c[s];
    for (int len = 2; len <= n - 2; ++len) {
      mn = std::min(mn, c[s + len - 1]);
      mx = std::max(mx, c[s + len - 1]);
      if (mx - mn == len - 1) return false;
    }
  }
  return true;
}

// One representative per reversal class of the convergent cycles on {1..n},
// in increasing order of the canonical representative.
inline std::vector<SignedPolygon> enumerate_convergent_polygons(int n) {
  std::vector<SignedPolygon> out;
  if (n < 4) return out;
  std::vector<Letter> rest;
  for (int l = 2; l <= n; ++l) rest.push_back(static_cast<Letter>(l));
  std::set<CyclicWord> reps;
  do {
    std::vector<Letter> cyc;
    cyc.push_back(1);
    cyc.insert(cyc.end(), rest.begin(), rest.end());
    CyclicWord c(std::move(cyc));
    if (!is_convergent_polygon(c)) continue;
    reps.insert(canonical_signed(c).first);
  } while (std::next_permutation(rest.begin(), rest.end()));
  for (const CyclicWord& c : reps) out.emplace_back(c);
  return out;
}

}  // namespace cellzeta
