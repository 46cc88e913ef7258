#pragma once

// Cyclic structures ("polygons") whose edges are labelled by distinct
// letters, together with chords, cutting (residues), relabelling actions and
// the dihedral symmetries of the standard polygon.
//
// Two quotients of the free span of cyclic orders appear:
//   - plain cyclic classes (rotation only), used for cells and for the word
//     calculus: a word w on {1..m} corresponds to the cycle (w, d) where the
//     marker d closes it up;
//   - signed classes where reversing an n-cycle costs (-1)^n, used when
//     printing and comparing differential-form level expressions. At the word
//     level the reversal identity holds modulo the shuffle span, so internal
//     computation can stay with plain cycles throughout.

#include <algorithm>
#include <array>
#include <cassert>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cellzeta/lincomb.hpp"
#include "cellzeta/word.hpp"

namespace cellzeta {

class CyclicWord {
 public:
  CyclicWord() = default;
  explicit CyclicWord(std::vector<Letter> ls) : labels_(std::move(ls)) {
    normalize();
  }
  explicit CyclicWord(const Word& w) : labels_(w.begin(), w.end()) {
    normalize();
  }

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<Letter>& labels() const { return labels_; }
  Letter operator[](int i) const { return labels_[mod(i)]; }

  bool contains(Letter l) const {
    return std::find(labels_.begin(), labels_.end(), l) != labels_.end();
  }

  int find(Letter l) const {
    for (int i = 0; i < size(); ++i)
      if (labels_[i] == l) return i;
    return -1;
  }

  // The linear word obtained by reading the cycle from just after `last`
  // around to it; (word_after(d), d) reconstructs the cycle.
  Word word_after(Letter last) const {
    int p = find(last);
    if (p < 0) throw std::invalid_argument("letter not on cycle");
    Word w;
    for (int i = 1; i < size(); ++i) w.push_back(labels_[mod(p + i)]);
    return w;
  }

  CyclicWord reversed() const {
    std::vector<Letter> r(labels_.rbegin(), labels_.rend());
    return CyclicWord(std::move(r));
  }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < size(); ++i) {
      if (i) s += ",";
      s += std::to_string(static_cast<int>(labels_[i]));
    }
    return s + ")";
  }

  friend auto operator<=>(const CyclicWord& a, const CyclicWord& b) = default;

 private:
  std::vector<Letter> labels_;  // canonical: lexicographically least rotation

  int mod(int i) const {
    int n = size();
    return ((i % n) + n) % n;
  }

  void normalize() {
    if (labels_.empty()) return;
    int n = size();
    int best = 0;
    for (int s = 1; s < n; ++s) {
      for (int i = 0; i < n; ++i) {
        Letter a = labels_[(s + i) % n];
        Letter b = labels_[(best + i) % n];
        if (a != b) {
          if (a < b) best = s;
          break;
        }
      }
    }
    std::rotate(labels_.begin(), labels_.begin() + best, labels_.end());
  }
};

inline CyclicWord polygon_of_word(const Word& w, Letter marker) {
  std::vector<Letter> ls(w.begin(), w.end());
  ls.push_back(marker);
  return CyclicWord(std::move(ls));
}

// Signed-reversal canonical form: the lexicographically smaller of the cycle
// and its reversal, with sign (-1)^n when the reversal is chosen.
inline std::pair<CyclicWord, int> canonical_signed(const CyclicWord& c) {
  CyclicWord r = c.reversed();
  if (r < c) return {r, c.size() % 2 == 0 ? 1 : -1};
  return {c, 1};
}

using PolySum = LinComb<CyclicWord>;

// Adds a polygon under the signed-reversal identification.
inline void add_signed(PolySum& acc, const CyclicWord& c, const Rational& coeff) {
  auto [canon, sign] = canonical_signed(c);
  acc.add(canon, sign * coeff);
}

inline PolySum to_signed_classes(const PolySum& x) {
  PolySum out;
  for (const auto& [c, k] : x.terms()) add_signed(out, c, k);
  return out;
}

// A polygon under the signed-reversal identification: the stored cycle is the
// canonical orientation and the sign records how the original compared to it.
struct SignedPolygon {
  CyclicWord poly;
  int sign = 1;

  SignedPolygon() = default;
  explicit SignedPolygon(const CyclicWord& c, int s = 1) {
    auto [canon, flip] = canonical_signed(c);
    poly = canon;
    sign = s * flip;
  }

  friend auto operator<=>(const SignedPolygon&, const SignedPolygon&) = default;
};

// ---------------------------------------------------------------------------
// Chords.

// A two-part partition of a label set; parts are sorted, and the part holding
// the smallest label comes first, so equal partitions compare equal.
struct Chord {
  std::vector<Letter> first, second;

  Chord() = default;
  Chord(std::vector<Letter> a, std::vector<Letter> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (b.empty() || (!a.empty() && a[0] < b[0])) {
      first = std::move(a), second = std::move(b);
    } else {
      first = std::move(b), second = std::move(a);
    }
  }

  friend auto operator<=>(const Chord&, const Chord&) = default;

  std::string str() const {
    auto part = [](const std::vector<Letter>& p) {
      std::string s = "{";
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(static_cast<int>(p[i]));
      }
      return s + "}";
    };
    return part(first) + "|" + part(second);
  }
};

// True if one part of the chord occurs as a contiguous arc of the cycle
// (then so does the other); parts must have at least two labels each.
inline bool admits_chord(const CyclicWord& c, std::vector<Letter> part) {
  int n = c.size();
  int k = static_cast<int>(part.size());
  if (k < 2 || k > n - 2) return false;
  std::sort(part.begin(), part.end());
  auto in_part = [&](Letter l) {
    return std::binary_search(part.begin(), part.end(), l);
  };
  for (int s = 0; s < n; ++s) {
    if (!in_part(c[s]) || in_part(c[s - 1])) continue;  // arc must start here
    int i = 0;
    while (i < k && in_part(c[s + i])) ++i;
    return i == k;  // all of part contiguous from s
  }
  return false;
}

// All chords of a polygon: stable partitions where both arcs are contiguous
// and have >= 2 edges.
inline std::vector<Chord> chords(const CyclicWord& c) {
  int n = c.size();
  std::set<Chord> out;
  for (int s = 0; s < n; ++s) {
    for (int len = 2; len <= n - 2; ++len) {
      std::vector<Letter> a, b;
      for (int i = 0; i < len; ++i) a.push_back(c[s + i]);
      for (int i = len; i < n; ++i) b.push_back(c[s + i]);
      out.emplace(std::move(a), std::move(b));
    }
  }
  return std::vector<Chord>(out.begin(), out.end());
}

inline int chord_count(const CyclicWord& c) {
  return static_cast<int>(chords(c).size());
}

// ---------------------------------------------------------------------------
// Cutting along a chord.

// Cuts the cycle along the chord separating `part` from the rest; each side
// keeps its arc orientation and gains a fresh edge labelled `fresh` in the
// chord's place. First component holds `part`. Requires the chord.
inline std::pair<CyclicWord, CyclicWord> cut_along(const CyclicWord& c,
                                                   std::vector<Letter> part,
                                                   Letter fresh) {
  int n = c.size();
  int k = static_cast<int>(part.size());
  std::sort(part.begin(), part.end());
  auto in_part = [&](Letter l) {
    return std::binary_search(part.begin(), part.end(), l);
  };
  for (int s = 0; s < n; ++s) {
    if (!in_part(c[s]) || in_part(c[s - 1])) continue;
    int i = 0;
    while (i < k && in_part(c[s + i])) ++i;
    if (i != k) break;
    std::vector<Letter> left, right;
    for (int j = 0; j < k; ++j) left.push_back(c[s + j]);
    left.push_back(fresh);
    for (int j = k; j < n; ++j) right.push_back(c[s + j]);
    right.push_back(fresh);
    return {CyclicWord(std::move(left)), CyclicWord(std::move(right))};
  }
  throw std::invalid_argument("cut_along: partition is not a chord");
}

// Composed cut: parts[0], parts[1], ... are successively split off with fresh
// labels fresh[0], fresh[1], ...; returns the r+1 resulting subpolygons. The
// i-th chord separates parts[0..i] from the rest.
inline std::vector<CyclicWord> cut_chain(const CyclicWord& c,
                                         const std::vector<std::vector<Letter>>& parts,
                                         const std::vector<Letter>& fresh) {
  assert(parts.size() == fresh.size());
  std::vector<CyclicWord> out;
  CyclicWord rest = c;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<Letter> side = parts[i];
    // Along with the previous fresh edge if present on this polygon.
    if (i > 0) side.push_back(fresh[i - 1]);
    std::sort(side.begin(), side.end());
    auto [l, r] = cut_along(rest, side, fresh[i]);
    out.push_back(l);
    rest = r;
  }
  out.push_back(rest);
  return out;
}

// ---------------------------------------------------------------------------
// Relabelling.

// A letter-to-letter map (identity outside the entries set).
class Relabel {
 public:
  Relabel() { map_.fill(0); }

  static Relabel identity() { return Relabel(); }

  void set(Letter from, Letter to) { map_[from] = to; }
  Letter operator()(Letter l) const { return map_[l] ? map_[l] : l; }

  Word apply(const Word& w) const {
    Word out;
    for (Letter l : w) out.push_back((*this)(l));
    return out;
  }
  CyclicWord apply(const CyclicWord& c) const {
    std::vector<Letter> ls;
    for (Letter l : c.labels()) ls.push_back((*this)(l));
    return CyclicWord(std::move(ls));
  }

  Relabel inverse() const {
    Relabel inv;
    for (int l = 1; l < static_cast<int>(map_.size()); ++l) {
      if (map_[l]) inv.set(map_[l], static_cast<Letter>(l));
    }
    return inv;
  }

 private:
  std::array<Letter, 64> map_;
};

// Composition f∘g: apply g first, then f.
inline Relabel compose(const Relabel& f, const Relabel& g) {
  Relabel h;
  for (Letter l = 1; l < 64; ++l)
    if (f(g(l)) != l) h.set(l, f(g(l)));
  return h;
}

// Relabels a signed polygon and re-canonicalizes, tracking the reversal sign.
inline SignedPolygon act(const Relabel& sigma, const SignedPolygon& g) {
  return SignedPolygon(sigma.apply(g.poly), g.sign);
}

// Relabels every term of a polygon sum under the signed identification.
inline PolySum act(const Relabel& sigma, const PolySum& x) {
  PolySum out;
  for (const auto& [c, k] : x.terms()) add_signed(out, sigma.apply(c), k);
  return out;
}

// The 2(m+1) symmetries of the standard cycle (1, 2, ..., m, d) where
// d = m+1: rotations and reflections, returned as relabelling maps.
inline std::vector<Relabel> dihedral_maps(int m) {
  int n = m + 1;
  auto at = [&](int i) {  // standard cycle position -> letter
    return static_cast<Letter>(((i % n) + n) % n + 1);
  };
  std::vector<Relabel> out;
  for (int k = 0; k < n; ++k) {
    Relabel rot, ref;
    for (int i = 0; i < n; ++i) {
      rot.set(at(i), at(i + k));
      ref.set(at(i), at(k - i));
    }
    out.push_back(rot);
    out.push_back(ref);
  }
  return out;
}

}  // namespace cellzeta
