#pragma once
// Recursively constructed spanning families for the convergent part of the
// word algebra:
//
//   * insertion shuffles on {1..n}: convergent Lyndon shuffles (every factor
//     a convergent Lyndon word, at least two factors) into whose non-leading
//     letters smaller insertion shuffles are spliced as contiguous blocks;
//   * insertion words on {1..n}: special convergent words with the minimal
//     letter immediately left of the maximal one, with splicing allowed at
//     every letter except those two extremes.
//
// Splicing replaces the letter a of the framing by each expansion term of
// the inserted element, renumbered so the blocks D_1, ..., D_k occupy
// consecutive integer ranges in alphabet order. Every expansion term of one
// element contracts back (maximal consecutive blocks, per factor) to the
// same framing and block-size vector; that pair is the element's fixed
// structure.
//
// Enumeration order is deterministic: framing size descending (so the plain
// elements on the full alphabet come first), then framings in increasing
// order, then block-size vectors lexicographically, then inserted elements
// recursively (last insertion slot fastest).

#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cellzeta/convergence.hpp"
#include "cellzeta/lyndon.hpp"
#include "cellzeta/polygon.hpp"
#include "cellzeta/shuffle.hpp"

namespace cellzeta {

// ---------------------------------------------------------------------------
// Fixed structures.

struct FixedStructure {
  // Factor words of the framing on {1..k}, sorted decreasingly as in
  // LyndonShuffle; a single entry when the framing is a word.
  std::vector<Word> framing;
  // Block sizes indexed by framing letter: v[a-1] belongs to letter a.
  std::vector<int> v;

  friend auto operator<=>(const FixedStructure&, const FixedStructure&) =
      default;

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < framing.size(); ++i) {
      if (i) s += "*";
      s += framing[i].str();
    }
    s += " v=(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s + ")";
  }
};

// ---------------------------------------------------------------------------
// Insertion elements.

struct InsertionElement;
using InsertionPtr = std::shared_ptr<const InsertionElement>;

struct InsertionElement {
  int n = 0;                 // alphabet size of the expansion
  bool word_type = false;    // true for the 1n-word family
  WordSum expansion;         // homogeneous combination of words on {1..n}
  FixedStructure structure;  // framing plus block sizes
  // Children by framing letter (only letters with v > 1), each child living
  // on its own standard alphabet {1..v}.
  std::vector<std::pair<int, InsertionPtr>> inserted;
  std::string name;          // e.g. "2*1(4*35)" or "(3*4)152"

  // Lexicographically largest expansion term (each family is triangular
  // with respect to it).
  Word leader() const { return expansion.terms().rbegin()->first; }
};

namespace detail {

inline Word shift_word(const Word& w, int delta) {
  Word out;
  for (Letter l : w) out.push_back(static_cast<Letter>(l + delta));
  return out;
}

// Offsets of the blocks: block of framing letter a covers
// {offset[a-1]+1, ..., offset[a-1]+v[a-1]}.
inline std::vector<int> block_offsets(const std::vector<int>& v) {
  std::vector<int> off(v.size(), 0);
  for (std::size_t i = 1; i < v.size(); ++i) off[i] = off[i - 1] + v[i - 1];
  return off;
}

// Renders the element's name with all letters shifted by delta.
inline std::string render_name(const InsertionElement& e, int delta) {
  auto child_of = [&](int letter) -> const InsertionElement* {
    for (const auto& [a, c] : e.inserted)
      if (a == letter) return c.get();
    return nullptr;
  };
  std::vector<int> off = block_offsets(e.structure.v);
  std::string s;
  for (std::size_t i = 0; i < e.structure.framing.size(); ++i) {
    if (i) s += "*";
    for (Letter a : e.structure.framing[i]) {
      int base = delta + off[a - 1];
      if (const InsertionElement* c = child_of(a)) {
        s += "(" + render_name(*c, base) + ")";
      } else {
        s += std::to_string(base + 1);
      }
    }
  }
  return s;
}

// Expansion of one framing factor: splice, for each letter a, either the
// single letter of its block (v = 1) or every term of the inserted child's
// shifted expansion (v > 1), concatenated in factor order.
inline WordSum expand_factor(const Word& f, const std::vector<int>& off,
                             const std::vector<int>& v,
                             const std::map<int, WordSum>& shifted_children) {
  WordSum acc;
  acc.add(Word{}, Rational(1));
  for (Letter a : f) {
    WordSum next;
    if (v[a - 1] == 1) {
      Letter l = static_cast<Letter>(off[a - 1] + 1);
      for (const auto& [w, c] : acc.terms()) {
        Word w2 = w;
        w2.push_back(l);
        next.add(w2, c);
      }
    } else {
      const WordSum& block = shifted_children.at(a);
      for (const auto& [w, c] : acc.terms())
        for (const auto& [b, cb] : block.terms()) {
          Word w2 = w;
          for (Letter l : b) w2.push_back(l);
          next.add(w2, c * cb);
        }
    }
    acc = std::move(next);
  }
  return acc;
}

// Shuffle of several word combinations (coefficient-linear in each slot).
inline WordSum shuffle_sums(const std::vector<WordSum>& parts) {
  WordSum acc;
  acc.add(Word{}, Rational(1));
  for (const WordSum& p : parts) acc = shuffle(acc, p);
  return acc;
}

// All multisets of disjoint Lyndon words covering `letters` with at least
// min_factors factors, every factor convergent.
inline void convergent_lyndon_shuffles_rec(const std::vector<Letter>& rest,
                                           std::vector<Word>& acc,
                                           int min_factors,
                                           std::vector<LyndonShuffle>& out) {
  if (rest.empty()) {
    if (static_cast<int>(acc.size()) >= min_factors) out.emplace_back(acc);
    return;
  }
  Letter head = rest.front();
  int k = static_cast<int>(rest.size());
  for (int mask = 0; mask < (1 << (k - 1)); ++mask) {
    std::vector<Letter> block{head}, others;
    for (int i = 1; i < k; ++i)
      (mask >> (i - 1) & 1 ? block : others).push_back(rest[i]);
    std::vector<Word> words;
    lyndon_words_on(block, words);
    for (const Word& w : words) {
      if (!is_convergent_factor(w)) continue;
      acc.push_back(w);
      convergent_lyndon_shuffles_rec(others, acc, min_factors, out);
      acc.pop_back();
    }
  }
}

// Compositions of `total` over the slots (>= 1 each), lexicographic.
inline void compositions_rec(int total, int slots, std::vector<int>& acc,
                             std::vector<std::vector<int>>& out) {
  if (slots == 1) {
    acc.push_back(total);
    out.push_back(acc);
    acc.pop_back();
    return;
  }
  for (int first = 1; first <= total - (slots - 1); ++first) {
    acc.push_back(first);
    compositions_rec(total - first, slots - 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace detail

// Convergent Lyndon shuffles on {1..k} with at least two factors, in
// increasing order.
inline std::vector<LyndonShuffle> convergent_lyndon_shuffles(int k) {
  std::vector<Letter> letters;
  for (int i = 1; i <= k; ++i) letters.push_back(static_cast<Letter>(i));
  std::vector<LyndonShuffle> out;
  std::vector<Word> acc;
  detail::convergent_lyndon_shuffles_rec(letters, acc, 2, out);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// The two recursive families.

inline const std::vector<InsertionPtr>& lyndon_insertion_shuffles(int n);

namespace detail {

// Builds every element with the given framing; shared by both families.
// `slots` are the framing letters where insertion is allowed.
template <typename Emit>
inline void build_with_framing(const std::vector<Word>& framing, int k, int n,
                               bool word_type, const std::vector<int>& slots,
                               Emit&& emit) {
  int extra = n - k;
  std::vector<std::vector<int>> comps;
  if (extra == 0) {
    comps.push_back({});
  } else if (!slots.empty()) {
    // Distribute `extra` additional letters over the slots: each slot gets
    // v-1 >= 0 extras; enumerate weak compositions lexicographically.
    std::vector<int> acc;
    auto rec = [&](auto&& self, int left, int s) -> void {
      if (s == static_cast<int>(slots.size())) {
        if (left == 0) comps.push_back(acc);
        return;
      }
      for (int take = 0; take <= left; ++take) {
        acc.push_back(take);
        self(self, left - take, s + 1);
        acc.pop_back();
      }
    };
    rec(rec, extra, 0);
  }
  for (const auto& extras : comps) {
    std::vector<int> v(k, 1);
    for (std::size_t i = 0; i < extras.size(); ++i) v[slots[i] - 1] += extras[i];
    std::vector<int> active;  // slots with a real insertion
    for (int a : slots)
      if (v[a - 1] > 1) active.push_back(a);
    // Odometer over the choices of inserted elements, last slot fastest.
    std::vector<std::size_t> idx(active.size(), 0);
    while (true) {
      std::vector<std::pair<int, InsertionPtr>> inserted;
      std::map<int, WordSum> shifted;
      std::vector<int> off = detail::block_offsets(v);
      bool ok = true;
      for (std::size_t i = 0; i < active.size(); ++i) {
        int a = active[i];
        const auto& pool = lyndon_insertion_shuffles(v[a - 1]);
        if (pool.empty()) { ok = false; break; }
        InsertionPtr child = pool[idx[i]];
        inserted.emplace_back(a, child);
        WordSum block;
        for (const auto& [w, c] : child->expansion.terms())
          block.add(detail::shift_word(w, off[a - 1]), c);
        shifted.emplace(a, std::move(block));
      }
      if (!ok) break;

      InsertionElement e;
      e.n = n;
      e.word_type = word_type;
      e.structure = FixedStructure{framing, v};
      e.inserted = std::move(inserted);
      std::vector<WordSum> parts;
      for (const Word& f : framing)
        parts.push_back(detail::expand_factor(f, off, v, shifted));
      e.expansion =
          word_type ? parts[0] : detail::shuffle_sums(parts);
      e.name = detail::render_name(e, 0);
      emit(std::move(e));

      // Advance the odometer.
      std::size_t p = active.size();
      while (p > 0) {
        --p;
        const auto& pool = lyndon_insertion_shuffles(v[active[p] - 1]);
        if (++idx[p] < pool.size()) break;
        idx[p] = 0;
        if (p == 0) { p = active.size() + 1; break; }
      }
      if (active.empty() || p == active.size() + 1) break;
    }
  }
}

}  // namespace detail

// The insertion shuffles on {1..n}, memoized. n = 1 holds the single
// one-letter element (the trivial insertion used for counting); for n >= 2
// every element's expansion lies in the span of proper shuffles.
inline const std::vector<InsertionPtr>& lyndon_insertion_shuffles(int n) {
  static std::map<int, std::vector<InsertionPtr>> memo;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;

  std::vector<InsertionPtr> out;
  if (n == 1) {
    InsertionElement e;
    e.n = 1;
    e.expansion.add(Word{1}, Rational(1));
    e.structure = FixedStructure{{Word{1}}, {1}};
    e.name = "1";
    out.push_back(std::make_shared<InsertionElement>(std::move(e)));
  } else if (n >= 2) {
    for (int k = n; k >= 2; --k) {
      for (const LyndonShuffle& gamma : convergent_lyndon_shuffles(k)) {
        // Insertions go at every letter except the first of each factor.
        std::vector<bool> leading(k + 1, false);
        for (const Word& f : gamma.factors) leading[f[0]] = true;
        std::vector<int> slots;
        for (int a = 1; a <= k; ++a)
          if (!leading[a]) slots.push_back(a);
        detail::build_with_framing(
            gamma.factors, k, n, /*word_type=*/false, slots,
            [&](InsertionElement&& e) {
              out.push_back(
                  std::make_shared<InsertionElement>(std::move(e)));
            });
      }
    }
  }
  return memo.emplace(n, std::move(out)).first->second;
}

// The insertion words on {1..n}: special convergent words with the minimal
// letter immediately left of the maximal one serve both as the plain
// elements (framing size n) and as framings for insertions at the interior
// letters 2..k-1.
inline std::vector<InsertionPtr> lyndon_insertion_words(int n) {
  std::vector<InsertionPtr> out;
  for (int k = n; k >= 4; --k) {
    std::vector<int> slots;
    for (int a = 2; a <= k - 1; ++a) slots.push_back(a);
    for (const Word& w : enumerate_convergent_words(k, true, true)) {
      detail::build_with_framing(
          {w}, k, n, /*word_type=*/true, slots, [&](InsertionElement&& e) {
            out.push_back(std::make_shared<InsertionElement>(std::move(e)));
          });
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fixed-structure extraction by block contraction.

// Contracts every maximal consecutive block (contiguous subword covering an
// integer interval, not inside a longer one) of each factor to a single
// letter; blocks are renumbered 1..k by their minimal letters. With
// proper_blocks, the full window of a factor does not count as a block
// (needed for single words, whose complete letter set is always an
// interval).
inline FixedStructure fixed_structure(const std::vector<Word>& factors,
                                      bool proper_blocks = false) {
  struct Block {
    Letter min;
    int len;
    int factor;
    int pos;
  };
  std::vector<Block> blocks;
  for (std::size_t fi = 0; fi < factors.size(); ++fi) {
    const Word& w = factors[fi];
    int len = w.size();
    // Interval windows, maximal under containment.
    std::vector<std::pair<int, int>> wins;  // (start, length)
    for (int s = 0; s < len; ++s) {
      Letter mn = w[s], mx = w[s];
      for (int e = s; e < len; ++e) {
        mn = std::min(mn, w[e]);
        mx = std::max(mx, w[e]);
        if (mx - mn != e - s) continue;
        if (proper_blocks && e - s + 1 == len && len > 1) continue;
        wins.emplace_back(s, e - s + 1);
      }
    }
    for (auto [s, L] : wins) {
      bool maximal = true;
      for (auto [s2, L2] : wins)
        if (L2 > L && s2 <= s && s2 + L2 >= s + L) maximal = false;
      if (!maximal) continue;
      Letter mn = w[s];
      for (int i = s; i < s + L; ++i) mn = std::min(mn, w[i]);
      blocks.push_back({mn, L, static_cast<int>(fi), s});
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.min < b.min; });
  // Symbol of each (factor, start position).
  std::map<std::pair<int, int>, Letter> symbol;
  std::vector<int> v;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    symbol[{blocks[i].factor, blocks[i].pos}] = static_cast<Letter>(i + 1);
    v.push_back(blocks[i].len);
  }
  std::vector<Word> contracted;
  for (std::size_t fi = 0; fi < factors.size(); ++fi) {
    Word c;
    int pos = 0;
    const Word& w = factors[fi];
    while (pos < w.size()) {
      auto it = symbol.find({static_cast<int>(fi), pos});
      if (it == symbol.end())
        throw std::logic_error("block contraction misaligned");
      c.push_back(it->second);
      pos += v[it->second - 1];
    }
    contracted.push_back(c);
  }
  std::sort(contracted.begin(), contracted.end(),
            [](const Word& a, const Word& b) { return b < a; });
  return FixedStructure{std::move(contracted), std::move(v)};
}

inline FixedStructure fixed_structure(const LyndonShuffle& s) {
  return fixed_structure(s.factors);
}

inline FixedStructure fixed_structure(const Word& w) {
  return fixed_structure(std::vector<Word>{w}, /*proper_blocks=*/true);
}

inline FixedStructure fixed_structure(const InsertionElement& e) {
  return e.structure;
}

// ---------------------------------------------------------------------------
// Basis of forms attached to n marked points, and its dimension.

// The polygon images (w, d) of the insertion words on {1..n-1}, with marker
// d = n; under the standard role reading these are the convergent cell
// forms on n marked points.
inline std::vector<PolySum> insertion_basis(int n) {
  std::vector<PolySum> out;
  for (const InsertionPtr& e : lyndon_insertion_words(n - 1)) {
    PolySum p;
    for (const auto& [w, c] : e->expansion.terms())
      p.add(polygon_of_word(w, static_cast<Letter>(n)), c);
    out.push_back(std::move(p));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Coordinates relative to the insertion words.

namespace detail {

// Solve table for coordinates on n marked points: the expansions of the
// insertion words on n-1 letters together with each expansion's
// lexicographically greatest word (its leader) and that word's coefficient.
// The leaders are pairwise distinct, which makes the solve triangular.
struct CoordTable {
  std::vector<WordSum> expansions;
  std::map<Word, std::pair<std::size_t, Rational>> by_leader;
};

inline const CoordTable& coord_table(int n) {
  static std::map<int, CoordTable> memo;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;

  CoordTable tab;
  for (const InsertionPtr& e : lyndon_insertion_words(n - 1)) {
    std::size_t k = tab.expansions.size();
    const auto& terms = e->expansion.terms();
    if (terms.empty()) throw std::logic_error("empty insertion expansion");
    auto lead = std::prev(terms.end());
    auto [pos, fresh] =
        tab.by_leader.try_emplace(lead->first, k, lead->second);
    if (!fresh) throw std::logic_error("duplicate insertion leader word");
    (void)pos;
    tab.expansions.push_back(e->expansion);
  }
  return memo.emplace(n, std::move(tab)).first->second;
}

}  // namespace detail

// Coordinates of a word sum on the letters {1..n-1} relative to the
// expansions of insertion_basis(n), solved by repeatedly eliminating the
// lexicographically greatest remaining word against the unique basis element
// leading with it. Throws std::invalid_argument if the input lies outside
// the span (every convergent 1n-word sum lies inside it).
inline std::vector<Rational> insertion_coords(WordSum x, int n) {
  const detail::CoordTable& tab = detail::coord_table(n);
  std::vector<Rational> out(tab.expansions.size(), Rational(0));
  while (!x.is_zero()) {
    auto top = std::prev(x.terms().end());
    auto hit = tab.by_leader.find(top->first);
    if (hit == tab.by_leader.end())
      throw std::invalid_argument("word sum outside the insertion span: " +
                                  top->first.str());
    const auto& [k, lead_coeff] = hit->second;
    Rational c = top->second / lead_coeff;
    out[k] += c;
    x -= c * tab.expansions[k];
  }
  return out;
}

// Counting form of the recursion: the elements on m letters with framing
// size k are framings (c0(k+1) of them) times one insertion-shuffle choice
// for each insertion slot, so
//   d_n = sum over r of c0(r) * sum over compositions (i_1..i_{r-3}) of
//         n-3 of I_{i_1} ... I_{i_{r-3}},
// with I_i the insertion-shuffle counts (I_1 = 1).
inline long long dimension_formula(int n) {
  if (n < 5) return 0;
  std::vector<long long> I(n - 3, 0);  // I[i] = count on i letters, i <= n-4+1
  for (int i = 1; i <= n - 4; ++i)
    I[i] = static_cast<long long>(lyndon_insertion_shuffles(i).size());
  long long total = 0;
  for (int r = 5; r <= n; ++r) {
    std::vector<std::vector<int>> comps;
    std::vector<int> acc;
    detail::compositions_rec(n - 3, r - 3, acc, comps);
    long long ways = 0;
    for (const auto& comp : comps) {
      long long prod = 1;
      for (int i : comp) prod *= (i <= n - 4 ? I[i] : 0);
      ways += prod;
    }
    total += ways * c0(r);
  }
  return total;
}

}  // namespace cellzeta
