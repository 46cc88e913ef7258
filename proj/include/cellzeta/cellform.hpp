#pragma once
// Bridge between labelled polygons and the rational differential forms they
// stand for.  A cycle over the alphabet {1..m, d} (d = m+1) is read through
// the standard role assignment
//     1 -> 0,   k -> t_{k-1} (2 <= k <= m-1),   m -> 1,   d -> infinity,
// and its cell-function is 1 over the product of successive differences, the
// factors containing infinity being omitted.  Evaluation is exact over the
// rationals, which makes random-point identities decisive tests.

#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lincomb.hpp"
#include "polygon.hpp"
#include "rational.hpp"
#include "shuffle.hpp"
#include "word.hpp"

namespace cellzeta {

// A marked-point value: a finite rational or the point at infinity.
struct PointValue {
  Rational v;
  bool inf = false;

  static PointValue infinity() { return {Rational(0), true}; }
  static PointValue finite(Rational r) { return {std::move(r), false}; }
};

// Coordinates (t_1, ..., t_l) of a point of the open cell complement; entries
// must avoid 0, 1 and one another for cell-functions to be finite.
using SimplicialPoint = std::vector<Rational>;

// Value of the marked point carried by `letter` in the standard role
// assignment for alphabet size m.
inline PointValue role_value(Letter letter, int m, const SimplicialPoint& t) {
  if (letter == 1) return PointValue::finite(Rational(0));
  if (letter == m) return PointValue::finite(Rational(1));
  if (letter == m + 1) return PointValue::infinity();
  int idx = letter - 2;  // letter k carries t_{k-1}
  if (idx < 0 || idx >= static_cast<int>(t.size()))
    throw std::invalid_argument("letter outside alphabet for role assignment");
  return PointValue::finite(t[idx]);
}

// Exact value of the cell-function of the cycle c: the product over cyclically
// adjacent pairs (u, v), both finite, of 1/(v - u).  Throws on a pole.
inline Rational eval_cycle(const CyclicWord& c, int m, const SimplicialPoint& t) {
  int n = c.size();
  Rational out(1);
  for (int i = 0; i < n; ++i) {
    PointValue u = role_value(c[i], m, t);
    PointValue v = role_value(c[i + 1], m, t);
    if (u.inf || v.inf) continue;
    Rational diff = v.v - u.v;
    if (diff == 0) throw std::domain_error("cell-function evaluated at a pole");
    out /= diff;
  }
  return out;
}

inline Rational eval_cycle_sum(const PolySum& x, int m, const SimplicialPoint& t) {
  Rational out(0);
  for (const auto& [c, coeff] : x.terms()) out += coeff * eval_cycle(c, m, t);
  return out;
}

// ---------------------------------------------------------------------------
// Text rendering.  Forms print as "[0,1,t2,oo,t1,t3]" (square brackets),
// plain cells as "(0,t1,t2,1,oo)".  The rotation shown starts at the marked
// point 0.

inline std::string role_token(Letter letter, int m) {
  if (letter == 1) return "0";
  if (letter == m) return "1";
  if (letter == m + 1) return "oo";
  return "t" + std::to_string(letter - 1);
}

inline std::string render_cycle(const CyclicWord& c, int m, char open, char close) {
  int start = c.find(1);
  if (start < 0) start = 0;
  std::string out(1, open);
  for (int i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += role_token(c[start + i], m);
  }
  out += close;
  return out;
}

inline std::string form_str(const CyclicWord& c, int m) {
  return render_cycle(c, m, '[', ']');
}
inline std::string cell_str(const CyclicWord& c, int m) {
  return render_cycle(c, m, '(', ')');
}

// Renders a combination of form cycles, e.g. "[0,1,t1,oo,t2] - 2*[0,1,t2,oo,t1]".
inline std::string form_sum_str(const PolySum& x, int m) {
  return x.str([m](const CyclicWord& c) { return form_str(c, m); });
}

// ---------------------------------------------------------------------------
// Parsing of the same notation, plus shuffle blocks:  a position may hold
//   an atom                 0, 1, oo, t3
//   a word of t-atoms       t1.t3           (concatenation)
//   a shuffle block         sh(t2,t1.t3)    (shuffle of words)
// Shuffle blocks expand multilinearly into a sum of plain cycles.

namespace detail {

inline std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

inline int max_t_index(const std::string& s) {
  int mx = 0;
  for (size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] == 't' && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
      int v = std::atoi(s.c_str() + i + 1);
      if (v > mx) mx = v;
    }
  }
  return mx;
}

inline Letter parse_atom(const std::string& tok, int m) {
  if (tok == "0") return 1;
  if (tok == "1") return static_cast<Letter>(m);
  if (tok == "oo" || tok == "inf") return static_cast<Letter>(m + 1);
  if (tok.size() >= 2 && tok[0] == 't') {
    int v = std::atoi(tok.c_str() + 1);
    if (v >= 1 && v <= m - 2) return static_cast<Letter>(v + 1);
  }
  throw std::invalid_argument("bad marked-point token: " + tok);
}

inline Word parse_word(const std::string& tok, int m) {
  Word w;
  std::string atom;
  std::stringstream ss(tok);
  while (std::getline(ss, atom, '.')) w.push_back(parse_atom(atom, m));
  return w;
}

}  // namespace detail

// Parses a bracketed cycle with optional shuffle blocks into a sum of cycles.
// Accepts "[...]" and "(...)" alike.
inline PolySum parse_cycle_sum(const std::string& text, int* m_out = nullptr) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.size() < 2 || (s.front() != '[' && s.front() != '(') ||
      (s.back() != ']' && s.back() != ')'))
    throw std::invalid_argument("cycle must be bracketed: " + text);
  s = s.substr(1, s.size() - 2);
  int m = detail::max_t_index(s) + 2;
  if (m_out) *m_out = m;

  // Each position contributes a fixed letter or a sum of words.
  std::vector<WordSum> slots;
  for (const std::string& tok : detail::split_top_level(s)) {
    if (tok.rfind("sh(", 0) == 0 && tok.back() == ')') {
      std::vector<Word> words;
      for (const std::string& sub :
           detail::split_top_level(tok.substr(3, tok.size() - 4)))
        words.push_back(detail::parse_word(sub, m));
      slots.push_back(shuffle_all(words));
    } else {
      slots.push_back(WordSum(detail::parse_word(tok, m)));
    }
  }

  PolySum out;
  std::vector<std::pair<Word, Rational>> partial{{Word{}, Rational(1)}};
  for (const WordSum& slot : slots) {
    std::vector<std::pair<Word, Rational>> next;
    for (const auto& [prefix, pc] : partial)
      for (const auto& [w, wc] : slot.terms())
        next.emplace_back(prefix.concat(w), pc * wc);
    partial = std::move(next);
  }
  for (auto& [w, coeff] : partial) out.add(CyclicWord(std::vector<Letter>(w.begin(), w.end())), coeff);
  return out;
}

// Single-cycle convenience parser (throws if the text expands to a sum).
inline CyclicWord parse_cycle(const std::string& text, int* m_out = nullptr) {
  PolySum s = parse_cycle_sum(text, m_out);
  if (s.term_count() != 1 || s.terms().begin()->second != 1)
    throw std::invalid_argument("expected a single plain cycle: " + text);
  return s.terms().begin()->first;
}

// ---------------------------------------------------------------------------
// Pole order of the form attached to a cycle along a boundary divisor.  The
// divisor is a chord D of the reference polygon; writing n for the number of
// edges, the order is
//     ord_D = ( (n-4) - #{ cyclically adjacent pairs of c in the same part } ) / 2,
// which is -1 exactly when D is a chord of c and >= 0 otherwise.
inline int pole_order(const CyclicWord& c, const Chord& d) {
  int n = c.size();
  auto side = [&](Letter l) -> int {
    for (Letter x : d.first)
      if (x == l) return 0;
    for (Letter x : d.second)
      if (x == l) return 1;
    throw std::invalid_argument("chord does not cover the label set");
  };
  int same = 0;
  for (int i = 0; i < n; ++i)
    if (side(c[i]) == side(c[i + 1])) ++same;
  int num = (n - 4) - same;
  if (num % 2 != 0) throw std::logic_error("pole order formula produced an odd numerator");
  return num / 2;
}

// ---------------------------------------------------------------------------
// Residues: cutting a polygon along chords.  The fresh edge labels are chosen
// above every existing label so that they sort last.

inline Letter fresh_label(const CyclicWord& c) {
  Letter mx = 0;
  for (Letter l : c.labels()) mx = std::max(mx, l);
  return static_cast<Letter>(mx + 1);
}

// Residue along a single chord: the two subpolygons, part-containing-minimum
// first, or nothing when D is not a chord of c.
inline std::optional<std::pair<CyclicWord, CyclicWord>> residue(
    const CyclicWord& c, const Chord& d) {
  if (d.first.size() + d.second.size() != static_cast<size_t>(c.size()))
    throw std::invalid_argument("chord does not partition the label set");
  for (Letter l : d.first)
    if (c.find(l) < 0) throw std::invalid_argument("chord letter missing from polygon");
  if (!admits_chord(c, d.first)) return std::nullopt;
  auto [a, b] = cut_along(c, d.first, fresh_label(c));
  return std::make_pair(a, b);
}

// Composed residue along nested chords D_i = (S_1 ∪ ... ∪ S_i) | rest.  The
// chords must form a nested family (this is validated; a malformed family is
// an error); the result is empty when some D_i is not a chord of c.
inline std::optional<std::vector<CyclicWord>> composed_residue(
    const CyclicWord& c, const std::vector<Chord>& ds) {
  if (ds.empty()) throw std::invalid_argument("composed residue needs at least one chord");
  // Recover the oriented chain U_1 ⊂ U_2 ⊂ ... from the unordered parts.
  auto contains_all = [](const std::vector<Letter>& big, const std::vector<Letter>& small) {
    for (Letter l : small)
      if (!std::binary_search(big.begin(), big.end(), l)) return false;
    return true;
  };
  std::vector<std::vector<Letter>> chain;
  for (int orient = 0; orient < 2 && chain.empty(); ++orient) {
    std::vector<std::vector<Letter>> u;
    u.push_back(orient == 0 ? ds[0].first : ds[0].second);
    bool ok = true;
    for (size_t i = 1; i < ds.size(); ++i) {
      if (contains_all(ds[i].first, u.back()) && ds[i].first.size() > u.back().size())
        u.push_back(ds[i].first);
      else if (contains_all(ds[i].second, u.back()) && ds[i].second.size() > u.back().size())
        u.push_back(ds[i].second);
      else {
        ok = false;
        break;
      }
    }
    if (ok) chain = std::move(u);
  }
  if (chain.empty()) throw std::invalid_argument("chords do not form a nested family");

  // Parts: S_1 = U_1, S_i = U_i \ U_{i-1}.
  std::vector<std::vector<Letter>> parts;
  parts.push_back(chain[0]);
  for (size_t i = 1; i < chain.size(); ++i) {
    std::vector<Letter> diff;
    for (Letter l : chain[i])
      if (!std::binary_search(chain[i - 1].begin(), chain[i - 1].end(), l))
        diff.push_back(l);
    parts.push_back(diff);
  }

  Letter base = fresh_label(c);
  std::vector<CyclicWord> out;
  CyclicWord rest = c;
  for (size_t i = 0; i < parts.size(); ++i) {
    std::vector<Letter> side = parts[i];
    if (i > 0) side.push_back(static_cast<Letter>(base + i - 1));
    std::sort(side.begin(), side.end());
    if (!admits_chord(rest, side)) return std::nullopt;
    auto [l, r] = cut_along(rest, side, static_cast<Letter>(base + i));
    out.push_back(l);
    rest = r;
  }
  out.push_back(rest);
  return out;
}

}  // namespace cellzeta
