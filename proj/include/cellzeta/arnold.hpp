#pragma once
// The 01 side of the form calculus:
//
//  * to_01_basis — rewrite any combination of marked polygons as the unique
//    congruent combination (modulo proper shuffles) of words in which the
//    minimal letter immediately precedes the second-largest one; under the
//    standard role reading these are the forms whose cycle begins (0, 1, …).
//
//  * arnold_decompose — write the classical logarithmic one-pole forms
//        prod_i dt_i / (t_i - eps_i),   eps_1 in {0,1},
//        eps_i in {0,1, t_1, …, t_{i-1}},
//    as combinations of 01 cell forms.  Each denominator factor is matched
//    by a small cell function F_i on {0, 1, t_i, ∞} (plus the reference
//    point when eps_i is a t), and the product of the F_i is expanded by
//    iterated polygon shuffles; the compensating restriction factors cancel
//    against the pole-normalization constants, so the expansion equals the
//    original form exactly (checked pointwise in the tests).

#include <map>
#include <stdexcept>
#include <vector>

#include "cellzeta/basis_split.hpp"
#include "cellzeta/cellform.hpp"
#include "cellzeta/polygon.hpp"
#include "cellzeta/polygon_shuffle.hpp"
#include "cellzeta/rational.hpp"

namespace cellzeta {

// Shared projection tables, built once per alphabet size.
inline const WordSplitter& word_splitter(int m) {
  static std::map<int, WordSplitter> memo;
  auto it = memo.find(m);
  if (it == memo.end()) it = memo.emplace(m, WordSplitter(m)).first;
  return it->second;
}

// Rewrites a homogeneous combination of polygons over {1..m+1} (marker
// m+1) in the 01-word basis: the result is the unique combination of words
// with 1 immediately before m that is congruent to the input modulo proper
// shuffles. The input cycles may place their letters arbitrarily.
inline WordSum to_01_basis(const PolySum& x) {
  WordSum out;
  for (const auto& [c, coeff] : x.terms()) {
    int m = c.size() - 1;
    for (int l = 1; l <= m + 1; ++l)
      if (!c.contains(static_cast<Letter>(l)))
        throw std::invalid_argument("polygon letters must be 1..m+1");
    Word w = c.word_after(static_cast<Letter>(m + 1));
    WordSum p = word_splitter(m).project_word(w);
    p *= coeff;
    out += p;
  }
  return out;
}

// ---------------------------------------------------------------------------
// One-pole logarithmic forms.

// eps[i] describes the pole of t_{i+1}: 0 and 1 mean the constant points,
// a value v >= 2 means the earlier coordinate t_{v-1}.
using ArnoldIndex = std::vector<int>;

inline void validate_arnold_index(const ArnoldIndex& eps) {
  for (std::size_t i = 0; i < eps.size(); ++i) {
    int v = eps[i];
    bool ok = v == 0 || v == 1 || (v >= 2 && v <= static_cast<int>(i) + 1);
    if (!ok)
      throw std::invalid_argument(
          "pole index " + std::to_string(v) + " invalid at position " +
          std::to_string(i + 1));
  }
}

// All (ell+1)! admissible pole vectors, in lexicographic order.
inline std::vector<ArnoldIndex> all_arnold_indices(int ell) {
  std::vector<ArnoldIndex> out;
  ArnoldIndex acc;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == ell) {
      out.push_back(acc);
      return;
    }
    for (int v = 0; v <= i + 1; ++v) {
      acc.push_back(v);
      self(self, i + 1);
      acc.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Direct evaluation of prod_i 1/(t_i - eps_i); the independent oracle the
// decomposition is tested against.
inline Rational arnold_eval(const ArnoldIndex& eps, const SimplicialPoint& t) {
  validate_arnold_index(eps);
  if (eps.size() > t.size())
    throw std::invalid_argument("point has too few coordinates");
  Rational out(1);
  for (std::size_t i = 0; i < eps.size(); ++i) {
    Rational pole;
    if (eps[i] == 0)
      pole = Rational(0);
    else if (eps[i] == 1)
      pole = Rational(1);
    else
      pole = t[eps[i] - 2];
    Rational diff = t[i] - pole;
    if (diff == 0) throw std::domain_error("evaluation at a pole");
    out /= diff;
  }
  return out;
}

// Decomposition into 01 cell forms over the letters {1..ell+3}: letter 1
// plays 0, letters 2..ell+1 play t_1..t_ell, letter ell+2 plays 1 and the
// marker ell+3 plays ∞. The returned combination evaluates pointwise to
// arnold_eval(eps, ·).
inline PolySum arnold_decompose(const ArnoldIndex& eps) {
  validate_arnold_index(eps);
  const int ell = static_cast<int>(eps.size());
  if (ell == 0) throw std::invalid_argument("empty pole vector");
  const Letter zero = 1;
  const Letter one = static_cast<Letter>(ell + 2);
  const Letter inf = static_cast<Letter>(ell + 3);
  auto t_letter = [](int i) { return static_cast<Letter>(i + 1); };  // t_i

  // Type of each t_i: the constant (0 or 1) its pole chain ends in.
  std::vector<int> type(ell + 1, 0);
  for (int i = 1; i <= ell; ++i) {
    int v = eps[i - 1];
    type[i] = (v == 0 || v == 1) ? v : type[v - 1];
  }

  PolySum acc;
  for (int i = 1; i <= ell; ++i) {
    int v = eps[i - 1];
    std::vector<Letter> cycle;
    int sign;
    if (v == 1) {
      cycle = {zero, one, t_letter(i), inf};
      sign = 1;
    } else if (v == 0) {
      cycle = {zero, one, inf, t_letter(i)};
      sign = -1;
    } else if (type[i] == 1) {
      cycle = {zero, one, t_letter(v - 1), t_letter(i), inf};
      sign = 1;
    } else {
      cycle = {zero, one, inf, t_letter(i), t_letter(v - 1)};
      sign = -1;
    }
    CyclicWord f(cycle);
    if (i == 1) {
      acc.add(f, Rational(sign));
      continue;
    }
    std::vector<Letter> shared = {zero, one, inf};
    if (v >= 2) shared.push_back(t_letter(v - 1));
    PolySum next;
    for (const auto& [c, coeff] : acc.terms()) {
      PolySum prod = multiply_polygons(c, f, shared);
      prod *= coeff * Rational(sign);
      next += prod;
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace cellzeta
