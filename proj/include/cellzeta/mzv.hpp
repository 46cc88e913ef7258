#pragma once

// Iterated-sum zeta values as cell forms.
//
// A composition (n_1, ..., n_r) of positive integers with n_1 >= 2 has
// weight w = n_1 + ... + n_r and a pole pattern on the simplex variables
// t_1 < ... < t_w: writing the binary word y x^{n_r - 1} y x^{n_{r-1} - 1}
// ... y x^{n_1 - 1} left to right over t_1 .. t_w, a position marked y
// carries a factor 1/(1 - t_p) and a position marked x a factor 1/t_p. The
// product of these factors is the classical integrand whose integral over
// the ordered simplex is zeta(n_1, ..., n_r).
//
// Collecting the y-positions i_1 < ... < i_r (always i_1 = 1) and the
// x-positions j_1 < ... < j_s (always j_s = w), the same rational function
// is, up to a global sign, the cell-form sum
//
//   [0, 1, t_{i_1} sh ... sh t_{i_r}, oo, t_{j_1} sh ... sh t_{j_s}],
//
// where sh denotes the shuffle sum over all interleavings. The cycle sum
// integrates over the standard cell to (-1)^w zeta(n_1, ..., n_r): each
// 1/(1 - t) factor is -1/(t - 1) and each 1/t is +1/(t - 0), matching the
// cyclically adjacent difference convention of eval_cycle, so the parities
// of the two factor counts combine to the weight.

#include <stdexcept>
#include <vector>

#include "cellzeta/arnold.hpp"
#include "cellzeta/cellform.hpp"
#include "cellzeta/insertion.hpp"
#include "cellzeta/shuffle.hpp"
#include "cellzeta/word.hpp"

namespace cellzeta {

using Composition = std::vector<int>;

inline int composition_weight(const Composition& comp) {
  int w = 0;
  for (int v : comp) w += v;
  return w;
}

// Convergent compositions: nonempty, all parts positive, leading part at
// least 2 (the summation variable of the leading part dominates).
inline bool is_convergent_composition(const Composition& comp) {
  if (comp.empty()) return false;
  for (int v : comp)
    if (v < 1) return false;
  return comp.front() >= 2;
}

namespace detail {

// Position-by-position pole pattern over t_1 .. t_w: true marks a
// 1/(1 - t_p) factor, false a 1/t_p factor.
inline std::vector<bool> pole_pattern(const Composition& comp) {
  if (!is_convergent_composition(comp))
    throw std::invalid_argument(
        "composition must be nonempty with leading part >= 2");
  std::vector<bool> ones;
  for (auto it = comp.rbegin(); it != comp.rend(); ++it) {
    ones.push_back(true);
    for (int j = 1; j < *it; ++j) ones.push_back(false);
  }
  return ones;
}

}  // namespace detail

// The standard cell-form sum attached to a convergent composition:
// [0, 1, (one-pole letters shuffled), oo, (zero-pole letters shuffled)],
// every term with coefficient +1.
inline PolySum mzv_to_shuffle_form(const Composition& comp) {
  std::vector<bool> ones = detail::pole_pattern(comp);
  int w = static_cast<int>(ones.size());
  if (w + 3 > Word::kMaxLen)
    throw std::invalid_argument("composition weight too large");

  std::vector<Word> one_letters, zero_letters;
  for (int p = 0; p < w; ++p)
    (ones[p] ? one_letters : zero_letters).push_back(Word{p + 2});

  const Letter zero = 1;
  const Letter one = static_cast<Letter>(w + 2);
  const Letter inf = static_cast<Letter>(w + 3);

  WordSum ys = shuffle_all(one_letters);
  WordSum xs = shuffle_all(zero_letters);
  PolySum out;
  for (const auto& [yw, yc] : ys.terms()) {
    for (const auto& [xw, xc] : xs.terms()) {
      std::vector<Letter> cyc;
      cyc.push_back(zero);
      cyc.push_back(one);
      for (Letter l : yw) cyc.push_back(l);
      cyc.push_back(inf);
      for (Letter l : xw) cyc.push_back(l);
      out.add(CyclicWord(cyc), yc * xc);
    }
  }
  return out;
}

// Sign relating the integral of mzv_to_shuffle_form over the standard cell
// to the positive series value: integral = sign * zeta(composition).
inline int mzv_integral_sign(const Composition& comp) {
  return composition_weight(comp) % 2 == 0 ? 1 : -1;
}

// The dual composition: the composition read off the reversed binary word
// with the roles of the two letters exchanged. The series values of a
// composition and its dual are equal.
inline Composition mzv_dual(const Composition& comp) {
  std::vector<bool> ones = detail::pole_pattern(comp);
  // The pole pattern reversed is the classical encoding of the composition;
  // reversing and exchanging the two letters therefore amounts to exchanging
  // letters in the pattern itself. Decode the exchanged pattern as
  // x^{m_1-1} y ... x^{m_s-1} y: every y closes a part of size (x-run)+1.
  Composition dual;
  int run = 0;
  for (bool one : ones) {
    if (one) {
      ++run;  // an original one-pole reads as x in the dual word
    } else {
      dual.push_back(run + 1);  // an original zero-pole closes a dual part
      run = 0;
    }
  }
  if (run != 0) throw std::logic_error("dual word must end with a zero-pole");
  return dual;
}

// Coordinates of the composition's cell-form sum relative to
// insertion_basis(weight + 3).
inline std::vector<Rational> mzv_decompose(const Composition& comp) {
  PolySum form = mzv_to_shuffle_form(comp);
  return insertion_coords(to_01_basis(form), composition_weight(comp) + 3);
}

}  // namespace cellzeta
