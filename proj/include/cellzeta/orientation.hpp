#pragma once
// Orientation bookkeeping for relabelling maps.  A permutation σ of the
// marked points induces a self-map ψ_σ of the moduli space: assign to each
// label l the value of σ(l) in the standard role assignment, then renormalise
// by the Möbius transformation pinning the values of the labels 1, m, d back
// to 0, 1, ∞.  The sign that enters period relations is
//     s(σ) = sgn(σ) · sign(det Dψ_σ),
// so that   ∫_X f_{σ·γ} = s(σ) · ∫_X f_γ   whenever σ preserves the standard
// cell X.  The Jacobian determinant is computed exactly with dual numbers.

#include <stdexcept>
#include <vector>

#include "cellform.hpp"
#include "polygon.hpp"
#include "rational.hpp"

namespace cellzeta {

// First-order dual number a + b·ε over the rationals (ε² = 0).
struct Dual {
  Rational a, b;

  Dual() : a(0), b(0) {}
  Dual(Rational value, Rational deriv) : a(std::move(value)), b(std::move(deriv)) {}
  explicit Dual(Rational value) : a(std::move(value)), b(0) {}

  friend Dual operator+(const Dual& x, const Dual& y) { return {x.a + y.a, x.b + y.b}; }
  friend Dual operator-(const Dual& x, const Dual& y) { return {x.a - y.a, x.b - y.b}; }
  friend Dual operator*(const Dual& x, const Dual& y) {
    return {x.a * y.a, x.a * y.b + x.b * y.a};
  }
  friend Dual operator/(const Dual& x, const Dual& y) {
    if (y.a == 0) throw std::domain_error("dual division by an infinitesimal");
    return {x.a / y.a, (x.b * y.a - x.a * y.b) / (y.a * y.a)};
  }
};

namespace detail {

// A point of P^1 with dual-number coordinates: a finite dual or infinity.
struct ProjDual {
  Dual v;
  bool inf = false;
};

// Cross-ratio sending the pins (A, B, C) to (0, 1, ∞):
//   mu(x) = ((x - A)(B - C)) / ((x - C)(B - A)),
// with the factors containing an infinite entry dropped.  At most one of the
// four arguments may be infinite.  The result must be finite.
inline Dual mobius_to_std(const ProjDual& x, const ProjDual& A, const ProjDual& B,
                          const ProjDual& C) {
  int infs = int(x.inf) + int(A.inf) + int(B.inf) + int(C.inf);
  if (infs > 1) throw std::logic_error("more than one infinite marked point");
  if (x.inf) return (B.v - C.v) / (B.v - A.v);
  if (A.inf) return (B.v - C.v) / (x.v - C.v);
  if (B.inf) return (x.v - A.v) / (x.v - C.v);
  if (C.inf) return (x.v - A.v) / (B.v - A.v);
  return ((x.v - A.v) * (B.v - C.v)) / ((x.v - C.v) * (B.v - A.v));
}

// Values of the standard roles at a dual-number simplicial point.
inline ProjDual role_dual(Letter letter, int m, const std::vector<Dual>& t) {
  if (letter == 1) return {Dual(Rational(0)), false};
  if (letter == m) return {Dual(Rational(1)), false};
  if (letter == m + 1) return {Dual(), true};
  return {t[letter - 2], false};
}

// Coordinates of the image of the point t under ψ_σ, with duals.
inline std::vector<Dual> induced_map_dual(const Relabel& sigma, int m,
                                          const std::vector<Dual>& t) {
  auto value = [&](Letter l) { return role_dual(sigma(l), m, t); };
  ProjDual A = value(1), B = value(static_cast<Letter>(m)),
           C = value(static_cast<Letter>(m + 1));
  std::vector<Dual> out;
  for (Letter k = 2; k <= m - 1; ++k) out.push_back(mobius_to_std(value(k), A, B, C));
  return out;
}

}  // namespace detail

// Image of a simplicial point under the map induced by σ (see header note).
inline SimplicialPoint induced_point_map(const Relabel& sigma, int m,
                                         const SimplicialPoint& t) {
  std::vector<Dual> td;
  for (const Rational& x : t) td.emplace_back(x);
  SimplicialPoint out;
  for (const Dual& d : detail::induced_map_dual(sigma, m, td)) out.push_back(d.a);
  return out;
}

// Signed Jacobian determinant of ψ_σ at the point t, computed exactly.
inline Rational induced_jacobian(const Relabel& sigma, int m, const SimplicialPoint& t) {
  int l = m - 2;
  if (static_cast<int>(t.size()) != l)
    throw std::invalid_argument("point dimension does not match alphabet size");
  // Column j of the Jacobian: evaluate with an infinitesimal on t_j.
  std::vector<std::vector<Rational>> jac(l, std::vector<Rational>(l));
  for (int j = 0; j < l; ++j) {
    std::vector<Dual> td;
    for (int i = 0; i < l; ++i) td.emplace_back(t[i], Rational(i == j ? 1 : 0));
    std::vector<Dual> image = detail::induced_map_dual(sigma, m, td);
    for (int i = 0; i < l; ++i) jac[i][j] = image[i].b;
  }
  // Determinant by Gaussian elimination with column pivoting.
  Rational det(1);
  for (int c = 0; c < l; ++c) {
    int p = -1;
    for (int r = c; r < l; ++r)
      if (jac[r][c] != 0) {
        p = r;
        break;
      }
    if (p < 0) return Rational(0);
    if (p != c) {
      std::swap(jac[p], jac[c]);
      det = -det;
    }
    det *= jac[c][c];
    for (int r = c + 1; r < l; ++r) {
      if (jac[r][c] == 0) continue;
      Rational f = jac[r][c] / jac[c][c];
      for (int k = c; k < l; ++k) jac[r][k] -= f * jac[c][k];
    }
  }
  return det;
}

// Parity of σ as a permutation of the labels {1, ..., m, m+1}.
inline int permutation_sign(const Relabel& sigma, int m) {
  int n = m + 1;
  std::vector<bool> seen(n + 1, false);
  int sign = 1;
  for (Letter l = 1; l <= n; ++l) {
    if (seen[l]) continue;
    int len = 0;
    Letter x = l;
    while (!seen[x]) {
      seen[x] = true;
      x = sigma(x);
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

// A generic interior point of the standard cell: t_j = j / (l + 1).
inline SimplicialPoint generic_cell_point(int m) {
  int l = m - 2;
  SimplicialPoint t;
  for (int j = 1; j <= l; ++j) t.push_back(Rational(j, l + 1));
  return t;
}

// The sign s(σ) relating periods over the standard cell:
//     ∫_X f_{σ·γ} = s(σ) · ∫_X f_γ    for σ preserving X.
// Constant on the cell, so it is evaluated at one generic point.
inline int dihedral_sign(const Relabel& sigma, int m) {
  Rational j = induced_jacobian(sigma, m, generic_cell_point(m));
  if (j == 0) throw std::logic_error("induced map is singular at a generic point");
  int jac_sign = j > 0 ? 1 : -1;
  return permutation_sign(sigma, m) * jac_sign;
}

// The 2(m+1) relabelling maps preserving the standard dihedral structure on
// {1, ..., m, m+1}, tagged +1 for rotations and -1 for reflections.
struct DihedralElement {
  Relabel map;
  int eps;  // +1 rotation, -1 reflection
};

inline std::vector<DihedralElement> dihedral_group(int m) {
  std::vector<DihedralElement> out;
  std::vector<Relabel> maps = dihedral_maps(m);
  // dihedral_maps emits rotation, reflection, rotation, reflection, ...
  for (std::size_t i = 0; i < maps.size(); ++i)
    out.push_back({maps[i], i % 2 == 0 ? 1 : -1});
  return out;
}

}  // namespace cellzeta
