#pragma once

// Linear relations between periods of the standard cell.
//
// Columns of a relation system are PeriodSymbols: either a basis form of the
// top weight (Cell) or a formal product of two lower-weight basis forms
// (FormalProduct).  Three row families are produced here:
//   * dihedral rows: a symmetry of the standard polygon carries each basis
//     form to another convergent combination with a computable sign;
//   * duality rows: the reflection instance that equates the two members of
//     a dual pair of nested-sum compositions;
//   * product rows: a three-point-anchored shuffle of two smaller polygons
//     realizes the product of two lower-weight periods as a combination of
//     top-weight basis periods.
//
// The reduction of an assembled system expresses every symbol as an exact
// rational combination of the surviving free generators.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cellzeta/arnold.hpp"
#include "cellzeta/convergence.hpp"
#include "cellzeta/insertion.hpp"
#include "cellzeta/lincomb.hpp"
#include "cellzeta/mzv.hpp"
#include "cellzeta/orientation.hpp"
#include "cellzeta/polygon.hpp"
#include "cellzeta/polygon_shuffle.hpp"
#include "cellzeta/rational.hpp"
#include "cellzeta/reduce.hpp"
#include "cellzeta/word.hpp"

namespace cellzeta {

// ---------------------------------------------------------------------------
// Period symbols.

struct PeriodSymbol {
  bool product = false;   // false: single cell C(n1,k1); true: C(n1,k1)*C(n2,k2)
  int n1 = 0, k1 = 0;
  int n2 = 0, k2 = 0;

  static PeriodSymbol cell(int n, int k) { return {false, n, k, 0, 0}; }

  static PeriodSymbol formal_product(int na, int ka, int nb, int kb) {
    if (nb < na || (na == nb && kb < ka)) {
      std::swap(na, nb);
      std::swap(ka, kb);
    }
    return {true, na, ka, nb, kb};
  }

  auto operator<=>(const PeriodSymbol&) const = default;

  std::string str() const {
    std::string s = "C(" + std::to_string(n1) + "," + std::to_string(k1) + ")";
    if (product)
      s += "*C(" + std::to_string(n2) + "," + std::to_string(k2) + ")";
    return s;
  }
};

using RelationRow = LinComb<PeriodSymbol>;

struct Relation {
  RelationRow row;
  std::string provenance;
};

struct RelationSystem {
  int n = 0;
  std::vector<PeriodSymbol> columns;
  std::vector<Relation> rows;
};

// Divide by the coefficient of the smallest symbol, so equal rows serialize
// identically.  The zero row stays zero.
inline RelationRow normalize_relation(RelationRow row) {
  if (row.is_zero()) return row;
  Rational lead = row.terms().begin()->second;
  if (lead != 1) row *= Rational(1) / lead;
  return row;
}

inline std::string relation_key(const RelationRow& row) {
  std::ostringstream os;
  for (const auto& [sym, coeff] : row.terms())
    os << sym.str() << ":" << coeff << ";";
  return os.str();
}

// ---------------------------------------------------------------------------
// Caches.  The basis of weight n-3 forms and the 1n-word expansion of single
// polygons are both reused heavily while generating rows.

namespace detail {

inline const std::vector<PolySum>& cached_basis(int n) {
  static std::map<int, std::vector<PolySum>> memo;
  auto it = memo.find(n);
  if (it == memo.end()) it = memo.emplace(n, insertion_basis(n)).first;
  return it->second;
}

// Expansion of a single polygon class in the 1n-word function basis, keyed by
// the signed-reversal canonical representative.
inline const WordSum& to01_of_canonical(const CyclicWord& rep) {
  static std::map<CyclicWord, WordSum> memo;
  auto it = memo.find(rep);
  if (it == memo.end()) {
    PolySum one;
    one.add(rep, Rational(1));
    it = memo.emplace(rep, to_01_basis(one)).first;
  }
  return it->second;
}

inline WordSum to01_cached(const PolySum& x) {
  WordSum acc;
  for (const auto& [c, coeff] : x.terms()) {
    auto [rep, sign] = canonical_signed(c);
    acc += (sign * coeff) * to01_of_canonical(rep);
  }
  return acc;
}

inline std::string relabel_str(const Relabel& sigma, int n) {
  std::string s = "[";
  for (Letter l = 1; l <= n; ++l) {
    if (l > 1) s += ",";
    s += std::to_string(sigma(l));
  }
  return s + "]";
}

inline bool is_identity(const Relabel& sigma, int n) {
  for (Letter l = 1; l <= n; ++l)
    if (sigma(l) != l) return false;
  return true;
}

inline std::string composition_str(const Composition& comp) {
  std::string s = "(";
  for (std::size_t i = 0; i < comp.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(comp[i]);
  }
  return s + ")";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Label-set helpers.

// The standard cyclic order on the sub-polygon whose interior letters are
// `interior` (sorted ascending, drawn from {2..n-2}): the anchor letters
// 1, n-1, n take the 0/1/infinity roles in their standard positions.
inline CyclicWord standard_order(const std::vector<Letter>& interior, int n) {
  std::vector<Letter> ls;
  ls.push_back(1);
  for (Letter x : interior) ls.push_back(x);
  ls.push_back(static_cast<Letter>(n - 1));
  ls.push_back(static_cast<Letter>(n));
  return CyclicWord(ls);
}

// The full standard polygon (1, 2, ..., n).
inline CyclicWord standard_polygon(int n) {
  std::vector<Letter> ls;
  for (Letter l = 1; l <= n; ++l) ls.push_back(l);
  return CyclicWord(ls);
}

// Relabelling that carries a form on {1..na} (anchors 1, na-1, na) onto the
// sub-polygon of {1..n} with interior letters t_sorted (anchors 1, n-1, n).
inline Relabel subset_embedding(const std::vector<Letter>& t_sorted, int na,
                                int n) {
  if (static_cast<int>(t_sorted.size()) != na - 3)
    throw std::invalid_argument("interior letter count does not match the sub-polygon size");
  Relabel r;
  for (int j = 0; j < na - 3; ++j) r.set(static_cast<Letter>(j + 2), t_sorted[j]);
  r.set(static_cast<Letter>(na - 1), static_cast<Letter>(n - 1));
  r.set(static_cast<Letter>(na), static_cast<Letter>(n));
  return r;
}

// The unique relabelling carrying the oriented cycle `from` onto the oriented
// cycle `to` with base fixed to base.
inline Relabel cyclic_transport(const CyclicWord& from, const CyclicWord& to,
                                Letter base) {
  if (from.size() != to.size())
    throw std::invalid_argument("cycles of different sizes cannot be transported");
  int i = from.find(base), j = to.find(base);
  if (i < 0 || j < 0) throw std::invalid_argument("base letter missing from a cycle");
  Relabel r;
  for (int k = 0; k < static_cast<int>(from.size()); ++k)
    r.set(from[i + k], to[j + k]);
  return r;
}

// ---------------------------------------------------------------------------
// Pairs of polygons (cell, form) and their product.

struct PolygonPair {
  PolySum cells;  // round-bracket side: integration cells
  PolySum form;   // square-bracket side: the integrand
};

// The pair product: cells multiply by the unsigned three-anchor shuffle,
// forms by the signed one.
inline PolygonPair pair_product(const CyclicWord& c1, const PolySum& f1,
                                const CyclicWord& c2, const PolySum& f2,
                                const std::vector<Letter>& e) {
  PolygonPair out;
  out.cells = shuffle3(c1, c2, e, /*track_signs=*/false);
  for (const auto& [a, ca] : f1.terms())
    for (const auto& [b, cb] : f2.terms())
      out.form += (ca * cb) * shuffle3(a, b, e, /*track_signs=*/true);
  return out;
}

// ---------------------------------------------------------------------------
// Dihedral rows.

// For each non-identity symmetry sigma of the standard polygon and each basis
// form w_k: the moved form sigma(w_k) re-expands in the basis with
// coordinates c, and integrates to s(sigma) times the original period, giving
// the row  sum_j c_j C(n,j) - s C(n,k) = 0.
namespace detail {

inline std::vector<Relation> compute_dihedral_relations(int n) {
  const std::vector<PolySum>& basis = detail::cached_basis(n);
  std::vector<Relation> out;
  for (const DihedralElement& g : dihedral_group(n - 1)) {
    if (detail::is_identity(g.map, n)) continue;
    int s = dihedral_sign(g.map, n - 1);
    std::string tag = "dihedral " + detail::relabel_str(g.map, n) +
                      (g.eps > 0 ? " rot" : " refl") +
                      " s=" + (s > 0 ? std::string("+1") : std::string("-1"));
    for (std::size_t k = 0; k < basis.size(); ++k) {
      PolySum moved = act(g.map, basis[k]);
      std::vector<Rational> coords;
      try {
        coords = insertion_coords(detail::to01_cached(moved), n);
      } catch (const std::invalid_argument&) {
        throw std::logic_error("symmetry image left the basis span: " + tag);
      }
      RelationRow row;
      for (std::size_t j = 0; j < coords.size(); ++j)
        if (coords[j] != 0)
          row.add(PeriodSymbol::cell(n, static_cast<int>(j)), coords[j]);
      row.add(PeriodSymbol::cell(n, static_cast<int>(k)), Rational(-s));
      row = normalize_relation(std::move(row));
      if (!row.is_zero())
        out.push_back({std::move(row), tag + " on C(" + std::to_string(n) +
                                           "," + std::to_string(k) + ")"});
    }
  }
  return out;
}

inline const std::vector<Relation>& cached_dihedral_relations(int n) {
  static std::map<int, std::vector<Relation>> memo;
  auto it = memo.find(n);
  if (it == memo.end()) it = memo.emplace(n, compute_dihedral_relations(n)).first;
  return it->second;
}

}  // namespace detail

inline std::vector<Relation> dihedral_relations(int n) {
  return detail::cached_dihedral_relations(n);
}

// The reflection instance equating the periods of a dual pair of
// compositions.  Self-dual compositions give the zero row.
inline Relation duality_relation(const Composition& comp) {
  Composition dual = mzv_dual(comp);
  int n = composition_weight(comp) + 3;
  std::vector<Rational> a = mzv_decompose(comp);
  std::vector<Rational> b = mzv_decompose(dual);
  RelationRow row;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] != b[j]) row.add(PeriodSymbol::cell(n, static_cast<int>(j)), a[j] - b[j]);
  return {normalize_relation(std::move(row)),
          "duality " + detail::composition_str(comp) + " = " +
              detail::composition_str(dual)};
}

// ---------------------------------------------------------------------------
// Product maps.

// A product datum: the interior letters {2..n-2} split into t1 and t2 (sorted;
// t1 holds letter 2), with an oriented cyclic order gamma_i on each factor's
// letter set {1} + t_i + {n-1, n}.
struct ProductMap {
  int n = 0;
  std::vector<Letter> t1, t2;
  CyclicWord gamma1, gamma2;
};

// A lower-weight basis form viewed as a standard pair (standard cell, form).
struct StandardPair {
  int n = 0;
  PolySum form;
};

inline StandardPair standard_pair(int n, int k) {
  const std::vector<PolySum>& basis = detail::cached_basis(n);
  if (k < 0 || k >= static_cast<int>(basis.size()))
    throw std::invalid_argument("basis index out of range");
  return {n, basis[k]};
}

namespace detail {

inline std::string product_map_str(const ProductMap& pm) {
  return "T1=" + standard_order(pm.t1, pm.n).str() +
         " gamma1=" + pm.gamma1.str() + " T2=" +
         standard_order(pm.t2, pm.n).str() + " gamma2=" + pm.gamma2.str();
}

}  // namespace detail

// The integrand over the standard cell produced by a product datum from
// factor forms f1, f2 given in factor letters ({1..na} and {1..nb}): embed
// each factor form on its letter subset, transport it from the factor's
// standard order to gamma_i, shuffle the two transported forms over the
// anchors, and pull each resulting cell back to the standard polygon by the
// base-fixing transport.
inline PolySum product_integrand(const ProductMap& pm, const PolySum& f1,
                                 const PolySum& f2) {
  int n = pm.n;
  int na = static_cast<int>(pm.t1.size()) + 3;
  int nb = static_cast<int>(pm.t2.size()) + 3;
  std::vector<Letter> e{1, static_cast<Letter>(n - 1), static_cast<Letter>(n)};

  PolySum o1 = act(subset_embedding(pm.t1, na, n), f1);
  PolySum o2 = act(subset_embedding(pm.t2, nb, n), f2);
  PolySum m1 = act(cyclic_transport(standard_order(pm.t1, n), pm.gamma1, 1), o1);
  PolySum m2 = act(cyclic_transport(standard_order(pm.t2, n), pm.gamma2, 1), o2);

  PolySum F;
  for (const auto& [a, ca] : m1.terms())
    for (const auto& [b, cb] : m2.terms())
      F += (ca * cb) * shuffle3(a, b, e, /*track_signs=*/true);

  PolySum cells = shuffle3(pm.gamma1, pm.gamma2, e, /*track_signs=*/false);
  CyclicWord delta = standard_polygon(n);
  PolySum out;
  for (const auto& [g, cg] : cells.terms()) {
    Relabel back = cyclic_transport(g, delta, 1);
    for (const auto& [c, fc] : F.terms()) add_signed(out, back.apply(c), cg * fc);
  }
  return out;
}

// The relation row: the formal product of the k1-th and k2-th lower-weight
// basis periods equals the basis expansion of the pulled-back integrand.
inline Relation product_map_relation(const ProductMap& pm, int k1, int k2) {
  int na = static_cast<int>(pm.t1.size()) + 3;
  int nb = static_cast<int>(pm.t2.size()) + 3;
  PolySum pulled = product_integrand(pm, standard_pair(na, k1).form,
                                     standard_pair(nb, k2).form);
  std::vector<Rational> coords;
  try {
    coords = insertion_coords(detail::to01_cached(pulled), pm.n);
  } catch (const std::invalid_argument&) {
    throw std::logic_error("product integrand left the basis span: " +
                           detail::product_map_str(pm));
  }
  RelationRow row;
  row.add(PeriodSymbol::formal_product(na, k1, nb, k2), Rational(1));
  for (std::size_t j = 0; j < coords.size(); ++j)
    if (coords[j] != 0)
      row.add(PeriodSymbol::cell(pm.n, static_cast<int>(j)), -coords[j]);
  return {normalize_relation(std::move(row)),
          "product " + detail::product_map_str(pm) + " x C(" +
              std::to_string(na) + "," + std::to_string(k1) + ")*C(" +
              std::to_string(nb) + "," + std::to_string(k2) + ")"};
}

// ---------------------------------------------------------------------------
// Enumerating product data up to equivalence.
//
// Two data are equivalent when they produce the same rows modulo the dihedral
// row space (a symmetry applied to a datum changes its rows exactly by
// substituting the symmetry's basis re-expansions, which is a combination of
// dihedral rows).  Deduplication runs in two stages:
//   1. exact content fingerprints (rational evaluations of the pulled-back
//      integrand of two fixed generic factor combinations at two generic
//      points, plus the cell multiset) collapse data with identical rows;
//   2. each content representative's generic coordinate rows are reduced
//      against the dihedral row space; equal remainders mean equivalent data.

namespace detail {

// Value of the cell function of c under the letter-value table vals
// (vals[l] = coordinate of letter l, inf_l at infinity): the product over
// cyclically adjacent pairs (u, v) of 1/(vals[v] - vals[u]), finite pairs only.
inline Rational eval_with_values(const CyclicWord& c,
                                 const std::vector<Rational>& vals,
                                 Letter inf_l) {
  Rational acc(1);
  int sz = static_cast<int>(c.size());
  for (int i = 0; i < sz; ++i) {
    Letter u = c[i], v = c[i + 1];
    if (u == inf_l || v == inf_l) continue;
    Rational d = vals[v] - vals[u];
    if (d == 0) throw std::logic_error("degenerate evaluation point");
    acc /= d;
  }
  return acc;
}

// Coordinates of the letters of the standard polygon at an interior point t:
// letter 1 at 0, letters 2..n-2 at t[0..], letter n-1 at 1, letter n at
// infinity (slot unused).
inline std::vector<Rational> standard_values(const std::vector<Rational>& t,
                                             int n) {
  std::vector<Rational> vals(n + 1, Rational(0));
  for (int j = 2; j <= n - 2; ++j) vals[j] = t[j - 2];
  vals[n - 1] = Rational(1);
  return vals;
}

// Two fixed generic interior points, distinct coordinates away from 0 and 1.
inline std::vector<std::vector<Rational>> generic_points(int n) {
  std::vector<std::vector<Rational>> pts(2);
  for (int j = 0; j < n - 3; ++j) {
    pts[0].emplace_back((17 * j + 24) % 61, 61);
    pts[1].emplace_back((23 * j + 34) % 67, 67);
  }
  return pts;
}

// Generic integer combinations of a factor basis, one pair per probe.
inline PolySum generic_probe(int n, int probe, int side) {
  const std::vector<PolySum>& basis = cached_basis(n);
  PolySum out;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    long c = probe == 0 ? (2 * static_cast<long>(k) + 3 + side)
                        : (static_cast<long>(k) * static_cast<long>(k) + 5 + 2 * side);
    out += Rational(c) * basis[k];
  }
  return out;
}

// Moved factor probes (embedded, transported to gamma_i) plus the cell sum;
// everything the fingerprint needs, with no pullback.
struct ProbeParts {
  PolySum m1[2], m2[2];
  PolySum cells;
};

inline ProbeParts probe_parts(const ProductMap& pm) {
  int n = pm.n;
  int na = static_cast<int>(pm.t1.size()) + 3;
  int nb = static_cast<int>(pm.t2.size()) + 3;
  ProbeParts out;
  std::vector<Letter> e{1, static_cast<Letter>(n - 1), static_cast<Letter>(n)};
  out.cells = shuffle3(pm.gamma1, pm.gamma2, e, /*track_signs=*/false);
  Relabel emb1 = subset_embedding(pm.t1, na, n);
  Relabel emb2 = subset_embedding(pm.t2, nb, n);
  Relabel tr1 = cyclic_transport(standard_order(pm.t1, n), pm.gamma1, 1);
  Relabel tr2 = cyclic_transport(standard_order(pm.t2, n), pm.gamma2, 1);
  for (int p = 0; p < 2; ++p) {
    out.m1[p] = act(tr1, act(emb1, generic_probe(na, p, 0)));
    out.m2[p] = act(tr2, act(emb2, generic_probe(nb, p, 1)));
  }
  return out;
}

inline Rational eval_sum(const PolySum& x, const std::vector<Rational>& vals,
                         Letter inf_l) {
  Rational acc(0);
  for (const auto& [c, fc] : x.terms()) acc += fc * eval_with_values(c, vals, inf_l);
  return acc;
}

}  // namespace detail

// Exact content fingerprint of a product datum: the factor sizes, the cell
// multiset, and the rational values of the two probe integrands at two
// generic points.  Equal fingerprints mean identical rows for every pair of
// factor basis forms.  The integrand value over a cell factorizes as the
// product of the two moved factor values divided by the value of the shared
// anchor triangle (the shuffle sum times the anchor cycle is the function
// product), so no pullback is performed here.
inline std::string product_fingerprint(const ProductMap& pm) {
  int n = pm.n;
  int na = static_cast<int>(pm.t1.size()) + 3;
  int nb = static_cast<int>(pm.t2.size()) + 3;
  detail::ProbeParts parts = detail::probe_parts(pm);
  CyclicWord delta = standard_polygon(n);
  CyclicWord anchors(std::vector<Letter>{1, static_cast<Letter>(n - 1),
                                         static_cast<Letter>(n)});

  std::ostringstream os;
  os << na << "x" << nb << "|";
  for (const auto& [g, cg] : parts.cells.terms()) os << g.str() << ":" << cg << ";";
  std::vector<std::vector<Rational>> pts = detail::generic_points(n);
  for (int p = 0; p < 2; ++p) {
    for (const std::vector<Rational>& t : pts) {
      std::vector<Rational> std_vals = detail::standard_values(t, n);
      Rational total(0);
      for (const auto& [g, cg] : parts.cells.terms()) {
        Relabel back = cyclic_transport(g, delta, 1);
        std::vector<Rational> vt(n + 1, Rational(0));
        Letter inf_local = 0;
        for (Letter l = 1; l <= n; ++l) {
          Letter img = back(l);
          if (img == n)
            inf_local = l;
          else
            vt[l] = std_vals[img];
        }
        total += cg * detail::eval_sum(parts.m1[p], vt, inf_local) *
                 detail::eval_sum(parts.m2[p], vt, inf_local) /
                 detail::eval_with_values(anchors, vt, inf_local);
      }
      os << "|" << total;
    }
  }
  return os.str();
}

namespace detail {

// Dihedral row space over the cell coordinates alone, used to compare rows
// modulo symmetry.
inline const RowReducer& dihedral_row_space(int n) {
  static std::map<int, RowReducer> memo;
  auto it = memo.find(n);
  if (it == memo.end()) {
    RowReducer red;
    for (const Relation& rel : cached_dihedral_relations(n)) {
      SparseRow r;
      for (const auto& [sym, coeff] : rel.row.terms()) {
        if (sym.product) throw std::logic_error("dihedral row with a product symbol");
        r.emplace(sym.k1, coeff);
      }
      red.add(std::move(r));
    }
    it = memo.emplace(n, std::move(red)).first;
  }
  return it->second;
}

inline std::string serialize_sparse(const SparseRow& r) {
  std::ostringstream os;
  for (const auto& [j, v] : r) os << j << ":" << v << ";";
  return os.str();
}

}  // namespace detail

// Equivalence key of a product datum: its generic probe coordinate rows
// reduced against the dihedral row space.  Equal keys mean every row of one
// datum lies in the span of the other datum's rows together with the
// dihedral rows.
inline std::string product_orbit_key(const ProductMap& pm) {
  int na = static_cast<int>(pm.t1.size()) + 3;
  int nb = static_cast<int>(pm.t2.size()) + 3;
  const RowReducer& dihe = detail::dihedral_row_space(pm.n);
  std::ostringstream os;
  os << na << "x" << nb;
  for (int p = 0; p < 2; ++p) {
    PolySum pulled = product_integrand(pm, detail::generic_probe(na, p, 0),
                                       detail::generic_probe(nb, p, 1));
    std::vector<Rational> coords =
        insertion_coords(detail::to01_cached(pulled), pm.n);
    SparseRow r;
    for (std::size_t j = 0; j < coords.size(); ++j)
      if (coords[j] != 0) r.emplace(static_cast<int>(j), coords[j]);
    os << "|" << detail::serialize_sparse(dihe.reduce(std::move(r)));
  }
  return os.str();
}

// All product data for the standard polygon on n letters, one representative
// per equivalence class, in deterministic enumeration order.
inline std::vector<ProductMap> enumerate_product_maps(int n) {
  std::vector<ProductMap> reps;
  int interior = n - 3;  // letters 2..n-2
  if (interior < 4) return reps;

  std::vector<ProductMap> class_reps;
  std::set<std::string> seen_fingerprints;

  for (int mask = 0; mask < (1 << interior); ++mask) {
    if (!(mask & 1)) continue;  // letter 2 stays on the first side
    std::vector<Letter> s1, s2;
    for (int b = 0; b < interior; ++b)
      ((mask >> b) & 1 ? s1 : s2).push_back(static_cast<Letter>(b + 2));
    if (s1.size() < 2 || s2.size() < 2) continue;

    std::vector<Letter> rest1, rest2;
    for (Letter x : s1) rest1.push_back(x);
    rest1.push_back(static_cast<Letter>(n - 1));
    rest1.push_back(static_cast<Letter>(n));
    for (Letter x : s2) rest2.push_back(x);
    rest2.push_back(static_cast<Letter>(n - 1));
    rest2.push_back(static_cast<Letter>(n));
    std::sort(rest1.begin(), rest1.end());
    std::sort(rest2.begin(), rest2.end());

    std::vector<Letter> p1 = rest1;
    do {
      std::vector<Letter> c1{1};
      c1.insert(c1.end(), p1.begin(), p1.end());
      CyclicWord g1(c1);
      if (g1.reversed() < g1) continue;  // orientation representative
      std::vector<Letter> p2 = rest2;
      do {
        std::vector<Letter> c2{1};
        c2.insert(c2.end(), p2.begin(), p2.end());
        CyclicWord g2(c2);
        if (g2.reversed() < g2) continue;
        ProductMap pm{n, s1, s2, g1, g2};
        if (seen_fingerprints.insert(product_fingerprint(pm)).second)
          class_reps.push_back(std::move(pm));
      } while (std::next_permutation(p2.begin(), p2.end()));
    } while (std::next_permutation(p1.begin(), p1.end()));
  }

  std::set<std::string> seen_orbits;
  for (ProductMap& pm : class_reps)
    if (seen_orbits.insert(product_orbit_key(pm)).second)
      reps.push_back(std::move(pm));
  return reps;
}

// ---------------------------------------------------------------------------
// System assembly and reduction.

inline RelationSystem build_relation_system(int n) {
  RelationSystem sys;
  sys.n = n;

  int d = static_cast<int>(detail::cached_basis(n).size());
  for (int k = 0; k < d; ++k) sys.columns.push_back(PeriodSymbol::cell(n, k));
  for (int na = 5; na <= (n + 3) / 2; ++na) {
    int nb = n + 3 - na;
    int da = static_cast<int>(detail::cached_basis(na).size());
    int db = static_cast<int>(detail::cached_basis(nb).size());
    for (int ka = 0; ka < da; ++ka)
      for (int kb = (na == nb ? ka : 0); kb < db; ++kb)
        sys.columns.push_back(PeriodSymbol::formal_product(na, ka, nb, kb));
  }
  std::sort(sys.columns.begin(), sys.columns.end());

  std::set<std::string> seen;
  auto push = [&](Relation rel) {
    if (rel.row.is_zero()) return;
    if (seen.insert(relation_key(rel.row)).second)
      sys.rows.push_back(std::move(rel));
  };
  for (const Relation& rel : detail::cached_dihedral_relations(n)) push(rel);
  for (const ProductMap& pm : enumerate_product_maps(n)) {
    int na = static_cast<int>(pm.t1.size()) + 3;
    int nb = static_cast<int>(pm.t2.size()) + 3;
    int da = static_cast<int>(detail::cached_basis(na).size());
    int db = static_cast<int>(detail::cached_basis(nb).size());
    for (int ka = 0; ka < da; ++ka)
      for (int kb = 0; kb < db; ++kb)
        push(product_map_relation(pm, ka, kb));
  }
  return sys;
}

// The system as a sparse matrix over its canonical column indexing.
inline SparseMatrix system_matrix(const RelationSystem& sys) {
  std::map<PeriodSymbol, int> index;
  for (std::size_t j = 0; j < sys.columns.size(); ++j)
    index.emplace(sys.columns[j], static_cast<int>(j));
  SparseMatrix m;
  m.cols = static_cast<int>(sys.columns.size());
  for (const Relation& rel : sys.rows) {
    SparseRow r;
    for (const auto& [sym, coeff] : rel.row.terms()) {
      auto it = index.find(sym);
      if (it == index.end())
        throw std::invalid_argument("relation row uses an unknown symbol " +
                                    sym.str() + " (" + rel.provenance + ")");
      r.emplace(it->second, coeff);
    }
    m.rows.push_back(std::move(r));
  }
  return m;
}

struct ReductionReport {
  int n = 0;
  int rank = 0;
  int solution_dim = 0;
  std::vector<PeriodSymbol> generators;              // free symbols, ascending
  std::map<PeriodSymbol, RelationRow> expressions;   // symbol -> generator combo
};

// Reduce the system: rank, free generators (the non-pivot columns, which are
// the lowest-index choices compatible with the reduced echelon form), and an
// exact expression of every symbol in the generators.  Every input row is
// re-substituted and must vanish exactly.
inline ReductionReport reduce(const RelationSystem& sys) {
  std::map<PeriodSymbol, int> index;
  for (std::size_t j = 0; j < sys.columns.size(); ++j)
    index.emplace(sys.columns[j], static_cast<int>(j));

  SparseMatrix m = system_matrix(sys);
  RowReducer red;
  for (const SparseRow& r : m.rows) red.add(r);

  ReductionReport rep;
  rep.n = sys.n;
  rep.rank = red.rank();
  rep.solution_dim = m.cols - red.rank();
  for (int j = 0; j < m.cols; ++j)
    if (!red.is_pivot(j)) rep.generators.push_back(sys.columns[j]);

  for (int j = 0; j < m.cols; ++j) {
    RelationRow expr;
    if (!red.is_pivot(j)) {
      expr.add(sys.columns[j], Rational(1));
    } else {
      const SparseRow& row = red.pivot_rows().at(j);
      for (const auto& [col, coeff] : row)
        if (col != j) expr.add(sys.columns[col], -coeff);
    }
    rep.expressions.emplace(sys.columns[j], std::move(expr));
  }

  for (const Relation& rel : sys.rows) {
    RelationRow total;
    for (const auto& [sym, coeff] : rel.row.terms())
      total += coeff * rep.expressions.at(sym);
    if (!total.is_zero())
      throw std::logic_error("re-substitution failed for row: " + rel.provenance);
  }
  return rep;
}

}  // namespace cellzeta
