#pragma once

// Exact sparse linear algebra over the rationals: incremental reduced row
// echelon form, rank, and a modular cross-check of the rank.
//
// Rows are sparse maps column -> coefficient with no stored zeros. The
// incremental reducer keeps its pivot rows mutually reduced (each pivot row
// carries a 1 in its pivot column and no entry in any other pivot column),
// so reducing an incoming row is a single ordered elimination pass.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cellzeta/rational.hpp"

namespace cellzeta {

using SparseRow = std::map<int, Rational>;

struct SparseMatrix {
  int cols = 0;
  std::vector<SparseRow> rows;
};

namespace detail {

// r += c * s, dropping cancelled entries.
inline void row_axpy(SparseRow& r, const Rational& c, const SparseRow& s) {
  for (const auto& [j, v] : s) {
    auto it = r.find(j);
    if (it == r.end()) {
      Rational nv = c * v;
      if (nv != 0) r.emplace(j, std::move(nv));
    } else {
      it->second += c * v;
      if (it->second == 0) r.erase(it);
    }
  }
}

}  // namespace detail

// Incremental reduced-echelon accumulator. Insert rows one at a time; the
// stored pivot rows always form a reduced echelon basis of the row space of
// everything inserted so far (lowest-column pivots, pivot coefficient 1).
class RowReducer {
 public:
  // Fully reduce r against the current pivot rows without inserting it.
  // The remainder has no entry in any pivot column.
  SparseRow reduce(SparseRow r) const {
    for (const auto& [p, prow] : pivots_) {
      auto it = r.find(p);
      if (it == r.end()) continue;
      Rational c = -it->second;
      detail::row_axpy(r, c, prow);
    }
    return r;
  }

  // Reduce and insert; returns whether the rank grew.
  bool add(SparseRow r) {
    r = reduce(std::move(r));
    if (r.empty()) return false;
    int p = r.begin()->first;
    Rational inv = Rational(1) / r.begin()->second;
    for (auto& [j, v] : r) v *= inv;
    for (auto& [q, qrow] : pivots_) {
      (void)q;
      auto it = qrow.find(p);
      if (it == qrow.end()) continue;
      Rational c = -it->second;
      detail::row_axpy(qrow, c, r);
    }
    pivots_.emplace(p, std::move(r));
    return true;
  }

  int rank() const { return static_cast<int>(pivots_.size()); }
  bool is_pivot(int col) const { return pivots_.count(col) != 0; }
  const std::map<int, SparseRow>& pivot_rows() const { return pivots_; }

 private:
  std::map<int, SparseRow> pivots_;  // pivot column -> normalized row
};

struct RrefResult {
  SparseMatrix matrix;           // pivot rows in increasing pivot order
  std::vector<int> pivot_cols;
  int rank = 0;
};

inline RrefResult rref(const SparseMatrix& m) {
  RowReducer red;
  for (const SparseRow& r : m.rows) red.add(r);
  RrefResult out;
  out.matrix.cols = m.cols;
  for (const auto& [p, row] : red.pivot_rows()) {
    out.pivot_cols.push_back(p);
    out.matrix.rows.push_back(row);
  }
  out.rank = red.rank();
  return out;
}

// ---------------------------------------------------------------------------
// Modular rank cross-check.

namespace detail {

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e,
                             std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    if (n % d == 0) return n == d;
  }
  // Deterministic Miller-Rabin for n < 3.2e18 with these bases.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Deterministic "random" 30-bit prime stream: hash the index into the 30-bit
// odd range and walk forward to the next prime.
inline std::uint64_t thirty_bit_prime(std::uint64_t index) {
  std::uint64_t x = (index + 1) * 0x9e3779b97f4a7c15ull;
  x ^= x >> 29;
  std::uint64_t c = ((1ull << 29) + (x % (1ull << 29))) | 1ull;
  while (!is_prime_u64(c)) c += 2;
  return c;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  return pow_mod(a % p, p - 2, p);
}

}  // namespace detail

// Rank of the matrix over Z/p. Throws std::domain_error if some denominator
// vanishes modulo p (caller should retry with another prime).
inline int modular_rank(const SparseMatrix& m, std::uint64_t p) {
  std::vector<std::map<int, std::uint64_t>> rows;
  rows.reserve(m.rows.size());
  for (const SparseRow& r : m.rows) {
    std::map<int, std::uint64_t> mr;
    for (const auto& [j, v] : r) {
      std::uint64_t den = mpz_fdiv_ui(v.get_den().get_mpz_t(), p);
      if (den == 0) throw std::domain_error("denominator vanishes mod p");
      std::uint64_t num = mpz_fdiv_ui(v.get_num().get_mpz_t(), p);
      std::uint64_t e = num * detail::inv_mod(den, p) % p;
      if (e) mr.emplace(j, e);
    }
    rows.push_back(std::move(mr));
  }

  std::map<int, std::map<int, std::uint64_t>> pivots;
  int rank = 0;
  for (auto& r : rows) {
    for (const auto& [q, qrow] : pivots) {
      auto it = r.find(q);
      if (it == r.end()) continue;
      std::uint64_t c = p - it->second;
      for (const auto& [j, v] : qrow) {
        std::uint64_t& slot = r[j];
        slot = (slot + c * v) % p;
        if (slot == 0) r.erase(j);
      }
    }
    if (r.empty()) continue;
    int piv = r.begin()->first;
    std::uint64_t inv = detail::inv_mod(r.begin()->second, p);
    for (auto& [j, v] : r) v = v * inv % p;
    pivots.emplace(piv, std::move(r));
    ++rank;
  }
  return rank;
}

// Exact rank together with the modular cross-check against two
// deterministically chosen 30-bit primes.
inline int checked_rank(const SparseMatrix& m) {
  RrefResult r = rref(m);
  for (std::uint64_t index = 0, done = 0; done < 2; ++index) {
    std::uint64_t p = detail::thirty_bit_prime(index);
    int mod_rank;
    try {
      mod_rank = modular_rank(m, p);
    } catch (const std::domain_error&) {
      continue;  // unlucky prime divides a denominator
    }
    if (mod_rank != r.rank)
      throw std::logic_error("modular rank disagrees with exact rank");
    ++done;
  }
  return r.rank;
}

// ---------------------------------------------------------------------------

// The dimension recurrence d_k = d_{k-2} + d_{k-3} with d_0 = 1, d_1 = 0,
// d_2 = 1; returns d_0 .. d_kmax.
inline std::vector<long long> zagier_dims(int kmax) {
  std::vector<long long> d;
  for (int k = 0; k <= kmax; ++k) {
    if (k == 0 || k == 2) {
      d.push_back(1);
    } else if (k == 1) {
      d.push_back(0);
    } else {
      d.push_back(d[k - 2] + d[k - 3]);
    }
  }
  return d;
}

}  // namespace cellzeta
