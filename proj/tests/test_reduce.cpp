#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "cellzeta/rational.hpp"
#include "cellzeta/reduce.hpp"

using namespace cellzeta;

namespace {

SparseRow row(std::initializer_list<std::pair<int, int>> entries) {
  SparseRow r;
  for (auto [j, v] : entries)
    if (v != 0) r.emplace(j, Rational(v));
  return r;
}

SparseMatrix random_matrix(int rows, int cols, std::mt19937_64& rng) {
  SparseMatrix m;
  m.cols = cols;
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  for (int i = 0; i < rows; ++i) {
    SparseRow r;
    for (int j = 0; j < cols; ++j) {
      int v = num(rng);
      if (v != 0) r.emplace(j, Rational(v, den(rng)));
    }
    m.rows.push_back(std::move(r));
  }
  return m;
}

}  // namespace

TEST_CASE("row reducer maintains rank and reduced remainders") {
  RowReducer red;
  REQUIRE(red.rank() == 0);
  REQUIRE(red.add(row({{0, 1}, {1, 2}})));
  REQUIRE(red.add(row({{1, 1}, {2, 3}})));
  // Dependent combination: 2*(first) - 4*(second) + their difference spans.
  SparseRow dep = row({{0, 2}, {1, 8}, {2, 12}});  // 2*r1 + 4*r2
  REQUIRE_FALSE(red.add(dep));
  REQUIRE(red.rank() == 2);

  SparseRow rem = red.reduce(row({{0, 5}, {1, 1}, {2, 7}}));
  for (const auto& [j, v] : rem) {
    REQUIRE_FALSE(red.is_pivot(j));
    REQUIRE(v != 0);
  }

  // Adding a remainder recovers full rank on its columns.
  REQUIRE(red.add(row({{2, 1}})));
  REQUIRE(red.rank() == 3);
  REQUIRE(red.reduce(row({{0, 4}, {1, -3}, {2, 11}})).empty());
}

TEST_CASE("rref is idempotent and finds pivots in ascending order") {
  SparseMatrix m;
  m.cols = 4;
  m.rows = {row({{0, 2}, {2, 4}}), row({{0, 1}, {1, 1}, {2, 2}}),
            row({{1, 1}, {3, 5}}), row({{0, 3}, {1, 4}, {2, 6}, {3, 20}})};
  RrefResult r1 = rref(m);
  REQUIRE(r1.rank == 3);
  REQUIRE(r1.pivot_cols == std::vector<int>{0, 1, 3});
  REQUIRE(std::is_sorted(r1.pivot_cols.begin(), r1.pivot_cols.end()));

  RrefResult r2 = rref(r1.matrix);
  REQUIRE(r2.rank == r1.rank);
  REQUIRE(r2.pivot_cols == r1.pivot_cols);
  for (int i = 0; i < r1.rank; ++i) REQUIRE(r2.matrix.rows[i] == r1.matrix.rows[i]);

  // Each pivot column holds a single 1 in its own row.
  for (int i = 0; i < r1.rank; ++i) {
    int p = r1.pivot_cols[i];
    REQUIRE(r1.matrix.rows[i].at(p) == 1);
    for (int k = 0; k < r1.rank; ++k)
      if (k != i) REQUIRE(r1.matrix.rows[k].count(p) == 0);
  }
}

TEST_CASE("rank is invariant under row scrambling and rescaling") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 20; ++trial) {
    SparseMatrix m = random_matrix(8, 6, rng);
    int base = rref(m).rank;

    SparseMatrix scrambled = m;
    std::shuffle(scrambled.rows.begin(), scrambled.rows.end(), rng);
    for (SparseRow& r : scrambled.rows) {
      Rational c(static_cast<int>(rng() % 7) + 1, static_cast<int>(rng() % 5) + 1);
      for (auto& [j, v] : r) v *= c;
    }
    // Append a linear combination of two existing rows.
    if (scrambled.rows.size() >= 2) {
      SparseRow extra = scrambled.rows[0];
      detail::row_axpy(extra, Rational(3, 2), scrambled.rows[1]);
      scrambled.rows.push_back(std::move(extra));
    }
    REQUIRE(rref(scrambled).rank == base);
  }
}

TEST_CASE("modular rank agrees with exact rank") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 15; ++trial) {
    SparseMatrix m = random_matrix(7, 7, rng);
    int exact = rref(m).rank;
    std::uint64_t p = detail::thirty_bit_prime(trial);
    REQUIRE(detail::is_prime_u64(p));
    int mod = modular_rank(m, p);
    // A modular rank can only drop below the exact rank, never exceed it.
    REQUIRE(mod <= exact);
    REQUIRE(checked_rank(m) == exact);
  }
}

TEST_CASE("identity and zero matrices have the expected ranks") {
  SparseMatrix id;
  id.cols = 5;
  for (int i = 0; i < 5; ++i) id.rows.push_back(row({{i, 1}}));
  REQUIRE(checked_rank(id) == 5);

  SparseMatrix zero;
  zero.cols = 5;
  zero.rows.resize(4);
  REQUIRE(checked_rank(zero) == 0);
}

TEST_CASE("dimension recursion produces the expected sequence") {
  std::vector<long long> d = zagier_dims(11);
  REQUIRE(d == std::vector<long long>{1, 0, 1, 1, 1, 2, 2, 3, 4, 5, 7, 9});
}
