#include "doctest.h"

#include <algorithm>

#include "jordanlab/albert.hpp"
#include "jordanlab/linalg.hpp"

using namespace jordanlab;

namespace {

SparseVecQ vec(std::initializer_list<std::pair<int, int>> entries) {
  SparseVecQ v;
  for (auto [c, n] : entries) v.emplace_back(c, Rat(n));
  return v;
}

}  // namespace

TEST_SUITE_BEGIN("linalg");

TEST_CASE("axpy and normalize") {
  SparseVecQ a = vec({{0, 1}, {2, 2}});
  SparseVecQ b = vec({{1, 1}, {2, -1}});
  SparseVecQ r = axpy(a, Rat(2), b);
  CHECK(r == vec({{0, 1}, {1, 2}}));

  SparseVecQ c{{0, Rat(-2, 3)}, {3, Rat(4, 3)}};
  CHECK(normalize_row(c) == vec({{0, 1}, {3, -2}}));
  CHECK(normalize_row(SparseVecQ{}).empty());
}

TEST_CASE("rank, reduce, kernel on a known matrix") {
  ExactRref r(3);
  CHECK(r.add_row(vec({{0, 1}, {2, 1}})));
  CHECK(r.add_row(vec({{1, 1}, {2, 1}})));
  CHECK(!r.add_row(vec({{0, 1}, {1, 1}, {2, 2}})));
  r.finalize();
  CHECK(r.rank() == 2);
  CHECK(r.free_cols() == std::vector<int>{2});
  CHECK(r.reduce(vec({{0, 1}, {1, 1}, {2, 2}})).empty());
  CHECK(!r.reduce(vec({{0, 1}})).empty());
  auto kernel = r.kernel_basis();
  REQUIRE(kernel.size() == 1);
  CHECK(kernel[0] == SparseVecQ{{0, Rat(-1)}, {1, Rat(-1)}, {2, Rat(1)}});
}

TEST_CASE("canonical reduced form is row-order independent") {
  SplitMix64 rng(57);
  for (int trial = 0; trial < 30; ++trial) {
    int ncols = 6;
    std::vector<SparseVecQ> rows;
    for (int i = 0; i < 8; ++i) {
      SparseVecQ v;
      for (int c = 0; c < ncols; ++c) {
        int val = rng.small_int();
        if (val) v.emplace_back(c, Rat(val));
      }
      rows.push_back(v);
    }
    ExactRref a(ncols), b(ncols);
    for (const auto& v : rows) a.add_row(v);
    std::vector<SparseVecQ> shuffled = rows;
    for (size_t i = shuffled.size(); i > 1; --i)
      std::swap(shuffled[i - 1], shuffled[rng.next() % i]);
    for (const auto& v : shuffled) b.add_row(v);
    a.finalize();
    b.finalize();
    CHECK(a.rank() == b.rank());
    CHECK(a.rows() == b.rows());
  }
}

TEST_CASE("modular rank agrees with exact rank") {
  SplitMix64 rng(91);
  for (int trial = 0; trial < 20; ++trial) {
    int ncols = 7;
    std::vector<SparseVecQ> rows;
    for (int i = 0; i < 9; ++i) {
      SparseVecQ v;
      for (int c = 0; c < ncols; ++c) {
        int val = rng.small_int();
        if (val) v.emplace_back(c, Rat(val));
      }
      rows.push_back(v);
    }
    ExactRref exact(ncols);
    ModRref mod(ncols, kDefaultPrimes[0]);
    for (const auto& v : rows) {
      exact.add_row(v);
      mod.add_row(v);
    }
    CHECK(exact.rank() == mod.rank());
  }
}

TEST_CASE("modular arithmetic primitives") {
  uint64_t p = kDefaultPrimes[1];
  CHECK(mulmod_u64(p - 1, p - 1, p) == 1);
  for (uint64_t a : {uint64_t{2}, uint64_t{12345}, p - 2}) {
    CHECK(mulmod_u64(a, invmod_u64(a, p), p) == 1);
  }
  for (uint64_t q : kDefaultPrimes) CHECK(is_probable_prime_u64(q));
  CHECK(!is_probable_prime_u64(kDefaultPrimes[0] - 1));
  CHECK(!is_probable_prime_u64(4611686018427387848ull));
}

TEST_SUITE_END();
