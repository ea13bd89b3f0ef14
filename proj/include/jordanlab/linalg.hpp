#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "jordanlab/rational.hpp"

namespace jordanlab {

// Sparse rational vector: (column, value) pairs sorted by column, no zeros.
using SparseVecQ = std::vector<std::pair<int, Rat>>;

// dst + c * src, merged by column.
SparseVecQ axpy(const SparseVecQ& dst, const Rat& c, const SparseVecQ& src);

// Scales to integer entries with content gcd 1 and positive leading entry.
SparseVecQ normalize_row(const SparseVecQ& v);

/* Incremental exact row-echelon basis over the rationals. Rows added with
 * add_row are reduced against the current pivots; independent remainders
 * become new pivot rows (leading coefficient normalized to 1). finalize()
 * back-substitutes to the canonical reduced echelon form of the row space,
 * after which reduce() touches each pivot at most once.
 */
class ExactRref {
 public:
  explicit ExactRref(int ncols) : ncols_(ncols) {}

  bool add_row(const SparseVecQ& row);  // true if the row space grew
  SparseVecQ reduce(const SparseVecQ& v) const;
  void finalize();

  size_t rank() const { return rows_.size(); }
  int ncols() const { return ncols_; }
  const std::vector<SparseVecQ>& rows() const { return rows_; }
  int pivot_of_row(size_t i) const { return rows_[i].front().first; }
  bool is_pivot(int col) const { return pivot_row_.count(col) > 0; }
  std::vector<int> pivot_cols() const;
  std::vector<int> free_cols() const;

  // Basis of {v : v in row space orthogonal sense} -- kernel of the matrix
  // whose rows were added, viewed as linear forms on Q^ncols.
  std::vector<SparseVecQ> kernel_basis() const;  // pre: finalized

 private:
  int ncols_;
  bool finalized_ = false;
  std::vector<SparseVecQ> rows_;
  std::map<int, size_t> pivot_row_;
};

// Row-echelon rank computation modulo a word-sized prime; used as a fast
// structural hint and as an agreement cross-check next to the exact path.
class ModRref {
 public:
  ModRref(int ncols, uint64_t prime) : ncols_(ncols), p_(prime) {}

  // Returns true if independent mod p. Rows with entries whose denominator
  // vanishes mod p are rejected with *bad_denominator = true.
  bool add_row(const SparseVecQ& row, bool* bad_denominator = nullptr);
  size_t rank() const { return rows_.size(); }

 private:
  using SparseVecM = std::vector<std::pair<int, uint64_t>>;
  bool add_modrow(SparseVecM v);

  int ncols_;
  uint64_t p_;
  std::vector<SparseVecM> rows_;
  std::map<int, size_t> pivot_row_;
};

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p);
uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p);
uint64_t invmod_u64(uint64_t a, uint64_t p);
bool is_probable_prime_u64(uint64_t n);

// Default 62-bit elimination primes (overridable from the CLI).
inline constexpr uint64_t kDefaultPrimes[3] = {
    2305843009213693951ull,  // 2^61 - 1
    4611686018427387847ull,  // 2^62 - 57
    4611686018427387817ull,  // 2^62 - 87
};

}  // namespace jordanlab
