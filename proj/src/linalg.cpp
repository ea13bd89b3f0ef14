#include "jordanlab/linalg.hpp"

#include <algorithm>

namespace jordanlab {

SparseVecQ axpy(const SparseVecQ& dst, const Rat& c, const SparseVecQ& src) {
  SparseVecQ out;
  out.reserve(dst.size() + src.size());
  size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      Rat v = c * src[j].second;
      if (!rat_is_zero(v)) out.emplace_back(src[j].first, std::move(v));
      ++j;
    } else {
      Rat v = dst[i].second + c * src[j].second;
      if (!rat_is_zero(v)) out.emplace_back(dst[i].first, std::move(v));
      ++i, ++j;
    }
  }
  return out;
}

SparseVecQ normalize_row(const SparseVecQ& v) {
  if (v.empty()) return v;
  mpz_class den_lcm = 1;
  for (const auto& [c, r] : v) {
    mpz_class d = r.get_den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  mpz_class content = 0;
  std::vector<mpz_class> nums;
  nums.reserve(v.size());
  for (const auto& [c, r] : v) {
    mpz_class n = r.get_num() * (den_lcm / r.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
    nums.push_back(std::move(n));
  }
  if (nums.front() < 0) content = -content;
  SparseVecQ out;
  out.reserve(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    out.emplace_back(v[i].first, Rat(nums[i] / content));
  return out;
}

bool ExactRref::add_row(const SparseVecQ& row) {
  SparseVecQ v = row;
  size_t scan = 0;
  while (scan < v.size()) {
    auto it = pivot_row_.find(v[scan].first);
    if (it == pivot_row_.end()) {
      ++scan;
      continue;
    }
    // Eliminating against an echelon row only touches columns >= the pivot,
    // so entries before scan stay untouched.
    Rat c = -v[scan].second;
    v = axpy(v, c, rows_[it->second]);
  }
  if (v.empty()) return false;
  // Normalize leading coefficient to 1.
  Rat inv = 1 / v.front().second;
  for (auto& [col, val] : v) val *= inv;
  pivot_row_[v.front().first] = rows_.size();
  rows_.push_back(std::move(v));
  finalized_ = false;
  return true;
}

void ExactRref::finalize() {
  if (finalized_) return;
  // Process pivots from the rightmost leftwards; after a row is processed it
  // is fully reduced, so each elimination is final.
  std::vector<std::pair<int, size_t>> order(pivot_row_.begin(),
                                            pivot_row_.end());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    size_t ri = it->second;
    SparseVecQ& r = rows_[ri];
    size_t scan = 1;  // entry 0 is the pivot itself
    while (scan < r.size()) {
      auto p = pivot_row_.find(r[scan].first);
      if (p == pivot_row_.end()) {
        ++scan;
        continue;
      }
      Rat c = -r[scan].second;
      r = axpy(r, c, rows_[p->second]);
    }
  }
  // Canonical row order: by pivot column.
  std::vector<SparseVecQ> sorted;
  sorted.reserve(rows_.size());
  std::map<int, size_t> new_index;
  for (const auto& [col, ri] : pivot_row_) {
    new_index[col] = sorted.size();
    sorted.push_back(std::move(rows_[ri]));
  }
  rows_ = std::move(sorted);
  pivot_row_ = std::move(new_index);
  finalized_ = true;
}

SparseVecQ ExactRref::reduce(const SparseVecQ& v) const {
  SparseVecQ out = v;
  size_t scan = 0;
  while (scan < out.size()) {
    auto it = pivot_row_.find(out[scan].first);
    if (it == pivot_row_.end()) {
      ++scan;
      continue;
    }
    Rat c = -out[scan].second;
    out = axpy(out, c, rows_[it->second]);
  }
  return out;
}

std::vector<int> ExactRref::pivot_cols() const {
  std::vector<int> out;
  out.reserve(pivot_row_.size());
  for (const auto& [col, ri] : pivot_row_) out.push_back(col);
  return out;
}

std::vector<int> ExactRref::free_cols() const {
  std::vector<int> out;
  auto it = pivot_row_.begin();
  for (int c = 0; c < ncols_; ++c) {
    if (it != pivot_row_.end() && it->first == c) {
      ++it;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

std::vector<SparseVecQ> ExactRref::kernel_basis() const {
  // For each free column f: e_f - sum over pivot rows of row[f] * e_pivot.
  std::vector<SparseVecQ> out;
  for (int f : free_cols()) {
    SparseVecQ v;
    for (const auto& [col, ri] : pivot_row_) {
      const SparseVecQ& r = rows_[ri];
      auto it = std::lower_bound(
          r.begin(), r.end(), f,
          [](const std::pair<int, Rat>& e, int c) { return e.first < c; });
      if (it != r.end() && it->first == f) v.emplace_back(col, -it->second);
    }
    v.emplace_back(f, Rat(1));
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.push_back(std::move(v));
  }
  return out;
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, p);
    a = mulmod_u64(a, a, p);
    e >>= 1;
  }
  return r;
}

uint64_t invmod_u64(uint64_t a, uint64_t p) { return powmod_u64(a, p - 2, p); }

bool is_probable_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

bool ModRref::add_row(const SparseVecQ& row, bool* bad_denominator) {
  if (bad_denominator) *bad_denominator = false;
  SparseVecM v;
  v.reserve(row.size());
  for (const auto& [col, r] : row) {
    mpz_class den = r.get_den();
    uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), p_);
    if (d == 0) {
      if (bad_denominator) *bad_denominator = true;
      return false;
    }
    mpz_class num = r.get_num();
    uint64_t n = mpz_fdiv_ui(num.get_mpz_t(), p_);
    uint64_t val = mulmod_u64(n, invmod_u64(d, p_), p_);
    if (val) v.emplace_back(col, val);
  }
  return add_modrow(std::move(v));
}

bool ModRref::add_modrow(SparseVecM v) {
  size_t scan = 0;
  while (scan < v.size()) {
    auto it = pivot_row_.find(v[scan].first);
    if (it == pivot_row_.end()) {
      ++scan;
      continue;
    }
    const SparseVecM& r = rows_[it->second];
    uint64_t c = p_ - v[scan].second;  // v += c*r eliminates the pivot
    SparseVecM out;
    out.reserve(v.size() + r.size());
    size_t i = 0, j = 0;
    while (i < v.size() || j < r.size()) {
      if (j == r.size() || (i < v.size() && v[i].first < r[j].first)) {
        out.push_back(v[i++]);
      } else if (i == v.size() || r[j].first < v[i].first) {
        uint64_t val = mulmod_u64(c, r[j].second, p_);
        if (val) out.emplace_back(r[j].first, val);
        ++j;
      } else {
        uint64_t val = (v[i].second + mulmod_u64(c, r[j].second, p_)) % p_;
        if (val) out.emplace_back(v[i].first, val);
        ++i, ++j;
      }
    }
    v = std::move(out);
  }
  if (v.empty()) return false;
  uint64_t inv = invmod_u64(v.front().second, p_);
  for (auto& [col, val] : v) val = mulmod_u64(val, inv, p_);
  pivot_row_[v.front().first] = rows_.size();
  rows_.push_back(std::move(v));
  return true;
}

}  // namespace jordanlab
