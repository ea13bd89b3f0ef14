#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "jordanlab/rational.hpp"

namespace jordanlab {

// Generators are small nonnegative indices. The three-variable case uses
// 0,1,2 rendered x,y,z; index 3 renders w and anything above renders g<k>.
using Gen = int;

std::string gen_name(Gen g);

// Per-generator exponent vector. Stored with trailing zeros trimmed so that
// (3,3,2) and (3,3,2,0) compare equal.
class MultiDegree {
 public:
  MultiDegree() = default;
  explicit MultiDegree(std::vector<int> counts);

  int total() const;
  int count(Gen g) const;
  int width() const { return static_cast<int>(c_.size()); }
  bool leq(const MultiDegree& other) const;  // componentwise <=
  MultiDegree plus(const MultiDegree& other) const;
  MultiDegree minus(const MultiDegree& other) const;  // pre: other.leq(*this)

  auto operator<=>(const MultiDegree&) const = default;

  std::string str() const;  // "(3,3,2)"
  const std::vector<int>& counts() const { return c_; }

 private:
  std::vector<int> c_;
};

// A monomial of the free associative algebra: a finite generator sequence.
// The empty word is the unit.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Gen> letters) : l_(std::move(letters)) {}

  static Word single(Gen g, int power = 1);

  size_t length() const { return l_.size(); }
  bool empty() const { return l_.empty(); }
  Gen at(size_t i) const { return l_[i]; }
  const std::vector<Gen>& letters() const { return l_; }

  Word reversed() const;
  Word concat(const Word& other) const;
  bool palindrome() const { return *this == reversed(); }

  // Number of maximal constant runs; 0 for the empty word.
  int height() const;
  std::vector<std::pair<Gen, int>> runs() const;

  MultiDegree multidegree() const;

  // Degree-lexicographic order: length first, then letter sequence.
  std::strong_ordering operator<=>(const Word& other) const;
  bool operator==(const Word&) const = default;

  std::string str() const;  // run-length form, e.g. "x^2yx"

 private:
  std::vector<Gen> l_;
};

// Lexicographic minimum of {u, reverse(u)}; the canonical SJ representative.
Word sj_representative(const Word& u);

// Finite rational linear combination of words, kept zero-free.
class AssocPoly {
 public:
  AssocPoly() = default;

  static AssocPoly word(const Word& w, const Rat& c = Rat(1));
  static AssocPoly gen(Gen g);
  static AssocPoly unit() { return word(Word()); }

  bool is_zero() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }
  const std::map<Word, Rat>& terms() const { return t_; }
  Rat coeff(const Word& w) const;

  AssocPoly operator+(const AssocPoly& o) const;
  AssocPoly operator-(const AssocPoly& o) const;
  AssocPoly operator-() const;
  AssocPoly operator*(const AssocPoly& o) const;  // concatenation product
  AssocPoly scaled(const Rat& c) const;
  AssocPoly pow(int n) const;  // pre: n >= 0

  bool operator==(const AssocPoly&) const = default;

  AssocPoly involute() const;  // reverse every word
  bool is_symmetric() const;
  bool is_skew() const;

  // True when every term has the same multidegree (zero counts as
  // homogeneous of any degree).
  bool homogeneous() const;
  MultiDegree multidegree() const;  // pre: homogeneous, nonzero
  std::map<MultiDegree, AssocPoly> slices() const;

  std::string str() const;

  void add_term(const Word& w, const Rat& c);

 private:
  std::map<Word, Rat> t_;
};

// u + u*
AssocPoly symmetrize(const Word& u);

// a o b = (ab + ba)/2, the special Jordan product.
AssocPoly circle(const AssocPoly& a, const AssocPoly& b);

// [a, b] = ab - ba
AssocPoly commutator(const AssocPoly& a, const AssocPoly& b);

// [p] = p - p*
AssocPoly bracket_skew(const AssocPoly& p);

// Expresses a symmetric p as sum alpha_i {u_i} over canonical representatives.
// Throws NotSymmetric otherwise.
std::vector<std::pair<Word, Rat>> sj_decompose(const AssocPoly& p);

}  // namespace jordanlab
