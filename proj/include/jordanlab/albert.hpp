#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "jordanlab/magma.hpp"

namespace jordanlab {

// Rational octonions over the basis e0..e7, multiplication by Cayley-Dickson
// doubling from the standard quaternions (ij = k). The 8x8 sign/index table
// is generated from the doubling formula, not hand-typed.
class Octonion {
 public:
  Octonion() = default;
  static Octonion basis(int i);
  static Octonion scalar(const Rat& r);

  const Rat& operator[](int i) const { return c_[i]; }
  Rat& operator[](int i) { return c_[i]; }

  Octonion operator+(const Octonion& o) const;
  Octonion operator-(const Octonion& o) const;
  Octonion operator*(const Octonion& o) const;  // table-driven
  Octonion scaled(const Rat& r) const;
  Octonion conj() const;
  Rat norm() const;  // sum of squared coordinates
  bool is_zero() const;
  bool operator==(const Octonion&) const = default;

  std::string str() const;

  // Doubling-formula product on coordinate spans of width n = 1,2,4,8;
  // the unit tests check the table against this recursion.
  static void cd_mult(const Rat* a, const Rat* b, Rat* out, int n);

  struct Table {
    std::array<std::array<int8_t, 8>, 8> sign;
    std::array<std::array<uint8_t, 8>, 8> index;
  };
  static const Table& table();

 private:
  std::array<Rat, 8> c_{};
};

// Hermitian 3x3 matrix over the octonions: the 27-dimensional exceptional
// Jordan algebra with A o B = (AB + BA)/2.
class AlbertElement {
 public:
  AlbertElement();
  const Octonion& at(int i, int j) const { return m_[i * 3 + j]; }
  void set_diag(int i, const Rat& r);
  void set_off(int i, int j, const Octonion& o);  // sets (j,i) to the conjugate

  AlbertElement operator+(const AlbertElement& o) const;
  AlbertElement operator-(const AlbertElement& o) const;
  AlbertElement scaled(const Rat& r) const;
  AlbertElement jordan(const AlbertElement& o) const;
  bool is_zero() const;
  bool operator==(const AlbertElement&) const = default;
  std::string str() const;

 private:
  std::array<Octonion, 9> m_;
};

// k x k rational symmetric matrices under A o B = (AB + BA)/2: the special
// Jordan oracle H_k(Q).
class SymMatrix {
 public:
  explicit SymMatrix(int k);
  int dim() const { return k_; }
  const Rat& at(int i, int j) const { return m_[i * k_ + j]; }
  void set(int i, int j, const Rat& r);  // keeps symmetry

  SymMatrix operator+(const SymMatrix& o) const;
  SymMatrix operator-(const SymMatrix& o) const;
  SymMatrix scaled(const Rat& r) const;
  SymMatrix jordan(const SymMatrix& o) const;
  bool is_zero() const;
  bool operator==(const SymMatrix&) const = default;
  std::string str() const;

 private:
  int k_;
  std::vector<Rat> m_;
};

// Deterministic generator for reproducible evaluation points; coordinates
// are integers in [-3, 3].
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next();
  int small_int();  // in [-3, 3]
};

inline constexpr uint64_t kDefaultSeed = 0xA1BE27;

Octonion random_octonion(SplitMix64& rng);
AlbertElement random_albert(SplitMix64& rng);
SymMatrix random_sym(SplitMix64& rng, int k);

// Structural evaluation of a Jordan polynomial at an assignment indexed by
// generator. Throws MissingAssignment when f uses an unassigned generator.
template <typename E>
E evaluate(const JPoly& f, const std::vector<E>& point, E acc);

extern template AlbertElement evaluate(const JPoly&,
                                       const std::vector<AlbertElement>&,
                                       AlbertElement);
extern template SymMatrix evaluate(const JPoly&, const std::vector<SymMatrix>&,
                                   SymMatrix);

}  // namespace jordanlab
