#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jordanlab/assoc.hpp"

namespace jordanlab {

/* Monomial of the free commutative magma: a leaf (generator) or an unordered
 * pair of subterms. Terms are hash-consed in a process-wide arena, so a JTerm
 * is a cheap handle and structural equality is id equality. Canonical form:
 * at every node left <= right in term order (degree first, then leaves by
 * generator index, then recursively (left, right)). The interning is not
 * observable through the public surface.
 */
class JTerm {
 public:
  static JTerm leaf(Gen g);
  static JTerm node(JTerm a, JTerm b);  // reorders children canonically

  bool is_leaf() const;
  Gen gen() const;      // pre: leaf
  JTerm left() const;   // pre: node
  JTerm right() const;  // pre: node

  int degree() const;
  const MultiDegree& multidegree() const;

  // Image under the canonical homomorphism into the associative algebra:
  // leaf -> generator word, node -> circle product. Memoized per term.
  const AssocPoly& gamma() const;

  uint32_t id() const { return id_; }
  bool operator==(const JTerm& o) const { return id_ == o.id_; }
  bool operator!=(const JTerm& o) const { return id_ != o.id_; }
  bool operator<(const JTerm& o) const { return compare(*this, o) < 0; }

  static int compare(JTerm a, JTerm b);

  std::string str() const;

 private:
  explicit JTerm(uint32_t id) : id_(id) {}
  uint32_t id_ = 0;
  friend class TermArena;
};

// Finite rational linear combination of JTerms, zero-free, ordered by the
// term order so iteration is deterministic.
class JPoly {
 public:
  JPoly() = default;

  static JPoly term(JTerm t, const Rat& c = Rat(1));
  static JPoly gen(Gen g) { return term(JTerm::leaf(g)); }

  bool is_zero() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }
  const std::map<JTerm, Rat>& terms() const { return t_; }
  Rat coeff(JTerm t) const;

  JPoly operator+(const JPoly& o) const;
  JPoly operator-(const JPoly& o) const;
  JPoly operator-() const;
  JPoly scaled(const Rat& c) const;
  bool operator==(const JPoly&) const = default;

  bool homogeneous() const;
  MultiDegree multidegree() const;  // pre: homogeneous, nonzero
  std::map<MultiDegree, JPoly> slices() const;

  std::string str() const;

  void add_term(JTerm t, const Rat& c);

 private:
  std::map<JTerm, Rat> t_;
};

// Bilinear extension of node construction; commutative.
JPoly jmul(const JPoly& f, const JPoly& g);

// Left-normed power a^s = (a^{s-1}) * a, s >= 1.
JPoly jpow(const JPoly& a, int s);

// f R_a = f * a
JPoly apply_R(const JPoly& f, const JPoly& a);

// f U_{a,b} = (f*a)*b + (f*b)*a - f*(a*b); symmetric in a, b and satisfying
// gamma(f U_{a,b}) = ((gamma a)(gamma f)(gamma b) + (gamma b)(gamma f)(gamma a))/2.
JPoly apply_U(const JPoly& f, const JPoly& a, const JPoly& b);

// f D_{a,b} = (f*a)*b - (f*b)*a; antisymmetric in a, b.
JPoly apply_D(const JPoly& f, const JPoly& a, const JPoly& b);

AssocPoly gamma(const JPoly& f);

}  // namespace jordanlab
