#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jordanlab/lift.hpp"
#include "jordanlab/linalg.hpp"
#include "jordanlab/magma.hpp"

namespace jordanlab {

struct ComponentOptions {
  size_t max_cols = 20000;
  size_t max_rows = 400000;
  std::array<uint64_t, 3> primes{kDefaultPrimes[0], kDefaultPrimes[1],
                                 kDefaultPrimes[2]};
  std::string cache_dir;        // empty disables the disk cache
  bool no_cache = false;        // bypass disk reads and writes
  bool modular_hint = true;     // mod-p structural pass above 1000 columns
  bool check_relations = true;  // gamma-annihilation of generated instances
};

struct ComponentStats {
  size_t cache_hits = 0;
  size_t cache_writes = 0;
  size_t builds = 0;
  std::vector<std::pair<MultiDegree, double>> build_ms;
};

// All canonical commutative trees with leaf multiset d, in term order.
const std::vector<JTerm>& enumerate_jterms(const MultiDegree& d);

// All associative words of multidegree d, lexicographically sorted.
std::vector<Word> enumerate_words(const MultiDegree& d);

// Full linearization of the Jordan identity (a^2 b)a - a^2(ba), substituted
// by monomials; integer coefficients.
JPoly jordan_linearization(JTerm a1, JTerm a2, JTerm a3, JTerm b);

/* One multidegree-homogeneous component of the free Jordan algebra as an
 * explicit quotient: the magma-monomial basis, the canonical reduced echelon
 * form of the Jordan-T-ideal relation rows, and the induced quotient
 * coordinates on the free columns. The reduced form is exact and depends
 * only on the row space, so cached and fresh builds agree byte for byte.
 */
class ComponentSpace {
 public:
  const MultiDegree& degree() const { return degree_; }
  const std::vector<JTerm>& basis() const { return basis_; }
  size_t basis_size() const { return basis_.size(); }
  size_t rank() const { return rref_.rank(); }
  size_t quotient_dim() const { return basis_.size() - rref_.rank(); }
  const ExactRref& rref() const { return rref_; }
  const std::vector<int>& free_cols() const { return free_cols_; }
  bool prime_agreement() const { return prime_agreement_; }

  // Coordinates of a multidegree-d polynomial over the monomial basis.
  SparseVecQ coords(const JPoly& f) const;
  JPoly from_coords(const SparseVecQ& v) const;

  // Quotient coordinates: reduce modulo the relation row space. The result
  // is supported on free columns; zero iff f = 0 in the free Jordan algebra.
  SparseVecQ reduce(const JPoly& f) const;

 private:
  friend class ComponentContext;
  MultiDegree degree_;
  std::vector<JTerm> basis_;
  ExactRref rref_{0};
  std::vector<int> free_cols_;
  bool prime_agreement_ = true;
};

// Exact generators of a subspace of one quotient component, with enough
// data to re-verify membership claims.
struct SubspaceCert {
  MultiDegree degree;
  size_t ambient_dim = 0;           // quotient dimension of the component
  size_t dim = 0;
  std::vector<SparseVecQ> vectors;  // basis-column indexed, free-col support
};

class ComponentContext {
 public:
  explicit ComponentContext(ComponentOptions opts = {});

  const ComponentOptions& options() const { return opts_; }
  ComponentStats& stats() { return stats_; }

  const ComponentSpace& space(const MultiDegree& d);

  // Spanning set of the multidegree-d slice of the Jordan T-ideal, as
  // normalized vectors over basis(d). Deterministic order.
  std::vector<SparseVecQ> jordan_relations(const MultiDegree& d);

  // True iff every multidegree slice of f reduces to zero. When false and
  // witness is non-null, *witness receives the first nonzero reduced slice.
  bool is_zero_in_J(const JPoly& f, JPoly* witness = nullptr);

  // ker(gamma) on the quotient at multidegree d, with exact verification of
  // every reported basis vector.
  SubspaceCert s_space(const MultiDegree& d);

 private:
  std::unique_ptr<ComponentSpace> build(const MultiDegree& d);
  std::vector<SparseVecQ> relation_rows(const MultiDegree& d,
                                        const ComponentSpace& target);

  ComponentOptions opts_;
  ComponentStats stats_;
  std::map<MultiDegree, std::unique_ptr<ComponentSpace>> spaces_;
};

}  // namespace jordanlab
