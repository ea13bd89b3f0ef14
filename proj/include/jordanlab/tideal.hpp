#pragma once

#include <vector>

#include "jordanlab/component.hpp"

namespace jordanlab {

// Full multilinearization of a multihomogeneous Jordan polynomial over fresh
// slot generators; identifying the slots back recovers (prod deg_i!) * f.
struct MultilinearForm {
  MultiDegree source_degree;
  std::vector<std::vector<Gen>> slots;  // per source generator
  JPoly form;
};

MultilinearForm multilinearize(const JPoly& f);  // throws NotHomogeneous
JPoly restitute(const MultilinearForm& m);

// Substitution instances of a generator at multidegree e: the multilinear
// form evaluated on every per-variable monomial multiset with total
// multidegree e (slots may receive any generator's monomials).
std::vector<JPoly> t_instances(const JPoly& gen, const MultiDegree& e,
                               size_t max_count);

struct TComponent {
  SubspaceCert cert;
  std::vector<JPoly> instances;             // spanning set, deterministic
  std::vector<SparseVecQ> instance_coords;  // quotient coordinates
};

// Span, in quotient coordinates at d, of all substitution instances of the
// generators (with monomial-multiplication contexts when an instance's
// degree sits strictly below d).
TComponent t_component(ComponentContext& ctx, const std::vector<JPoly>& gens,
                       const MultiDegree& d);

struct TMembership {
  bool member = false;
  std::vector<std::pair<size_t, Rat>> coefficients;  // over the instance list
  bool verified = false;  // substitution re-check of the certificate
};

TMembership t_membership(ComponentContext& ctx, const JPoly& f,
                         const std::vector<JPoly>& gens);

}  // namespace jordanlab
