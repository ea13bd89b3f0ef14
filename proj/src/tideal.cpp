#include "jordanlab/tideal.hpp"

#include <algorithm>
#include <unordered_map>

#include "jordanlab/error.hpp"

namespace jordanlab {

namespace {

void collect_leaf_positions(JTerm t, std::vector<JTerm>& stack) {
  if (t.is_leaf()) {
    stack.push_back(t);
    return;
  }
  collect_leaf_positions(t.left(), stack);
  collect_leaf_positions(t.right(), stack);
}

// Rebuilds t with its i-th leaf (in traversal order) replaced by repl[i].
JTerm rebuild_with_leaves(JTerm t, const std::vector<JTerm>& repl,
                          size_t& cursor) {
  if (t.is_leaf()) return repl[cursor++];
  JTerm l = rebuild_with_leaves(t.left(), repl, cursor);
  JTerm r = rebuild_with_leaves(t.right(), repl, cursor);
  return JTerm::node(l, r);
}

mpz_class factorial(int n) {
  mpz_class r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// All monomials with multidegree componentwise <= bound, sorted in term
// order. Memoized globally.
const std::vector<JTerm>& monomials_upto(const MultiDegree& bound) {
  static std::map<MultiDegree, std::vector<JTerm>> memo;
  auto it = memo.find(bound);
  if (it != memo.end()) return it->second;
  std::vector<JTerm> all;
  std::vector<int> cur(bound.counts().size(), 0);
  auto next_sub = [&](std::vector<int>& v) {
    size_t i = v.size();
    while (i > 0) {
      --i;
      if (v[i] < bound.counts()[i]) {
        ++v[i];
        std::fill(v.begin() + i + 1, v.end(), 0);
        return true;
      }
    }
    return false;
  };
  do {
    MultiDegree e{cur};
    if (e.total() >= 1) {
      const auto& t = enumerate_jterms(e);
      all.insert(all.end(), t.begin(), t.end());
    }
  } while (next_sub(cur));
  std::sort(all.begin(), all.end());
  return memo.emplace(bound, std::move(all)).first->second;
}

}  // namespace

MultilinearForm multilinearize(const JPoly& f) {
  if (f.is_zero() || !f.homogeneous())
    throw Error(ErrorCode::NotHomogeneous,
                "multilinearize needs a nonzero multihomogeneous polynomial");
  MultilinearForm m;
  m.source_degree = f.multidegree();
  int width = m.source_degree.width();
  int next = width;
  m.slots.resize(static_cast<size_t>(width));
  for (int g = 0; g < width; ++g)
    for (int j = 0; j < m.source_degree.count(g); ++j)
      m.slots[g].push_back(next++);

  for (const auto& [t, c] : f.terms()) {
    std::vector<JTerm> leaves;
    collect_leaf_positions(t, leaves);
    // Per generator, all bijections of its leaf occurrences onto its slots.
    std::vector<std::vector<Gen>> perms(static_cast<size_t>(width));
    for (int g = 0; g < width; ++g) perms[g] = m.slots[g];
    auto emit = [&]() {
      std::vector<int> used(static_cast<size_t>(width), 0);
      std::vector<JTerm> repl;
      repl.reserve(leaves.size());
      for (JTerm leaf : leaves) {
        Gen g = leaf.gen();
        repl.push_back(JTerm::leaf(perms[g][used[g]++]));
      }
      size_t cursor = 0;
      m.form.add_term(rebuild_with_leaves(t, repl, cursor), c);
    };
    // Odometer over the per-generator permutation sets.
    std::vector<std::vector<Gen>> state = perms;
    auto advance = [&](int g) -> bool {
      return std::next_permutation(state[g].begin(), state[g].end());
    };
    std::vector<int> active;
    for (int g = 0; g < width; ++g)
      if (state[g].size() > 1) active.push_back(g);
    while (true) {
      perms = state;
      emit();
      int i = 0;
      while (i < static_cast<int>(active.size()) && !advance(active[i])) ++i;
      if (i == static_cast<int>(active.size())) break;
    }
  }
  return m;
}

JPoly restitute(const MultilinearForm& m) {
  int width = m.source_degree.width();
  std::vector<Gen> back;
  for (int g = 0; g < width; ++g)
    for (Gen s : m.slots[g]) {
      if (static_cast<size_t>(s) >= back.size()) back.resize(s + 1, -1);
      back[s] = g;
    }
  JPoly out;
  for (const auto& [t, c] : m.form.terms()) {
    std::vector<JTerm> leaves;
    collect_leaf_positions(t, leaves);
    std::vector<JTerm> repl;
    repl.reserve(leaves.size());
    for (JTerm leaf : leaves) repl.push_back(JTerm::leaf(back[leaf.gen()]));
    size_t cursor = 0;
    out.add_term(rebuild_with_leaves(t, repl, cursor), c);
  }
  return out;
}

std::vector<JPoly> t_instances(const JPoly& gen, const MultiDegree& e,
                               size_t max_count) {
  if (gen.is_zero() || !gen.homogeneous())
    throw Error(ErrorCode::NotHomogeneous,
                "t_instances needs a nonzero multihomogeneous generator");
  MultiDegree src = gen.multidegree();
  int width = src.width();
  int total_slots = src.total();
  if (e.total() < total_slots) return {};

  // Enumerate per-variable nondecreasing monomial tuples whose multidegrees
  // sum to e, then evaluate the polarized substitution for each.
  const std::vector<JTerm>& pool = monomials_upto(e);

  struct GroupPick {
    std::vector<JTerm> mons;  // one per slot of this variable, nondecreasing
  };
  std::vector<std::vector<JTerm>> assignment(static_cast<size_t>(width));
  std::vector<JPoly> out;

  // Precompute leaf positions per generator term.
  struct TermInfo {
    JTerm t;
    Rat c;
    std::vector<JTerm> leaves;
  };
  std::vector<TermInfo> terms;
  for (const auto& [t, c] : gen.terms()) {
    TermInfo info{t, c, {}};
    collect_leaf_positions(t, info.leaves);
    terms.push_back(std::move(info));
  }

  auto emit_instance = [&]() {
    // Automorphism factor: product over variables of multiplicity
    // factorials of the assigned multiset, so the instance equals the
    // multilinear form evaluated slotwise.
    mpz_class aut = 1;
    for (int g = 0; g < width; ++g) {
      const auto& ms = assignment[g];
      size_t i = 0;
      while (i < ms.size()) {
        size_t j = i;
        while (j < ms.size() && ms[j] == ms[i]) ++j;
        aut *= factorial(static_cast<int>(j - i));
        i = j;
      }
    }
    JPoly inst;
    for (const auto& info : terms) {
      std::vector<JTerm> arrangement;
      std::vector<std::vector<JTerm>> per_gen(static_cast<size_t>(width));
      for (int g = 0; g < width; ++g) per_gen[g] = assignment[g];
      // Sum over distinct multiset permutations per variable.
      std::vector<int> active;
      for (int g = 0; g < width; ++g)
        if (per_gen[g].size() > 1) active.push_back(g);
      while (true) {
        std::vector<int> used(static_cast<size_t>(width), 0);
        std::vector<JTerm> repl;
        repl.reserve(info.leaves.size());
        for (JTerm leaf : info.leaves) {
          Gen g = leaf.gen();
          repl.push_back(per_gen[g][used[g]++]);
        }
        size_t cursor = 0;
        inst.add_term(rebuild_with_leaves(info.t, repl, cursor),
                      info.c * Rat(aut));
        int i = 0;
        while (i < static_cast<int>(active.size()) &&
               !std::next_permutation(per_gen[active[i]].begin(),
                                      per_gen[active[i]].end()))
          ++i;
        if (i == static_cast<int>(active.size())) break;
      }
    }
    if (!inst.is_zero()) {
      if (out.size() >= max_count)
        throw Error(ErrorCode::ResourceCap,
                    "t-instance cap " + std::to_string(max_count) +
                        " exceeded at " + e.str());
      out.push_back(std::move(inst));
    }
  };

  // Recursive choice of monomials, variable by variable, slot by slot.
  auto pick = [&](auto&& self, int g, int slot, size_t min_index,
                  const MultiDegree& used) -> void {
    if (g == width) {
      if (used == e) emit_instance();
      return;
    }
    int slots_here = src.count(g);
    if (slot == slots_here) {
      self(self, g + 1, 0, 0, used);
      return;
    }
    int slots_left = 0;
    for (int g2 = g; g2 < width; ++g2) slots_left += src.count(g2);
    slots_left -= slot;
    for (size_t i = min_index; i < pool.size(); ++i) {
      MultiDegree next = used.plus(pool[i].multidegree());
      if (!next.leq(e)) continue;
      if (e.total() - next.total() < slots_left - 1) continue;
      assignment[g].push_back(pool[i]);
      self(self, g, slot + 1, i, next);
      assignment[g].pop_back();
    }
  };
  pick(pick, 0, 0, 0, MultiDegree{});
  return out;
}

TComponent t_component(ComponentContext& ctx, const std::vector<JPoly>& gens,
                       const MultiDegree& d) {
  const ComponentSpace& sp = ctx.space(d);
  size_t cap = ctx.options().max_rows;
  TComponent out;
  out.cert.degree = d;
  out.cert.ambient_dim = sp.quotient_dim();

  // Direct instances at d plus context-multiplied instances from below.
  for (const JPoly& g : gens) {
    MultiDegree src = g.multidegree();
    // Instances at every e <= d reachable from the generator, then monomial
    // contexts one multiplication at a time. Memoized per multidegree.
    std::map<MultiDegree, std::vector<JPoly>> level;
    auto rows_at = [&](auto&& self, const MultiDegree& e)
        -> const std::vector<JPoly>& {
      auto it = level.find(e);
      if (it != level.end()) return it->second;
      std::vector<JPoly> rows = t_instances(g, e, cap);
      std::vector<MultiDegree> subs;
      {
        std::vector<int> cur(e.counts().size(), 0);
        bool more = true;
        while (more) {
          subs.push_back(MultiDegree(cur));
          size_t i = cur.size();
          more = false;
          while (i > 0) {
            --i;
            if (cur[i] < e.counts()[i]) {
              ++cur[i];
              std::fill(cur.begin() + i + 1, cur.end(), 0);
              more = true;
              break;
            }
          }
        }
      }
      for (const MultiDegree& e2 : subs) {
        if (e2 == e || e2.total() < src.total()) continue;
        MultiDegree rest = e.minus(e2);
        if (rest.total() < 1) continue;
        const auto& lower = self(self, e2);
        for (const JPoly& r : lower)
          for (JTerm m : enumerate_jterms(rest)) {
            if (rows.size() >= cap)
              throw Error(ErrorCode::ResourceCap,
                          "t-instance cap exceeded at " + e.str());
            rows.push_back(jmul(r, JPoly::term(m)));
          }
      }
      return level.emplace(e, std::move(rows)).first->second;
    };
    const auto& rows = rows_at(rows_at, d);
    out.instances.insert(out.instances.end(), rows.begin(), rows.end());
  }

  for (const JPoly& inst : out.instances)
    out.instance_coords.push_back(sp.reduce(inst));

  ExactRref rref(static_cast<int>(sp.basis_size()));
  for (const auto& v : out.instance_coords) rref.add_row(v);
  rref.finalize();
  out.cert.dim = rref.rank();
  for (const auto& row : rref.rows()) out.cert.vectors.push_back(row);
  return out;
}

TMembership t_membership(ComponentContext& ctx, const JPoly& f,
                         const std::vector<JPoly>& gens) {
  if (f.is_zero() || !f.homogeneous())
    throw Error(ErrorCode::NotHomogeneous,
                "t_membership needs a nonzero multihomogeneous polynomial");
  MultiDegree d = f.multidegree();
  const ComponentSpace& sp = ctx.space(d);
  TComponent tc = t_component(ctx, gens, d);

  // Augmented elimination: coordinate columns first, one tag column per
  // instance, so the residue's tag part carries the combination.
  int ncols = static_cast<int>(sp.basis_size());
  int k = static_cast<int>(tc.instances.size());
  ExactRref aug(ncols + k);
  for (int i = 0; i < k; ++i) {
    SparseVecQ row = tc.instance_coords[i];
    row.emplace_back(ncols + i, Rat(1));
    aug.add_row(row);
  }
  aug.finalize();

  SparseVecQ target = sp.reduce(f);
  SparseVecQ residue = aug.reduce(target);

  TMembership out;
  out.member = true;
  for (const auto& [col, val] : residue)
    if (col < ncols) {
      out.member = false;
      break;
    }
  if (!out.member) return out;

  for (const auto& [col, val] : residue)
    out.coefficients.emplace_back(static_cast<size_t>(col - ncols), -val);

  // Substitution re-check: the certified combination must reproduce f in the
  // quotient exactly.
  JPoly combo;
  for (const auto& [idx, c] : out.coefficients)
    combo = combo + tc.instances[idx].scaled(c);
  out.verified = ctx.is_zero_in_J(f - combo);
  return out;
}

}  // namespace jordanlab
