#include "jordanlab/component.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <set>

#include "jordanlab/cache.hpp"
#include "jordanlab/error.hpp"

namespace jordanlab {

namespace {

// All e with 0 <= e <= d componentwise, ascending lexicographically.
std::vector<MultiDegree> sub_multidegrees(const MultiDegree& d) {
  std::vector<MultiDegree> out;
  std::vector<int> cur(d.counts().size(), 0);
  while (true) {
    out.push_back(MultiDegree(cur));
    size_t i = cur.size();
    while (i > 0) {
      --i;
      if (cur[i] < d.counts()[i]) {
        ++cur[i];
        std::fill(cur.begin() + i + 1, cur.end(), 0);
        break;
      }
      if (i == 0) return out;
    }
    if (cur.size() == 0) return out;
  }
}

std::mutex g_enum_mu;
std::map<MultiDegree, std::vector<JTerm>> g_enum_memo;

}  // namespace

const std::vector<JTerm>& enumerate_jterms(const MultiDegree& d) {
  if (d.total() < 1)
    throw Error(ErrorCode::MalformedWord, "enumerate_jterms needs total >= 1");
  {
    std::lock_guard<std::mutex> lock(g_enum_mu);
    auto it = g_enum_memo.find(d);
    if (it != g_enum_memo.end()) return it->second;
  }
  std::vector<JTerm> result;
  if (d.total() == 1) {
    for (int g = 0; g < d.width(); ++g)
      if (d.count(g) == 1) result.push_back(JTerm::leaf(g));
  } else {
    std::set<JTerm> acc;
    for (const MultiDegree& e : sub_multidegrees(d)) {
      if (e.total() < 1 || e.total() >= d.total()) continue;
      const auto& left = enumerate_jterms(e);
      const auto& right = enumerate_jterms(d.minus(e));
      for (JTerm a : left)
        for (JTerm b : right)
          if (!(b < a)) acc.insert(JTerm::node(a, b));
    }
    result.assign(acc.begin(), acc.end());
  }
  std::lock_guard<std::mutex> lock(g_enum_mu);
  auto [it, fresh] = g_enum_memo.emplace(d, std::move(result));
  return it->second;
}

std::vector<Word> enumerate_words(const MultiDegree& d) {
  std::vector<Word> out;
  std::vector<int> remaining = d.counts();
  std::vector<Gen> cur;
  auto rec = [&](auto&& self) -> void {
    bool done = true;
    for (size_t g = 0; g < remaining.size(); ++g) {
      if (remaining[g] > 0) {
        done = false;
        --remaining[g];
        cur.push_back(static_cast<Gen>(g));
        self(self);
        cur.pop_back();
        ++remaining[g];
      }
    }
    if (done) out.push_back(Word(cur));
  };
  rec(rec);
  return out;
}

JPoly jordan_linearization(JTerm a1, JTerm a2, JTerm a3, JTerm b) {
  std::array<JTerm, 3> a{a1, a2, a3};
  JPoly r;
  for (int k = 0; k < 3; ++k) {
    int i = k == 0 ? 1 : 0;
    int j = k == 2 ? 1 : 2;
    JTerm ij = JTerm::node(a[i], a[j]);
    r.add_term(JTerm::node(JTerm::node(ij, b), a[k]), Rat(1));
    r.add_term(JTerm::node(ij, JTerm::node(b, a[k])), Rat(-1));
  }
  return r;
}

SparseVecQ ComponentSpace::coords(const JPoly& f) const {
  SparseVecQ v;
  size_t pos = 0;
  for (const auto& [t, c] : f.terms()) {
    while (pos < basis_.size() && basis_[pos] < t) ++pos;
    if (pos >= basis_.size() || !(basis_[pos] == t))
      throw Error(ErrorCode::MalformedWord,
                  "term " + t.str() + " is not in component " + degree_.str());
    v.emplace_back(static_cast<int>(pos), c);
  }
  return v;
}

JPoly ComponentSpace::from_coords(const SparseVecQ& v) const {
  JPoly f;
  for (const auto& [col, c] : v) f.add_term(basis_[col], c);
  return f;
}

SparseVecQ ComponentSpace::reduce(const JPoly& f) const {
  return rref_.reduce(coords(f));
}

ComponentContext::ComponentContext(ComponentOptions opts) : opts_(opts) {
  for (uint64_t p : opts_.primes)
    if (!is_probable_prime_u64(p))
      throw Error(ErrorCode::MalformedWord,
                  "elimination modulus " + std::to_string(p) + " is not prime");
}

const ComponentSpace& ComponentContext::space(const MultiDegree& d) {
  auto it = spaces_.find(d);
  if (it != spaces_.end()) return *it->second;
  auto sp = build(d);
  return *spaces_.emplace(d, std::move(sp)).first->second;
}

std::vector<SparseVecQ> ComponentContext::relation_rows(
    const MultiDegree& d, const ComponentSpace& target) {
  std::vector<SparseVecQ> rows;
  auto push_row = [&](const JPoly& p) {
    if (p.is_zero()) return;
    if (rows.size() >= opts_.max_rows)
      throw Error(ErrorCode::ResourceCap,
                  "relation row cap " + std::to_string(opts_.max_rows) +
                      " exceeded at " + d.str());
    rows.push_back(normalize_row(target.coords(p)));
  };

  // Products of lower-level relation bases with monomials. The reduced rows
  // of a sub-component span its slice of the T-ideal, so multiplying just
  // those by monomials reaches every ideal context at d.
  for (const MultiDegree& e : sub_multidegrees(d)) {
    if (e.total() < 4 || e == d) continue;
    const ComponentSpace& sub = space(e);
    MultiDegree rest = d.minus(e);
    const auto& mons = enumerate_jterms(rest);
    for (const SparseVecQ& row : sub.rref().rows()) {
      JPoly base = sub.from_coords(row);
      for (JTerm m : mons) push_row(jmul(base, JPoly::term(m)));
    }
  }

  // Substitution instances of the linearized Jordan identity landing at d.
  std::vector<MultiDegree> subs = sub_multidegrees(d);
  for (size_t i1 = 0; i1 < subs.size(); ++i1) {
    const MultiDegree& e1 = subs[i1];
    if (e1.total() < 1) continue;
    for (size_t i2 = i1; i2 < subs.size(); ++i2) {
      const MultiDegree& e2 = subs[i2];
      if (e2.total() < 1 || !e1.plus(e2).leq(d)) continue;
      for (size_t i3 = i2; i3 < subs.size(); ++i3) {
        const MultiDegree& e3 = subs[i3];
        if (e3.total() < 1) continue;
        MultiDegree e123 = e1.plus(e2).plus(e3);
        if (!e123.leq(d)) continue;
        MultiDegree e4 = d.minus(e123);
        if (e4.total() < 1) continue;
        const auto& T1 = enumerate_jterms(e1);
        const auto& T2 = enumerate_jterms(e2);
        const auto& T3 = enumerate_jterms(e3);
        const auto& T4 = enumerate_jterms(e4);
        for (JTerm t1 : T1)
          for (JTerm t2 : T2) {
            if (e1 == e2 && t2 < t1) continue;
            for (JTerm t3 : T3) {
              if (e2 == e3 && t3 < t2) continue;
              for (JTerm t4 : T4) {
                JPoly inst = jordan_linearization(t1, t2, t3, t4);
                if (opts_.check_relations && !gamma(inst).is_zero())
                  throw Error(ErrorCode::MalformedWord,
                              "jordan linearization instance not annihilated "
                              "by gamma");
                push_row(inst);
              }
            }
          }
      }
    }
  }
  return rows;
}

std::vector<SparseVecQ> ComponentContext::jordan_relations(
    const MultiDegree& d) {
  const ComponentSpace& sp = space(d);
  if (d.total() < 4) return {};
  return relation_rows(d, sp);
}

std::unique_ptr<ComponentSpace> ComponentContext::build(const MultiDegree& d) {
  auto sp = std::make_unique<ComponentSpace>();
  sp->degree_ = d;
  sp->basis_ = enumerate_jterms(d);
  if (sp->basis_.size() > opts_.max_cols)
    throw Error(ErrorCode::ResourceCap,
                "component " + d.str() + " has " +
                    std::to_string(sp->basis_.size()) +
                    " columns, cap is " + std::to_string(opts_.max_cols));
  sp->rref_ = ExactRref(static_cast<int>(sp->basis_.size()));

  if (d.total() >= 4) {
    if (!opts_.no_cache && !opts_.cache_dir.empty()) {
      if (auto cached = cache_load_component(opts_.cache_dir, d,
                                             sp->basis_.size())) {
        sp->rref_ = std::move(cached->rref);
        sp->prime_agreement_ = cached->prime_agreement;
        sp->free_cols_ = sp->rref_.free_cols();
        ++stats_.cache_hits;
        return sp;
      }
    }

    auto t0 = std::chrono::steady_clock::now();
    std::vector<SparseVecQ> rows = relation_rows(d, *sp);

    bool use_hint = opts_.modular_hint && sp->basis_.size() > 1000;
    std::vector<char> inserted(rows.size(), 0);
    if (use_hint) {
      ModRref hint(static_cast<int>(sp->basis_.size()), opts_.primes[0]);
      for (size_t i = 0; i < rows.size(); ++i) {
        bool bad = false;
        bool indep = hint.add_row(rows[i], &bad);
        if (indep || bad)
          if (sp->rref_.add_row(rows[i])) inserted[i] = 1;
      }
    } else {
      for (size_t i = 0; i < rows.size(); ++i)
        if (sp->rref_.add_row(rows[i])) inserted[i] = 1;
    }
    sp->rref_.finalize();

    // Every generated row must reduce to zero through the reduced basis;
    // rows the modular pass misjudged get inserted and the sweep restarts.
    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = 0; i < rows.size(); ++i) {
        if (inserted[i]) continue;
        if (!sp->rref_.reduce(rows[i]).empty()) {
          sp->rref_.add_row(rows[i]);
          inserted[i] = 1;
          sp->rref_.finalize();
          clean = false;
        }
      }
    }

    // Independent-prime agreement on the rank (the exact reduction above is
    // authoritative; this cross-checks the arithmetic).
    sp->prime_agreement_ = true;
    for (uint64_t p : {opts_.primes[1], opts_.primes[2]}) {
      ModRref check(static_cast<int>(sp->basis_.size()), p);
      size_t bad_rows = 0;
      for (const auto& r : rows) {
        bool bad = false;
        check.add_row(r, &bad);
        if (bad) ++bad_rows;
      }
      if (bad_rows == 0 && check.rank() != sp->rref_.rank())
        sp->prime_agreement_ = false;
    }

    auto t1 = std::chrono::steady_clock::now();
    ++stats_.builds;
    stats_.build_ms.emplace_back(
        d, std::chrono::duration<double, std::milli>(t1 - t0).count());

    if (!opts_.no_cache && !opts_.cache_dir.empty()) {
      cache_store_component(opts_.cache_dir, d, sp->basis_.size(), sp->rref_,
                            sp->prime_agreement_);
      ++stats_.cache_writes;
    }
  }

  sp->free_cols_ = sp->rref_.free_cols();
  return sp;
}

bool ComponentContext::is_zero_in_J(const JPoly& f, JPoly* witness) {
  for (const auto& [d, slice] : f.slices()) {
    const ComponentSpace& sp = space(d);
    SparseVecQ red = sp.reduce(slice);
    if (!red.empty()) {
      if (witness) *witness = sp.from_coords(red);
      return false;
    }
  }
  return true;
}

SubspaceCert ComponentContext::s_space(const MultiDegree& d) {
  const ComponentSpace& sp = space(d);
  SubspaceCert cert;
  cert.degree = d;
  cert.ambient_dim = sp.quotient_dim();

  const std::vector<int>& free_cols = sp.free_cols();
  size_t q = free_cols.size();
  if (q == 0) return cert;

  // gamma of each free-column basis term, indexed by associative word.
  std::vector<Word> words = enumerate_words(d);
  std::map<Word, int> word_index;
  for (size_t i = 0; i < words.size(); ++i)
    word_index[words[i]] = static_cast<int>(i);
  std::vector<std::map<int, Rat>> cols(q);
  for (size_t j = 0; j < q; ++j) {
    const AssocPoly& g = sp.basis()[free_cols[j]].gamma();
    for (const auto& [w, c] : g.terms()) cols[j][word_index.at(w)] = c;
  }

  ExactRref m(static_cast<int>(q));
  for (size_t wi = 0; wi < words.size(); ++wi) {
    SparseVecQ row;
    for (size_t j = 0; j < q; ++j) {
      auto it = cols[j].find(static_cast<int>(wi));
      if (it != cols[j].end()) row.emplace_back(static_cast<int>(j), it->second);
    }
    m.add_row(row);
  }
  m.finalize();

  for (const SparseVecQ& k : m.kernel_basis()) {
    SparseVecQ vec;
    for (const auto& [j, c] : k) vec.emplace_back(free_cols[j], c);
    // Exact certification: the kernel vector's gamma image must vanish.
    JPoly rep = sp.from_coords(vec);
    if (!gamma(rep).is_zero())
      throw Error(ErrorCode::MalformedWord,
                  "s_space kernel vector failed exact gamma verification");
    cert.vectors.push_back(std::move(vec));
  }
  cert.dim = cert.vectors.size();
  if (cert.dim != q - m.rank())
    throw Error(ErrorCode::MalformedWord,
                "s_space dimension mismatch between kernel and rank routes");
  return cert;
}

}  // namespace jordanlab
