#include "jordanlab/albert.hpp"

#include <map>

#include "jordanlab/error.hpp"

namespace jordanlab {

void Octonion::cd_mult(const Rat* a, const Rat* b, Rat* out, int n) {
  if (n == 1) {
    out[0] = a[0] * b[0];
    return;
  }
  int h = n / 2;
  auto conj_into = [h](const Rat* src, Rat* dst) {
    dst[0] = src[0];
    for (int i = 1; i < h; ++i) dst[i] = -src[i];
  };
  // (a1, a2)(b1, b2) = (a1 b1 - b2* a2, b2 a1 + a2 b1*)
  std::vector<Rat> b1c(h), b2c(h), u(h), v(h);
  conj_into(b, b1c.data());
  conj_into(b + h, b2c.data());
  cd_mult(a, b, u.data(), h);
  cd_mult(b2c.data(), a + h, v.data(), h);
  for (int i = 0; i < h; ++i) out[i] = u[i] - v[i];
  cd_mult(b + h, a, u.data(), h);
  cd_mult(a + h, b1c.data(), v.data(), h);
  for (int i = 0; i < h; ++i) out[h + i] = u[i] + v[i];
}

const Octonion::Table& Octonion::table() {
  static Table t = [] {
    Table out{};
    for (int i = 0; i < 8; ++i) {
      std::array<Rat, 8> a{};
      a[i] = 1;
      for (int j = 0; j < 8; ++j) {
        std::array<Rat, 8> b{};
        b[j] = 1;
        std::array<Rat, 8> prod{};
        cd_mult(a.data(), b.data(), prod.data(), 8);
        int idx = -1;
        int8_t sign = 0;
        for (int k = 0; k < 8; ++k) {
          if (rat_is_zero(prod[k])) continue;
          idx = k;
          sign = prod[k] > 0 ? 1 : -1;
        }
        out.index[i][j] = static_cast<uint8_t>(idx);
        out.sign[i][j] = sign;
      }
    }
    return out;
  }();
  return t;
}

Octonion Octonion::basis(int i) {
  Octonion o;
  o.c_[i] = 1;
  return o;
}

Octonion Octonion::scalar(const Rat& r) {
  Octonion o;
  o.c_[0] = r;
  return o;
}

Octonion Octonion::operator+(const Octonion& o) const {
  Octonion r;
  for (int i = 0; i < 8; ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

Octonion Octonion::operator-(const Octonion& o) const {
  Octonion r;
  for (int i = 0; i < 8; ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

Octonion Octonion::operator*(const Octonion& o) const {
  const Table& t = table();
  Octonion r;
  for (int i = 0; i < 8; ++i) {
    if (rat_is_zero(c_[i])) continue;
    for (int j = 0; j < 8; ++j) {
      if (rat_is_zero(o.c_[j])) continue;
      Rat v = c_[i] * o.c_[j];
      if (t.sign[i][j] < 0)
        r.c_[t.index[i][j]] -= v;
      else
        r.c_[t.index[i][j]] += v;
    }
  }
  return r;
}

Octonion Octonion::scaled(const Rat& s) const {
  Octonion r;
  for (int i = 0; i < 8; ++i) r.c_[i] = c_[i] * s;
  return r;
}

Octonion Octonion::conj() const {
  Octonion r = *this;
  for (int i = 1; i < 8; ++i) r.c_[i] = -r.c_[i];
  return r;
}

Rat Octonion::norm() const {
  Rat n = 0;
  for (int i = 0; i < 8; ++i) n += c_[i] * c_[i];
  return n;
}

bool Octonion::is_zero() const {
  for (int i = 0; i < 8; ++i)
    if (!rat_is_zero(c_[i])) return false;
  return true;
}

std::string Octonion::str() const {
  std::string s = "(";
  for (int i = 0; i < 8; ++i) {
    if (i) s += ",";
    s += rat_str(c_[i]);
  }
  return s + ")";
}

AlbertElement::AlbertElement() = default;

void AlbertElement::set_diag(int i, const Rat& r) {
  m_[i * 3 + i] = Octonion::scalar(r);
}

void AlbertElement::set_off(int i, int j, const Octonion& o) {
  m_[i * 3 + j] = o;
  m_[j * 3 + i] = o.conj();
}

AlbertElement AlbertElement::operator+(const AlbertElement& o) const {
  AlbertElement r;
  for (int i = 0; i < 9; ++i) r.m_[i] = m_[i] + o.m_[i];
  return r;
}

AlbertElement AlbertElement::operator-(const AlbertElement& o) const {
  AlbertElement r;
  for (int i = 0; i < 9; ++i) r.m_[i] = m_[i] - o.m_[i];
  return r;
}

AlbertElement AlbertElement::scaled(const Rat& s) const {
  AlbertElement r;
  for (int i = 0; i < 9; ++i) r.m_[i] = m_[i].scaled(s);
  return r;
}

AlbertElement AlbertElement::jordan(const AlbertElement& o) const {
  AlbertElement r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Octonion acc;
      for (int k = 0; k < 3; ++k)
        acc = acc + at(i, k) * o.at(k, j) + o.at(i, k) * at(k, j);
      r.m_[i * 3 + j] = acc.scaled(Rat(1, 2));
    }
  return r;
}

bool AlbertElement::is_zero() const {
  for (const auto& o : m_)
    if (!o.is_zero()) return false;
  return true;
}

std::string AlbertElement::str() const {
  std::string s = "[";
  for (int i = 0; i < 3; ++i) {
    if (i) s += "; ";
    for (int j = 0; j < 3; ++j) {
      if (j) s += " ";
      s += at(i, j).str();
    }
  }
  return s + "]";
}

SymMatrix::SymMatrix(int k) : k_(k), m_(static_cast<size_t>(k) * k, Rat(0)) {}

void SymMatrix::set(int i, int j, const Rat& r) {
  m_[i * k_ + j] = r;
  m_[j * k_ + i] = r;
}

SymMatrix SymMatrix::operator+(const SymMatrix& o) const {
  SymMatrix r(k_);
  for (size_t i = 0; i < m_.size(); ++i) r.m_[i] = m_[i] + o.m_[i];
  return r;
}

SymMatrix SymMatrix::operator-(const SymMatrix& o) const {
  SymMatrix r(k_);
  for (size_t i = 0; i < m_.size(); ++i) r.m_[i] = m_[i] - o.m_[i];
  return r;
}

SymMatrix SymMatrix::scaled(const Rat& s) const {
  SymMatrix r(k_);
  for (size_t i = 0; i < m_.size(); ++i) r.m_[i] = m_[i] * s;
  return r;
}

SymMatrix SymMatrix::jordan(const SymMatrix& o) const {
  SymMatrix r(k_);
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) {
      Rat acc = 0;
      for (int k = 0; k < k_; ++k)
        acc += at(i, k) * o.at(k, j) + o.at(i, k) * at(k, j);
      r.m_[i * k_ + j] = acc / 2;
    }
  return r;
}

bool SymMatrix::is_zero() const {
  for (const auto& v : m_)
    if (!rat_is_zero(v)) return false;
  return true;
}

std::string SymMatrix::str() const {
  std::string s = "[";
  for (int i = 0; i < k_; ++i) {
    if (i) s += "; ";
    for (int j = 0; j < k_; ++j) {
      if (j) s += " ";
      s += rat_str(at(i, j));
    }
  }
  return s + "]";
}

uint64_t SplitMix64::next() {
  uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

int SplitMix64::small_int() { return static_cast<int>(next() % 7) - 3; }

Octonion random_octonion(SplitMix64& rng) {
  Octonion o;
  for (int i = 0; i < 8; ++i) o[i] = rng.small_int();
  return o;
}

AlbertElement random_albert(SplitMix64& rng) {
  AlbertElement a;
  for (int i = 0; i < 3; ++i) a.set_diag(i, rng.small_int());
  a.set_off(0, 1, random_octonion(rng));
  a.set_off(0, 2, random_octonion(rng));
  a.set_off(1, 2, random_octonion(rng));
  return a;
}

SymMatrix random_sym(SplitMix64& rng, int k) {
  SymMatrix m(k);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) m.set(i, j, rng.small_int());
  return m;
}

template <typename E>
E evaluate(const JPoly& f, const std::vector<E>& point, E acc) {
  std::map<uint32_t, E> memo;
  auto eval_term = [&](auto&& self, JTerm t) -> const E& {
    auto it = memo.find(t.id());
    if (it != memo.end()) return it->second;
    if (t.is_leaf()) {
      Gen g = t.gen();
      if (g < 0 || static_cast<size_t>(g) >= point.size())
        throw Error(ErrorCode::MissingAssignment,
                    "no assignment for generator " + gen_name(g));
      return memo.emplace(t.id(), point[g]).first->second;
    }
    const E& l = self(self, t.left());
    const E& r = self(self, t.right());
    return memo.emplace(t.id(), l.jordan(r)).first->second;
  };
  for (const auto& [t, c] : f.terms())
    acc = acc + eval_term(eval_term, t).scaled(c);
  return acc;
}

template AlbertElement evaluate(const JPoly&, const std::vector<AlbertElement>&,
                                AlbertElement);
template SymMatrix evaluate(const JPoly&, const std::vector<SymMatrix>&,
                            SymMatrix);

}  // namespace jordanlab
