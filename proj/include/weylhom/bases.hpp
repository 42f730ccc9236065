#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "weylhom/arith.hpp"
#include "weylhom/linalg.hpp"

namespace weylhom {

// Exponent vector of a divided-power monomial; doubles as a torus weight.
using ExponentVector = std::vector<int>;

enum class AlgebraKind { divided, exterior };

// Strictly increasing subset of [1, n]: a basis monomial of the degree-a
// exterior power.
struct ExteriorMask {
  std::vector<int> indices;
  friend bool operator==(const ExteriorMask&, const ExteriorMask&) = default;
  friend auto operator<=>(const ExteriorMask&, const ExteriorMask&) = default;
};

struct Partition {
  std::vector<int> parts;

  bool is_valid() const {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] < 0) return false;
      if (i > 0 && parts[i] > parts[i - 1]) return false;
    }
    return true;
  }
  std::vector<int> normalized() const {
    std::vector<int> q = parts;
    while (!q.empty() && q.back() == 0) q.pop_back();
    return q;
  }
  int sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int part(std::size_t i) const { return i < parts.size() ? parts[i] : 0; }

  friend bool operator==(const Partition& x, const Partition& y) {
    return x.normalized() == y.normalized();
  }
  friend bool operator<(const Partition& x, const Partition& y) {
    return x.normalized() < y.normalized();
  }
};

inline Partition conjugate_partition(const Partition& lambda) {
  auto q = lambda.normalized();
  Partition out;
  if (q.empty()) return out;
  out.parts.reserve(q[0]);
  for (int i = 0; i < q[0]; ++i) {
    int count = 0;
    for (int part : q)
      if (part > i) ++count;
    out.parts.push_back(count);
  }
  return out;
}

inline Index divided_dim(int n, int a) {
  if (a < 0) return 0;
  return binom_exact(static_cast<unsigned long>(n + a - 1), n - 1).get_ui();
}

inline Index exterior_dim(int n, int a) {
  if (a < 0 || a > n) return 0;
  return binom_exact(static_cast<unsigned long>(n), a).get_ui();
}

// All compositions of a into n parts, lexicographically descending:
// (a,0,…,0) first, (0,…,0,a) last.
inline std::vector<ExponentVector> divided_basis(int n, int a) {
  std::vector<ExponentVector> out;
  if (n <= 0 || a < 0) return out;
  ExponentVector cur(n, 0);
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == n - 1) {
      cur[pos] = rem;
      out.push_back(cur);
      return;
    }
    for (int v = rem; v >= 0; --v) {
      cur[pos] = v;
      self(self, pos + 1, rem - v);
    }
  };
  rec(rec, 0, a);
  return out;
}

// All strictly increasing a-subsets of [1, n], lexicographically
// ascending.  Empty when a > n: the space is zero.
inline std::vector<ExteriorMask> exterior_basis(int n, int a) {
  std::vector<ExteriorMask> out;
  if (n < 0 || a < 0 || a > n) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == a) {
      out.push_back(ExteriorMask{cur});
      return;
    }
    int need = a - static_cast<int>(cur.size());
    for (int v = next; v <= n - need + 1; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

inline ExponentVector mask_weight(const ExteriorMask& m, int n) {
  ExponentVector w(n, 0);
  for (int i : m.indices) w[i - 1] = 1;
  return w;
}

struct TensorWord {
  struct Factor {
    AlgebraKind kind;
    int degree;
  };
  int n = 1;
  std::vector<Factor> factors;
};

// Indexed basis of a tensor word with weight lookup.  The flat index is
// the lexicographic product of the factor orderings, first factor most
// significant.
class TensorIndexer {
 public:
  explicit TensorIndexer(TensorWord word) : word_(std::move(word)) {
    fd_.resize(word_.factors.size());
    size_ = 1;
    for (std::size_t f = 0; f < word_.factors.size(); ++f) {
      auto& d = fd_[f];
      const auto& fac = word_.factors[f];
      if (fac.kind == AlgebraKind::divided) {
        d.dbasis = divided_basis(word_.n, fac.degree);
        for (Index i = 0; i < d.dbasis.size(); ++i) {
          d.dpos[d.dbasis[i]] = i;
          d.weights.push_back(d.dbasis[i]);
        }
      } else {
        d.ebasis = exterior_basis(word_.n, fac.degree);
        for (Index i = 0; i < d.ebasis.size(); ++i) {
          d.epos[d.ebasis[i].indices] = i;
          d.weights.push_back(mask_weight(d.ebasis[i], word_.n));
        }
      }
      d.dim = d.weights.size();
      size_ *= d.dim;
    }
    stride_.assign(word_.factors.size(), 1);
    for (std::size_t f = word_.factors.size(); f-- > 1;)
      stride_[f - 1] = stride_[f] * fd_[f].dim;
  }

  const TensorWord& word() const { return word_; }
  Index size() const { return size_; }
  std::size_t factor_count() const { return fd_.size(); }
  Index factor_dim(std::size_t f) const { return fd_.at(f).dim; }

  const std::vector<ExponentVector>& divided_factor(std::size_t f) const {
    require_kind(f, AlgebraKind::divided);
    return fd_[f].dbasis;
  }
  const std::vector<ExteriorMask>& exterior_factor(std::size_t f) const {
    require_kind(f, AlgebraKind::exterior);
    return fd_[f].ebasis;
  }
  Index divided_pos(std::size_t f, const ExponentVector& e) const {
    require_kind(f, AlgebraKind::divided);
    return fd_[f].dpos.at(e);
  }
  Index exterior_pos(std::size_t f, const std::vector<int>& mask) const {
    require_kind(f, AlgebraKind::exterior);
    return fd_[f].epos.at(mask);
  }

  std::vector<Index> unflatten(Index idx) const {
    std::vector<Index> t(fd_.size());
    for (std::size_t f = 0; f < fd_.size(); ++f) {
      t[f] = idx / stride_[f];
      idx %= stride_[f];
    }
    return t;
  }
  Index flatten(const std::vector<Index>& t) const {
    Index idx = 0;
    for (std::size_t f = 0; f < fd_.size(); ++f) idx += t[f] * stride_[f];
    return idx;
  }

  const ExponentVector& factor_weight(std::size_t f, Index i) const {
    return fd_.at(f).weights.at(i);
  }
  ExponentVector weight(Index idx) const {
    ExponentVector w(word_.n, 0);
    auto t = unflatten(idx);
    for (std::size_t f = 0; f < fd_.size(); ++f) {
      const auto& fw = fd_[f].weights[t[f]];
      for (int i = 0; i < word_.n; ++i) w[i] += fw[i];
    }
    return w;
  }

 private:
  void require_kind(std::size_t f, AlgebraKind k) const {
    if (word_.factors.at(f).kind != k)
      throw std::invalid_argument("TensorIndexer: factor kind mismatch");
  }
  struct FactorData {
    std::vector<ExponentVector> dbasis;
    std::map<ExponentVector, Index> dpos;
    std::vector<ExteriorMask> ebasis;
    std::map<std::vector<int>, Index> epos;
    std::vector<ExponentVector> weights;
    Index dim = 0;
  };
  TensorWord word_;
  std::vector<FactorData> fd_;
  std::vector<Index> stride_;
  Index size_ = 0;
};

// Two-row semistandard tableau: rows weakly increase, the B leading
// columns strictly increase.
struct Tableau {
  Partition shape;
  std::vector<int> row1, row2;
};

inline std::vector<Tableau> ssyt_enumerate(int a, int b, int n) {
  std::vector<Tableau> out;
  if (b < 0 || a < b || n <= 0) return out;
  auto expand = [](const ExponentVector& e) {
    std::vector<int> row;
    for (std::size_t i = 0; i < e.size(); ++i) row.insert(row.end(), e[i], static_cast<int>(i) + 1);
    return row;
  };
  for (const auto& e1 : divided_basis(n, a)) {
    auto r1 = expand(e1);
    for (const auto& e2 : divided_basis(n, b)) {
      auto r2 = expand(e2);
      bool ok = true;
      for (int i = 0; i < b && ok; ++i) ok = r2[i] > r1[i];
      if (ok) out.push_back(Tableau{Partition{{a, b}}, r1, r2});
    }
  }
  return out;
}

inline long long ssyt_count(const Partition& shape, int n) {
  auto q = shape.normalized();
  if (q.size() > 2) throw std::invalid_argument("ssyt_count: more than two rows");
  if (!shape.is_valid()) return 0;
  int a = q.empty() ? 0 : q[0];
  int b = q.size() < 2 ? 0 : q[1];
  if (b == 0) return static_cast<long long>(divided_dim(n, a));
  return static_cast<long long>(ssyt_enumerate(a, b, n).size());
}

}  // namespace weylhom
