#pragma once

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <vector>

#include "weylhom/bases.hpp"

namespace weylhom {

struct NonSymmetricError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Integer-coefficient polynomial in n variables, keyed by exponent
// vector.  Characters and Schur functions live here; nothing mod p.
struct SymPolyInt {
  int n = 1;
  std::map<ExponentVector, long long> coeffs;

  SymPolyInt() = default;
  explicit SymPolyInt(int nvars) : n(nvars) {}

  static SymPolyInt one(int nvars) {
    SymPolyInt f(nvars);
    f.coeffs[ExponentVector(nvars, 0)] = 1;
    return f;
  }

  bool is_zero() const { return coeffs.empty(); }

  long long coeff(const ExponentVector& e) const {
    auto it = coeffs.find(e);
    return it == coeffs.end() ? 0 : it->second;
  }

  void add_term(const ExponentVector& e, long long c) {
    if (static_cast<int>(e.size()) != n)
      throw std::invalid_argument("SymPolyInt: exponent length mismatch");
    if (c == 0) return;
    auto [it, inserted] = coeffs.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs.erase(it);
    }
  }

  friend SymPolyInt operator+(const SymPolyInt& a, const SymPolyInt& b) {
    if (a.n != b.n) throw std::invalid_argument("SymPolyInt: variable count mismatch");
    SymPolyInt out = a;
    for (const auto& [e, c] : b.coeffs) out.add_term(e, c);
    return out;
  }
  friend SymPolyInt operator-(const SymPolyInt& a, const SymPolyInt& b) {
    return a + b.scaled(-1);
  }
  friend SymPolyInt operator*(const SymPolyInt& a, const SymPolyInt& b) {
    if (a.n != b.n) throw std::invalid_argument("SymPolyInt: variable count mismatch");
    SymPolyInt out(a.n);
    for (const auto& [ea, ca] : a.coeffs)
      for (const auto& [eb, cb] : b.coeffs) {
        ExponentVector e(a.n);
        for (int i = 0; i < a.n; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  SymPolyInt scaled(long long c) const {
    SymPolyInt out(n);
    if (c == 0) return out;
    for (const auto& [e, v] : coeffs) out.coeffs[e] = v * c;
    return out;
  }

  // Invariance under adjacent transpositions generates the full
  // symmetric group.
  bool is_symmetric() const {
    for (int i = 0; i + 1 < n; ++i)
      for (const auto& [e, c] : coeffs) {
        ExponentVector s = e;
        std::swap(s[i], s[i + 1]);
        if (coeff(s) != c) return false;
      }
    return true;
  }

  long long eval_ones() const {
    long long total = 0;
    for (const auto& [e, c] : coeffs) total += c;
    return total;
  }

  friend bool operator==(const SymPolyInt& a, const SymPolyInt& b) {
    return a.n == b.n && a.coeffs == b.coeffs;
  }
};

// k-th complete homogeneous symmetric polynomial.
inline SymPolyInt complete_h(int k, int n) {
  if (k < 0) return SymPolyInt(n);
  SymPolyInt f(n);
  for (const auto& e : divided_basis(n, k)) f.coeffs[e] = 1;
  return f;
}

// k-th elementary symmetric polynomial.
inline SymPolyInt elementary_e(int k, int n) {
  SymPolyInt f(n);
  for (const auto& m : exterior_basis(n, k)) f.coeffs[mask_weight(m, n)] = 1;
  return f;
}

// Schur polynomial as the weight sum over semistandard tableaux of the
// given shape; zero when the shape has more than n rows.
inline SymPolyInt schur_poly(const Partition& lambda, int n) {
  if (!lambda.is_valid()) throw std::invalid_argument("schur_poly: not a partition");
  auto q = lambda.normalized();
  SymPolyInt f(n);
  if (static_cast<int>(q.size()) > n) return f;
  if (q.empty()) return SymPolyInt::one(n);

  std::vector<std::vector<int>> rows(q.size());
  ExponentVector wt(n, 0);
  auto fill_row = [&](auto&& self, std::size_t r) -> void {
    if (r == q.size()) {
      f.add_term(wt, 1);
      return;
    }
    rows[r].assign(q[r], 0);
    auto place = [&](auto&& inner, int j) -> void {
      if (j == q[r]) {
        self(self, r + 1);
        return;
      }
      int lo = j > 0 ? rows[r][j - 1] : 1;                       // weakly increasing row
      if (r > 0) lo = std::max(lo, rows[r - 1][j] + 1);          // strictly increasing column
      for (int v = lo; v <= n; ++v) {
        rows[r][j] = v;
        ++wt[v - 1];
        inner(inner, j + 1);
        --wt[v - 1];
      }
    };
    place(place, 0);
  };
  fill_row(fill_row, 0);
  return f;
}

// Substitute x_i -> x_i^p.
inline SymPolyInt power_substitute(const SymPolyInt& f, int p) {
  if (p < 1) throw std::invalid_argument("power_substitute: power must be >= 1");
  SymPolyInt out(f.n);
  for (const auto& [e, c] : f.coeffs) {
    ExponentVector pe(f.n);
    for (int i = 0; i < f.n; ++i) pe[i] = e[i] * p;
    out.coeffs[pe] = c;
  }
  return out;
}

// Expand a symmetric polynomial in the Schur basis by repeatedly
// stripping the lex-greatest dominant monomial.  Triangularity of Schur
// polynomials makes the leading weight strictly decrease, so this
// terminates.
inline std::map<Partition, long long> schur_expand(const SymPolyInt& f) {
  if (!f.is_symmetric()) throw NonSymmetricError("schur_expand: input is not symmetric");
  std::map<Partition, long long> out;
  SymPolyInt rem = f;
  std::size_t guard = 0;
  while (!rem.is_zero()) {
    if (++guard > 200000)
      throw std::logic_error("schur_expand: no progress — input was not symmetric?");
    const ExponentVector* lead = nullptr;
    for (const auto& [e, c] : rem.coeffs) {
      bool dominant = true;
      for (std::size_t i = 1; i < e.size(); ++i)
        if (e[i] > e[i - 1]) {
          dominant = false;
          break;
        }
      if (dominant && (!lead || *lead < e)) lead = &e;
    }
    if (!lead) throw std::logic_error("schur_expand: nonzero symmetric polynomial without dominant term");
    Partition lambda{*lead};
    long long c = rem.coeff(*lead);
    out[lambda] += c;
    rem = rem - schur_poly(lambda, f.n).scaled(c);
    if (out[lambda] == 0) out.erase(lambda);
  }
  return out;
}

inline bool verify_alternating_identity(int k, int n) {
  if (k < 0 || n < 1) throw std::invalid_argument("verify_alternating_identity: bad arguments");
  SymPolyInt lhs = power_substitute(complete_h(k, n), 2);
  SymPolyInt rhs(n);
  for (int j = 0; j <= k; ++j) {
    SymPolyInt s = schur_poly(Partition{{2 * k - j, j}}, n);
    rhs = rhs + (j % 2 == 0 ? s : s.scaled(-1));
  }
  return lhs == rhs;
}

}  // namespace weylhom
