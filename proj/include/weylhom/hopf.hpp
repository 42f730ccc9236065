#pragma once

#include <algorithm>
#include <vector>

#include "weylhom/bases.hpp"
#include "weylhom/linalg.hpp"

namespace weylhom {

namespace detail {

// All e with 0 <= e_i <= cap_i, sum(e) = s, in descending lex order.
template <class F>
void for_each_bounded(const ExponentVector& cap, int s, F&& f) {
  if (s < 0) return;
  ExponentVector cur(cap.size(), 0);
  auto rec = [&](auto&& self, std::size_t pos, int rem) -> void {
    if (pos == cap.size()) {
      if (rem == 0) f(cur);
      return;
    }
    int hi = std::min(cap[pos], rem);
    for (int v = hi; v >= 0; --v) {
      cur[pos] = v;
      self(self, pos + 1, rem - v);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, s);
}

// All t-element subsets of the sorted list v (as sorted lists), lex order.
template <class F>
void for_each_subset(const std::vector<int>& v, int t, F&& f) {
  if (t < 0 || t > static_cast<int>(v.size())) return;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(chosen.size()) == t) {
      f(chosen);
      return;
    }
    std::size_t need = t - chosen.size();
    for (std::size_t i = from; i + need <= v.size(); ++i) {
      chosen.push_back(v[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
}

inline std::vector<int> sorted_difference(const std::vector<int>& v,
                                          const std::vector<int>& sub) {
  std::vector<int> out;
  std::set_difference(v.begin(), v.end(), sub.begin(), sub.end(), std::back_inserter(out));
  return out;
}

}  // namespace detail

// Sign of the shuffle merging sorted lists A and B: parity of
// #{(x,y) in A×B : x > y}.
inline int shuffle_sign(const std::vector<int>& A, const std::vector<int>& B) {
  int inv = 0;
  for (int x : A)
    for (int y : B)
      if (x > y) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

inline std::uint32_t sign_to_fp(int sign, std::uint32_t p) { return sign > 0 ? 1 : p - 1; }

inline TensorWord pair_word(AlgebraKind k, int n, int a, int b) {
  return TensorWord{n, {{k, a}, {k, b}}};
}

inline TensorWord single_word(AlgebraKind k, int n, int a) { return TensorWord{n, {{k, a}}}; }

// Multiplication A_a ⊗ A_b → A_{a+b}.  Divided powers pick up the
// binomial ∏ binom(e_i+f_i, e_i); exterior monomials merge with the
// shuffle sign and vanish on overlap.
inline FpMatrix mul_matrix(AlgebraKind kind, int n, int a, int b, Prime p) {
  if (a < 0 || b < 0 || n < 1) throw std::invalid_argument("mul_matrix: bad degrees");
  TensorIndexer src(pair_word(kind, n, a, b));
  TensorIndexer dst(single_word(kind, n, a + b));
  FpMatrix m(dst.size(), src.size(), p);
  for (Index col = 0; col < src.size(); ++col) {
    auto tup = src.unflatten(col);
    if (kind == AlgebraKind::divided) {
      const auto& e = src.divided_factor(0)[tup[0]];
      const auto& f = src.divided_factor(1)[tup[1]];
      std::uint32_t coeff = 1;
      ExponentVector g(n);
      for (int i = 0; i < n && coeff; ++i) {
        g[i] = e[i] + f[i];
        coeff = fp_mul(coeff, binom_mod_p(p, g[i], e[i]).value, p.value());
      }
      if (coeff) m.add(dst.divided_pos(0, g), col, coeff);
    } else {
      const auto& S = src.exterior_factor(0)[tup[0]].indices;
      const auto& T = src.exterior_factor(1)[tup[1]].indices;
      std::vector<int> u;
      std::merge(S.begin(), S.end(), T.begin(), T.end(), std::back_inserter(u));
      if (std::adjacent_find(u.begin(), u.end()) != u.end()) continue;  // overlap
      m.add(dst.exterior_pos(0, u), col, sign_to_fp(shuffle_sign(S, T), p.value()));
    }
  }
  return m;
}

// Component A_{a+b} → A_a ⊗ A_b of comultiplication.  Divided splits
// carry coefficient 1; exterior splits carry the shuffle sign.
inline FpMatrix comul_matrix(AlgebraKind kind, int n, int a, int b, Prime p) {
  if (a < 0 || b < 0 || n < 1) throw std::invalid_argument("comul_matrix: bad degrees");
  TensorIndexer src(single_word(kind, n, a + b));
  TensorIndexer dst(pair_word(kind, n, a, b));
  FpMatrix m(dst.size(), src.size(), p);
  for (Index col = 0; col < src.size(); ++col) {
    if (kind == AlgebraKind::divided) {
      const auto& g = src.divided_factor(0)[col];
      detail::for_each_bounded(g, a, [&](const ExponentVector& e) {
        ExponentVector f(n);
        for (int i = 0; i < n; ++i) f[i] = g[i] - e[i];
        m.add(dst.flatten({dst.divided_pos(0, e), dst.divided_pos(1, f)}), col, 1);
      });
    } else {
      const auto& S = src.exterior_factor(0)[col].indices;
      detail::for_each_subset(S, a, [&](const std::vector<int>& s1) {
        auto s2 = detail::sorted_difference(S, s1);
        m.add(dst.flatten({dst.exterior_pos(0, s1), dst.exterior_pos(1, s2)}), col,
              sign_to_fp(shuffle_sign(s1, s2), p.value()));
      });
    }
  }
  return m;
}

// The raising map A_a ⊗ A_b → A_{a+t} ⊗ A_{b-t}: split t out of the
// second factor, multiply it into the first.  Degree-negative targets
// are the zero space, hence a 0-row matrix.
inline FpMatrix partial_t_matrix(AlgebraKind kind, int n, int a, int b, int t, Prime p) {
  if (a < 0 || b < 0 || t < 0 || n < 1)
    throw std::invalid_argument("partial_t_matrix: bad degrees");
  TensorIndexer src(pair_word(kind, n, a, b));
  if (b - t < 0) return FpMatrix(0, src.size(), p);
  TensorIndexer dst(pair_word(kind, n, a + t, b - t));
  FpMatrix m(dst.size(), src.size(), p);
  for (Index col = 0; col < src.size(); ++col) {
    auto tup = src.unflatten(col);
    if (kind == AlgebraKind::divided) {
      const auto& x = src.divided_factor(0)[tup[0]];
      const auto& y = src.divided_factor(1)[tup[1]];
      detail::for_each_bounded(y, t, [&](const ExponentVector& y1) {
        std::uint32_t coeff = 1;
        ExponentVector xt(n), y2(n);
        for (int i = 0; i < n; ++i) {
          xt[i] = x[i] + y1[i];
          y2[i] = y[i] - y1[i];
          if (coeff) coeff = fp_mul(coeff, binom_mod_p(p, xt[i], y1[i]).value, p.value());
        }
        if (coeff)
          m.add(dst.flatten({dst.divided_pos(0, xt), dst.divided_pos(1, y2)}), col, coeff);
      });
    } else {
      const auto& S = src.exterior_factor(0)[tup[0]].indices;
      const auto& T = src.exterior_factor(1)[tup[1]].indices;
      detail::for_each_subset(T, t, [&](const std::vector<int>& t1) {
        std::vector<int> inter;
        std::set_intersection(S.begin(), S.end(), t1.begin(), t1.end(),
                              std::back_inserter(inter));
        if (!inter.empty()) return;
        auto t2 = detail::sorted_difference(T, t1);
        int sign = shuffle_sign(t1, t2) * shuffle_sign(S, t1);
        std::vector<int> u;
        std::merge(S.begin(), S.end(), t1.begin(), t1.end(), std::back_inserter(u));
        m.add(dst.flatten({dst.exterior_pos(0, u), dst.exterior_pos(1, t2)}), col,
              sign_to_fp(sign, p.value()));
      });
    }
  }
  return m;
}

}  // namespace weylhom
