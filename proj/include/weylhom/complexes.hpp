#pragma once

#include <string>
#include <vector>

#include "weylhom/modules.hpp"

namespace weylhom {

// The four complex families.  K and L alternate raising degrees d and
// p-d over Weyl resp. Schur modules; M and N are the characteristic-2
// companions for odd total degree, raising by 2 at every step.
enum class Family { K, L, M, N };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::K: return "K";
    case Family::L: return "L";
    case Family::M: return "M";
    default: return "N";
  }
}

inline AlgebraKind family_kind(Family f) {
  return f == Family::L ? AlgebraKind::exterior : AlgebraKind::divided;
}

struct ChainComplexRec {
  Family family;
  int r, d, n;
  Prime p;
  std::vector<Partition> shapes;          // degree 0 first
  std::vector<QuotientModule> terms;      // aligned with shapes
  std::vector<FpMatrix> diffs;            // diffs[i] : terms[i] -> terms[i-1]; diffs[0] empty
  int top_degree() const { return static_cast<int>(terms.size()) - 1; }
};

namespace detail {

inline Partition complex_shape(Family f, int r, int d, int p, int degree) {
  switch (f) {
    case Family::K:
    case Family::L: {
      int i = degree / 2;
      if (degree % 2 == 0) return Partition{{r - i * p, i * p}};
      return Partition{{r - i * p - d, i * p + d}};
    }
    case Family::M:
      return Partition{{r - 2 * degree, 2 * degree}};
    default:
      return Partition{{r - 2 * degree - 1, 2 * degree + 1}};
  }
}

// Raising degree of the differential leaving the given homological degree.
inline int complex_raise(Family f, int d, int p, int degree) {
  if (f == Family::M || f == Family::N) return 2;
  return degree % 2 == 1 ? d : p - d;
}

}  // namespace detail

inline ChainComplexRec build_complex(Family family, int r, int d, int n, Prime p) {
  if (n < 1) throw std::invalid_argument("build_complex: need n >= 1");
  if (r < 0) throw std::invalid_argument("build_complex: need r >= 0");
  const int pv = static_cast<int>(p.value());
  if (family == Family::K || family == Family::L) {
    if (d <= 0 || d >= pv)
      throw std::invalid_argument("families K and L require 0 < d < p");
    if ((r - d + 1) % pv != 0)
      throw std::invalid_argument("families K and L require r - d + 1 == 0 (mod p)");
  } else {
    if (pv != 2) throw std::invalid_argument("families M and N require p = 2");
    if (family == Family::M && r % 4 != 1)
      throw std::invalid_argument("family M requires r == 1 (mod 4)");
    if (family == Family::N && r % 4 != 3)
      throw std::invalid_argument("family N requires r == 3 (mod 4)");
    d = 2;  // raising degree is fixed for these families
  }

  ChainComplexRec c{family, r, d, n, p, {}, {}, {}};
  const AlgebraKind kind = family_kind(family);
  for (int degree = 0;; ++degree) {
    Partition shape = detail::complex_shape(family, r, d, pv, degree);
    if (!shape.is_valid()) break;
    c.shapes.push_back(shape);
    c.terms.push_back(build_module(kind, shape, n, p));
  }
  c.diffs.emplace_back(0, c.terms[0].dim, p);
  for (int j = 1; j <= c.top_degree(); ++j)
    c.diffs.push_back(
        induced_map(c.terms[j], c.terms[j - 1], detail::complex_raise(family, d, pv, j)));
  return c;
}

struct HomologyProfile {
  std::vector<Index> dims;            // homology dimension per degree
  std::vector<SymPolyInt> characters; // weight multiplicities per degree
  long long euler = 0;
};

namespace detail {

// Rank of a differential restricted to each weight block.  Legitimate
// because differentials are weight-preserving.
inline std::map<ExponentVector, Index> blocked_ranks(const FpMatrix& diff,
                                                     const QuotientModule& src,
                                                     const QuotientModule& dst) {
  std::map<ExponentVector, std::vector<Index>> scols, drows;
  for (Index k = 0; k < src.dim; ++k) scols[src.free_weights[k]].push_back(k);
  for (Index k = 0; k < dst.dim; ++k) drows[dst.free_weights[k]].push_back(k);

  std::vector<std::vector<std::pair<Index, std::uint32_t>>> by_col(diff.cols);
  for (const auto& [ij, v] : diff.entries) by_col[ij.second].emplace_back(ij.first, v);

  std::map<ExponentVector, Index> out;
  for (const auto& [w, cols] : scols) {
    auto rit = drows.find(w);
    if (rit == drows.end()) continue;  // no target block: the map is zero there
    const auto& rows = rit->second;
    // Built transposed (one local row per source column); rank is the same.
    std::vector<std::vector<std::uint32_t>> local(
        cols.size(), std::vector<std::uint32_t>(rows.size(), 0));
    bool any = false;
    for (std::size_t cj = 0; cj < cols.size(); ++cj)
      for (const auto& [row, v] : by_col[cols[cj]]) {
        auto pos = std::lower_bound(rows.begin(), rows.end(), row);
        if (pos == rows.end() || *pos != row)
          throw std::logic_error("blocked_ranks: differential does not preserve weight");
        local[cj][pos - rows.begin()] = v;
        any = true;
      }
    if (!any) continue;
    Index rk = detail::rref_dense(local, diff.p).size();
    if (rk) out[w] = rk;
  }
  return out;
}

}  // namespace detail

// Homology dimensions and characters, degree 0 first.  Dimensions are
// computed twice — once globally, once summed over weight blocks — and
// must agree; the Euler characteristic is likewise cross-checked.
inline HomologyProfile homology_profile(const ChainComplexRec& c) {
  const std::size_t len = c.terms.size();
  HomologyProfile out;

  for (std::size_t i = 0; i < len; ++i) {
    FpMatrix incoming =
        i + 1 < len ? c.diffs[i + 1] : FpMatrix(c.terms[i].dim, 0, c.p);
    out.dims.push_back(homology_dim(incoming, c.diffs[i]));
  }

  std::vector<std::map<ExponentVector, Index>> in_rank(len + 1);
  for (std::size_t j = 1; j < len; ++j)
    in_rank[j] = detail::blocked_ranks(c.diffs[j], c.terms[j], c.terms[j - 1]);

  for (std::size_t i = 0; i < len; ++i) {
    std::map<ExponentVector, Index> counts;
    for (const auto& w : c.terms[i].free_weights) ++counts[w];
    SymPolyInt ch(c.n);
    Index total = 0;
    for (const auto& [w, nw] : counts) {
      auto lookup = [&](const std::map<ExponentVector, Index>& m) {
        auto it = m.find(w);
        return it == m.end() ? Index{0} : it->second;
      };
      Index out_rank = i > 0 ? lookup(in_rank[i]) : 0;
      Index into = i + 1 < len ? lookup(in_rank[i + 1]) : 0;
      if (nw < out_rank + into)
        throw std::logic_error("homology_profile: negative block dimension");
      Index h = nw - out_rank - into;
      if (h) ch.add_term(w, static_cast<long long>(h));
      total += h;
    }
    if (total != out.dims[i])
      throw std::logic_error("homology_profile: blocked and global dimensions disagree");
    out.characters.push_back(std::move(ch));
  }

  long long euler_terms = 0, euler_homology = 0;
  for (std::size_t i = 0; i < len; ++i) {
    long long sign = i % 2 == 0 ? 1 : -1;
    euler_terms += sign * static_cast<long long>(c.terms[i].dim);
    euler_homology += sign * static_cast<long long>(out.dims[i]);
  }
  if (euler_terms != euler_homology)
    throw std::logic_error("homology_profile: Euler characteristic mismatch");
  out.euler = euler_homology;
  return out;
}

// For p = 2 the distinguished homology group is a Frobenius twist:
// H_0 of the K family has character h_{r/2} in squared variables, and
// the top homology of the L family has character e_{r/2} likewise.
inline bool twist_character_check(const ChainComplexRec& c) {
  if ((c.family != Family::K && c.family != Family::L) || c.p.value() != 2 || c.d != 1)
    throw std::invalid_argument("twist_character_check requires family K or L with p = 2, d = 1");
  const int half = c.r / 2;
  auto prof = homology_profile(c);
  const int degree = c.family == Family::K ? 0 : half;
  SymPolyInt expected = power_substitute(
      c.family == Family::K ? complete_h(half, c.n) : elementary_e(half, c.n), 2);
  if (degree > c.top_degree()) return expected.is_zero();
  return prof.characters[degree] == expected;
}

// n = 2 only: kernels and images of the alternating differentials are
// cut out by single binomial coefficients mod p, visible as matrix
// ranks.  Odd differentials: nullity counts binom(b+d, d) ≡ 0 over the
// source shape's parameter range.  Even differentials: rank counts
// binom(b, p-d) ≢ 0 over the target shape's range.
inline bool kernel_image_binomial_check(const ChainComplexRec& c) {
  if (c.n != 2 || c.family != Family::K)
    throw std::invalid_argument("kernel_image_binomial_check requires family K with n = 2");
  const int pv = static_cast<int>(c.p.value());
  bool ok = true;
  for (int j = 1; j <= c.top_degree(); ++j) {
    Index computed_rank = rank(c.diffs[j]);
    Index predicted = 0;
    if (j % 2 == 1) {
      const Partition& s = c.shapes[j];
      Index nullity = 0;
      for (int b = 0; b <= s.part(0) - s.part(1); ++b)
        if (binom_mod_p(c.p, b + c.d, c.d).value == 0) ++nullity;
      predicted = c.terms[j].dim - nullity;
    } else {
      const Partition& s = c.shapes[j - 1];
      for (int b = 0; b <= s.part(0) - s.part(1); ++b)
        if (binom_mod_p(c.p, b, pv - c.d).value != 0) ++predicted;
    }
    ok = ok && computed_rank == predicted;
  }
  return ok;
}

// Exact integer identity behind the L-family Euler characteristic:
// 2·Σ_{j=0}^{r'} (-1)^j binom(n, r'+j) binom(n, r'-j)
//   = binom(n, r') + binom(n, r')².
inline bool verify_euler_binomial_identity(int n, int rprime) {
  if (n < 0 || rprime < 0) throw std::invalid_argument("verify_euler_binomial_identity: bad args");
  mpz_class lhs = 0;
  for (int j = 0; j <= rprime; ++j) {
    mpz_class t = binom_exact(n, rprime + j) * binom_exact(n, rprime - j);
    lhs += j % 2 == 0 ? t : -t;
  }
  lhs *= 2;
  mpz_class b = binom_exact(n, rprime);
  return lhs == b + b * b;
}

}  // namespace weylhom
