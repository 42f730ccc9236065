#pragma once

#include "weylhom/complexes.hpp"

namespace weylhom {

// Closed-form Weyl filtration dimension of the rank-2 Schur algebra in
// degree r.
inline long long wfd_value(Prime p, long long r) {
  if (r < 0) throw std::invalid_argument("wfd_value: r must be nonnegative");
  if (p.value() == 2) return r % 2 == 0 ? r / 2 : r / 4;
  return r / static_cast<long long>(p.value());
}

// Bound for an m-fold twisted two-row Weyl module with row gap c: the
// twisted Weyl resolution has length p^{m-1}·c.
inline long long upper_bound_twist(Prime p, long long c, int m) {
  if (c < 0 || m < 1) throw std::invalid_argument("upper_bound_twist: need c >= 0 and m >= 1");
  long long out = c;
  for (int i = 1; i < m; ++i) out *= p.value();
  return out;
}

// Bound for one simple module with row gap c, via its tensor
// factorization into twisted divided powers: the digit of c at base-p
// position k contributes c_k·p^{k-1}, and factors whose twist budget is
// exhausted (position 0, plus position 1 in the p=2 odd-degree regime,
// where one twist is spent absorbing a natural-module factor) already
// have Weyl filtrations and contribute nothing.
inline long long simple_module_bound(Prime p, long long c, bool p2_odd_regime) {
  if (c < 0) throw std::invalid_argument("simple_module_bound: need c >= 0");
  if (p2_odd_regime && (p.value() != 2 || c % 2 == 0))
    throw std::invalid_argument("simple_module_bound: odd regime needs p = 2 and odd c");
  const long long pv = p.value();
  const int drop = p2_odd_regime ? 2 : 1;
  long long out = 0, place = 1;
  int k = 0;
  for (long long rest = c; rest > 0; rest /= pv, ++k) {
    long long digit = rest % pv;
    if (k >= drop) {
      out += digit * place;
      place *= pv;
    }
  }
  return out;
}

// Largest simple-module bound over all highest weights of total degree
// r: the row gap c runs over r, r-2, r-4, ….
inline long long upper_bound_simple(Prime p, long long r) {
  if (r < 0) throw std::invalid_argument("upper_bound_simple: r must be nonnegative");
  const bool odd_regime = p.value() == 2 && r % 2 == 1;
  long long best = 0;
  for (long long c = r % 2; c <= r; c += 2)
    best = std::max(best, simple_module_bound(p, c, odd_regime));
  return best;
}

// Top term of a resolution exhibits a Weyl factor missing from the next
// term; this pins the filtration dimension of the resolved module to
// the resolution length.
inline bool distinct_top_factor(const SymPolyInt& top, const SymPolyInt& next) {
  auto top_factors = weyl_factor_multiplicities(top, top.n);
  auto next_factors = weyl_factor_multiplicities(next, next.n);
  for (const auto& [shape, mult] : top_factors) {
    if (mult <= 0) continue;
    auto it = next_factors.find(shape);
    if (it == next_factors.end() || it->second == 0) return true;
  }
  return false;
}

inline bool distinct_top_factor_check(const ChainComplexRec& c) {
  if (c.top_degree() == 0) return true;  // length-0 resolution: nothing to distinguish
  return distinct_top_factor(module_character(c.terms[c.top_degree()]),
                             module_character(c.terms[c.top_degree() - 1]));
}

// Witness resolution certifying the lower bound: its length equals the
// claimed dimension once its homology sits in degree 0 and the top
// factor test passes.  For p ≥ 3 the resolved module carries an extra
// one-dimensional tensor factor, recorded as a diagonal character
// shift; the matrices are unaffected.
struct WitnessReport {
  Family family = Family::K;
  int complex_r = 0;
  int d = 1;
  int shift = 0;  // both rows of every weight move up by this amount
  int length = 0;
  bool concentrated = false;
  bool top_factor_distinct = false;
  bool valid() const { return concentrated && top_factor_distinct; }
};

inline WitnessReport lower_bound_witness(Prime p, int r) {
  if (r < 0) throw std::invalid_argument("lower_bound_witness: r must be nonnegative");
  WitnessReport w;
  const int pv = static_cast<int>(p.value());
  if (pv == 2) {
    if (r % 2 == 0) {
      w.family = Family::K;
      w.complex_r = r;
      w.d = 1;
    } else {
      w.family = r % 4 == 1 ? Family::M : Family::N;
      w.complex_r = r;
      w.d = 2;
    }
  } else {
    const int r1 = r / pv, r0 = r % pv;
    w.shift = r0 / 2;
    const int t = r0 % 2;
    w.family = Family::K;
    w.complex_r = pv * r1 + t;
    w.d = 1 + t;
  }
  auto c = build_complex(w.family, w.complex_r, w.d, 2, p);
  w.length = c.top_degree();
  auto prof = homology_profile(c);
  w.concentrated = true;
  for (std::size_t i = 1; i < prof.dims.size(); ++i)
    if (prof.dims[i] != 0) w.concentrated = false;
  w.top_factor_distinct = distinct_top_factor_check(c);
  return w;
}

// The sandwich: witness length ≤ true value ≤ digit bound, with
// equality throughout.
struct WfdReport {
  Prime p;
  long long r = 0;
  long long theorem_value = 0;
  long long upper_bound = 0;
  WitnessReport witness;
  bool consistent() const {
    return witness.valid() && witness.length == theorem_value && theorem_value == upper_bound;
  }
};

inline WfdReport wfd_report(Prime p, int r) {
  WfdReport rep{p};
  rep.r = r;
  rep.theorem_value = wfd_value(p, r);
  rep.upper_bound = upper_bound_simple(p, r);
  rep.witness = lower_bound_witness(p, r);
  return rep;
}

}  // namespace weylhom
