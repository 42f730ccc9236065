#pragma once

#include <algorithm>
#include <array>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "weylhom/wfd.hpp"

namespace weylhom {

// One verified statement: a registry id, the verdict, and the values
// that went into it.  Only the first counterexample is recorded.
struct Claim {
  std::string statement_id;
  bool pass = true;
  std::vector<std::pair<std::string, std::string>> values;

  void note(std::string key, std::string value) {
    values.emplace_back(std::move(key), std::move(value));
  }
  void note(std::string key, long long value) {
    values.emplace_back(std::move(key), std::to_string(value));
  }
  void fail(const std::string& counterexample) {
    if (!pass) return;
    pass = false;
    note("counterexample", counterexample);
  }
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<Claim> claims;
  long long timing_ms = 0;

  bool all_pass() const {
    return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
  }
};

// Sweep sizes for the verification suites.  rmax = 0 keeps each claim
// on its own default degree cap; an explicit rmax overrides all of
// them.
struct SuiteBounds {
  int kmax = 6;
  int nmax = 4;
  int rmax = 0;
  int abmax = 10;

  int cap(int dflt) const { return rmax > 0 ? rmax : dflt; }

  static SuiteBounds small() {
    SuiteBounds b;
    b.kmax = 4;
    b.nmax = 3;
    b.rmax = 10;
    b.abmax = 7;
    return b;
  }
};

namespace detail {

constexpr std::array<std::uint32_t, 3> suite_primes = {2, 3, 5};

// The unique valid raising parameter for the divided/exterior families
// at (r, p), or 0 when the congruence has no solution below p.
inline int valid_d(int r, Prime p) {
  return (r + 1) % static_cast<int>(p.value());
}

template <class... Parts>
std::string case_string(Parts&&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

}  // namespace detail

// --- hopf suite: the raising maps' algebra -------------------------------

inline std::vector<Claim> suite_hopf(const SuiteBounds& b) {
  const int nmax = std::min(3, b.nmax);
  const int abmax = std::min(8, b.abmax);

  Claim compose{"raising.composition"};
  Claim square{"raising.square_zero"};
  long long compose_cases = 0, square_cases = 0;
  for (AlgebraKind kind : {AlgebraKind::divided, AlgebraKind::exterior}) {
    const char* kname = kind == AlgebraKind::divided ? "divided" : "exterior";
    for (int n = 1; n <= nmax; ++n)
      for (std::uint32_t pv : detail::suite_primes) {
        Prime p(pv);
        for (int a = 0; a <= abmax; ++a)
          for (int bb = 0; a + bb <= abmax; ++bb)
            for (int t = 0; t <= bb; ++t) {
              FpMatrix dt = partial_t_matrix(kind, n, a, bb, t, p);
              for (int s = 0; s + t <= bb; ++s) {
                FpMatrix lhs = partial_t_matrix(kind, n, a + t, bb - t, s, p).multiply(dt);
                FpMatrix rhs = partial_t_matrix(kind, n, a, bb, s + t, p)
                                   .scaled(binom_mod_p(p, s + t, t).value);
                ++compose_cases;
                if (!(lhs == rhs))
                  compose.fail(detail::case_string("kind=", kname, " n=", n, " p=", pv, " a=", a,
                                                   " b=", bb, " t=", t, " s=", s));
                if (s + t > 0 && binom_divisible_by_p(p, s + t, t)) {
                  ++square_cases;
                  if (!lhs.is_zero())
                    square.fail(detail::case_string("kind=", kname, " n=", n, " p=", pv, " a=", a,
                                                    " b=", bb, " t=", t, " s=", s));
                }
              }
            }
      }
  }
  compose.note("cases", compose_cases);
  compose.note("abmax", abmax);
  compose.note("nmax", nmax);
  square.note("cases", square_cases);
  return {compose, square};
}

// --- modules suite: presentations, dimensions, characters, morphisms -----

inline std::vector<Claim> suite_modules(const SuiteBounds& b) {
  std::vector<Claim> out;

  {
    Claim c{"weyl.dimension"};
    long long cases = 0;
    const int nmax = std::min(4, b.nmax);
    for (int n = 1; n <= nmax; ++n)
      for (int a = 0; a <= b.abmax; ++a)
        for (int bb = 0; bb <= a && a + bb <= b.abmax; ++bb) {
          Partition shape{{a, bb}};
          long long want = ssyt_count(shape, n);
          for (std::uint32_t pv : detail::suite_primes) {
            ++cases;
            auto q = build_module(AlgebraKind::divided, shape, n, Prime(pv));
            if (static_cast<long long>(q.dim) != want)
              c.fail(detail::case_string("n=", n, " a=", a, " b=", bb, " p=", pv, " dim=", q.dim,
                                         " ssyt=", want));
          }
        }
    c.note("cases", cases);
    c.note("abmax", b.abmax);
    c.note("nmax", nmax);
    out.push_back(std::move(c));
  }

  {
    Claim c{"schur_module.dimension"};
    long long cases = 0;
    const int nmax = std::min(5, b.nmax + 1);
    for (int n = 1; n <= nmax; ++n)
      for (int a = 0; a <= b.abmax; ++a)
        for (int bb = 0; bb <= a && a + bb <= b.abmax; ++bb) {
          mpz_class want = binom_exact(n, a) * binom_exact(n, bb) -
                           binom_exact(n, a + 1) * binom_exact(n, bb - 1);
          if (want < 0) want = 0;  // empty module once a exceeds n
          for (std::uint32_t pv : {2u, 3u}) {
            ++cases;
            auto q = build_module(AlgebraKind::exterior, Partition{{a, bb}}, n, Prime(pv));
            if (mpz_class(static_cast<long>(q.dim)) != want)
              c.fail(detail::case_string("n=", n, " a=", a, " b=", bb, " p=", pv, " dim=", q.dim,
                                         " formula=", want.get_str()));
          }
        }
    c.note("cases", cases);
    out.push_back(std::move(c));
  }

  {
    Claim c{"module.character"};
    long long cases = 0;
    const int nmax = std::min(4, b.nmax);
    const int abmax = std::min(8, b.abmax);
    for (int n = 1; n <= nmax; ++n)
      for (int a = 0; a <= abmax; ++a)
        for (int bb = 0; bb <= a && a + bb <= abmax; ++bb) {
          Partition shape{{a, bb}};
          Partition conj = conjugate_partition(shape);
          for (std::uint32_t pv : {2u, 3u}) {
            ++cases;
            Prime p(pv);
            auto k = build_module(AlgebraKind::divided, shape, n, p);
            if (!(module_character(k) == schur_poly(shape, n)))
              c.fail(detail::case_string("kind=divided n=", n, " a=", a, " b=", bb, " p=", pv));
            auto l = build_module(AlgebraKind::exterior, shape, n, p);
            if (!(module_character(l) == schur_poly(conj, n)))
              c.fail(detail::case_string("kind=exterior n=", n, " a=", a, " b=", bb, " p=", pv));
          }
        }
    c.note("cases", cases);
    out.push_back(std::move(c));
  }

  {
    Claim c{"carter_payne.certificates"};
    long long cases = 0, nonzero_cases = 0;
    const int abmax = std::min(12, b.abmax + 2);
    for (AlgebraKind kind : {AlgebraKind::divided, AlgebraKind::exterior}) {
      const char* kname = kind == AlgebraKind::divided ? "divided" : "exterior";
      for (int n = 2; n <= std::min(3, b.nmax); ++n)
        for (int a = 1; a <= abmax; ++a)
          for (int bb = 0; bb <= a && a + bb <= abmax; ++bb)
            for (int d = 1; d <= bb; ++d)
              for (std::uint32_t pv : detail::suite_primes) {
                Prime p(pv);
                int e = 0;
                for (int cand = 1, pe = static_cast<int>(pv); pe <= 64;
                     ++cand, pe *= static_cast<int>(pv))
                  if (d < pe && (a - bb + d + 1) % pe == 0) {
                    e = cand;
                    break;
                  }
                if (e == 0) continue;
                ++cases;
                CPReport rep = carter_payne_certificate({Partition{{a, bb}}, d, p, e}, n, kind);
                if (!rep.checks.all()) {
                  c.fail(detail::case_string("hypothesis check rejected kind=", kname, " n=", n,
                                             " a=", a, " b=", bb, " d=", d, " p=", pv, " e=", e));
                  continue;
                }
                if (!rep.well_defined)
                  c.fail(detail::case_string("not well-defined kind=", kname, " n=", n, " a=", a,
                                             " b=", bb, " d=", d, " p=", pv, " e=", e));
                if (rep.nonzero_expected) {
                  ++nonzero_cases;
                  if (!rep.nonzero)
                    c.fail(detail::case_string("zero map kind=", kname, " n=", n, " a=", a,
                                               " b=", bb, " d=", d, " p=", pv, " e=", e));
                }
              }
    }
    c.note("cases", cases);
    c.note("nonzero_cases", nonzero_cases);
    c.note("abmax", abmax);
    out.push_back(std::move(c));
  }

  return out;
}

// --- complexes suite: differentials and homology --------------------------

inline std::vector<Claim> suite_complexes(const SuiteBounds& b) {
  std::vector<Claim> out;
  const int nmax = std::min(4, b.nmax);

  // Every complex the remaining claims touch, built once.
  struct Built {
    ChainComplexRec complex;
    HomologyProfile profile;
  };
  std::vector<Built> all;
  auto build = [&all](Family f, int r, int d, int n, Prime p) -> const Built& {
    all.push_back({build_complex(f, r, d, n, p), {}});
    all.back().profile = homology_profile(all.back().complex);
    return all.back();
  };

  {
    Claim c{"homology.concentration.p2"};
    const int rcap = b.cap(12);
    long long cases = 0;
    for (int n = 1; n <= nmax; ++n)
      for (int r = 0; r <= rcap; r += 2) {
        ++cases;
        const auto& k = build(Family::K, r, 1, n, Prime(2));
        bool ok = static_cast<long long>(k.profile.dims[0]) == divided_dim(n, r / 2);
        for (int i = 1; i <= k.complex.top_degree(); ++i) ok = ok && k.profile.dims[i] == 0;
        ok = ok && k.profile.characters[0] == power_substitute(complete_h(r / 2, n), 2);
        if (!ok) c.fail(detail::case_string("family=K n=", n, " r=", r));

        const auto& l = build(Family::L, r, 1, n, Prime(2));
        const int half = r / 2;
        bool lok = l.complex.top_degree() == half &&
                   static_cast<long long>(l.profile.dims[half]) == exterior_dim(n, half);
        for (int i = 0; i < half; ++i) lok = lok && l.profile.dims[i] == 0;
        lok = lok && l.profile.characters[half] == power_substitute(elementary_e(half, n), 2);
        if (!lok) c.fail(detail::case_string("family=L n=", n, " r=", r));
      }
    c.note("cases", cases);
    c.note("rmax", rcap);
    c.note("nmax", nmax);
    out.push_back(std::move(c));
  }

  {
    Claim c{"homology.concentration.n2"};
    Claim ranks{"homology.rank_binomials"};
    const int rcap = b.cap(20);
    long long cases = 0;
    for (std::uint32_t pv : {3u, 5u}) {
      Prime p(pv);
      for (int r = 0; r <= rcap; ++r) {
        const int d = detail::valid_d(r, p);
        if (d == 0) continue;
        ++cases;
        const auto& k = build(Family::K, r, d, 2, p);
        for (int i = 1; i <= k.complex.top_degree(); ++i)
          if (k.profile.dims[i] != 0)
            c.fail(detail::case_string("p=", pv, " r=", r, " d=", d, " degree=", i));
        if (!kernel_image_binomial_check(k.complex))
          ranks.fail(detail::case_string("p=", pv, " r=", r, " d=", d));
      }
    }
    c.note("cases", cases);
    c.note("rmax", rcap);
    ranks.note("cases", cases);
    out.push_back(std::move(c));
    out.push_back(std::move(ranks));
  }

  {
    Claim c{"homology.concentration.mn"};
    const int rcap = b.cap(21);
    long long cases = 0;
    for (int r = 1; r <= rcap; r += 2) {
      ++cases;
      Family f = r % 4 == 1 ? Family::M : Family::N;
      const auto& built = build(f, r, 2, 2, Prime(2));
      if (built.complex.top_degree() != r / 4)
        c.fail(detail::case_string("family=", family_name(f), " r=", r, " length=",
                                   built.complex.top_degree()));
      for (int i = 1; i <= built.complex.top_degree(); ++i)
        if (built.profile.dims[i] != 0)
          c.fail(detail::case_string("family=", family_name(f), " r=", r, " degree=", i));
    }
    c.note("cases", cases);
    c.note("rmax", rcap);
    out.push_back(std::move(c));
  }

  {
    // homology_profile already certifies composability and weight
    // preservation; these claims re-check d∘d = 0 directly on the
    // collected complexes and record the sweep size.
    Claim c{"complex.d_squared_zero"};
    long long pairs = 0;
    for (const auto& built : all)
      for (std::size_t i = 1; i + 1 < built.complex.diffs.size(); ++i) {
        ++pairs;
        if (!built.complex.diffs[i].multiply(built.complex.diffs[i + 1]).is_zero())
          c.fail(detail::case_string("family=", family_name(built.complex.family),
                                     " r=", built.complex.r, " p=", built.complex.p.value(),
                                     " n=", built.complex.n, " degree=", i + 1));
      }
    c.note("adjacent_pairs", pairs);
    c.note("complexes", static_cast<long long>(all.size()));
    out.push_back(std::move(c));
  }

  {
    Claim c{"euler.binomial_identity"};
    long long cases = 0;
    for (int n = 0; n <= 12; ++n)
      for (int rp = 0; rp <= n; ++rp) {
        ++cases;
        if (!verify_euler_binomial_identity(n, rp))
          c.fail(detail::case_string("n=", n, " rprime=", rp));
      }
    c.note("cases", cases);
    out.push_back(std::move(c));
  }

  return out;
}

// --- identity suite: the alternating two-row Schur identity ---------------

inline std::vector<Claim> suite_identity(const SuiteBounds& b) {
  Claim c{"alternating_schur_identity"};
  long long cases = 0;
  for (int k = 0; k <= b.kmax; ++k)
    for (int n = 1; n <= b.nmax; ++n) {
      ++cases;
      if (!verify_alternating_identity(k, n)) c.fail(detail::case_string("k=", k, " n=", n));
    }
  c.note("cases", cases);
  c.note("kmax", b.kmax);
  c.note("nmax", b.nmax);
  return {c};
}

// --- wfd suite: the filtration-dimension sandwich --------------------------

inline std::vector<Claim> suite_wfd(const SuiteBounds& b) {
  const int rcap = b.cap(30);
  Claim sandwich{"wfd.sandwich"};
  Claim factor{"wfd.witness_factor_check"};
  Claim half{"wfd.even_degree_half"};
  long long cases = 0;
  for (std::uint32_t pv : detail::suite_primes) {
    Prime p(pv);
    for (int r = 0; r <= rcap; ++r) {
      ++cases;
      WfdReport rep = wfd_report(p, r);
      if (!rep.witness.top_factor_distinct)
        factor.fail(detail::case_string("p=", pv, " r=", r));
      if (!rep.consistent())
        sandwich.fail(detail::case_string("p=", pv, " r=", r, " value=", rep.theorem_value,
                                          " upper=", rep.upper_bound,
                                          " witness_length=", rep.witness.length));
      if (pv == 2 && r % 2 == 0 && rep.theorem_value != r / 2)
        half.fail(detail::case_string("r=", r, " value=", rep.theorem_value));
    }
  }
  sandwich.note("cases", cases);
  sandwich.note("rmax", rcap);
  factor.note("cases", cases);
  half.note("rmax", rcap);
  return {sandwich, factor, half};
}

inline std::vector<Claim> run_suite(const std::string& name, const SuiteBounds& b) {
  if (name == "hopf") return suite_hopf(b);
  if (name == "modules") return suite_modules(b);
  if (name == "complexes") return suite_complexes(b);
  if (name == "identity") return suite_identity(b);
  if (name == "wfd") return suite_wfd(b);
  if (name == "all") {
    std::vector<Claim> out;
    for (const char* part : {"hopf", "modules", "complexes", "identity", "wfd"}) {
      auto claims = run_suite(part, b);
      out.insert(out.end(), std::make_move_iterator(claims.begin()),
                 std::make_move_iterator(claims.end()));
    }
    return out;
  }
  throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
}

}  // namespace weylhom
