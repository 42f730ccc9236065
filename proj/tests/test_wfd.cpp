#include <catch2/catch_amalgamated.hpp>

#include "weylhom/wfd.hpp"

using namespace weylhom;

namespace {

SymPolyInt schur_sum(int n, const std::vector<std::pair<Partition, long long>>& terms) {
  SymPolyInt out(n);
  for (const auto& [shape, mult] : terms) {
    SymPolyInt s = schur_poly(shape, n);
    for (const auto& [e, coef] : s.coeffs) out.add_term(e, mult * coef);
  }
  return out;
}

}  // namespace

TEST_CASE("wfd closed form") {
  // p = 2 alternates between r/2 (even) and floor(r/4) (odd).
  const long long p2[] = {0, 0, 1, 0, 2, 1, 3, 1, 4, 2, 5, 2, 6};
  for (int r = 0; r <= 12; ++r) CHECK(wfd_value(Prime(2), r) == p2[r]);

  // Odd p is a single floor.
  const long long p3[] = {0, 0, 0, 1, 1, 1, 2, 2, 2, 3};
  for (int r = 0; r <= 9; ++r) CHECK(wfd_value(Prime(3), r) == p3[r]);
  CHECK(wfd_value(Prime(5), 7) == 1);
  CHECK(wfd_value(Prime(5), 30) == 6);
  CHECK(wfd_value(Prime(7), 50) == 7);

  CHECK_THROWS_AS(wfd_value(Prime(2), -1), std::invalid_argument);
}

TEST_CASE("twisted module bound") {
  CHECK(upper_bound_twist(Prime(2), 3, 1) == 3);
  CHECK(upper_bound_twist(Prime(3), 2, 2) == 6);
  CHECK(upper_bound_twist(Prime(5), 4, 3) == 100);
  for (int m = 1; m <= 4; ++m) CHECK(upper_bound_twist(Prime(3), 0, m) == 0);
  CHECK_THROWS_AS(upper_bound_twist(Prime(2), -1, 1), std::invalid_argument);
  CHECK_THROWS_AS(upper_bound_twist(Prime(2), 3, 0), std::invalid_argument);
}

TEST_CASE("simple module digit bound") {
  SECTION("dropping the unit digit is division by p") {
    for (std::uint32_t pv : {2u, 3u, 5u, 7u}) {
      Prime p(pv);
      for (long long c = 0; c <= 200; ++c)
        CHECK(simple_module_bound(p, c, false) == c / pv);
    }
  }

  SECTION("the p=2 odd regime drops two digits") {
    for (long long c = 1; c <= 201; c += 2)
      CHECK(simple_module_bound(Prime(2), c, true) == c / 4);
  }

  SECTION("regime guard") {
    CHECK_THROWS_AS(simple_module_bound(Prime(3), 5, true), std::invalid_argument);
    CHECK_THROWS_AS(simple_module_bound(Prime(2), 4, true), std::invalid_argument);
    CHECK_THROWS_AS(simple_module_bound(Prime(2), -2, false), std::invalid_argument);
  }
}

TEST_CASE("degree-wide upper bound") {
  // The per-weight bound grows with the row gap, so the maximum sits at
  // gap r and the whole bound collapses to the closed form.
  for (std::uint32_t pv : {2u, 3u, 5u}) {
    Prime p(pv);
    for (int r = 0; r <= 40; ++r) CHECK(upper_bound_simple(p, r) == wfd_value(p, r));
  }
  CHECK(upper_bound_simple(Prime(2), 10) == 5);
  CHECK(upper_bound_simple(Prime(2), 11) == 2);
  CHECK(upper_bound_simple(Prime(3), 11) == 3);
  CHECK_THROWS_AS(upper_bound_simple(Prime(2), -3), std::invalid_argument);
}

TEST_CASE("distinct top factor test") {
  const int n = 2;
  SECTION("identical characters never pass") {
    for (const Partition& shape : {Partition{{2, 1}}, Partition{{4}}, Partition{{3, 3}}}) {
      SymPolyInt s = schur_poly(shape, n);
      CHECK_FALSE(distinct_top_factor(s, s));
    }
  }

  SECTION("a top contained in the next term never passes") {
    SymPolyInt top = schur_sum(n, {{Partition{{2, 1}}, 1}});
    SymPolyInt next = schur_sum(n, {{Partition{{2, 1}}, 2}, {Partition{{3}}, 1}});
    CHECK_FALSE(distinct_top_factor(top, next));
  }

  SECTION("one extra factor passes") {
    SymPolyInt top = schur_sum(n, {{Partition{{2, 2}}, 1}, {Partition{{2, 1}}, 1}});
    SymPolyInt next = schur_sum(n, {{Partition{{2, 1}}, 3}});
    CHECK(distinct_top_factor(top, next));
  }

  SECTION("a zero top term cannot certify anything") {
    auto c = build_complex(Family::L, 8, 1, 3, Prime(2));
    CHECK(c.terms[c.top_degree()].dim == 0);
    CHECK_FALSE(distinct_top_factor_check(c));
  }

  SECTION("complexes with nonzero terms always separate adjacent ones") {
    auto check = [](const ChainComplexRec& c) {
      CHECK(distinct_top_factor_check(c));
      // The top term is a single Weyl module, so every adjacent pair of
      // distinct shapes separates, not just the last one.
      for (int i = 1; i <= c.top_degree(); ++i)
        CHECK(distinct_top_factor(module_character(c.terms[i]), module_character(c.terms[i - 1])));
    };
    check(build_complex(Family::K, 10, 1, 2, Prime(2)));
    check(build_complex(Family::K, 9, 1, 2, Prime(3)));
    check(build_complex(Family::L, 4, 1, 4, Prime(2)));
    check(build_complex(Family::M, 13, 2, 2, Prime(2)));
    check(build_complex(Family::N, 11, 2, 2, Prime(2)));
  }
}

TEST_CASE("witness selection frozen examples") {
  SECTION("p = 5, r = 12 shifts by one and resolves along degree 10") {
    WitnessReport w = lower_bound_witness(Prime(5), 12);
    CHECK(w.family == Family::K);
    CHECK(w.complex_r == 10);
    CHECK(w.d == 1);
    CHECK(w.shift == 1);
    CHECK(w.length == 2);
    CHECK(w.valid());
  }

  SECTION("p = 3, r = 11 folds the even leftover into the shift") {
    WitnessReport w = lower_bound_witness(Prime(3), 11);
    CHECK(w.family == Family::K);
    CHECK(w.complex_r == 9);  // leftover 2 becomes shift 1
    CHECK(w.d == 1);
    CHECK(w.shift == 1);
    CHECK(w.length == 3);
    CHECK(w.valid());
  }

  SECTION("p = 3, r = 10 keeps the odd leftover digit in the complex") {
    WitnessReport w = lower_bound_witness(Prime(3), 10);
    CHECK(w.family == Family::K);
    CHECK(w.complex_r == 10);  // leftover 1 raises d instead
    CHECK(w.d == 2);
    CHECK(w.shift == 0);
    CHECK(w.length == 3);
    CHECK(w.valid());
  }

  SECTION("p = 2, even r stays untwisted") {
    WitnessReport w = lower_bound_witness(Prime(2), 10);
    CHECK(w.family == Family::K);
    CHECK(w.complex_r == 10);
    CHECK(w.d == 1);
    CHECK(w.shift == 0);
    CHECK(w.length == 5);
    CHECK(w.valid());
  }

  SECTION("p = 2, odd r picks the family by residue mod 4") {
    WitnessReport w13 = lower_bound_witness(Prime(2), 13);
    CHECK(w13.family == Family::M);
    CHECK(w13.length == 3);
    CHECK(w13.valid());

    WitnessReport w15 = lower_bound_witness(Prime(2), 15);
    CHECK(w15.family == Family::N);
    CHECK(w15.length == 3);
    CHECK(w15.valid());
  }

  SECTION("tiny degrees give length-0 witnesses") {
    for (std::uint32_t pv : {2u, 3u, 5u}) {
      for (int r = 0; r < 2; ++r) {
        WitnessReport w = lower_bound_witness(Prime(pv), r);
        CHECK(w.length == 0);
        CHECK(w.valid());
      }
    }
  }

  CHECK_THROWS_AS(lower_bound_witness(Prime(2), -1), std::invalid_argument);
}

TEST_CASE("upper and lower bounds sandwich the closed form") {
  for (std::uint32_t pv : {2u, 3u, 5u}) {
    Prime p(pv);
    for (int r = 0; r <= 30; ++r) {
      WfdReport rep = wfd_report(p, r);
      INFO("p = " << pv << ", r = " << r);
      CHECK(rep.theorem_value == wfd_value(p, r));
      CHECK(rep.witness.length == rep.theorem_value);
      CHECK(rep.upper_bound == rep.theorem_value);
      CHECK(rep.witness.concentrated);
      CHECK(rep.witness.top_factor_distinct);
      CHECK(rep.consistent());
    }
  }
}
