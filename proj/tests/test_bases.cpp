#include <catch2/catch_amalgamated.hpp>

#include <weylhom/bases.hpp>

#include "oracles.hpp"

using namespace weylhom;

namespace {

// Independent count of weak compositions by recursion.
long long compositions_oracle(int n, int a) {
  if (n == 1) return a >= 0 ? 1 : 0;
  long long total = 0;
  for (int v = 0; v <= a; ++v) total += compositions_oracle(n - 1, a - v);
  return total;
}

// Brute-force SSYT count: try every filling.
long long ssyt_oracle(int a, int b, int n) {
  if (b < 0 || a < b) return 0;
  auto all_tuples = [&](int len) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(len, 1);
    while (true) {
      bool weak = true;
      for (int i = 1; i < len; ++i)
        if (cur[i] < cur[i - 1]) weak = false;
      if (weak) out.push_back(cur);
      int k = len - 1;
      while (k >= 0 && cur[k] == n) cur[k--] = 1;
      if (k < 0) break;
      ++cur[k];
    }
    if (len == 0) out.assign(1, {});
    return out;
  };
  long long count = 0;
  for (const auto& r1 : all_tuples(a))
    for (const auto& r2 : all_tuples(b)) {
      bool ok = true;
      for (int i = 0; i < b && ok; ++i) ok = r2[i] > r1[i];
      if (ok) ++count;
    }
  return count;
}

}  // namespace

TEST_CASE("divided_basis frozen examples and order") {
  auto b22 = divided_basis(2, 2);
  REQUIRE(b22.size() == 3);
  CHECK(b22[0] == ExponentVector{2, 0});
  CHECK(b22[1] == ExponentVector{1, 1});
  CHECK(b22[2] == ExponentVector{0, 2});

  auto b15 = divided_basis(1, 5);
  REQUIRE(b15.size() == 1);
  CHECK(b15[0] == ExponentVector{5});

  CHECK(divided_basis(3, 4).size() == 15);

  auto b0 = divided_basis(3, 0);
  REQUIRE(b0.size() == 1);
  CHECK(b0[0] == ExponentVector{0, 0, 0});
}

TEST_CASE("divided_basis counts, degrees, strict descending order") {
  for (int n = 1; n <= 6; ++n)
    for (int a = 0; a <= 14; ++a) {
      auto basis = divided_basis(n, a);
      CHECK(static_cast<long long>(basis.size()) == compositions_oracle(n, a));
      CHECK(basis.size() == divided_dim(n, a));
      for (std::size_t i = 0; i < basis.size(); ++i) {
        int sum = 0;
        for (int e : basis[i]) {
          CHECK(e >= 0);
          sum += e;
        }
        CHECK(sum == a);
        if (i > 0) CHECK(basis[i] < basis[i - 1]);  // lex descending
      }
    }
}

TEST_CASE("exterior_basis frozen examples and order") {
  auto e32 = exterior_basis(3, 2);
  REQUIRE(e32.size() == 3);
  CHECK(e32[0].indices == std::vector<int>{1, 2});
  CHECK(e32[1].indices == std::vector<int>{1, 3});
  CHECK(e32[2].indices == std::vector<int>{2, 3});

  CHECK(exterior_basis(2, 3).empty());
  CHECK(exterior_basis(5, 2).size() == 10);
  REQUIRE(exterior_basis(4, 0).size() == 1);
  CHECK(exterior_basis(4, 0)[0].indices.empty());
}

TEST_CASE("exterior_basis counts and mask validity") {
  auto t = oracle::pascal(20);
  for (int n = 1; n <= 6; ++n)
    for (int a = 0; a <= 14; ++a) {
      auto basis = exterior_basis(n, a);
      CHECK(static_cast<long long>(basis.size()) ==
            oracle::pascal_at(t, n, a));
      CHECK(basis.size() == exterior_dim(n, a));
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto& idx = basis[i].indices;
        for (std::size_t j = 0; j < idx.size(); ++j) {
          CHECK(idx[j] >= 1);
          CHECK(idx[j] <= n);
          if (j > 0) CHECK(idx[j] > idx[j - 1]);
        }
        if (i > 0) CHECK(basis[i - 1] < basis[i]);  // lex ascending
      }
    }
}

TEST_CASE("TensorIndexer sizes, weights, roundtrip") {
  TensorIndexer t1(TensorWord{2, {{AlgebraKind::divided, 1}, {AlgebraKind::divided, 1}}});
  CHECK(t1.size() == 4);
  // x_1 ⊗ x_2: factor positions 0 and 1.
  Index idx = t1.flatten({0, 1});
  CHECK(t1.weight(idx) == ExponentVector{1, 1});

  TensorIndexer t2(TensorWord{2, {{AlgebraKind::divided, 3}, {AlgebraKind::divided, 1}}});
  CHECK(t2.size() == 8);

  TensorIndexer t3(TensorWord{3, {{AlgebraKind::exterior, 2}, {AlgebraKind::exterior, 2}}});
  CHECK(t3.size() == 9);

  // zero factor kills the word
  TensorIndexer t4(TensorWord{2, {{AlgebraKind::exterior, 3}, {AlgebraKind::divided, 1}}});
  CHECK(t4.size() == 0);

  for (Index i = 0; i < t2.size(); ++i) {
    CHECK(t2.flatten(t2.unflatten(i)) == i);
    int total = 0;
    for (int w : t2.weight(i)) total += w;
    CHECK(total == 4);
  }

  // weight = sum of factor weights
  TensorIndexer mix(TensorWord{3, {{AlgebraKind::divided, 2}, {AlgebraKind::exterior, 1}}});
  for (Index i = 0; i < mix.size(); ++i) {
    auto t = mix.unflatten(i);
    auto w0 = mix.factor_weight(0, t[0]);
    auto w1 = mix.factor_weight(1, t[1]);
    auto w = mix.weight(i);
    for (int k = 0; k < 3; ++k) CHECK(w[k] == w0[k] + w1[k]);
  }
}

TEST_CASE("ssyt_count frozen examples") {
  CHECK(ssyt_count(Partition{{3, 1}}, 2) == 3);
  CHECK(ssyt_count(Partition{{2, 2}}, 2) == 1);
  for (int r = 0; r <= 6; ++r) CHECK(ssyt_count(Partition{{r}}, 1) == 1);
  CHECK(ssyt_count(Partition{{1, 2}}, 3) == 0);   // not a partition
  CHECK(ssyt_count(Partition{{3, -1}}, 3) == 0);  // not a partition
  CHECK(ssyt_count(Partition{{2, 1, 0, 0}}, 2) == 2);  // trailing zeros fine
  CHECK_THROWS_AS(ssyt_count(Partition{{3, 2, 1}}, 3), std::invalid_argument);
}

TEST_CASE("ssyt_count matches brute-force filling oracle") {
  for (int n = 1; n <= 3; ++n)
    for (int a = 0; a <= 5; ++a)
      for (int b = 0; b <= a; ++b)
        CHECK(ssyt_count(Partition{{a, b}}, n) == ssyt_oracle(a, b, n));
}

TEST_CASE("ssyt_enumerate agrees with count and is semistandard") {
  auto tabs = ssyt_enumerate(3, 1, 2);
  CHECK(tabs.size() == 3);
  for (const auto& t : tabs) {
    for (std::size_t i = 1; i < t.row1.size(); ++i) CHECK(t.row1[i] >= t.row1[i - 1]);
    for (std::size_t i = 1; i < t.row2.size(); ++i) CHECK(t.row2[i] >= t.row2[i - 1]);
    for (std::size_t i = 0; i < t.row2.size(); ++i) CHECK(t.row2[i] > t.row1[i]);
  }
}

TEST_CASE("Partition helpers") {
  CHECK(Partition{{3, 1}}.is_valid());
  CHECK(Partition{{3, 3, 0}}.is_valid());
  CHECK_FALSE(Partition{{1, 2}}.is_valid());
  CHECK_FALSE(Partition{{2, -1}}.is_valid());
  CHECK(Partition{{2, 1}} == Partition{{2, 1, 0, 0}});
  CHECK(Partition{{1, 1}} < Partition{{2}});
  CHECK(Partition{{4, 2}}.sum() == 6);
}
