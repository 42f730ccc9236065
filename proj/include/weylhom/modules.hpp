#pragma once

#include <map>
#include <string>
#include <vector>

#include "weylhom/bases.hpp"
#include "weylhom/hopf.hpp"
#include "weylhom/linalg.hpp"
#include "weylhom/symfunc.hpp"

namespace weylhom {

// A candidate quotient map failed to send relations into relations; the
// witness is the offending row of the source relation space.
struct RelationsNotPreserved : std::runtime_error {
  Index witness_row;
  explicit RelationsNotPreserved(Index row)
      : std::runtime_error("relation image escapes the target relation space (row " +
                           std::to_string(row) + ")"),
        witness_row(row) {}
};

namespace detail {

// Image in A_a ⊗ A_b of one relation generator (x, y) ∈ A_{a+b-ℓ} ⊗ A_ℓ:
// split x into degrees (a, b-ℓ), multiply the second piece into y.
inline std::map<Index, std::uint32_t> box_generator_image(AlgebraKind kind,
                                                          const TensorIndexer& ambient,
                                                          const TensorIndexer& gsrc,
                                                          Index gi, int a, Prime p) {
  std::map<Index, std::uint32_t> image;
  const std::uint32_t pv = p.value();
  auto tup = gsrc.unflatten(gi);
  const int n = ambient.word().n;
  if (kind == AlgebraKind::divided) {
    const auto& x = gsrc.divided_factor(0)[tup[0]];
    const auto& y = gsrc.divided_factor(1)[tup[1]];
    for_each_bounded(x, a, [&](const ExponentVector& x1) {
      ExponentVector x2(n), prod(n);
      std::uint32_t coeff = 1;
      for (int i = 0; i < n; ++i) {
        x2[i] = x[i] - x1[i];
        prod[i] = x2[i] + y[i];
        if (coeff) coeff = fp_mul(coeff, binom_mod_p(p, prod[i], y[i]).value, pv);
      }
      if (!coeff) return;
      Index col = ambient.flatten({ambient.divided_pos(0, x1), ambient.divided_pos(1, prod)});
      auto [it, inserted] = image.try_emplace(col, coeff);
      if (!inserted) {
        it->second = fp_add(it->second, coeff, pv);
        if (it->second == 0) image.erase(it);
      }
    });
  } else {
    const auto& S = gsrc.exterior_factor(0)[tup[0]].indices;
    const auto& T = gsrc.exterior_factor(1)[tup[1]].indices;
    for_each_subset(S, a, [&](const std::vector<int>& s1) {
      auto s2 = sorted_difference(S, s1);
      std::vector<int> inter;
      std::set_intersection(s2.begin(), s2.end(), T.begin(), T.end(),
                            std::back_inserter(inter));
      if (!inter.empty()) return;
      int sign = shuffle_sign(s1, s2) * shuffle_sign(s2, T);
      std::vector<int> u;
      std::merge(s2.begin(), s2.end(), T.begin(), T.end(), std::back_inserter(u));
      Index col = ambient.flatten({ambient.exterior_pos(0, s1), ambient.exterior_pos(1, u)});
      std::uint32_t coeff = sign_to_fp(sign, pv);
      auto [it, inserted] = image.try_emplace(col, coeff);
      if (!inserted) {
        it->second = fp_add(it->second, coeff, pv);
        if (it->second == 0) image.erase(it);
      }
    });
  }
  return image;
}

inline void check_two_row(const Partition& lambda, const char* who) {
  if (lambda.normalized().size() > 2)
    throw std::invalid_argument(std::string(who) + ": shape has more than two rows");
}

}  // namespace detail

// Stacked relation map ⊕_{ℓ=0}^{b-1} A_{a+b-ℓ} ⊗ A_ℓ → A_a ⊗ A_b whose
// cokernel presents the two-row module of shape (a, b).
inline FpMatrix box_matrix(AlgebraKind kind, const Partition& lambda, int n, Prime p) {
  detail::check_two_row(lambda, "box_matrix");
  if (!lambda.is_valid()) throw std::invalid_argument("box_matrix: not a partition");
  const int a = lambda.part(0), b = lambda.part(1);
  TensorIndexer ambient(pair_word(kind, n, a, b));
  std::vector<TensorIndexer> gens;
  Index total = 0;
  for (int ell = 0; ell < b; ++ell) {
    gens.emplace_back(pair_word(kind, n, a + b - ell, ell));
    total += gens.back().size();
  }
  FpMatrix m(ambient.size(), total, p);
  Index col0 = 0;
  for (int ell = 0; ell < b; ++ell) {
    const auto& g = gens[ell];
    for (Index gi = 0; gi < g.size(); ++gi) {
      for (const auto& [row, v] : detail::box_generator_image(kind, ambient, g, gi, a, p))
        m.set(row, col0 + gi, v);
    }
    col0 += g.size();
  }
  return m;
}

// Two-row module presented as ambient tensor space modulo the box
// relations.  Relations are reduced weight block by weight block (every
// generator is weight-homogeneous), which keeps eliminations small; the
// assembled global row space is the canonical RREF of the box image.
struct QuotientModule {
  AlgebraKind kind;
  Partition shape;
  int n;
  Prime p;
  TensorIndexer ambient;
  bool zero_by_convention = false;

  RowSpace relations;
  Index dim = 0;
  std::vector<Index> free_cols;               // ascending ambient indices
  std::vector<ExponentVector> free_weights;   // aligned with free_cols
  std::map<Index, Index> coord_of_col;

  struct Block {
    ExponentVector weight;
    std::vector<Index> cols;                        // ambient indices, ascending
    std::vector<std::vector<std::uint32_t>> rr;     // local RREF rows
    std::vector<Index> piv_local;
    std::vector<Index> free_local;
  };
  std::vector<Block> blocks;
  std::map<ExponentVector, std::size_t> block_of_weight;

  QuotientModule(AlgebraKind k, Partition s, int nvars, Prime prime)
      : kind(k),
        shape(std::move(s)),
        n(nvars),
        p(prime),
        ambient(pair_word(k, nvars, shape.part(0), shape.part(1))) {}

  Index ambient_dim() const { return ambient.size(); }

  // Quotient coordinates of a weight-homogeneous ambient vector: reduce
  // modulo the relations of its weight block, then read the free slots.
  // Empty result = the vector is a relation.
  std::vector<std::pair<Index, std::uint32_t>> reduce_to_coords(
      const std::map<Index, std::uint32_t>& v) const {
    std::vector<std::pair<Index, std::uint32_t>> out;
    if (v.empty() || dim == 0) return out;
    const std::uint32_t pv = p.value();
    const auto w = ambient.weight(v.begin()->first);
    auto bit = block_of_weight.find(w);
    if (bit == block_of_weight.end())
      throw std::logic_error("QuotientModule: vector outside the ambient weight support");
    const Block& blk = blocks[bit->second];
    std::vector<std::uint32_t> local(blk.cols.size(), 0);
    for (const auto& [col, val] : v) {
      auto pos = std::lower_bound(blk.cols.begin(), blk.cols.end(), col);
      if (pos == blk.cols.end() || *pos != col)
        throw std::logic_error("QuotientModule: vector is not weight-homogeneous");
      local[pos - blk.cols.begin()] = val % pv;
    }
    for (std::size_t k = 0; k < blk.rr.size(); ++k) {
      std::uint32_t c = local[blk.piv_local[k]];
      if (!c) continue;
      const auto& row = blk.rr[k];
      for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j]) local[j] = fp_sub(local[j], fp_mul(c, row[j], pv), pv);
    }
    for (Index fl : blk.free_local)
      if (local[fl]) out.emplace_back(coord_of_col.at(blk.cols[fl]), local[fl]);
    return out;
  }
};

inline QuotientModule build_module(AlgebraKind kind, const Partition& lambda, int n, Prime p) {
  detail::check_two_row(lambda, "build_module");
  const int a = lambda.part(0), b = lambda.part(1);
  QuotientModule m(kind, lambda, n, p);
  if (!lambda.is_valid()) {
    m.zero_by_convention = true;
    m.relations = RowSpace{FpMatrix(0, m.ambient.size(), p), {}};
    return m;
  }
  const Index N = m.ambient.size();

  // Carve the ambient basis into weight blocks.
  std::map<ExponentVector, std::vector<Index>> wcols;
  for (Index i = 0; i < N; ++i) wcols[m.ambient.weight(i)].push_back(i);
  m.blocks.reserve(wcols.size());
  for (auto& [w, cols] : wcols) {
    m.block_of_weight[w] = m.blocks.size();
    m.blocks.push_back(QuotientModule::Block{w, cols, {}, {}, {}});
  }

  // Sort every relation generator into its weight block.
  std::vector<std::vector<std::vector<std::uint32_t>>> pending(m.blocks.size());
  for (int ell = 0; ell < b; ++ell) {
    TensorIndexer gsrc(pair_word(kind, n, a + b - ell, ell));
    for (Index gi = 0; gi < gsrc.size(); ++gi) {
      auto image = detail::box_generator_image(kind, m.ambient, gsrc, gi, a, p);
      if (image.empty()) continue;
      const auto& blk = m.blocks[m.block_of_weight.at(gsrc.weight(gi))];
      std::vector<std::uint32_t> local(blk.cols.size(), 0);
      for (const auto& [col, v] : image) {
        auto pos = std::lower_bound(blk.cols.begin(), blk.cols.end(), col);
        local[pos - blk.cols.begin()] = v;
      }
      pending[m.block_of_weight.at(gsrc.weight(gi))].push_back(std::move(local));
    }
  }

  Index rank = 0;
  for (std::size_t bi = 0; bi < m.blocks.size(); ++bi) {
    auto& blk = m.blocks[bi];
    blk.rr = std::move(pending[bi]);
    blk.piv_local = detail::rref_dense(blk.rr, p.value());
    std::vector<bool> is_piv(blk.cols.size(), false);
    for (Index c : blk.piv_local) is_piv[c] = true;
    for (Index c = 0; c < blk.cols.size(); ++c)
      if (!is_piv[c]) blk.free_local.push_back(c);
    rank += blk.piv_local.size();
  }

  m.dim = N - rank;
  for (const auto& blk : m.blocks)
    for (Index fl : blk.free_local) m.free_cols.push_back(blk.cols[fl]);
  std::sort(m.free_cols.begin(), m.free_cols.end());
  for (Index k = 0; k < m.free_cols.size(); ++k) {
    m.coord_of_col[m.free_cols[k]] = k;
    m.free_weights.push_back(m.ambient.weight(m.free_cols[k]));
  }

  // Assemble the canonical global RREF: block rows, ordered by pivot.
  std::vector<std::pair<Index, std::pair<std::size_t, std::size_t>>> rows;  // pivot -> (blk, row)
  for (std::size_t bi = 0; bi < m.blocks.size(); ++bi)
    for (std::size_t k = 0; k < m.blocks[bi].rr.size(); ++k)
      rows.emplace_back(m.blocks[bi].cols[m.blocks[bi].piv_local[k]], std::make_pair(bi, k));
  std::sort(rows.begin(), rows.end());
  m.relations.matrix = FpMatrix(rank, N, p);
  for (Index r = 0; r < rows.size(); ++r) {
    m.relations.pivot_cols.push_back(rows[r].first);
    const auto& blk = m.blocks[rows[r].second.first];
    const auto& lr = blk.rr[rows[r].second.second];
    for (std::size_t j = 0; j < lr.size(); ++j)
      if (lr[j]) m.relations.matrix.entries[{r, blk.cols[j]}] = lr[j];
  }
  return m;
}

// Weight-multiplicity generating polynomial of the quotient.
inline SymPolyInt module_character(const QuotientModule& m) {
  SymPolyInt f(m.n);
  for (const auto& w : m.free_weights) f.add_term(w, 1);
  return f;
}

// Matrix of the map induced on quotients by the degree-d raising map,
// in free-column coordinates.  Throws RelationsNotPreserved if the
// raising map does not send source relations into target relations.
inline FpMatrix induced_map(const QuotientModule& src, const QuotientModule& dst, int d) {
  if (d <= 0) throw std::invalid_argument("induced_map: d must be positive");
  if (src.kind != dst.kind || src.n != dst.n || src.p.value() != dst.p.value())
    throw std::invalid_argument("induced_map: source and target live in different categories");
  const int a = src.shape.part(0), b = src.shape.part(1);
  if (dst.shape.part(0) != a + d || dst.shape.part(1) != b - d)
    throw std::invalid_argument("induced_map: target shape must be (a+d, b-d)");
  if (!src.shape.is_valid()) throw std::invalid_argument("induced_map: source not a partition");
  const int n = src.n;
  const Prime p = src.p;
  FpMatrix out(dst.dim, src.dim, p);

  FpMatrix partial = partial_t_matrix(src.kind, n, a, b, d, p);
  // Column adjacency of the raising map for fast column pulls.
  std::vector<std::vector<std::pair<Index, std::uint32_t>>> by_col(partial.cols);
  for (const auto& [ij, v] : partial.entries) by_col[ij.second].emplace_back(ij.first, v);

  auto image_of = [&](const std::vector<std::pair<Index, std::uint32_t>>& vec) {
    std::map<Index, std::uint32_t> img;
    for (const auto& [j, c] : vec)
      for (const auto& [i, w] : by_col[j]) {
        auto [it, inserted] = img.try_emplace(i, fp_mul(c, w, p.value()));
        if (!inserted) {
          it->second = fp_add(it->second, fp_mul(c, w, p.value()), p.value());
          if (it->second == 0) img.erase(it);
        }
      }
    return img;
  };

  // Well-definedness: every source relation row must land inside the
  // target relation space.
  for (Index r = 0; r < src.relations.rank(); ++r) {
    auto img = image_of(src.relations.matrix.row(r));
    if (img.empty()) continue;
    if (dst.dim == 0) continue;  // everything is a relation in the zero module
    if (!dst.reduce_to_coords(img).empty()) throw RelationsNotPreserved(r);
  }

  for (Index k = 0; k < src.dim; ++k) {
    auto img = image_of({{src.free_cols[k], 1}});
    if (img.empty() || dst.dim == 0) continue;
    for (const auto& [coord, v] : dst.reduce_to_coords(img)) out.set(coord, k, v);
  }
  return out;
}

inline FpMatrix induced_map(AlgebraKind kind, const Partition& lambda, const Partition& mu,
                            int d, int n, Prime p) {
  detail::check_two_row(lambda, "induced_map");
  detail::check_two_row(mu, "induced_map");
  return induced_map(build_module(kind, lambda, n, p), build_module(kind, mu, n, p), d);
}

// Carter-Payne hypothesis bundle for a two-row shape.
struct CPHypotheses {
  Partition lambda;
  int d;
  Prime p;
  int e;
};

struct CPCheck {
  bool d_positive = false;
  bool d_bounded = false;       // d < p^e
  bool congruent = false;       // a - b + d + 1 ≡ 0 mod p^e
  bool mu_is_partition = false;
  bool all() const { return d_positive && d_bounded && congruent && mu_is_partition; }
};

struct CPReport {
  CPHypotheses hyp;
  int n;
  AlgebraKind kind;
  Partition mu;
  CPCheck checks;
  bool well_defined = false;
  bool nonzero = false;
  Index induced_rank = 0;
  Index source_dim = 0;
  Index target_dim = 0;
  // Condition under which the literature guarantees a nonzero map:
  // n ≥ 2 for divided kind, a + d ≤ n for exterior kind (otherwise the
  // target module itself vanishes).
  bool nonzero_expected = false;
};

inline CPCheck check_cp_hypotheses(const CPHypotheses& h) {
  CPCheck c;
  const int a = h.lambda.part(0), b = h.lambda.part(1);
  c.d_positive = h.d > 0;
  long long pe = 1;
  for (int i = 0; i < h.e; ++i) pe *= h.p.value();
  c.d_bounded = h.e >= 1 && h.d < pe;
  c.congruent = h.e >= 1 && (a - b + h.d + 1) % pe == 0;
  c.mu_is_partition = h.lambda.is_valid() && b - h.d >= 0;
  return c;
}

inline CPReport carter_payne_certificate(const CPHypotheses& h, int n, AlgebraKind kind) {
  const int a = h.lambda.part(0), b = h.lambda.part(1);
  CPReport rep{h, n, kind, Partition{{a + h.d, b - h.d}}, check_cp_hypotheses(h)};
  rep.nonzero_expected = rep.checks.all() &&
                         (kind == AlgebraKind::divided ? n >= 2 : a + h.d <= n);
  QuotientModule src = build_module(kind, h.lambda, n, h.p);
  QuotientModule dst = build_module(kind, rep.mu, n, h.p);
  rep.source_dim = src.dim;
  rep.target_dim = dst.dim;
  if (h.d > 0 && h.lambda.is_valid()) {
    try {
      FpMatrix induced = induced_map(src, dst, h.d);
      rep.well_defined = true;
      rep.nonzero = !induced.is_zero();
      rep.induced_rank = rank(induced);
    } catch (const RelationsNotPreserved&) {
      rep.well_defined = false;
    }
  }
  return rep;
}

// Multiplicities in the Weyl-character basis; defined because those
// characters are the Schur polynomials.
inline std::map<Partition, long long> weyl_factor_multiplicities(const SymPolyInt& ch, int n) {
  if (ch.n != n) throw std::invalid_argument("weyl_factor_multiplicities: variable count mismatch");
  return schur_expand(ch);
}

}  // namespace weylhom
