#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "core.hpp"

namespace semigroup_lab {

using Quad = std::array<Int, 4>;
using Triple = std::array<Int, 3>;

/// lhs_coeff * d[lhs_index] == sum of triple[t] * d[others[t]] for every triple.
struct Relation {
  int lhs_index = 0;
  Int lhs_coeff = 0;
  std::array<int, 3> others{};
  std::vector<Triple> triples;

  /// Coefficient of generator `index` in triple t (0 for lhs_index).
  Int coefficient(std::size_t t, int index) const {
    for (int p = 0; p < 3; ++p) {
      if (others[p] == index) return triples[t][p];
    }
    return 0;
  }
};

inline std::array<int, 3> other_indices(int i) {
  std::array<int, 3> out{};
  int p = 0;
  for (int j = 0; j < 4; ++j) {
    if (j != i) out[p++] = j;
  }
  return out;
}

inline void require_quad(const Quad& d) {
  for (Int x : d) {
    if (x <= 0) throw SemigroupError(ErrorCode::NotEmbeddingDim4, "generator " + to_string(x));
  }
  NumericalSemigroup s(std::vector<Int>(d.begin(), d.end()));
  if (s.embedding_dimension() != 4) {
    throw SemigroupError(ErrorCode::NotEmbeddingDim4,
                         "embedding dimension " + std::to_string(s.embedding_dimension()));
  }
}

/// Sorted minimal generators of an embedding dimension 4 semigroup.
inline Quad quad_of(const NumericalSemigroup& s) {
  if (s.embedding_dimension() != 4) {
    throw SemigroupError(ErrorCode::NotEmbeddingDim4,
                         "embedding dimension " + std::to_string(s.embedding_dimension()));
  }
  const auto& g = s.minimal_generators();
  return {g[0], g[1], g[2], g[3]};
}

namespace detail {

inline bool in_residue_table(const std::vector<Int>& dist, Int modulus, Int x) {
  if (x < 0) return false;
  Int d = dist[static_cast<std::size_t>(x % modulus)];
  return d != kIntMax && d <= x;
}

inline std::vector<Triple> triples_of(const Quad& d, const std::array<int, 3>& others, Int value,
                                      bool need_first_positive) {
  std::array<Int, 3> gens{d[others[0]], d[others[1]], d[others[2]]};
  std::vector<Triple> out;
  for_each_factorization(std::span<const Int>(gens), value, [&](const Factorization& z) {
    if (need_first_positive && z[0] == 0) return;
    out.push_back({z[0], z[1], z[2]});
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

inline Relation minimal_relation_of(const Quad& d, int i) {
  auto others = other_indices(i);
  std::array<Int, 3> gens{d[others[0]], d[others[1]], d[others[2]]};
  Int modulus = *std::min_element(gens.begin(), gens.end());
  auto dist = residue_distances(gens, modulus);
  for (Int m = 1;; ++m) {
    if (detail::in_residue_table(dist, modulus, m * d[i])) {
      return Relation{i, m, others, detail::triples_of(d, others, m * d[i], false)};
    }
    if (m > modulus) {
      throw SemigroupError(ErrorCode::NotEmbeddingDim4, "no relation for generator " +
                                                            to_string(d[i]));
    }
  }
}

/// Least a with a*d_i in the semigroup generated by the other three, with every triple.
inline Relation minimal_relation(const Quad& d, int i) {
  require_quad(d);
  return minimal_relation_of(d, i);
}

inline Relation d0_positive_relation_of(const Quad& d, int i, int anchor) {
  std::array<int, 3> others{};
  others[0] = anchor;
  int p = 1;
  for (int j = 0; j < 4; ++j) {
    if (j != i && j != anchor) others[p++] = j;
  }
  std::array<Int, 3> gens{d[others[0]], d[others[1]], d[others[2]]};
  Int modulus = d[anchor];
  auto dist = residue_distances(gens, modulus);
  // m*d_i - lambda*d_anchor in <d_k, d_l> for some lambda >= 1
  // iff m*d_i - d_anchor lies in <d_anchor, d_k, d_l>
  for (Int m = 1;; ++m) {
    if (detail::in_residue_table(dist, modulus, m * d[i] - d[anchor])) {
      auto triples = detail::triples_of(d, others, m * d[i], true);
      // report triples in increasing index order like every other relation
      auto sorted_others = other_indices(i);
      std::vector<Triple> reordered;
      for (const auto& t : triples) {
        Triple r{};
        for (int q = 0; q < 3; ++q) {
          for (int s = 0; s < 3; ++s) {
            if (others[s] == sorted_others[q]) r[q] = t[s];
          }
        }
        reordered.push_back(r);
      }
      std::sort(reordered.begin(), reordered.end());
      return Relation{i, m, sorted_others, reordered};
    }
  }
}

/// Least b with b*d_i = l0*d_anchor + ... having l0 >= 1, with every such triple.
inline Relation d0_positive_relation(const Quad& d, int i, int anchor = 0) {
  require_quad(d);
  if (i == anchor || i < 0 || i > 3 || anchor < 0 || anchor > 3) {
    throw SemigroupError(ErrorCode::OutOfRange, "bad index pair");
  }
  return d0_positive_relation_of(d, i, anchor);
}

enum class ArrangementMode { PropTrick, PropNotTrick };

inline const char* mode_name(ArrangementMode m) {
  return m == ArrangementMode::PropTrick ? "PROP_TRICK" : "PROP_NOT_TRICK";
}

/// order[0] is the apex; generators are addressed as positions in the sorted quad.
struct Arrangement {
  int apex = 0;
  std::array<int, 4> order{0, 1, 2, 3};
  ArrangementMode mode = ArrangementMode::PropTrick;

  Quad arranged(const Quad& d) const {
    return {d[order[0]], d[order[1]], d[order[2]], d[order[3]]};
  }
};

/// Minimal (a) and apex-positive (b) relation coefficients in arranged order.
struct RelationTable {
  Quad d{};
  std::array<Relation, 4> a;
  /// b[0] is unused.
  std::array<Relation, 4> b;

  Int a_coeff(int i) const { return a[i].lhs_coeff; }
  Int b_coeff(int i) const { return b[i].lhs_coeff; }
};

inline RelationTable relation_table(const Quad& arranged) {
  RelationTable t;
  t.d = arranged;
  for (int i = 0; i < 4; ++i) t.a[i] = minimal_relation_of(arranged, i);
  for (int i = 1; i < 4; ++i) t.b[i] = d0_positive_relation_of(arranged, i, 0);
  return t;
}

inline Arrangement select_arrangement(const Quad& d) {
  require_quad(d);
  std::array<Relation, 4> a;
  for (int i = 0; i < 4; ++i) a[i] = minimal_relation_of(d, i);

  for (int apex = 0; apex < 4; ++apex) {
    int equal = 0;
    for (int m = 0; m < 4; ++m) {
      if (m == apex) continue;
      if (d0_positive_relation_of(d, m, apex).lhs_coeff == a[m].lhs_coeff) ++equal;
    }
    if (equal >= 2) {
      Arrangement arr;
      arr.apex = apex;
      arr.order[0] = apex;
      auto rest = other_indices(apex);
      std::copy(rest.begin(), rest.end(), arr.order.begin() + 1);
      arr.mode = ArrangementMode::PropTrick;
      return arr;
    }
  }

  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    auto value = [&](int i) { return a[perm[i]].lhs_coeff * d[perm[i]]; };
    if (value(0) != value(1) || value(2) != value(3)) continue;
    if (d0_positive_relation_of(d, perm[1], perm[0]).lhs_coeff != a[perm[1]].lhs_coeff) continue;
    return Arrangement{perm[0], perm, ArrangementMode::PropNotTrick};
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::string text;
  for (Int x : d) text += to_string(x) + " ";
  throw SemigroupError(ErrorCode::ArrangementNotFound, "no arrangement for " + text);
}

/// Frobenius number of <d1, d2, d3> from its minimal relations.
inline Int frobenius_3gen(Int d1, Int d2, Int d3) {
  if (gcd(d1, d2) != 1 || gcd(d1, d3) != 1 || gcd(d2, d3) != 1) {
    throw SemigroupError(ErrorCode::NotPairwiseCoprime, "generators share a factor");
  }
  NumericalSemigroup s({d1, d2, d3});
  if (s.embedding_dimension() != 3) {
    throw SemigroupError(ErrorCode::NotEmbeddingDim3,
                         "embedding dimension " + std::to_string(s.embedding_dimension()));
  }
  std::array<Int, 3> d{d1, d2, d3};
  auto least = [&](int i) {
    std::array<Int, 2> rest{};
    int p = 0;
    for (int j = 0; j < 3; ++j) {
      if (j != i) rest[p++] = d[j];
    }
    for (Int m = 1;; ++m) {
      if (representable(rest, m * d[i])) return m;
    }
  };
  Int a11 = least(0), a22 = least(1), a33 = least(2);
  // a12, a13 with both parts positive; pairwise coprimality forces uniqueness
  Int a12 = -1, a13 = -1;
  detail::solve_two(d2, d3, a11 * d1, [&](Int x, Int y) {
    if (a12 < 0 && x > 0 && y > 0) {
      a12 = x;
      a13 = y;
    }
  });
  if (a12 < 0) throw SemigroupError(ErrorCode::NotPairwiseCoprime, "degenerate relation");
  Int first = (a22 - 1) * d2 + (a13 - 1) * d3;
  Int second = (a12 - 1) * d2 + (a33 - 1) * d3;
  return std::max(first, second) - d1;
}

}  // namespace semigroup_lab
