#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "core.hpp"
#include "lshape.hpp"
#include "relations.hpp"

namespace semigroup_lab {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
};

/// max(|z - gcd(z, z')|, |z' - gcd(z, z')|) with |.| the coordinate sum.
inline Int distance(const Factorization& z, const Factorization& w) {
  if (z.size() != w.size()) throw SemigroupError(ErrorCode::LengthMismatch, "different lengths");
  Int left = 0, right = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    Int common = std::min(z[i], w[i]);
    left += z[i] - common;
    right += w[i] - common;
  }
  return std::max(left, right);
}

/// Classes of the chain closure of "shares a generator", each sorted, ordered by least member.
inline std::vector<std::vector<Factorization>> r_classes(const std::vector<Factorization>& set) {
  if (set.empty()) return {};
  std::size_t width = set.front().size();
  UnionFind uf(set.size());
  std::vector<std::size_t> first(width, set.size());
  for (std::size_t t = 0; t < set.size(); ++t) {
    if (set[t].size() != width) throw SemigroupError(ErrorCode::LengthMismatch, "ragged set");
    for (std::size_t i = 0; i < width; ++i) {
      if (set[t][i] == 0) continue;
      if (first[i] == set.size()) {
        first[i] = t;
      } else {
        uf.unite(first[i], t);
      }
    }
  }
  std::map<std::size_t, std::vector<Factorization>> groups;
  for (std::size_t t = 0; t < set.size(); ++t) groups[uf.find(t)].push_back(set[t]);
  std::vector<std::vector<Factorization>> out;
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

/// Largest edge of a minimum spanning tree of the complete distance graph (Prim).
inline Int catenary_of_set(const std::vector<Factorization>& set) {
  std::size_t n = set.size();
  if (n <= 1) return 0;
  std::vector<Int> best(n, kIntMax);
  std::vector<bool> done(n, false);
  best[0] = 0;
  Int worst = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!done[v] && (pick == n || best[v] < best[pick])) pick = v;
    }
    done[pick] = true;
    worst = std::max(worst, best[pick]);
    for (std::size_t v = 0; v < n; ++v) {
      if (!done[v]) best[v] = std::min(best[v], distance(set[pick], set[v]));
    }
  }
  return worst;
}

inline Int catenary_of_element(const NumericalSemigroup& s, Int x) {
  if (!s.contains(x)) throw SemigroupError(ErrorCode::NotInSemigroup, to_string(x));
  return catenary_of_set(factorizations(s, x));
}

/// Intersection over each minimal generator d_i of { w + d_j : w in Ap(S, d_i), j != i }.
inline std::vector<Int> betti_candidates_apery(const NumericalSemigroup& s) {
  const auto& g = s.minimal_generators();
  if (g.size() < 2) return {};
  std::vector<Int> current;
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto ap = apery_set(s, g[i]).elements;
    std::vector<Int> here;
    for (Int w : ap) {
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (j != i) here.push_back(w + g[j]);
      }
    }
    std::sort(here.begin(), here.end());
    here.erase(std::unique(here.begin(), here.end()), here.end());
    if (i == 0) {
      current = std::move(here);
    } else {
      std::vector<Int> meet;
      std::set_intersection(current.begin(), current.end(), here.begin(), here.end(),
                            std::back_inserter(meet));
      current = std::move(meet);
    }
  }
  return current;
}

/// At most one of a10, a20, a30 is forced to be zero by every triple choice.
inline bool apex_assumption_holds(const RelationTable& rt) {
  int forced_zero = 0;
  for (int i = 1; i <= 3; ++i) {
    bool any_positive = false;
    for (std::size_t t = 0; t < rt.a[i].triples.size(); ++t) {
      if (rt.a[i].coefficient(t, 0) > 0) any_positive = true;
    }
    if (!any_positive) ++forced_zero;
  }
  return forced_zero <= 1;
}

struct CarvingBasis {
  Quad d{};
  Arrangement arrangement;
  RelationTable relations;
  std::vector<Cube> shape;
  /// Irredundant points whose regions remove exactly the complement of the shape.
  std::vector<CarvePoint> points;
};

/// Greedy irredundant carving set of the PROP_TRICK L-shape, taken in lexicographic order.
inline CarvingBasis minimal_carving_points(const Quad& sorted, const Arrangement& arr) {
  if (arr.mode != ArrangementMode::PropTrick) {
    throw SemigroupError(ErrorCode::AssumptionViolated, "needs a PROP_TRICK arrangement");
  }
  CarvingBasis basis;
  basis.d = arr.arranged(sorted);
  basis.arrangement = arr;
  basis.relations = relation_table(basis.d);
  const RelationTable& rt = basis.relations;
  if (!apex_assumption_holds(rt)) {
    throw SemigroupError(ErrorCode::AssumptionViolated, "two of a10, a20, a30 vanish");
  }
  basis.shape = lshape_via_proptrick(sorted, arr).cubes;

  Figure pool = figure_R(rt);
  for (int i = 1; i <= 3; ++i) {
    auto pts = detail::relation_points(rt.a[i], PointSource::MinimalRelation);
    pool.points.insert(pool.points.end(), pts.begin(), pts.end());
  }
  // the shape is decided by where its complement starts, which lies within a + 1
  std::array<Int, 3> box{rt.a_coeff(1) + 1, rt.a_coeff(2) + 1, rt.a_coeff(3) + 1};
  std::vector<CarvePoint> points = pool.points;
  std::stable_sort(points.begin(), points.end(),
                   [](const CarvePoint& x, const CarvePoint& y) { return x.coords < y.coords; });
  points.erase(std::unique(points.begin(), points.end(),
                           [](const CarvePoint& x, const CarvePoint& y) { return x.coords == y.coords; }),
               points.end());
  auto target = carve(basis.d, box, points);
  if (target != basis.shape) {
    throw SemigroupError(ErrorCode::ShapeMismatch, "carving points do not reproduce the L-shape");
  }
  // points whose corner lies outside the box never matter
  std::erase_if(points, [&](const CarvePoint& p) {
    for (int axis = 0; axis < 3; ++axis) {
      if (p.coords[axis] >= box[axis]) return true;
    }
    return false;
  });
  auto reference = column_heights(box, points);
  std::vector<bool> keep(points.size(), true);
  std::vector<CarvePoint> trial;
  for (std::size_t t = 0; t < points.size(); ++t) {
    keep[t] = false;
    trial.clear();
    for (std::size_t q = 0; q < points.size(); ++q) {
      if (keep[q]) trial.push_back(points[q]);
    }
    if (column_heights(box, trial) != reference) keep[t] = true;
  }
  for (std::size_t t = 0; t < points.size(); ++t) {
    if (keep[t]) basis.points.push_back(points[t]);
  }
  return basis;
}

inline Int theta_value(const Quad& d, const CarvePoint& p) {
  Int v = 0;
  for (int axis = 0; axis < 3; ++axis) {
    if (p.coords[axis] >= 0) v += p.coords[axis] * d[axis + 1];
  }
  return v;
}

inline std::vector<Int> betti_candidates_U(const Quad& sorted, const Arrangement& arr) {
  auto basis = minimal_carving_points(sorted, arr);
  std::vector<Int> out;
  for (const auto& p : basis.points) out.push_back(theta_value(basis.d, p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

enum class BettiStrategy { Auto, Apery, U };

inline const char* strategy_name(BettiStrategy s) {
  switch (s) {
    case BettiStrategy::Auto: return "AUTO";
    case BettiStrategy::Apery: return "APERY";
    case BettiStrategy::U: return "U";
  }
  return "?";
}

struct BettiReport {
  std::vector<Int> elements;
  BettiStrategy candidates_used = BettiStrategy::Apery;
  std::size_t candidate_count = 0;
};

/// True when the U candidate set is available for S.
inline bool u_strategy_applies(const NumericalSemigroup& s) {
  if (s.embedding_dimension() != 4) return false;
  Quad q = quad_of(s);
  Arrangement arr = select_arrangement(q);
  if (arr.mode != ArrangementMode::PropTrick) return false;
  return apex_assumption_holds(relation_table(arr.arranged(q)));
}

inline BettiReport betti_elements(const NumericalSemigroup& s,
                                  BettiStrategy strategy = BettiStrategy::Auto) {
  BettiReport report;
  std::vector<Int> candidates;
  bool use_u = strategy == BettiStrategy::U ||
               (strategy == BettiStrategy::Auto && u_strategy_applies(s));
  if (use_u) {
    Quad q = quad_of(s);
    candidates = betti_candidates_U(q, select_arrangement(q));
    report.candidates_used = BettiStrategy::U;
  } else {
    candidates = betti_candidates_apery(s);
    report.candidates_used = BettiStrategy::Apery;
  }
  report.candidate_count = candidates.size();
  for (Int b : candidates) {
    if (r_classes(factorizations(s, b)).size() >= 2) report.elements.push_back(b);
  }
  return report;
}

inline Int catenary_degree(const NumericalSemigroup& s,
                           BettiStrategy strategy = BettiStrategy::Auto) {
  Int c = 0;
  for (Int b : betti_elements(s, strategy).elements) {
    c = std::max(c, catenary_of_set(factorizations(s, b)));
  }
  return c;
}

using Presentation = std::vector<std::pair<Factorization, Factorization>>;

/// Per Betti element: least member of every R-class, joined to the first class's member.
inline Presentation minimal_presentation(const NumericalSemigroup& s,
                                         BettiStrategy strategy = BettiStrategy::Auto) {
  Presentation rho;
  for (Int b : betti_elements(s, strategy).elements) {
    auto classes = r_classes(factorizations(s, b));
    for (std::size_t c = 1; c < classes.size(); ++c) {
      rho.emplace_back(classes.front().front(), classes[c].front());
    }
  }
  return rho;
}

enum class RelationKind { TwoFactorizations, Family, NotBetti };

inline const char* relation_kind_name(RelationKind k) {
  switch (k) {
    case RelationKind::TwoFactorizations: return "TWO_FACTORIZATIONS";
    case RelationKind::Family: return "FAMILY";
    case RelationKind::NotBetti: return "NOT_BETTI";
  }
  return "?";
}

/// Factorizations are indexed by the arranged generators.
struct RelationValueClass {
  RelationKind kind = RelationKind::NotBetti;
  Int value = 0;
  std::vector<Factorization> factorizations;
};

/// Predicts phi^{-1}(l0*d0 + lu*du) for an identity point with exactly one negative
/// coordinate u, where l0*d0 + lu*du == lv*dv + lw*dw.
inline RelationValueClass classify_relation_value(const Quad& sorted, const Arrangement& arr,
                                                  const CarvePoint& point) {
  auto fail = [](const std::string& why) {
    return SemigroupError(ErrorCode::HypothesisNotMet, why);
  };
  if (arr.mode != ArrangementMode::PropTrick) throw fail("needs a PROP_TRICK arrangement");
  if (point.source == PointSource::AxisCut) throw fail("axis cuts carry no identity");
  Quad d = arr.arranged(sorted);
  RelationTable rt = relation_table(d);
  if (!apex_assumption_holds(rt)) throw fail("two of a10, a20, a30 vanish");

  int u = 0;
  for (int axis = 1; axis <= 3; ++axis) {
    if (point.coords[axis - 1] < 0) {
      if (u != 0) throw fail("more than one negative coordinate");
      u = axis;
    }
  }
  if (u == 0) throw fail("no negative coordinate");
  int v = u == 1 ? 2 : 1;
  int w = u == 3 ? 2 : 3;
  Int l0 = point.witness[0], lu = -point.coords[u - 1];
  Int lv = point.coords[v - 1], lw = point.coords[w - 1];
  if (l0 <= 0 || lu <= 0 || lv <= 0 || lw <= 0) throw fail("a coefficient is not positive");
  if (l0 * d[0] + lu * d[u] != lv * d[v] + lw * d[w]) throw fail("witness is not an identity");
  auto basis = minimal_carving_points(sorted, arr);
  bool in_v = std::any_of(basis.points.begin(), basis.points.end(),
                          [&](const CarvePoint& p) { return p.coords == point.coords; });
  if (!in_v) throw fail("point is not in the minimal carving set");

  RelationValueClass out;
  out.value = l0 * d[0] + lu * d[u];
  Factorization right(4, 0);
  right[v] = lv;
  right[w] = lw;
  Int a0 = rt.a_coeff(0), au = rt.a_coeff(u);
  if (a0 > l0 && au > lu) {
    Factorization left(4, 0);
    left[0] = l0;
    left[u] = lu;
    out.kind = RelationKind::TwoFactorizations;
    out.factorizations = {left, right};
  } else if (a0 * d[0] != au * d[u]) {
    out.kind = RelationKind::NotBetti;
    return out;
  } else {
    out.kind = RelationKind::Family;
    out.factorizations.push_back(right);
    // shift along a0*d0 == au*du in both directions
    Int lo = -(l0 / a0), hi = lu / au;
    for (Int t = lo; t <= hi; ++t) {
      Factorization z(4, 0);
      z[0] = l0 + t * a0;
      z[u] = lu - t * au;
      out.factorizations.push_back(z);
    }
  }
  std::sort(out.factorizations.begin(), out.factorizations.end());
  return out;
}

}  // namespace semigroup_lab
