#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "core.hpp"
#include "relations.hpp"

namespace semigroup_lab {

/// Coordinate meaning "no constraint on this axis".
inline constexpr Int kUnbounded = -(Int{1} << 100);

enum class PointSource { MinimalRelation, ApexPositive, Identity, AxisCut, Schema };

inline const char* source_name(PointSource s) {
  switch (s) {
    case PointSource::MinimalRelation: return "minimal_relation";
    case PointSource::ApexPositive: return "apex_positive";
    case PointSource::Identity: return "identity";
    case PointSource::AxisCut: return "axis_cut";
    case PointSource::Schema: return "schema";
  }
  return "unknown";
}

/// Deletes every cube (i, j, k) with i >= x, j >= y and k >= z.
/// witness holds (l0, l1, l2, l3) with x*d1 + y*d2 + z*d3 == l0*d0 where it applies.
struct CarvePoint {
  std::array<Int, 3> coords{};
  PointSource source = PointSource::MinimalRelation;
  std::array<Int, 4> witness{};

  bool deletes(Int i, Int j, Int k) const {
    return i >= coords[0] && j >= coords[1] && k >= coords[2];
  }
};

struct Cube {
  Int i = 0, j = 0, k = 0;
  Int label = 0;

  auto key() const { return std::array<Int, 3>{i, j, k}; }
  bool operator==(const Cube&) const = default;
};

/// A box [0,B1) x [0,B2) x [0,B3) with the regions of a set of points removed.
struct Figure {
  Quad d{};
  std::array<Int, 3> bounds{};
  std::vector<CarvePoint> points;
};

/// Column heights over the (j, k) grid of the box: height[j * B3 + k] cubes survive.
inline std::vector<Int> column_heights(const std::array<Int, 3>& bounds,
                                       const std::vector<CarvePoint>& points) {
  auto nj = static_cast<std::size_t>(std::max<Int>(bounds[1], 0));
  auto nk = static_cast<std::size_t>(std::max<Int>(bounds[2], 0));
  std::vector<Int> height(nj * nk, std::max<Int>(bounds[0], 0));
  for (const auto& p : points) {
    Int y = std::max<Int>(p.coords[1], 0), z = std::max<Int>(p.coords[2], 0);
    if (y >= static_cast<Int>(nj) || z >= static_cast<Int>(nk)) continue;
    auto at = static_cast<std::size_t>(y) * nk + static_cast<std::size_t>(z);
    height[at] = std::min(height[at], std::max<Int>(p.coords[0], 0));
  }
  for (std::size_t j = 0; j < nj; ++j) {
    for (std::size_t k = 0; k < nk; ++k) {
      Int& h = height[j * nk + k];
      if (j > 0) h = std::min(h, height[(j - 1) * nk + k]);
      if (k > 0) h = std::min(h, height[j * nk + k - 1]);
    }
  }
  return height;
}

/// Surviving cubes in lexicographic order.
inline std::vector<Cube> carve(const Quad& d, const std::array<Int, 3>& bounds,
                               const std::vector<CarvePoint>& points) {
  auto nj = static_cast<std::size_t>(std::max<Int>(bounds[1], 0));
  auto nk = static_cast<std::size_t>(std::max<Int>(bounds[2], 0));
  auto height = column_heights(bounds, points);
  std::vector<Cube> cubes;
  for (Int i = 0; i < std::max<Int>(bounds[0], 0); ++i) {
    for (std::size_t j = 0; j < nj; ++j) {
      if (height[j * nk] <= i) break;
      for (std::size_t k = 0; k < nk; ++k) {
        if (height[j * nk + k] <= i) break;
        Int jj = static_cast<Int>(j), kk = static_cast<Int>(k);
        cubes.push_back({i, jj, kk, i * d[1] + jj * d[2] + kk * d[3]});
      }
    }
  }
  return cubes;
}

inline std::vector<Cube> carve(const Figure& f) { return carve(f.d, f.bounds, f.points); }

namespace detail {

inline CarvePoint axis_cut(int axis, Int at) {
  CarvePoint p;
  p.coords = {kUnbounded, kUnbounded, kUnbounded};
  p.coords[axis] = at;
  p.source = PointSource::AxisCut;
  return p;
}

// Point of relation `r` on axis r.lhs_index (1..3): lhs at its own axis, minus the rest.
inline std::vector<CarvePoint> relation_points(const Relation& r, PointSource source) {
  std::vector<CarvePoint> out;
  for (std::size_t t = 0; t < r.triples.size(); ++t) {
    CarvePoint p;
    p.source = source;
    for (int axis = 1; axis <= 3; ++axis) {
      p.coords[axis - 1] = axis == r.lhs_index ? r.lhs_coeff : -r.coefficient(t, axis);
    }
    p.witness = {r.coefficient(t, 0), 0, 0, 0};
    p.witness[r.lhs_index] = r.lhs_coeff;
    for (int axis = 1; axis <= 3; ++axis) {
      if (axis != r.lhs_index) p.witness[axis] = r.coefficient(t, axis);
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace detail

/// The figure R: the box of apex-positive coefficients with every provable deletion applied.
inline Figure figure_R(const RelationTable& rt) {
  const Quad& d = rt.d;
  Figure f;
  f.d = d;
  f.bounds = {rt.b_coeff(1), rt.b_coeff(2), rt.b_coeff(3)};

  const Relation& r0 = rt.a[0];
  for (std::size_t t = 0; t < r0.triples.size(); ++t) {
    CarvePoint p;
    p.source = PointSource::MinimalRelation;
    p.coords = r0.triples[t];
    p.witness = {r0.lhs_coeff, r0.triples[t][0], r0.triples[t][1], r0.triples[t][2]};
    f.points.push_back(p);
  }
  for (int i = 1; i <= 3; ++i) {
    auto pts = detail::relation_points(rt.b[i], PointSource::ApexPositive);
    f.points.insert(f.points.end(), pts.begin(), pts.end());
  }

  // l0*d0 + lu*du == lv*dv + lw*dw with l0 > 0, lv < b_vv, lw < b_ww gives (-lu, lv, lw)
  for (int u = 1; u <= 3; ++u) {
    int v = u == 1 ? 2 : 1;
    int w = u == 3 ? 2 : 3;
    for (Int lv = 0; lv < rt.b_coeff(v); ++lv) {
      for (Int lw = 0; lw < rt.b_coeff(w); ++lw) {
        Int total = lv * d[v] + lw * d[w];
        for (Int lu = 0; lu * d[u] < total; ++lu) {
          Int rest = total - lu * d[u];
          if (rest % d[0] != 0) continue;
          CarvePoint p;
          p.source = PointSource::Identity;
          p.coords[u - 1] = -lu;
          p.coords[v - 1] = lv;
          p.coords[w - 1] = lw;
          p.witness = {rest / d[0], 0, 0, 0};
          p.witness[u] = lu;
          p.witness[v] = lv;
          p.witness[w] = lw;
          f.points.push_back(p);
          break;
        }
      }
    }
  }
  return f;
}

enum class NotTrickCut { Z, Y };

struct LShape {
  Arrangement arrangement;
  /// Generators in arranged order (d0 is the apex).
  Quad d{};
  Figure figure;
  std::vector<Cube> cubes;

  std::vector<Int> labels() const {
    std::vector<Int> out;
    out.reserve(cubes.size());
    for (const auto& c : cubes) out.push_back(c.label);
    std::sort(out.begin(), out.end());
    return out;
  }
};

inline LShape lshape_via_proptrick(const Quad& sorted, const Arrangement& arr) {
  if (arr.mode != ArrangementMode::PropTrick) {
    throw SemigroupError(ErrorCode::AssumptionViolated, "arrangement is not PROP_TRICK");
  }
  Quad d = arr.arranged(sorted);
  RelationTable rt = relation_table(d);
  LShape ls{arr, d, figure_R(rt), {}};
  for (int axis = 0; axis < 3; ++axis) {
    ls.figure.points.push_back(detail::axis_cut(axis, rt.a_coeff(axis + 1)));
  }
  ls.cubes = carve(ls.figure);
  if (static_cast<Int>(ls.cubes.size()) != d[0]) {
    throw SemigroupError(ErrorCode::CardinalityMismatch,
                         std::to_string(ls.cubes.size()) + " cubes, expected " + to_string(d[0]));
  }
  return ls;
}

inline LShape lshape_via_propnottrick(const Quad& sorted, const Arrangement& arr,
                                      NotTrickCut cut = NotTrickCut::Z) {
  if (arr.mode != ArrangementMode::PropNotTrick) {
    throw SemigroupError(ErrorCode::AssumptionViolated, "arrangement is not PROP_NOT_TRICK");
  }
  Quad d = arr.arranged(sorted);
  RelationTable rt = relation_table(d);
  LShape ls{arr, d, figure_R(rt), {}};
  if (cut == NotTrickCut::Z) {
    ls.figure.points.push_back(detail::axis_cut(2, rt.a_coeff(3)));
  } else {
    ls.figure.points.push_back(detail::axis_cut(1, rt.a_coeff(2)));
  }
  ls.cubes = carve(ls.figure);
  if (static_cast<Int>(ls.cubes.size()) != d[0]) {
    throw SemigroupError(ErrorCode::CardinalityMismatch,
                         std::to_string(ls.cubes.size()) + " cubes, expected " + to_string(d[0]));
  }
  return ls;
}

inline LShape lshape_for(const Quad& sorted, const Arrangement& arr) {
  return arr.mode == ArrangementMode::PropTrick ? lshape_via_proptrick(sorted, arr)
                                                : lshape_via_propnottrick(sorted, arr);
}

/// Builds the L-shape and checks its labels against the Apéry set of the apex.
inline LShape lshape_auto(const NumericalSemigroup& s) {
  Quad sorted = quad_of(s);
  Arrangement arr = select_arrangement(sorted);
  LShape ls = lshape_for(sorted, arr);
  auto expected = apery_set(s, ls.d[0]).sorted();
  if (ls.labels() != expected) {
    throw SemigroupError(ErrorCode::ShapeMismatch, "labels differ from the Apéry set");
  }
  return ls;
}

/// Staircase of lexicographically least factorizations of the Apéry set of d[0] over d[1..3].
/// Down-closed because lex order is compatible with addition.
inline LShape lshape_from_apery(const Quad& sorted, const Arrangement& arr) {
  Quad d = arr.arranged(sorted);
  NumericalSemigroup s(std::vector<Int>(d.begin(), d.end()));
  std::array<Int, 3> rest{d[1], d[2], d[3]};
  LShape ls;
  ls.arrangement = arr;
  ls.d = d;
  ls.figure.d = d;
  for (Int w : apery_set(s, d[0]).elements) {
    auto z = factorizations_over(std::span<const Int>(rest), w).front();
    ls.cubes.push_back({z[0], z[1], z[2], w});
    for (int t = 0; t < 3; ++t) ls.figure.bounds[t] = std::max(ls.figure.bounds[t], z[t] + 1);
  }
  std::sort(ls.cubes.begin(), ls.cubes.end(),
            [](const Cube& a, const Cube& b) { return a.key() < b.key(); });
  return ls;
}

struct LShapeStats {
  Int frobenius = 0;
  Int genus = 0;
  AperySet apery;
  Cube max_corner;
};

inline LShapeStats lshape_stats(const LShape& ls) {
  if (ls.cubes.empty()) throw SemigroupError(ErrorCode::CardinalityMismatch, "empty shape");
  LShapeStats st;
  Int d0 = ls.d[0];
  st.max_corner = ls.cubes.front();
  Wide sum = 0;
  st.apery.modulus = d0;
  st.apery.elements.assign(static_cast<std::size_t>(d0), kIntMax);
  for (const auto& c : ls.cubes) {
    if (c.label > st.max_corner.label) st.max_corner = c;
    sum += c.label;
    auto r = static_cast<std::size_t>(c.label % d0);
    st.apery.elements[r] = std::min(st.apery.elements[r], c.label);
  }
  st.frobenius = st.max_corner.label - d0;
  Wide numer = 2 * sum - Wide{d0} * (d0 - 1);
  if (numer % (2 * d0) != 0) {
    throw SemigroupError(ErrorCode::NonIntegralGenus, "label sum not compatible with d0");
  }
  st.genus = numer / (2 * d0);
  return st;
}

/// Every minimal coefficient equals its apex-positive counterpart.
inline bool is_unique_lshape(const Quad& arranged) {
  for (int i = 1; i <= 3; ++i) {
    if (minimal_relation_of(arranged, i).lhs_coeff != d0_positive_relation_of(arranged, i, 0).lhs_coeff) {
      return false;
    }
  }
  return true;
}

/// True iff the carving has exactly d0 cubes and each claimed coefficient is the true one:
/// the apex-positive minimum when the claimed relation uses d0, the plain minimum otherwise.
inline bool confirm_minimal_relations(const Quad& arranged, const std::vector<Cube>& carved,
                                      const std::array<Relation, 3>& claimed) {
  if (static_cast<Int>(carved.size()) != arranged[0]) return false;
  for (const auto& r : claimed) {
    if (r.lhs_index < 1 || r.lhs_index > 3 || r.triples.empty()) return false;
    bool uses_apex = r.coefficient(0, 0) > 0;
    Int truth = uses_apex ? d0_positive_relation_of(arranged, r.lhs_index, 0).lhs_coeff
                          : minimal_relation_of(arranged, r.lhs_index).lhs_coeff;
    if (truth != r.lhs_coeff) return false;
  }
  return true;
}

enum class VoxelFormat { Text, Json, Obj };

inline void export_text(const LShape& ls, std::ostream& os) {
  for (const auto& c : ls.cubes) {
    os << to_string(c.i) << ' ' << to_string(c.j) << ' ' << to_string(c.k) << ' '
       << to_string(c.label) << '\n';
  }
}

inline nlohmann::ordered_json to_json(const LShape& ls) {
  nlohmann::ordered_json j;
  auto num = [](Int v) { return static_cast<long long>(v); };
  j["generators"] = nlohmann::json::array();
  for (Int x : ls.d) j["generators"].push_back(num(x));
  j["arrangement"] = {{"apex", num(ls.d[0])},
                      {"order", {ls.arrangement.order[0], ls.arrangement.order[1],
                                 ls.arrangement.order[2], ls.arrangement.order[3]}},
                      {"mode", mode_name(ls.arrangement.mode)}};
  auto cubes = nlohmann::ordered_json::array();
  for (const auto& c : ls.cubes) {
    cubes.push_back({{"i", num(c.i)}, {"j", num(c.j)}, {"k", num(c.k)}, {"label", num(c.label)}});
  }
  j["cubes"] = std::move(cubes);
  return j;
}

/// Closed triangulated surface of the union of the unit cubes.
inline void export_obj(const LShape& ls, std::ostream& os) {
  std::set<std::array<Int, 3>> solid;
  for (const auto& c : ls.cubes) solid.insert(c.key());
  std::map<std::array<Int, 3>, std::size_t> index;
  std::vector<std::array<Int, 3>> vertices;
  std::vector<std::array<std::size_t, 3>> faces;
  auto vertex = [&](std::array<Int, 3> v) {
    auto [it, fresh] = index.emplace(v, vertices.size() + 1);
    if (fresh) vertices.push_back(v);
    return it->second;
  };
  // each face is listed counter-clockwise seen from outside
  for (const auto& c : ls.cubes) {
    Int x = c.i, y = c.j, z = c.k;
    struct Side {
      std::array<Int, 3> step;
      std::array<std::array<Int, 3>, 4> corners;
    };
    const Side sides[6] = {
        {{-1, 0, 0}, {{{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {0, 1, 0}}}},
        {{1, 0, 0}, {{{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {1, 0, 1}}}},
        {{0, -1, 0}, {{{0, 0, 0}, {1, 0, 0}, {1, 0, 1}, {0, 0, 1}}}},
        {{0, 1, 0}, {{{0, 1, 0}, {0, 1, 1}, {1, 1, 1}, {1, 1, 0}}}},
        {{0, 0, -1}, {{{0, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 0, 0}}}},
        {{0, 0, 1}, {{{0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}}}},
    };
    for (const auto& side : sides) {
      if (solid.count({x + side.step[0], y + side.step[1], z + side.step[2]})) continue;
      std::array<std::size_t, 4> q{};
      for (int t = 0; t < 4; ++t) {
        q[t] = vertex({x + side.corners[t][0], y + side.corners[t][1], z + side.corners[t][2]});
      }
      faces.push_back({q[0], q[1], q[2]});
      faces.push_back({q[0], q[2], q[3]});
    }
  }
  for (const auto& v : vertices) {
    os << "v " << to_string(v[0]) << ' ' << to_string(v[1]) << ' ' << to_string(v[2]) << '\n';
  }
  for (const auto& f : faces) os << "f " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
}

inline std::string export_voxels(const LShape& ls, VoxelFormat format) {
  std::ostringstream os;
  switch (format) {
    case VoxelFormat::Text: export_text(ls, os); break;
    case VoxelFormat::Json: os << to_json(ls).dump(2) << '\n'; break;
    case VoxelFormat::Obj: export_obj(ls, os); break;
  }
  return os.str();
}

}  // namespace semigroup_lab
