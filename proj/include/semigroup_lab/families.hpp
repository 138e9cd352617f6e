#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "core.hpp"
#include "factorization.hpp"
#include "lshape.hpp"
#include "relations.hpp"
#include "schema_data.hpp"

namespace semigroup_lab {

enum class Family { Squares, Triangular };

inline const char* family_name(Family f) { return f == Family::Squares ? "squares" : "triangular"; }

inline Family parse_family(const std::string& name) {
  if (name == "squares") return Family::Squares;
  if (name == "triangular") return Family::Triangular;
  throw SemigroupError(ErrorCode::UnknownFamily, name);
}

inline Int triangular_number(Int j) { return j * (j - 1) / 2; }

/// The four generators in increasing order.
inline Quad family_generators(Family f, Int n) {
  if (n < 1) throw SemigroupError(ErrorCode::OutOfRange, "n = " + to_string(n));
  Quad q{};
  for (int t = 0; t < 4; ++t) {
    q[t] = f == Family::Squares ? (n + t) * (n + t) : triangular_number(n + 1 + t);
  }
  return q;
}

// ---------------------------------------------------------------------------
// closed forms

enum class ValueSource { Formula, Table };

struct InvariantValue {
  Int value = 0;
  ValueSource source = ValueSource::Formula;
};

struct InvariantBundle {
  std::optional<InvariantValue> frobenius;
  std::optional<InvariantValue> genus;
  std::optional<InvariantValue> catenary;
  std::optional<InvariantValue> betti_count;
  std::optional<InvariantValue> presentation_cardinality;
  /// Closed-form values at an n outside the stated validity of its row.
  std::vector<std::pair<std::string, Int>> unclaimed;
};

namespace detail {

// polynomial in p with coefficients listed from the highest power, divided exactly by div
struct KForm {
  std::vector<Int> coeffs;
  Int div = 1;
};

// polynomial in n with rational coefficients over a common denominator, valid for n >= min_n
struct NForm {
  std::vector<Int> numerators;
  Int denominator = 1;
  Int min_n = 0;
};

inline Int horner(const std::vector<Int>& coeffs, Int x) {
  Int v = 0;
  for (Int c : coeffs) v = v * x + c;
  return v;
}

struct ClassForms {
  Int step = 1, offset = 0;
  KForm frobenius, genus, catenary, presentation;
  NForm frobenius_n, genus_n, catenary_n, presentation_n;
};

inline const std::vector<ClassForms>& class_forms(Family f) {
  static const std::vector<ClassForms> squares = {
      {12, 0, {{1584, 576, 54, -2}}, {{840, 306, 27, 0}}, {{11, 2}}, {{4, 6}},
       {{11, 48, 54, -24}, 12, 24}, {{35, 153, 162, 0}, 72, 24}, {{11, 24}, 12, 24}, {{4, 72}, 12, 24}},
      {12, 4, {{1584, 2064, 902, 128}}, {{840, 1146, 509, 73}}, {{11, 7}}, {{4, 8}},
       {{11, 40, 54, -24}, 12, 16}, {{35, 153, 150, -32}, 72, 16}, {{11, 40}, 12, 16}, {{1, 20}, 3, 16}},
      {12, 8, {{1584, 3696, 2870, 738}}, {{840, 1986, 1555, 402}}, {{11, 10}}, {{4, 8}},
       {{11, 44, 54, -24}, 12, 20}, {{35, 153, 162, -64}, 72, 20}, {{11, 32}, 12, 20}, {{1, 16}, 3, 20}},
      {12, 1, {{1584, 768, 134, 6}}, {{840, 534, 103, 6}}, {{11, 4}}, {{4, 5}},
       {{11, 31, 39, -9}, 12, 25}, {{35, 162, 189, 46}, 72, 13}, {{11, 37}, 12, 13}, {{1, 14}, 3, 13}},
      {12, 5, {{1584, 2400, 1214, 201}}, {{840, 1374, 737, 129}}, {{11, 7}}, {{4, 7}},
       {{11, 35, 39, -33}, 12, 17}, {{35, 162, 177, -22}, 72, 5}, {{11, 29}, 12, 5}, {{1, 16}, 3, 17}},
      {12, 9, {{1584, 4032, 3438, 979}}, {{840, 2214, 1935, 560}}, {{11, 10}}, {{4, 7}},
       {{11, 39, 63, 3}, 12, 9}, {{35, 162, 189, -18}, 72, 9}, {{11, 21}, 12, 9}, {{1, 12}, 3, 9}},
      {4, 2, {{80, 168, 105, 14}}, {{40, 90, 60, 12}}, {{5, 4}}, {{7}},
       {{5, 12, -3, -26}, 4, 6}, {{5, 15, 0, -4}, 8, 2}, {{5, 6}, 4, 14}, {{7}, 1, 6}},
      {4, 3, {{80, 280, 329, 126}}, {{40, 150, 180, 72}}, {{5, 9}}, {{7}},
       {{5, 25, 44, 12}, 4, 7}, {{5, 30, 45, 36}, 8, 11}, {{5, 21}, 4, 7}, {{7}, 1, 15}},
  };
  static const std::vector<ClassForms> triangular = {
      {6, 0, {{72, 66, 15, -1}}, {{75, 72, 15, 0}, 2}, {{4, 1}}, {{2, 3}},
       {{2, 11, 15, -6}, 6, 6}, {{25, 144, 180, 0}, 144, 6}, {{2, 3}, 3, 6}, {{1, 9}, 3, 12}},
      {6, 2, {{72, 132, 84, 17}}, {{75, 147, 90, 18}, 2}, {{4, 3}}, {{2, 4}},
       {{2, 10, 20, 6}, 6, 2}, {{25, 144, 204, 112}, 144, 2}, {{2, 5}, 3, 8}, {{1, 10}, 3, 8}},
      {6, 4, {{72, 198, 181, 54}}, {{75, 222, 209, 62}, 2}, {{4, 5}}, {{2, 5}},
       {{2, 9, 13, 0}, 6, 4}, {{25, 144, 156, -64}, 144, 4}, {{2, 7}, 3, 4}, {{1, 11}, 3, 10}},
      {6, 1, {{108, 108, 27, -1}}, {{111, 120, 31, 0}, 2}, {{6, 3}}, {{3, 5}},
       {{3, 9, 0, -18}, 6, 1}, {{37, 129, 3, -169}, 144, 1}, {{1, 2}, 1, 3}, {{1, 9}, 2, 7}},
      {6, 3, {{108, 234, 156, 29}}, {{111, 240, 159, 30}, 2}, {{6, 5}}, {{2, 4}},
       {{3, 12, 3, -24}, 6, 3}, {{37, 147, 27, -243}, 144, 3}, {{1, 2}, 1, 3}, {{1, 9}, 3, 9}},
      {6, 5, {{108, 342, 360, 125}}, {{111, 351, 366, 126}, 2}, {{6, 7}}, {{2, 4}},
       {{3, 12, 15, 0}, 6, 5}, {{37, 147, 147, 37}, 144, 5}, {{1, 2}, 1, 5}, {{1, 7}, 3, 11}},
  };
  return f == Family::Squares ? squares : triangular;
}

struct SmallTables {
  std::map<Int, Int> frobenius, genus, catenary, presentation;
};

inline const SmallTables& small_tables(Family f) {
  static const SmallTables squares{
      {{2, 23}, {3, 119}, {4, 119}, {5, 240}, {8, 659}, {12, 2045}, {13, 2553}},
      {{3, 60}, {4, 66}, {7, 427}, {8, 389}, {12, 1161}},
      {{2, 9}, {3, 16}, {4, 9}, {6, 11}, {8, 11}, {10, 15}, {12, 15}},
      {{2, 1}, {3, 1}, {4, 6}, {5, 6}, {7, 7}, {8, 10}, {11, 6}, {12, 11}},
  };
  static const SmallTables triangular{
      {},
      {},
      {{2, 10}},
      {{2, 1}, {4, 4}, {5, 2}, {6, 4}},
  };
  return f == Family::Squares ? squares : triangular;
}

inline std::optional<InvariantValue> evaluate(const std::string& name, const KForm& k,
                                              const NForm& nf, const std::map<Int, Int>& table,
                                              Int n, Int p, InvariantBundle& bundle) {
  Int by_k = horner(k.coeffs, p);
  bool integral = by_k % k.div == 0;
  by_k /= k.div;
  if (n >= nf.min_n) {
    if (!integral) throw SemigroupError(ErrorCode::IdentityViolated, "closed form is not integral");
    Int numer = horner(nf.numerators, n);
    if (numer % nf.denominator != 0 || numer / nf.denominator != by_k) {
      throw SemigroupError(ErrorCode::IdentityViolated,
                           "closed forms disagree at n = " + to_string(n));
    }
    return InvariantValue{by_k, ValueSource::Formula};
  }
  if (integral) bundle.unclaimed.emplace_back(name, by_k);
  if (auto it = table.find(n); it != table.end()) return InvariantValue{it->second, ValueSource::Table};
  return std::nullopt;
}

inline InvariantBundle invariants_for(Family f, Int n) {
  if (n < 2) throw SemigroupError(ErrorCode::OutOfRange, "n must be at least 2");
  const ClassForms* row = nullptr;
  for (const auto& c : class_forms(f)) {
    if (n % c.step == c.offset) row = &c;
  }
  const SmallTables& tables = small_tables(f);
  Int p = (n - row->offset) / row->step;
  InvariantBundle b;
  b.frobenius = evaluate("frobenius", row->frobenius, row->frobenius_n, tables.frobenius, n, p, b);
  b.genus = evaluate("genus", row->genus, row->genus_n, tables.genus, n, p, b);
  b.catenary = evaluate("catenary", row->catenary, row->catenary_n, tables.catenary, n, p, b);
  b.presentation_cardinality = evaluate("presentation", row->presentation, row->presentation_n,
                                        tables.presentation, n, p, b);
  // each Betti element of these families carries exactly two classes
  if (b.presentation_cardinality && b.presentation_cardinality->source == ValueSource::Formula) {
    b.betti_count = b.presentation_cardinality;
  }
  return b;
}

}  // namespace detail

inline InvariantBundle squares_invariants(Int n) {
  return detail::invariants_for(Family::Squares, n);
}

inline InvariantBundle triangular_invariants(Int n) {
  return detail::invariants_for(Family::Triangular, n);
}

inline InvariantBundle family_invariants(Family f, Int n) { return detail::invariants_for(f, n); }

// ---------------------------------------------------------------------------
// relation schemas

using SignedRelation = std::array<Int, 4>;

struct SchemaRelation {
  std::string name;
  SignedRelation v{};
};

struct SchemaChain {
  std::string start, delta;
  int sign = -1;
  std::vector<SchemaRelation> steps;
};

struct CarvingSchema {
  Family family = Family::Squares;
  std::string residue_class;
  Int parameter = 0;
  Int min_parameter = 0;
  Arrangement arrangement;
  /// Generators in arranged order.
  Quad d{};
  std::array<SchemaRelation, 4> base;
  std::vector<SchemaRelation> extras;
  std::vector<SchemaChain> chains;

  std::array<Int, 3> bounds() const { return {base[1].v[1], base[2].v[2], base[3].v[3]}; }

  std::vector<CarvePoint> points() const {
    auto magnitude = [](Int x) { return x < 0 ? -x : x; };
    std::vector<CarvePoint> out;
    auto from_identity = [&](SignedRelation v) {
      // orient so that the d0 term sits on the left: x*d1 + y*d2 + z*d3 == l0*d0
      if (v[0] > 0) {
        for (auto& c : v) c = -c;
      }
      CarvePoint p;
      p.source = PointSource::Schema;
      p.coords = {v[1], v[2], v[3]};
      p.witness = {-v[0], magnitude(v[1]), magnitude(v[2]), magnitude(v[3])};
      out.push_back(p);
    };
    from_identity(base[0].v);
    for (int i = 1; i <= 3; ++i) {
      CarvePoint p;
      p.source = PointSource::MinimalRelation;
      p.coords = {base[i].v[1], base[i].v[2], base[i].v[3]};
      p.witness = {-base[i].v[0], magnitude(base[i].v[1]), magnitude(base[i].v[2]),
                   magnitude(base[i].v[3])};
      out.push_back(p);
    }
    for (const auto& r : extras) from_identity(r.v);
    for (const auto& c : chains) {
      for (const auto& r : c.steps) from_identity(r.v);
    }
    return out;
  }

  /// Base relations 1..3 in relation-module form.
  std::array<Relation, 3> claimed() const {
    std::array<Relation, 3> out;
    for (int i = 1; i <= 3; ++i) {
      Relation r;
      r.lhs_index = i;
      r.lhs_coeff = base[i].v[i];
      r.others = other_indices(i);
      Triple t{};
      for (int q = 0; q < 3; ++q) t[q] = -base[i].v[r.others[q]];
      r.triples = {t};
      out[i - 1] = r;
    }
    return out;
  }

  std::size_t relation_count() const {
    std::size_t n = 4 + extras.size();
    for (const auto& c : chains) n += c.steps.size();
    return n;
  }
};

namespace detail {

inline const nlohmann::json& schema_resource() {
  static const nlohmann::json data = nlohmann::json::parse(kSchemaJson);
  return data;
}

inline SignedRelation instantiate(const nlohmann::json& rel, Int p) {
  SignedRelation v{};
  for (int i = 0; i < 4; ++i) {
    v[i] = Int{rel[i][0].get<long long>()} + Int{rel[i][1].get<long long>()} * p;
  }
  return v;
}

inline void check_identity(const Quad& d, const SchemaRelation& r, const std::string& where) {
  Int total = 0;
  for (int i = 0; i < 4; ++i) total += r.v[i] * d[i];
  if (total != 0) {
    throw SemigroupError(ErrorCode::IdentityViolated, where + " " + r.name + " is off by " +
                                                          to_string(total));
  }
}

}  // namespace detail

/// Whether family_schema has a row covering n.
inline bool schema_covers(Family f, Int n) {
  for (const auto& row : detail::schema_resource()) {
    if (row["family"] != family_name(f)) continue;
    Int step = row["step"].get<int>(), offset = row["offset"].get<int>();
    if (n % step != offset) continue;
    return (n - offset) / step >= row["min"].get<int>();
  }
  return false;
}

inline CarvingSchema family_schema(Family f, Int n) {
  for (const auto& row : detail::schema_resource()) {
    if (row["family"] != family_name(f)) continue;
    Int step = row["step"].get<int>(), offset = row["offset"].get<int>();
    if (n % step != offset) continue;
    CarvingSchema s;
    s.family = f;
    s.residue_class = row["class"].get<std::string>();
    s.parameter = (n - offset) / step;
    s.min_parameter = row["min"].get<int>();
    if (s.parameter < s.min_parameter) {
      throw SemigroupError(ErrorCode::OutOfRange, std::string(family_name(f)) + " n = " +
                                                      to_string(n) + " is below the " +
                                                      s.residue_class + " row");
    }
    Quad sorted = family_generators(f, n);
    if (row["apex"] == "second") s.arrangement.order = {1, 0, 2, 3};
    s.arrangement.apex = s.arrangement.order[0];
    s.arrangement.mode = ArrangementMode::PropTrick;
    s.d = s.arrangement.arranged(sorted);
    std::string where = std::string(family_name(f)) + " " + s.residue_class;

    std::map<std::string, SignedRelation> named;
    for (int i = 0; i < 4; ++i) {
      s.base[i] = {"base" + std::to_string(i), detail::instantiate(row["base"][i], s.parameter)};
      detail::check_identity(s.d, s.base[i], where);
      if (s.base[i].v[i] <= 0) {
        throw SemigroupError(ErrorCode::IdentityViolated, where + " base coefficient sign");
      }
      named[s.base[i].name] = s.base[i].v;
    }
    for (const auto& [name, rel] : row["extra"].items()) {
      SchemaRelation r{name, detail::instantiate(rel, s.parameter)};
      detail::check_identity(s.d, r, where);
      if (r.v[0] == 0) throw SemigroupError(ErrorCode::IdentityViolated, where + " " + name);
      s.extras.push_back(r);
      named[name] = r.v;
    }
    for (const auto& spec : row["chains"]) {
      SchemaChain c;
      c.start = spec["start"].get<std::string>();
      c.delta = spec["delta"].get<std::string>();
      c.sign = spec["sign"].get<int>();
      Int length = detail::instantiate(nlohmann::json::array({spec["length"], spec["length"],
                                                              spec["length"], spec["length"]}),
                                       s.parameter)[0];
      const SignedRelation& start = named.at(c.start);
      const SignedRelation& delta = named.at(c.delta);
      for (Int t = 1; t <= length; ++t) {
        SchemaRelation r;
        r.name = c.start + (c.sign < 0 ? "-" : "+") + to_string(t) + "*" + c.delta;
        for (int i = 0; i < 4; ++i) r.v[i] = start[i] + c.sign * t * delta[i];
        detail::check_identity(s.d, r, where);
        if (r.v[0] == 0) throw SemigroupError(ErrorCode::IdentityViolated, where + " " + r.name);
        c.steps.push_back(r);
      }
      s.chains.push_back(std::move(c));
    }
    return s;
  }
  throw SemigroupError(ErrorCode::OutOfRange, "no schema row");
}

/// Cubes left after removing every region the schema proves empty of Apéry labels.
inline std::vector<Cube> schema_carve(const CarvingSchema& s) {
  return carve(s.d, s.bounds(), s.points());
}

// ---------------------------------------------------------------------------
// lower bound

/// (F + sum a)^(m-1) >= (m-1)! * prod a over the minimal generators.
inline bool lower_bound_check(const NumericalSemigroup& s, Int frob) {
  using boost::multiprecision::cpp_int;
  const auto& a = s.minimal_generators();
  auto big = [](Int v) {
    cpp_int out = static_cast<long long>(v >> 62);
    out <<= 62;
    out += static_cast<long long>(v & ((Int{1} << 62) - 1));
    return out;
  };
  std::size_t m = a.size();
  if (m < 2) return true;
  cpp_int sum = big(frob);
  cpp_int product = 1;
  for (Int x : a) {
    sum += big(x);
    product *= big(x);
  }
  cpp_int left = 1;
  for (std::size_t t = 0; t + 1 < m; ++t) left *= sum;
  cpp_int factorial = 1;
  for (std::size_t t = 2; t < m; ++t) factorial *= t;
  return left >= factorial * product;
}

inline bool lower_bound_check(const NumericalSemigroup& s) {
  return lower_bound_check(s, frobenius(s));
}

// ---------------------------------------------------------------------------
// verification harness

enum class CheckStatus { Pass, Fail, Skipped };

inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

struct CheckRow {
  std::string family;
  Int n = 0;
  std::string check;
  std::string expected;
  std::string actual;
  CheckStatus status = CheckStatus::Pass;
  long long millis = 0;
  /// Why a row was skipped, e.g. "formula" for a closed form outside its stated range.
  std::string reason;

  std::string status_text() const {
    std::string out = status_name(status);
    if (!reason.empty()) out += "(" + reason + ")";
    return out;
  }
};

struct Report {
  std::vector<CheckRow> rows;

  bool ok() const {
    return std::none_of(rows.begin(), rows.end(),
                        [](const CheckRow& r) { return r.status == CheckStatus::Fail; });
  }

  std::string to_csv() const {
    std::ostringstream os;
    os << "family,n,check,expected,actual,status,millis\n";
    for (const auto& r : rows) {
      os << r.family << ',' << to_string(r.n) << ',' << r.check << ',' << r.expected << ','
         << r.actual << ',' << r.status_text() << ',' << r.millis << '\n';
    }
    return os.str();
  }

  nlohmann::ordered_json to_json() const {
    auto out = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      out.push_back({{"family", r.family},
                     {"n", static_cast<long long>(r.n)},
                     {"check", r.check},
                     {"expected", r.expected},
                     {"actual", r.actual},
                     {"status", r.status_text()},
                     {"millis", r.millis}});
    }
    return out;
  }
};

struct VerifyOptions {
  unsigned jobs = 1;
  bool timing = false;
};

namespace detail {

inline std::vector<CheckRow> verify_one(Family f, Int n, bool timing) {
  std::vector<CheckRow> rows;
  auto clock_start = std::chrono::steady_clock::now();
  std::map<std::string, std::string> observed;
  auto add = [&](const std::string& check, const std::string& expected, const std::string& actual,
                 CheckStatus status, std::string reason = {}) {
    auto now = std::chrono::steady_clock::now();
    long long ms = timing
        ? std::chrono::duration_cast<std::chrono::milliseconds>(now - clock_start).count()
        : 0;
    rows.push_back({family_name(f), n, check, expected, actual, status, ms, std::move(reason)});
    clock_start = now;
  };
  auto compare = [&](const std::string& check, const std::optional<InvariantValue>& claim,
                     auto compute) {
    std::string actual;
    try {
      actual = to_string(compute());
    } catch (const std::exception& e) {
      add(check, claim ? to_string(claim->value) : "-", std::string("error: ") + e.what(),
          CheckStatus::Fail);
      return;
    }
    observed[check] = actual;
    if (!claim) {
      add(check, "-", actual, CheckStatus::Skipped, "oracle-only");
    } else {
      std::string expected = to_string(claim->value);
      add(check, expected, actual, expected == actual ? CheckStatus::Pass : CheckStatus::Fail);
    }
  };

  Quad gens = family_generators(f, n);
  NumericalSemigroup s(std::vector<Int>(gens.begin(), gens.end()));
  InvariantBundle claims;
  try {
    claims = family_invariants(f, n);
  } catch (const std::exception& e) {
    add("closed_forms", "-", std::string("error: ") + e.what(), CheckStatus::Fail);
  }

  Int frob = frobenius(s);
  compare("frobenius", claims.frobenius, [&] { return frob; });
  compare("genus", claims.genus, [&] { return genus(s); });

  if (s.embedding_dimension() == 4) {
    try {
      auto ls = lshape_auto(s);
      add("lshape", to_string(ls.d[0]), std::to_string(ls.cubes.size()), CheckStatus::Pass);
    } catch (const std::exception& e) {
      add("lshape", "-", std::string("error: ") + e.what(), CheckStatus::Fail);
    }
  } else {
    add("lshape", "-", "e=" + std::to_string(s.embedding_dimension()), CheckStatus::Skipped,
        "oracle-only");
  }

  if (schema_covers(f, n)) {
    try {
      CarvingSchema schema = family_schema(f, n);
      auto cubes = schema_carve(schema);
      std::vector<Int> labels;
      for (const auto& c : cubes) labels.push_back(c.label);
      std::sort(labels.begin(), labels.end());
      bool apery_ok = labels == apery_set(s, schema.d[0]).sorted();
      bool relations_ok = confirm_minimal_relations(schema.d, cubes, schema.claimed()) &&
                          minimal_relation_of(schema.d, 0).lhs_coeff == schema.base[0].v[0];
      add("schema", to_string(schema.d[0]), std::to_string(cubes.size()),
          apery_ok && relations_ok ? CheckStatus::Pass : CheckStatus::Fail);
    } catch (const std::exception& e) {
      add("schema", "-", std::string("error: ") + e.what(), CheckStatus::Fail);
    }
  } else {
    add("schema", "-", "-", CheckStatus::Skipped, "formula");
  }

  BettiReport betti;
  bool betti_ok = true;
  try {
    betti = betti_elements(s);
  } catch (const std::exception& e) {
    betti_ok = false;
    add("betti_count", "-", std::string("error: ") + e.what(), CheckStatus::Fail);
  }
  if (betti_ok) {
    compare("catenary", claims.catenary, [&] {
      Int c = 0;
      for (Int b : betti.elements) c = std::max(c, catenary_of_set(factorizations(s, b)));
      return c;
    });
    compare("betti_count", claims.betti_count, [&] { return Int(betti.elements.size()); });
    compare("presentation", claims.presentation_cardinality, [&] {
      Int total = 0;
      for (Int b : betti.elements) total += Int(r_classes(factorizations(s, b)).size()) - 1;
      return total;
    });
  }

  bool bound = lower_bound_check(s, frob);
  add("lower_bound", "true", bound ? "true" : "false", bound ? CheckStatus::Pass : CheckStatus::Fail);

  for (const auto& [name, value] : claims.unclaimed) {
    auto it = observed.find(name);
    add(name + "_formula", to_string(value), it == observed.end() ? "-" : it->second,
        CheckStatus::Skipped, "formula");
  }
  return rows;
}

}  // namespace detail

/// Runs every check for n in [n_lo, n_hi]; rows come out ordered by n whatever the job count.
inline Report verify_family(Family f, Int n_lo, Int n_hi, VerifyOptions opts = {}) {
  if (n_lo < 2 || n_hi < n_lo) {
    throw SemigroupError(ErrorCode::OutOfRange, "bad range " + to_string(n_lo) + ".." + to_string(n_hi));
  }
  auto count = static_cast<std::size_t>(n_hi - n_lo + 1);
  std::vector<std::vector<CheckRow>> per_n(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < count; t = next++) {
      per_n[t] = detail::verify_one(f, n_lo + static_cast<Int>(t), opts.timing);
    }
  };
  unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(count)));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  Report report;
  for (auto& rows : per_n) report.rows.insert(report.rows.end(), rows.begin(), rows.end());
  return report;
}

}  // namespace semigroup_lab
