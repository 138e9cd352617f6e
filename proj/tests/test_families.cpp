#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace semigroup_lab;
using support::to_vec;

namespace {

long long ll(Int v) { return static_cast<long long>(v); }

long long value(const std::optional<InvariantValue>& v) {
  EXPECT_TRUE(v.has_value());
  return v ? ll(v->value) : -1;
}

const CheckRow* find_row(const Report& r, Int n, const std::string& check) {
  for (const auto& row : r.rows) {
    if (row.n == n && row.check == check) return &row;
  }
  return nullptr;
}

}  // namespace

TEST(Generators, Families) {
  EXPECT_EQ(to_vec(family_generators(Family::Squares, 24)), (oracle::Vec{576, 625, 676, 729}));
  EXPECT_EQ(to_vec(family_generators(Family::Triangular, 12)), (oracle::Vec{78, 91, 105, 120}));
  EXPECT_EQ(parse_family("triangular"), Family::Triangular);
  try {
    parse_family("cubes");
    FAIL();
  } catch (const SemigroupError& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownFamily);
  }
}

TEST(Invariants, SquaresValues) {
  auto two = squares_invariants(2);
  EXPECT_EQ(value(two.frobenius), 23);
  EXPECT_EQ(two.frobenius->source, ValueSource::Table);
  EXPECT_EQ(value(two.catenary), 9);

  auto b = squares_invariants(24);
  EXPECT_EQ(value(b.frobenius), 15082);
  EXPECT_EQ(value(b.genus), 7998);
  EXPECT_EQ(value(b.catenary), 24);
  EXPECT_EQ(value(b.presentation_cardinality), 14);
  EXPECT_EQ(value(b.betti_count), 14);
  EXPECT_EQ(b.frobenius->source, ValueSource::Formula);

  EXPECT_EQ(value(squares_invariants(13).catenary), 15);
  EXPECT_EQ(value(squares_invariants(5).frobenius), 240);
  EXPECT_EQ(value(squares_invariants(3).genus), 60);
}

TEST(Invariants, TriangularValues) {
  auto b = triangular_invariants(12);
  EXPECT_EQ(value(b.frobenius), 869);
  EXPECT_EQ(value(b.genus), 459);
  EXPECT_EQ(value(b.catenary), 9);
  EXPECT_EQ(value(b.presentation_cardinality), 7);
  EXPECT_EQ(value(triangular_invariants(2).catenary), 10);
  EXPECT_EQ(value(triangular_invariants(13).frobenius), 1349);
}

TEST(Invariants, SquaresBelowValidityAreAbsentOrTabulated) {
  auto ten = squares_invariants(10);
  EXPECT_EQ(ten.catenary->source, ValueSource::Table);
  bool flagged = false;
  for (const auto& [name, v] : ten.unclaimed) flagged |= name == "catenary";
  EXPECT_TRUE(flagged);
  auto nine = squares_invariants(9);
  EXPECT_EQ(value(nine.catenary), 10);
  EXPECT_EQ(nine.catenary->source, ValueSource::Formula);
  try {
    squares_invariants(1);
    FAIL();
  } catch (const SemigroupError& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutOfRange);
  }
}

TEST(Invariants, ClosedFormsMatchTheSieve) {
  for (Family f : {Family::Squares, Family::Triangular}) {
    for (Int n = 2; n <= 60; ++n) {
      auto b = family_invariants(f, n);
      auto sv = oracle::sieve(to_vec(family_generators(f, n)));
      if (b.frobenius) EXPECT_EQ(ll(b.frobenius->value), sv.frobenius) << family_name(f) << ll(n);
      if (b.genus) EXPECT_EQ(ll(b.genus->value), sv.genus) << family_name(f) << ll(n);
      if (b.frobenius && b.genus) EXPECT_LE(b.genus->value, b.frobenius->value);
    }
  }
}

TEST(Invariants, BothClosedFormsAgreeFarOut) {
  for (Family f : {Family::Squares, Family::Triangular}) {
    for (Int n = 2; n <= 2000; ++n) {
      ASSERT_NO_THROW(family_invariants(f, n)) << ll(n);
      auto b = family_invariants(f, n);
      for (const auto* v : {&b.frobenius, &b.genus, &b.catenary, &b.presentation_cardinality}) {
        if (*v) ASSERT_GE((*v)->value, 0);
      }
    }
  }
}

TEST(Schema, Shapes) {
  auto s24 = family_schema(Family::Squares, 24);
  EXPECT_EQ(s24.residue_class, "12k");
  EXPECT_EQ(s24.extras.size(), 3u);
  ASSERT_EQ(s24.chains.size(), 2u);
  EXPECT_EQ(s24.chains[0].steps.size(), 4u);
  EXPECT_EQ(s24.chains[1].steps.size(), 4u);

  auto t12 = family_schema(Family::Triangular, 12);
  ASSERT_EQ(t12.chains.size(), 2u);
  EXPECT_EQ(t12.chains[0].steps.size(), 1u);
  EXPECT_EQ(t12.chains[1].steps.size(), 0u);

  auto s14 = family_schema(Family::Squares, 14);
  ASSERT_EQ(s14.chains.size(), 1u);
  ASSERT_EQ(s14.chains[0].steps.size(), 1u);
  // (4m+4)(4m+2)^2 + m(4m+5)^2 == m(4m+3)^2 + (4m+1)(4m+4)^2 at m = 3
  EXPECT_EQ(s14.chains[0].steps[0].v, (SignedRelation{16, -3, -13, 3}));
}

TEST(Schema, BaseRelationMatchesTheMinimalRelation) {
  auto s = family_schema(Family::Squares, 24);
  EXPECT_EQ(s.base[0].v, (SignedRelation{16, -2, -1, -10}));
}

TEST(Schema, OutsideValidity) {
  EXPECT_FALSE(schema_covers(Family::Squares, 12));
  EXPECT_TRUE(schema_covers(Family::Squares, 24));
  try {
    family_schema(Family::Squares, 12);
    FAIL();
  } catch (const SemigroupError& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutOfRange);
  }
}

TEST(Schema, CarvingCertifiesEveryCoveredN) {
  for (Family f : {Family::Squares, Family::Triangular}) {
    for (Int n = 2; n <= 40; ++n) {
      if (!schema_covers(f, n)) continue;
      auto schema = family_schema(f, n);
      for (const auto& r : {schema.base[0], schema.base[1], schema.base[2], schema.base[3]}) {
        Int total = 0;
        for (int i = 0; i < 4; ++i) total += r.v[i] * schema.d[i];
        ASSERT_EQ(total, 0);
      }
      for (const auto& c : schema.chains) {
        for (std::size_t t = 1; t < c.steps.size(); ++t) {
          for (int i = 0; i < 4; ++i) {
            ASSERT_EQ(c.steps[t].v[i] - c.steps[t - 1].v[i], c.steps[1].v[i] - c.steps[0].v[i]);
          }
        }
      }
      auto cubes = schema_carve(schema);
      ASSERT_EQ(static_cast<Int>(cubes.size()), schema.d[0]) << family_name(f) << ll(n);
      oracle::Vec labels;
      for (const auto& c : cubes) labels.push_back(ll(c.label));
      std::sort(labels.begin(), labels.end());
      ASSERT_EQ(labels, oracle::apery(to_vec(family_generators(f, n)), ll(schema.d[0])));
      ASSERT_TRUE(confirm_minimal_relations(schema.d, cubes, schema.claimed()));
      ASSERT_EQ(schema.arrangement.arranged(family_generators(f, n)), schema.d);
    }
  }
}

TEST(LowerBound, Examples) {
  NumericalSemigroup s({3, 5});
  EXPECT_TRUE(lower_bound_check(s));
  EXPECT_FALSE(lower_bound_check(s, 6));
  EXPECT_TRUE(lower_bound_check(NumericalSemigroup({103, 133, 165, 228})));
  for (Int n = 2; n <= 40; ++n) {
    for (Family f : {Family::Squares, Family::Triangular}) {
      auto q = family_generators(f, n);
      EXPECT_TRUE(lower_bound_check(NumericalSemigroup(std::vector<Int>(q.begin(), q.end()))));
    }
  }
}

TEST(Verify, SquaresPass) {
  auto r = verify_family(Family::Squares, 16, 28, {2, false});
  EXPECT_TRUE(r.ok()) << r.to_csv();
  for (Int n = 16; n <= 28; ++n) {
    for (const char* check : {"frobenius", "genus", "lshape", "schema", "catenary", "presentation"}) {
      auto* row = find_row(r, n, check);
      ASSERT_NE(row, nullptr) << check;
      EXPECT_EQ(row->status, CheckStatus::Pass) << check << ll(n);
    }
  }
}

TEST(Verify, TriangularPass) {
  auto r = verify_family(Family::Triangular, 6, 30, {4, false});
  EXPECT_TRUE(r.ok()) << r.to_csv();
}

TEST(Verify, SkippedFormulaRow) {
  auto r = verify_family(Family::Squares, 10, 10);
  EXPECT_TRUE(r.ok());
  auto* row = find_row(r, 10, "catenary_formula");
  ASSERT_NE(row, nullptr);
  EXPECT_EQ(row->status, CheckStatus::Skipped);
  EXPECT_EQ(row->status_text(), "SKIPPED(formula)");
  EXPECT_EQ(row->actual, "15");
  EXPECT_NE(r.to_csv().find("SKIPPED(formula)"), std::string::npos);
}

TEST(Verify, JobCountDoesNotChangeTheReport) {
  auto one = verify_family(Family::Triangular, 2, 20, {1, false});
  auto many = verify_family(Family::Triangular, 2, 20, {6, false});
  EXPECT_EQ(one.to_csv(), many.to_csv());
  EXPECT_EQ(one.to_json().dump(), many.to_json().dump());
  EXPECT_EQ(one.to_csv().rfind("family,n,check,expected,actual,status,millis\n", 0), 0u);
}

TEST(Verify, BadRange) {
  try {
    verify_family(Family::Squares, 10, 9);
    FAIL();
  } catch (const SemigroupError& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutOfRange);
  }
}
