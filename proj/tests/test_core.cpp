#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "test_support.hpp"

using namespace semigroup_lab;
using support::semigroup;
using support::to_vec;

namespace {

long long ll(Int v) { return static_cast<long long>(v); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const SemigroupError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::OutOfRange;
}

}  // namespace

TEST(Integer, RoundTripsWideValues) {
  Int big = Int{1} << 100;
  EXPECT_EQ(to_string(big), "1267650600228229401496703205376");
  EXPECT_TRUE(parse_int(to_string(-big)) == -big);
  EXPECT_EQ(to_string(Int{0}), "0");
  EXPECT_THROW(parse_int("12a"), std::invalid_argument);
  EXPECT_THROW(parse_int("1" + std::string(40, '0')), std::overflow_error);
}

TEST(Integer, ModularHelpers) {
  EXPECT_EQ(ll(floor_div(-7, 2)), -4);
  EXPECT_EQ(ll(mod(-7, 3)), 2);
  EXPECT_EQ(ll(mod_inverse(3, 7)), 5);
  EXPECT_EQ(ll(gcd(12, -18)), 6);
}

TEST(Semigroup, MinimalGenerators) {
  NumericalSemigroup s({4, 9, 16, 25});
  EXPECT_EQ(to_vec(s.minimal_generators()), oracle::minimal_generators({4, 9, 16, 25}));
  EXPECT_EQ(to_vec(s.minimal_generators()), (oracle::Vec{4, 9}));
  EXPECT_EQ(to_vec(NumericalSemigroup({1}).minimal_generators()), (oracle::Vec{1}));
  EXPECT_EQ(to_vec(NumericalSemigroup({57, 22, 55, 38}).minimal_generators()),
            (oracle::Vec{22, 38, 55, 57}));
  EXPECT_EQ(to_vec(NumericalSemigroup({57, 22, 55, 38}).generators()),
            (oracle::Vec{57, 22, 55, 38}));
}

TEST(Semigroup, MinimalGeneratorsMatchKnapsack) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> pick(2, 60);
  for (int trial = 0; trial < 200; ++trial) {
    oracle::Vec g;
    for (int t = 0; t < 5; ++t) g.push_back(pick(rng));
    long long d = 0;
    for (long long x : g) d = std::gcd(d, x);
    if (d != 1) continue;
    EXPECT_EQ(to_vec(semigroup(g).minimal_generators()), oracle::minimal_generators(g));
  }
}

TEST(Semigroup, ConstructionErrors) {
  EXPECT_EQ(code_of([] { NumericalSemigroup({}); }), ErrorCode::EmptyGenerators);
  EXPECT_EQ(code_of([] { NumericalSemigroup({2, 4}); }), ErrorCode::GcdNotOne);
  EXPECT_EQ(code_of([] { NumericalSemigroup({0, 3}); }), ErrorCode::NonPositiveGenerator);
  EXPECT_EQ(code_of([] { frobenius(NumericalSemigroup({1, 5})); }), ErrorCode::NoGaps);
  EXPECT_EQ(code_of([] { genus(NumericalSemigroup({1})); }), ErrorCode::NoGaps);
}

TEST(Semigroup, Contains) {
  NumericalSemigroup s({3, 5});
  EXPECT_FALSE(contains(s, 7));
  EXPECT_TRUE(contains(s, 8));
  EXPECT_TRUE(contains(s, 0));
  EXPECT_FALSE(contains(s, -3));
}

TEST(Semigroup, ContainsMatchesSieve) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = oracle::random_semigroup(rng, 3 + trial % 2, 5, 90);
    auto sv = oracle::sieve(g);
    auto s = semigroup(g);
    for (long long x = -3; x < static_cast<long long>(sv.in.size()) + 20; ++x) {
      ASSERT_EQ(contains(s, x), oracle::member(sv, x)) << x;
    }
  }
}

TEST(Apery, SmallCases) {
  EXPECT_EQ(to_vec(apery_set(NumericalSemigroup({2, 3}), 2).elements), (oracle::Vec{0, 3}));
  EXPECT_EQ(to_vec(apery_set(NumericalSemigroup({4, 9, 16, 25}), 4).elements),
            (oracle::Vec{0, 9, 18, 27}));
  EXPECT_EQ(code_of([] { apery_set(NumericalSemigroup({3, 5}), 7); }),
            ErrorCode::ModulusNotInSemigroup);
  EXPECT_EQ(code_of([] { apery_set(NumericalSemigroup({3, 5}), 0); }),
            ErrorCode::ModulusNotInSemigroup);
}

TEST(Apery, EntriesAreResidueMinima) {
  NumericalSemigroup s({22, 38, 55, 57});
  auto ap = apery_set(s, 22);
  ASSERT_EQ(ap.elements.size(), 22u);
  for (std::size_t r = 0; r < 22; ++r) {
    EXPECT_EQ(ll(ap.elements[r] % 22), static_cast<long long>(r));
    EXPECT_TRUE(contains(s, ap.elements[r]));
    EXPECT_FALSE(contains(s, ap.elements[r] - 22));
  }
  EXPECT_EQ(ll(ap.elements[0]), 0);
}

TEST(Apery, MatchesSieveForEveryElementModulus) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    auto g = oracle::random_semigroup(rng, 3 + trial % 3, 4, 60);
    auto s = semigroup(g);
    for (long long a : {g[0], g[1], g[0] + g[1]}) {
      EXPECT_EQ(to_vec(apery_set(s, a).sorted()), oracle::apery(g, a));
    }
  }
}

TEST(Frobenius, KnownValues) {
  EXPECT_EQ(ll(frobenius(NumericalSemigroup({3, 5}))), 7);
  EXPECT_EQ(ll(frobenius(NumericalSemigroup({4, 9, 16, 25}))), 23);
  EXPECT_EQ(ll(genus(NumericalSemigroup({2, 3}))), 1);
  EXPECT_EQ(ll(genus(NumericalSemigroup({9, 16, 25, 36}))), 60);
  EXPECT_EQ(ll(genus(NumericalSemigroup({64, 81, 100, 121}))), 389);
  auto g = oracle::Vec{103, 133, 165, 228};
  EXPECT_EQ(ll(frobenius(semigroup(g))), oracle::sieve(g).frobenius);
}

TEST(Frobenius, SylvesterPairs) {
  for (long long a = 2; a <= 60; ++a) {
    for (long long b = a + 1; b <= 80; ++b) {
      if (std::gcd(a, b) != 1) continue;
      NumericalSemigroup s({a, b});
      ASSERT_EQ(ll(frobenius(s)), a * b - a - b);
      ASSERT_EQ(ll(genus(s)), (a - 1) * (b - 1) / 2);
    }
  }
}

TEST(Frobenius, MatchesSieveOnRandomSemigroups) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    auto g = oracle::random_semigroup(rng, 2 + trial % 4, 3, 200);
    auto sv = oracle::sieve(g);
    auto s = semigroup(g);
    ASSERT_EQ(ll(frobenius(s)), sv.frobenius);
    ASSERT_EQ(ll(genus(s)), sv.genus);
  }
}

TEST(Factorizations, SmallCases) {
  NumericalSemigroup s({2, 3});
  EXPECT_EQ(support::to_vecs(factorizations(s, 6)), (std::vector<oracle::Vec>{{0, 2}, {3, 0}}));
  EXPECT_TRUE(factorizations(s, 1).empty());
  EXPECT_EQ(support::to_vecs(factorizations(s, 0)), (std::vector<oracle::Vec>{{0, 0}}));
  auto z = support::to_vecs(factorizations(NumericalSemigroup({22, 38, 55, 57}), 110));
  EXPECT_NE(std::find(z.begin(), z.end(), oracle::Vec{5, 0, 0, 0}), z.end());
  EXPECT_NE(std::find(z.begin(), z.end(), oracle::Vec{0, 0, 2, 0}), z.end());
}

TEST(Factorizations, MatchMeetInTheMiddle) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = oracle::random_semigroup(rng, 2 + trial % 4, 3, 40);
    auto s = semigroup(g);
    for (long long x = 0; x <= 150; x += 7) {
      auto got = support::to_vecs(factorizations(s, x));
      ASSERT_EQ(got, oracle::factorizations_mitm(g, x)) << x;
      for (const auto& z : got) {
        long long total = 0;
        for (std::size_t t = 0; t < z.size(); ++t) total += z[t] * g[t];
        ASSERT_EQ(total, x);
      }
    }
  }
}
