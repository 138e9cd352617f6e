#pragma once

#include <ostream>
#include <vector>

#include <gtest/gtest.h>

#include <semigroup_lab/families.hpp>

#include "oracles.hpp"

namespace testing::internal {

template <>
class UniversalPrinter<__int128> {
 public:
  static void Print(__int128 value, std::ostream* os) { *os << semigroup_lab::to_string(value); }
};

}  // namespace testing::internal

namespace support {

using semigroup_lab::Int;

inline oracle::Vec to_vec(const std::vector<Int>& xs) { return oracle::Vec(xs.begin(), xs.end()); }

template <std::size_t N>
inline oracle::Vec to_vec(const std::array<Int, N>& xs) {
  return oracle::Vec(xs.begin(), xs.end());
}

inline std::vector<Int> to_ints(const oracle::Vec& xs) { return std::vector<Int>(xs.begin(), xs.end()); }

inline std::vector<oracle::Vec> to_vecs(const std::vector<semigroup_lab::Factorization>& zs) {
  std::vector<oracle::Vec> out;
  for (const auto& z : zs) out.push_back(to_vec(z));
  return out;
}

inline semigroup_lab::NumericalSemigroup semigroup(const oracle::Vec& gens) {
  return semigroup_lab::NumericalSemigroup(to_ints(gens));
}

}  // namespace support
