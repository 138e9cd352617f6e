#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "integer.hpp"

namespace semigroup_lab {

using Factorization = std::vector<Int>;

/// Smallest element of <gens> in each residue class modulo `modulus`.
/// Residues that are not reachable (gcd of gens and modulus > 1) hold kIntMax.
inline std::vector<Int> residue_distances(std::span<const Int> gens, Int modulus) {
  auto m = static_cast<std::size_t>(modulus);
  std::vector<Int> dist(m, kIntMax);
  using Entry = std::pair<Int, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[r]) continue;
    for (Int g : gens) {
      auto next = static_cast<std::size_t>((static_cast<Int>(r) + g) % modulus);
      Int nd = d + g;
      if (nd < dist[next]) {
        dist[next] = nd;
        queue.emplace(nd, next);
      }
    }
  }
  return dist;
}

/// True when x is a nonnegative combination of gens.
inline bool representable(std::span<const Int> gens, Int x) {
  if (x < 0) return false;
  if (x == 0) return true;
  if (gens.empty()) return false;
  Int smallest = *std::min_element(gens.begin(), gens.end());
  auto dist = residue_distances(gens, smallest);
  Int d = dist[static_cast<std::size_t>(x % smallest)];
  return d != kIntMax && d <= x;
}

class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(std::vector<Int> generators) : generators_(std::move(generators)) {
    if (generators_.empty()) throw SemigroupError(ErrorCode::EmptyGenerators, "no generators");
    Int g = 0;
    for (Int x : generators_) {
      if (x <= 0) {
        throw SemigroupError(ErrorCode::NonPositiveGenerator, "generator " + to_string(x));
      }
      g = gcd(g, x);
    }
    if (g != 1) throw SemigroupError(ErrorCode::GcdNotOne, "gcd is " + to_string(g));

    std::vector<Int> sorted = generators_;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Int x : sorted) {
      if (!representable(minimal_, x)) minimal_.push_back(x);
    }
    apery_ = residue_distances(minimal_, minimal_.front());
  }

  const std::vector<Int>& generators() const { return generators_; }
  const std::vector<Int>& minimal_generators() const { return minimal_; }
  Int multiplicity() const { return minimal_.front(); }
  std::size_t embedding_dimension() const { return minimal_.size(); }

  bool contains(Int x) const {
    if (x < 0) return false;
    return x >= apery_[static_cast<std::size_t>(x % multiplicity())];
  }

  /// Apéry set with respect to the multiplicity, indexed by residue.
  const std::vector<Int>& multiplicity_apery() const { return apery_; }

 private:
  std::vector<Int> generators_;
  std::vector<Int> minimal_;
  std::vector<Int> apery_;
};

inline bool contains(const NumericalSemigroup& s, Int x) { return s.contains(x); }

struct AperySet {
  Int modulus = 0;
  /// elements[r] is the least element of S congruent to r.
  std::vector<Int> elements;

  std::vector<Int> sorted() const {
    std::vector<Int> out = elements;
    std::sort(out.begin(), out.end());
    return out;
  }
};

inline AperySet apery_set(const NumericalSemigroup& s, Int a) {
  if (a <= 0 || !s.contains(a)) {
    throw SemigroupError(ErrorCode::ModulusNotInSemigroup, to_string(a) + " is not in S");
  }
  return AperySet{a, residue_distances(s.minimal_generators(), a)};
}

inline Int frobenius(const NumericalSemigroup& s) {
  if (s.multiplicity() == 1) throw SemigroupError(ErrorCode::NoGaps, "S is N");
  const auto& ap = s.multiplicity_apery();
  return *std::max_element(ap.begin(), ap.end()) - s.multiplicity();
}

inline Int genus(const NumericalSemigroup& s) {
  if (s.multiplicity() == 1) throw SemigroupError(ErrorCode::NoGaps, "S is N");
  Int m = s.multiplicity();
  Int total = 0;
  for (Int w : s.multiplicity_apery()) total += w;
  return total / m - (m - 1) / 2;
}

namespace detail {

// All (x, y) >= 0 with x*a + y*b == r, by increasing x.
template <typename Fn>
void solve_two(Int a, Int b, Int r, Fn&& emit) {
  if (r < 0) return;
  Int g = gcd(a, b);
  if (r % g != 0) return;
  Int ap = a / g, bp = b / g, rp = r / g;
  Int x = bp == 1 ? 0 : mod(rp % bp * mod_inverse(ap % bp, bp), bp);
  for (; x * a <= r; x += bp) emit(x, (r - x * a) / b);
}

template <typename Fn>
void enumerate(std::span<const Int> gens, std::size_t i, Int rest, Factorization& cur, Fn& emit) {
  std::size_t k = gens.size();
  if (k - i == 1) {
    if (rest % gens[i] == 0) {
      cur[i] = rest / gens[i];
      emit(cur);
      cur[i] = 0;
    }
    return;
  }
  if (k - i == 2) {
    solve_two(gens[i], gens[i + 1], rest, [&](Int x, Int y) {
      cur[i] = x;
      cur[i + 1] = y;
      emit(cur);
    });
    cur[i] = cur[i + 1] = 0;
    return;
  }
  for (Int c = 0; c * gens[i] <= rest; ++c) {
    cur[i] = c;
    enumerate(gens, i + 1, rest - c * gens[i], cur, emit);
  }
  cur[i] = 0;
}

}  // namespace detail

/// Visits every factorization of s over gens (in the order given). Not sorted.
template <typename Fn>
void for_each_factorization(std::span<const Int> gens, Int s, Fn&& emit) {
  if (s < 0 || gens.empty()) return;
  // loop over the largest generators and leave the smallest two to the closed form
  std::vector<std::size_t> perm(gens.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](auto x, auto y) { return gens[x] > gens[y]; });
  std::vector<Int> ordered(gens.size());
  for (std::size_t i = 0; i < perm.size(); ++i) ordered[i] = gens[perm[i]];
  Factorization cur(gens.size(), 0), out(gens.size(), 0);
  auto relay = [&](const Factorization& z) {
    for (std::size_t i = 0; i < perm.size(); ++i) out[perm[i]] = z[i];
    emit(static_cast<const Factorization&>(out));
  };
  detail::enumerate(std::span<const Int>(ordered), 0, s, cur, relay);
}

/// All factorizations of s over gens, lexicographically ascending.
inline std::vector<Factorization> factorizations_over(std::span<const Int> gens, Int s) {
  std::vector<Factorization> out;
  for_each_factorization(gens, s, [&](const Factorization& z) { out.push_back(z); });
  std::sort(out.begin(), out.end());
  return out;
}

/// Factorizations of s over the minimal generators of S, lexicographically ascending.
inline std::vector<Factorization> factorizations(const NumericalSemigroup& s, Int x) {
  return factorizations_over(s.minimal_generators(), x);
}

}  // namespace semigroup_lab
