#pragma once

#include <chrono>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "shiftmon/error.hpp"
#include "shiftmon/monoid.hpp"

namespace shiftmon {

// Exponent vector over a monoid's generators. Ordered lexicographically.
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<Int> coords) : coords_(std::move(coords)) {}
  Factorization(std::initializer_list<Int> coords) : coords_(coords) {}

  std::size_t size() const noexcept { return coords_.size(); }
  Int operator[](std::size_t i) const { return coords_[i]; }
  Int& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Int>& coords() const noexcept { return coords_; }

  Int length() const;
  bool uses(std::size_t i) const { return coords_[i] > 0; }
  // pi(z): the element this factorization evaluates to.
  Int value(std::span<const Int> generators) const;

  friend auto operator<=>(const Factorization&, const Factorization&) = default;
  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<Int> coords_;
};

std::ostream& operator<<(std::ostream& os, const Factorization& z);

// Caps on enumeration work. The node check interval keeps clock reads rare.
struct Budget {
  std::size_t max_factorizations = 10'000'000;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  static Budget with_timeout(std::chrono::milliseconds limit) {
    Budget b;
    b.deadline = std::chrono::steady_clock::now() + limit;
    return b;
  }
  void check_deadline() const;
};

struct LengthProfile {
  Int element = 0;
  std::vector<Int> lengths;  // sorted, distinct
  std::vector<Int> deltas;   // successive differences

  Int min_length() const { return lengths.front(); }
  Int max_length() const { return lengths.back(); }
};

// Every z with pi(z) = a, largest generator's coordinate chosen first and in
// descending order at each level. Empty iff a is not in the monoid. Works for
// non-primitive generator tuples.
std::vector<Factorization> factorizations(const NumericalMonoid& m, Int a,
                                          const Budget& budget = {});
std::vector<Factorization> factorizations(std::span<const Int> generators, Int a,
                                          const Budget& budget = {});

LengthProfile length_profile(const NumericalMonoid& m, Int a,
                             const Budget& budget = {});
LengthProfile length_profile(std::span<const Factorization> zs, Int element);

Int distance(const Factorization& z, const Factorization& w);

}  // namespace shiftmon
