#pragma once

#include <memory>
#include <span>
#include <vector>

#include "shiftmon/error.hpp"

namespace shiftmon {

// Least element of M in each residue class modulo the smallest generator.
struct AperyTable {
  Int modulus = 0;
  std::vector<Int> entries;

  Int max_entry() const;
};

// A numerical monoid given by a strictly increasing, minimal generating
// tuple m_1 < ... < m_t. Primitivity (gcd = 1) is recorded but not required
// at construction; operations that need it check it themselves.
class NumericalMonoid {
 public:
  // Sorts, dedupes and strips redundant generators.
  static NumericalMonoid normalize(std::span<const Int> raw);

  // Accepts a tuple already known to be minimal (e.g. a shifted family
  // member with n > r_k); only checks it is strictly increasing and positive.
  static NumericalMonoid from_minimal(std::span<const Int> generators);

  const std::vector<Int>& generators() const noexcept { return gens_; }
  std::size_t rank() const noexcept { return gens_.size(); }
  Int generator(std::size_t i) const { return gens_.at(i); }
  Int multiplicity() const noexcept { return gens_.front(); }
  Int largest() const noexcept { return gens_.back(); }
  Int gcd() const noexcept { return gcd_; }
  bool primitive() const noexcept { return gcd_ == 1; }

  // Cached; throws kNonPrimitive when gcd > 1.
  const AperyTable& apery() const;

  friend bool operator==(const NumericalMonoid& a, const NumericalMonoid& b) {
    return a.gens_ == b.gens_;
  }

 private:
  struct Cache;

  explicit NumericalMonoid(std::vector<Int> gens);

  std::vector<Int> gens_;
  Int gcd_ = 0;
  std::shared_ptr<Cache> cache_;
};

NumericalMonoid normalize_generators(std::span<const Int> raw);
AperyTable apery(const NumericalMonoid& m);
bool contains(const NumericalMonoid& m, Int a);
Int frobenius(const NumericalMonoid& m);

// Shortest-path distances over residues mod gens[0]: out[r] is the least
// non-negative combination of gens congruent to r, or -1 if none exists.
std::vector<Int> residue_distances(std::span<const Int> gens);

}  // namespace shiftmon
