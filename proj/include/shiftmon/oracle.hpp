#pragma once

// Brute-force reference implementations. Nothing here uses Apery tables,
// candidate sets or the fast enumerator, so these can check the fast paths.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "shiftmon/factorizations.hpp"
#include "shiftmon/presentations.hpp"

namespace shiftmon::oracle {

// Z(a) for every a in [0, window], by exhaustive nested loops.
std::vector<std::vector<Factorization>> all_factorizations(
    std::span<const Int> gens, Int window,
    std::size_t max_total = 50'000'000);

// reachable[a] iff a is a non-negative combination of gens (knapsack DP).
std::vector<bool> reachable(std::span<const Int> gens, Int bound);

// Least representable element in each residue class mod gens[0], scanning.
std::vector<Int> apery_scan(std::span<const Int> gens);

// gens[i] is representable by the others.
bool redundant(std::span<const Int> gens, std::size_t i);

struct ClosureFailure {
  Int element = 0;
  Factorization from;
  Factorization to;
};

struct ClosureReport {
  Int verified_window = 0;
  std::vector<ClosureFailure> failures;

  bool ok() const { return failures.empty(); }
};

// For each a <= window with |Z(a)| >= 2, connects z to z - l + r whenever
// l <= z coordinatewise for a relation (l, r) (either orientation) and checks
// the resulting graph on Z(a) is connected.
ClosureReport congruence_closure_check(std::span<const Int> gens,
                                       std::span<const Relation> relations,
                                       Int window);

// All a <= bound whose factorization graph is disconnected, testing every
// pair of factorizations for a shared atom.
std::vector<Int> naive_betti_scan(std::span<const Int> gens, Int bound,
                                  std::size_t max_total = 50'000'000);

// True iff a chain of relation translations joins z to w with lengths forming
// a monotone (non-increasing or non-decreasing) sequence.
bool monotone_chain_search(std::span<const Int> gens, Int a,
                           const Factorization& z, const Factorization& w,
                           std::span<const Relation> relations);

// Plain definitions over Z(a), for cross-checking the invariants module.
Int catenary_by_chains(std::span<const Factorization> zs);
Int tame_by_definition(std::span<const Factorization> zs);

}  // namespace shiftmon::oracle
