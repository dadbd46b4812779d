#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "shiftmon/factorizations.hpp"
#include "shiftmon/monoid.hpp"

namespace shiftmon {

// Z(a) together with the connected components of its factorization graph.
// Edges (shared support) are never materialized.
struct FactorizationGraph {
  Int element = 0;
  std::vector<Factorization> vertices;
  std::vector<std::size_t> component_of;  // per vertex, ids 0..count-1
  std::size_t component_count = 0;

  // Vertex indices per component; components are ordered by their
  // lexicographically smallest member, as are the indices inside each.
  std::vector<std::vector<std::size_t>> components() const;
  bool connected() const { return component_count <= 1; }
};

struct Relation {
  Factorization left;
  Factorization right;
  Int betti = 0;

  friend auto operator<=>(const Relation&, const Relation&) = default;
  friend bool operator==(const Relation&, const Relation&) = default;
};

// Relations kept sorted by (betti, left, right).
class Presentation {
 public:
  Presentation() = default;
  explicit Presentation(std::vector<Relation> relations);

  const std::vector<Relation>& relations() const noexcept { return relations_; }
  std::size_t size() const noexcept { return relations_.size(); }
  bool empty() const noexcept { return relations_.empty(); }
  std::vector<Int> betti_elements() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<Relation> relations_;
};

FactorizationGraph factorization_graph(const NumericalMonoid& m, Int a,
                                       const Budget& budget = {});
FactorizationGraph factorization_graph(const NumericalMonoid& m, Int a,
                                       std::vector<Factorization> zs);

// Graphs of all Betti elements, in increasing order.
std::vector<FactorizationGraph> betti_graphs(const NumericalMonoid& m,
                                             const Budget& budget = {});
std::vector<Int> betti_elements(const NumericalMonoid& m,
                                const Budget& budget = {});

Presentation minimal_presentation(const NumericalMonoid& m,
                                  const Budget& budget = {});

struct PresentationEnumeration {
  Int count = 0;
  bool saturated = false;  // count overflowed 64 bits; `count` is INT64_MAX
  std::vector<Presentation> items;
};

PresentationEnumeration all_minimal_presentations(const NumericalMonoid& m,
                                                  std::size_t cap,
                                                  const Budget& budget = {});

// Number of spanning trees of the complete multigraph on components with
// |C|*|C'| parallel edges between C and C'. nullopt on overflow.
std::optional<Int> spanning_tree_count(std::span<const std::size_t> sizes);

// Orients a relation so that left > right lexicographically.
Relation oriented(Relation r);

// Checks that p is a minimal presentation of m: every relation lies in
// ker pi, joins distinct components of its Betti element's graph, and the
// relations at each Betti element form a spanning tree over its components;
// with `require_all_betti`, every Betti element of m is covered (this costs
// a full Betti computation). Throws kVerificationFailed otherwise.
// Returns the presentation with each factorization replaced by the
// lexicographic minimum of its component and each relation oriented, so two
// minimal presentations with the same component tree compare equal.
Presentation canonicalize(const NumericalMonoid& m, const Presentation& p,
                          bool require_all_betti = true,
                          const Budget& budget = {});

}  // namespace shiftmon
