#pragma once

#include <vector>

#include "shiftmon/presentations.hpp"

namespace shiftmon::fixtures {

inline Relation rel(Factorization l, Factorization r, Int betti = 0) {
  return {std::move(l), std::move(r), betti};
}

// Minimal presentations of M_450, M_470 and M_490 for S = <6,9,20>. Row i of
// each block is the image of row i of the previous block.
inline std::vector<Relation> m450() {
  return {rel({0, 0, 8, 0}, {3, 2, 0, 3}),   rel({0, 1, 6, 0}, {4, 0, 0, 3}),
          rel({0, 3, 0, 0}, {1, 0, 2, 0}),   rel({20, 5, 0, 0}, {0, 0, 0, 24}),
          rel({25, 1, 0, 0}, {0, 0, 4, 21}), rel({26, 0, 0, 0}, {0, 2, 2, 21})};
}

inline std::vector<Relation> m470() {
  return {rel({0, 0, 8, 0}, {3, 2, 0, 3}),   rel({0, 1, 6, 0}, {4, 0, 0, 3}),
          rel({0, 3, 0, 0}, {1, 0, 2, 0}),   rel({21, 5, 0, 0}, {0, 0, 0, 25}),
          rel({26, 1, 0, 0}, {0, 0, 4, 22}), rel({27, 0, 0, 0}, {0, 2, 2, 22})};
}

inline std::vector<Relation> m490() {
  return {rel({0, 0, 8, 0}, {3, 2, 0, 3}),   rel({0, 1, 6, 0}, {4, 0, 0, 3}),
          rel({0, 3, 0, 0}, {1, 0, 2, 0}),   rel({22, 5, 0, 0}, {0, 0, 0, 26}),
          rel({27, 1, 0, 0}, {0, 0, 4, 23}), rel({28, 0, 0, 0}, {0, 2, 2, 23})};
}

// Fills in the Betti tags by evaluating at the given generators.
inline std::vector<Relation> tagged(std::vector<Relation> rels,
                                    const std::vector<Int>& gens) {
  for (auto& r : rels) r.betti = r.left.value(gens);
  return rels;
}

}  // namespace shiftmon::fixtures
