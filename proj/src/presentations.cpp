#include "shiftmon/presentations.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "shiftmon/union_find.hpp"

namespace shiftmon {

Presentation::Presentation(std::vector<Relation> relations)
    : relations_(std::move(relations)) {
  std::sort(relations_.begin(), relations_.end(),
            [](const Relation& a, const Relation& b) {
              return std::tie(a.betti, a.left, a.right) <
                     std::tie(b.betti, b.left, b.right);
            });
}

std::vector<Int> Presentation::betti_elements() const {
  std::vector<Int> out;
  for (const auto& r : relations_) {
    if (out.empty() || out.back() != r.betti) out.push_back(r.betti);
  }
  return out;
}

std::vector<std::vector<std::size_t>> FactorizationGraph::components() const {
  std::vector<std::vector<std::size_t>> out(component_count);
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    out[component_of[v]].push_back(v);
  }
  return out;
}

FactorizationGraph factorization_graph(const NumericalMonoid& m, Int a,
                                       std::vector<Factorization> zs) {
  if (zs.empty()) {
    throw Error(ErrorCode::kNotAnElement,
                std::to_string(a) + " is not in the monoid");
  }
  FactorizationGraph g;
  g.element = a;
  g.vertices = std::move(zs);
  std::sort(g.vertices.begin(), g.vertices.end());

  // Factorizations sharing an atom are adjacent, so merging the atoms each
  // factorization uses yields the components without any pairwise scan.
  const std::size_t t = m.rank();
  UnionFind atoms(t);
  for (const auto& z : g.vertices) {
    std::size_t first = t;
    for (std::size_t i = 0; i < t; ++i) {
      if (!z.uses(i)) continue;
      if (first == t) {
        first = i;
      } else {
        atoms.unite(first, i);
      }
    }
  }

  // Vertices are sorted, so first appearance order is lexicographic-min order.
  std::vector<std::size_t> label(t, std::numeric_limits<std::size_t>::max());
  g.component_of.resize(g.vertices.size());
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const auto& z = g.vertices[v];
    std::size_t i = 0;
    while (i < t && !z.uses(i)) ++i;
    if (i == t) {  // the zero factorization of 0
      g.component_of[v] = g.component_count++;
      continue;
    }
    std::size_t& slot = label[atoms.find(i)];
    if (slot == std::numeric_limits<std::size_t>::max()) {
      slot = g.component_count++;
    }
    g.component_of[v] = slot;
  }
  return g;
}

FactorizationGraph factorization_graph(const NumericalMonoid& m, Int a,
                                       const Budget& budget) {
  return factorization_graph(m, a, factorizations(m, a, budget));
}

std::vector<FactorizationGraph> betti_graphs(const NumericalMonoid& m,
                                             const Budget& budget) {
  // Every Betti element b has a component avoiding m_1 (all factorizations
  // using m_1 share it). Any z in that component uses some m_i, i >= 2, and
  // b - m_i - m_1 must lie outside M: otherwise a factorization using both
  // m_i and m_1 would join z's component to the m_1 component (or, when no
  // factorization uses m_1, contradict that none does). Hence b - m_i is a
  // nonzero Apery element, and these sums are the only candidates.
  const AperyTable& ap = m.apery();
  std::set<Int> candidates;
  for (std::size_t i = 1; i < m.rank(); ++i) {
    for (Int w : ap.entries) {
      if (w != 0) candidates.insert(checked::add(m.generator(i), w));
    }
  }
  std::vector<FactorizationGraph> out;
  for (Int b : candidates) {
    budget.check_deadline();
    auto g = factorization_graph(m, b, budget);
    if (!g.connected()) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Int> betti_elements(const NumericalMonoid& m, const Budget& budget) {
  std::vector<Int> out;
  for (const auto& g : betti_graphs(m, budget)) out.push_back(g.element);
  return out;
}

namespace {

Presentation star_presentation(const std::vector<FactorizationGraph>& graphs) {
  std::vector<Relation> rels;
  for (const auto& g : graphs) {
    const auto comps = g.components();
    const auto& root = g.vertices[comps[0][0]];
    for (std::size_t c = 1; c < comps.size(); ++c) {
      rels.push_back({g.vertices[comps[c][0]], root, g.element});
    }
  }
  return Presentation(std::move(rels));
}

using Tree = std::vector<Relation>;

// Spanning trees of the component multigraph of g, at most cap of them.
std::vector<Tree> spanning_trees(const FactorizationGraph& g, std::size_t cap) {
  struct Edge {
    std::size_t u, v;
  };
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < g.vertices.size(); ++u) {
    for (std::size_t v = u + 1; v < g.vertices.size(); ++v) {
      if (g.component_of[u] != g.component_of[v]) edges.push_back({u, v});
    }
  }
  const std::size_t need = g.component_count - 1;
  std::vector<Tree> out;
  std::vector<std::size_t> chosen;

  auto rec = [&](auto& self, std::size_t start, const UnionFind& uf) -> void {
    if (out.size() >= cap) return;
    if (chosen.size() == need) {
      Tree t;
      for (std::size_t e : chosen) {
        t.push_back(oriented(
            {g.vertices[edges[e].u], g.vertices[edges[e].v], g.element}));
      }
      out.push_back(std::move(t));
      return;
    }
    for (std::size_t e = start; e < edges.size(); ++e) {
      if (edges.size() - e < need - chosen.size()) return;
      UnionFind next = uf;
      if (!next.unite(g.component_of[edges[e].u], g.component_of[edges[e].v])) {
        continue;
      }
      chosen.push_back(e);
      self(self, e + 1, next);
      chosen.pop_back();
      if (out.size() >= cap) return;
    }
  };
  rec(rec, 0, UnionFind(g.component_count));
  return out;
}

}  // namespace

Presentation minimal_presentation(const NumericalMonoid& m,
                                  const Budget& budget) {
  return star_presentation(betti_graphs(m, budget));
}

Relation oriented(Relation r) {
  if (r.left < r.right) std::swap(r.left, r.right);
  return r;
}

std::optional<Int> spanning_tree_count(std::span<const std::size_t> sizes) {
  const std::size_t c = sizes.size();
  if (c <= 1) return Int{1};
  if (c == 2) {
    Int out;
    if (__builtin_mul_overflow(static_cast<Int>(sizes[0]),
                               static_cast<Int>(sizes[1]), &out)) {
      return std::nullopt;
    }
    return out;
  }
  // Matrix-tree theorem: determinant of the Laplacian with the last row and
  // column removed, by fraction-free (Bareiss) elimination.
  using Wide = __int128;
  Wide total = 0;
  for (std::size_t s : sizes) total += static_cast<Wide>(s);
  const std::size_t dim = c - 1;
  std::vector<std::vector<Wide>> a(dim, std::vector<Wide>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const Wide si = static_cast<Wide>(sizes[i]);
      a[i][j] = i == j ? si * (total - si) : -si * static_cast<Wide>(sizes[j]);
    }
  }
  Wide prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < dim; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < dim && a[p][k] == 0) ++p;
      if (p == dim) return Int{0};
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < dim; ++i) {
      for (std::size_t j = k + 1; j < dim; ++j) {
        Wide x, y, diff;
        if (__builtin_mul_overflow(a[i][j], a[k][k], &x) ||
            __builtin_mul_overflow(a[i][k], a[k][j], &y) ||
            __builtin_sub_overflow(x, y, &diff)) {
          return std::nullopt;
        }
        a[i][j] = diff / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  const Wide det = sign * a[dim - 1][dim - 1];
  if (det > std::numeric_limits<Int>::max()) return std::nullopt;
  return static_cast<Int>(det);
}

PresentationEnumeration all_minimal_presentations(const NumericalMonoid& m,
                                                  std::size_t cap,
                                                  const Budget& budget) {
  const auto graphs = betti_graphs(m, budget);
  PresentationEnumeration result;
  result.count = 1;
  std::vector<std::vector<Tree>> choices;
  for (const auto& g : graphs) {
    std::vector<std::size_t> sizes;
    for (const auto& comp : g.components()) sizes.push_back(comp.size());
    const auto trees = spanning_tree_count(sizes);
    Int product;
    if (!trees || result.saturated ||
        __builtin_mul_overflow(result.count, *trees, &product)) {
      result.saturated = true;
      result.count = std::numeric_limits<Int>::max();
    } else {
      result.count = product;
    }
    choices.push_back(spanning_trees(g, cap));
  }
  if (cap == 0) return result;

  // Mixed-radix walk over the per-Betti choices, first Betti element slowest.
  std::vector<std::size_t> digit(choices.size(), 0);
  while (result.items.size() < cap) {
    std::vector<Relation> rels;
    for (std::size_t i = 0; i < choices.size(); ++i) {
      const auto& tree = choices[i][digit[i]];
      rels.insert(rels.end(), tree.begin(), tree.end());
    }
    result.items.emplace_back(std::move(rels));
    std::size_t pos = choices.size();
    while (pos > 0) {
      --pos;
      if (++digit[pos] < choices[pos].size()) break;
      digit[pos] = 0;
      if (pos == 0) return result;
    }
    if (choices.empty()) break;
  }
  return result;
}

Presentation canonicalize(const NumericalMonoid& m, const Presentation& p,
                          bool require_all_betti, const Budget& budget) {
  auto fail = [](const std::string& why) {
    throw Error(ErrorCode::kVerificationFailed, why);
  };
  std::map<Int, std::vector<const Relation*>> by_betti;
  for (const auto& r : p.relations()) {
    if (r.left.size() != m.rank() || r.right.size() != m.rank()) {
      fail("relation has wrong dimension");
    }
    if (r.left.value(m.generators()) != r.betti ||
        r.right.value(m.generators()) != r.betti) {
      fail("relation does not evaluate to its Betti element " +
           std::to_string(r.betti));
    }
    if (r.left == r.right) fail("trivial relation");
    by_betti[r.betti].push_back(&r);
  }
  if (require_all_betti) {
    std::vector<Int> expected = betti_elements(m, budget);
    std::vector<Int> got;
    for (const auto& [b, _] : by_betti) got.push_back(b);
    if (expected != got) fail("relations do not cover exactly the Betti elements");
  }

  std::vector<Relation> out;
  for (const auto& [b, rels] : by_betti) {
    const auto g = factorization_graph(m, b, budget);
    if (rels.size() + 1 != g.component_count) {
      fail("wrong number of relations at " + std::to_string(b));
    }
    const auto comps = g.components();
    auto component = [&](const Factorization& z) {
      auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), z);
      return g.component_of[static_cast<std::size_t>(it - g.vertices.begin())];
    };
    UnionFind uf(g.component_count);
    for (const Relation* r : rels) {
      const std::size_t cl = component(r->left);
      const std::size_t cr = component(r->right);
      if (!uf.unite(cl, cr)) {
        fail("relations at " + std::to_string(b) +
             " do not form a spanning tree over components");
      }
      out.push_back(oriented({g.vertices[comps[cl][0]],
                              g.vertices[comps[cr][0]], b}));
    }
  }
  return Presentation(std::move(out));
}

}  // namespace shiftmon
