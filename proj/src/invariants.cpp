#include "shiftmon/invariants.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "shiftmon/presentations.hpp"
#include "shiftmon/union_find.hpp"

namespace shiftmon {

namespace {

std::vector<Factorization> element_factorizations(const NumericalMonoid& m,
                                                  Int a, const Budget& budget) {
  auto zs = factorizations(m, a, budget);
  if (zs.empty()) {
    throw Error(ErrorCode::kNotAnElement,
                std::to_string(a) + " is not in the monoid");
  }
  return zs;
}

struct WeightedEdge {
  Int weight;
  std::size_t u, v;
};

// Largest edge weight of a minimum spanning tree, i.e. the least N for which
// edges of weight <= N connect all `nodes` vertices.
Int bottleneck(std::vector<WeightedEdge> edges, std::size_t nodes) {
  std::sort(edges.begin(), edges.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) {
              return a.weight < b.weight;
            });
  UnionFind uf(nodes);
  Int worst = 0;
  for (const auto& e : edges) {
    if (uf.set_count() == 1) break;
    if (uf.unite(e.u, e.v)) worst = e.weight;
  }
  return worst;
}

std::vector<std::vector<Int>> distance_matrix(std::span<const Factorization> zs) {
  std::vector<std::vector<Int>> d(zs.size(), std::vector<Int>(zs.size(), 0));
  for (std::size_t i = 0; i < zs.size(); ++i) {
    for (std::size_t j = i + 1; j < zs.size(); ++j) {
      d[i][j] = d[j][i] = distance(zs[i], zs[j]);
    }
  }
  return d;
}

bool stable_member(const NumericalMonoid& m,
                   const std::optional<FamilyContext>& context) {
  return context && context->in_stable_range() &&
         context->family.generators_at(context->n) == m.generators();
}

}  // namespace

std::optional<FamilyContext> detect_family(const NumericalMonoid& m) {
  if (m.rank() < 2) return std::nullopt;
  FamilyContext ctx{family_of(m), m.multiplicity()};
  if (!ctx.in_stable_range()) return std::nullopt;
  return ctx;
}

Int default_window(const NumericalMonoid& m) {
  const Int mt = m.largest();
  const Int below = m.rank() >= 2 ? m.generator(m.rank() - 2) : 0;
  return checked::add(checked::mul(below, mt), checked::mul(2, mt));
}

Int catenary_of_element(std::span<const Factorization> zs) {
  std::vector<WeightedEdge> edges;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    for (std::size_t j = i + 1; j < zs.size(); ++j) {
      edges.push_back({distance(zs[i], zs[j]), i, j});
    }
  }
  return bottleneck(std::move(edges), zs.size());
}

Int catenary_of_element(const NumericalMonoid& m, Int a, const Budget& budget) {
  return catenary_of_element(element_factorizations(m, a, budget));
}

Int catenary_of_monoid(const NumericalMonoid& m, const Budget& budget) {
  Int worst = 0;
  for (const auto& g : betti_graphs(m, budget)) {
    // Cheapest way to join each pair of components, measured by the longer
    // factorization in the relation.
    const std::size_t c = g.component_count;
    std::vector<std::vector<Int>> best(
        c, std::vector<Int>(c, std::numeric_limits<Int>::max()));
    for (std::size_t u = 0; u < g.vertices.size(); ++u) {
      for (std::size_t v = u + 1; v < g.vertices.size(); ++v) {
        const std::size_t cu = g.component_of[u];
        const std::size_t cv = g.component_of[v];
        if (cu == cv) continue;
        const Int w = std::max(g.vertices[u].length(), g.vertices[v].length());
        best[cu][cv] = best[cv][cu] = std::min(best[cu][cv], w);
      }
    }
    std::vector<WeightedEdge> edges;
    for (std::size_t i = 0; i < c; ++i) {
      for (std::size_t j = i + 1; j < c; ++j) edges.push_back({best[i][j], i, j});
    }
    worst = std::max(worst, bottleneck(std::move(edges), c));
  }
  return worst;
}

MonotoneEqual monotone_equal_catenary(std::span<const Factorization> zs) {
  MonotoneEqual out;
  if (zs.size() < 2) return out;
  const auto dist = distance_matrix(zs);
  std::vector<Int> len;
  for (const auto& z : zs) len.push_back(z.length());

  std::vector<WeightedEdge> same_length;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    for (std::size_t j = i + 1; j < zs.size(); ++j) {
      if (len[i] == len[j]) same_length.push_back({dist[i][j], i, j});
    }
  }
  // Within each length class the bottleneck is independent of the others, so
  // one sweep over the union of classes, tracking per-class merges, suffices.
  {
    std::sort(same_length.begin(), same_length.end(),
              [](const WeightedEdge& a, const WeightedEdge& b) {
                return a.weight < b.weight;
              });
    UnionFind uf(zs.size());
    for (const auto& e : same_length) {
      if (uf.unite(e.u, e.v)) out.equal = std::max(out.equal, e.weight);
    }
  }

  // From each z, walk steps of size <= n that never increase length; every
  // factorization no longer than z must be reached.
  auto feasible = [&](Int n) {
    for (std::size_t s = 0; s < zs.size(); ++s) {
      std::vector<bool> seen(zs.size(), false);
      std::deque<std::size_t> queue{s};
      seen[s] = true;
      while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t v = 0; v < zs.size(); ++v) {
          if (!seen[v] && len[v] <= len[u] && dist[u][v] <= n) {
            seen[v] = true;
            queue.push_back(v);
          }
        }
      }
      for (std::size_t v = 0; v < zs.size(); ++v) {
        if (len[v] <= len[s] && !seen[v]) return false;
      }
    }
    return true;
  };
  std::vector<Int> levels;
  for (const auto& row : dist) levels.insert(levels.end(), row.begin(), row.end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::size_t lo = 0, hi = levels.size() - 1;  // the max distance is feasible
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (feasible(levels[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  out.monotone = levels[lo];
  return out;
}

MonotoneEqual monotone_equal_catenary(const NumericalMonoid& m, Int a,
                                      const Budget& budget) {
  return monotone_equal_catenary(element_factorizations(m, a, budget));
}

CatenaryReport monoid_catenary_report(
    const NumericalMonoid& m, Int window,
    const std::optional<FamilyContext>& context, const Budget& budget) {
  CatenaryReport report;
  report.ordinary = catenary_of_monoid(m, budget);
  report.window = window;
  if (stable_member(m, context)) {
    report.monotone = report.equal = report.ordinary;
    return report;
  }
  report.lower_bound = true;
  for (Int a = 0; a <= window; ++a) {
    const auto zs = factorizations(m, a, budget);
    if (zs.size() < 2) continue;
    const auto me = monotone_equal_catenary(zs);
    report.monotone = std::max(report.monotone, me.monotone);
    report.equal = std::max(report.equal, me.equal);
  }
  return report;
}

DeltaSetResult delta_set(const NumericalMonoid& m, Int window,
                         const std::optional<FamilyContext>& context,
                         const Budget& budget) {
  DeltaSetResult out;
  out.window = window;
  if (stable_member(m, context)) {
    const ShiftedFamily& f = context->family;
    AcceleratedOptions opts;
    opts.structural_check = false;
    opts.budget = budget;
    const auto p = accelerated_minimal_presentation(f, context->n, opts);
    // max of the delta set is attained at a Betti element.
    std::set<Int> seen;
    for (Int b : p.betti_elements()) {
      const auto profile = length_profile(m, b, budget);
      seen.insert(profile.deltas.begin(), profile.deltas.end());
    }
    if (seen != std::set<Int>{f.d()}) {
      throw Error(ErrorCode::kInternal,
                  "Betti-element delta sets differ from {d} in the stable range");
    }
    out.values = {f.d()};
    return out;
  }
  out.window_limited = true;
  for (Int a = 0; a <= window; ++a) {
    const auto zs = factorizations(m, a, budget);
    if (zs.size() < 2) continue;
    const auto profile = length_profile(zs, a);
    out.values.insert(profile.deltas.begin(), profile.deltas.end());
  }
  return out;
}

Int tame_degree(std::span<const Factorization> zs) {
  if (zs.empty()) return 0;
  const std::size_t t = zs.front().size();
  Int worst = 0;
  for (std::size_t i = 0; i < t; ++i) {
    std::vector<std::size_t> users;
    for (std::size_t j = 0; j < zs.size(); ++j) {
      if (zs[j].uses(i)) users.push_back(j);
    }
    if (users.empty()) continue;  // a - m_i is not in M
    for (const auto& z : zs) {
      if (z.uses(i)) continue;
      Int nearest = std::numeric_limits<Int>::max();
      for (std::size_t j : users) nearest = std::min(nearest, distance(z, zs[j]));
      worst = std::max(worst, nearest);
    }
  }
  return worst;
}

Int tame_degree(const NumericalMonoid& m, Int a, const Budget& budget) {
  return tame_degree(element_factorizations(m, a, budget));
}

WindowedTame tame_degree_windowed(const NumericalMonoid& m, Int window,
                                  const Budget& budget) {
  WindowedTame out;
  out.window = window;
  for (Int a = 0; a <= window; ++a) {
    const auto zs = factorizations(m, a, budget);
    if (zs.size() < 2) continue;
    const Int t = tame_degree(zs);
    if (t > out.value) {
      out.value = t;
      out.attained_at = a;
    }
  }
  return out;
}

}  // namespace shiftmon
