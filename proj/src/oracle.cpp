#include "shiftmon/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

namespace shiftmon::oracle {

namespace {

void fill(std::span<const Int> gens, std::size_t level, Int value, Int window,
          std::vector<Int>& coords,
          std::vector<std::vector<Factorization>>& out, std::size_t& total,
          std::size_t max_total) {
  if (level == gens.size()) {
    if (++total > max_total) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "oracle enumeration exceeds " + std::to_string(max_total));
    }
    out[static_cast<std::size_t>(value)].emplace_back(coords);
    return;
  }
  for (Int c = 0; value + c * gens[level] <= window; ++c) {
    coords[level] = c;
    fill(gens, level + 1, value + c * gens[level], window, coords, out, total,
         max_total);
  }
  coords[level] = 0;
}

bool dominated(const Factorization& small, const Factorization& big) {
  for (std::size_t i = 0; i < small.size(); ++i) {
    if (small[i] > big[i]) return false;
  }
  return true;
}

Factorization translate(const Factorization& z, const Factorization& from,
                        const Factorization& to) {
  std::vector<Int> c(z.coords());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += to[i] - from[i];
  return Factorization(std::move(c));
}

// Neighbors of z under single relation translations, both directions.
std::vector<Factorization> moves(const Factorization& z,
                                 std::span<const Relation> relations) {
  std::vector<Factorization> out;
  for (const auto& r : relations) {
    if (dominated(r.left, z)) out.push_back(translate(z, r.left, r.right));
    if (dominated(r.right, z)) out.push_back(translate(z, r.right, r.left));
  }
  return out;
}

}  // namespace

std::vector<std::vector<Factorization>> all_factorizations(
    std::span<const Int> gens, Int window, std::size_t max_total) {
  std::vector<std::vector<Factorization>> out(
      static_cast<std::size_t>(window + 1));
  std::vector<Int> coords(gens.size(), 0);
  std::size_t total = 0;
  fill(gens, 0, 0, window, coords, out, total, max_total);
  for (auto& zs : out) std::sort(zs.begin(), zs.end());
  return out;
}

std::vector<bool> reachable(std::span<const Int> gens, Int bound) {
  std::vector<bool> r(static_cast<std::size_t>(bound + 1), false);
  r[0] = true;
  for (Int a = 1; a <= bound; ++a) {
    for (Int g : gens) {
      if (g <= a && r[static_cast<std::size_t>(a - g)]) {
        r[static_cast<std::size_t>(a)] = true;
        break;
      }
    }
  }
  return r;
}

std::vector<Int> apery_scan(std::span<const Int> gens) {
  const Int mod = gens.front();
  // Each residue's least element is below mod * max(gens) for primitive gens.
  const Int bound = mod * gens.back() + mod;
  const auto r = reachable(gens, bound);
  std::vector<Int> out(static_cast<std::size_t>(mod), -1);
  for (Int a = 0; a <= bound; ++a) {
    auto& slot = out[static_cast<std::size_t>(a % mod)];
    if (slot < 0 && r[static_cast<std::size_t>(a)]) slot = a;
  }
  return out;
}

bool redundant(std::span<const Int> gens, std::size_t i) {
  std::vector<Int> others;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (j != i) others.push_back(gens[j]);
  }
  if (others.empty()) return false;
  return reachable(others, gens[i])[static_cast<std::size_t>(gens[i])];
}

ClosureReport congruence_closure_check(std::span<const Int> gens,
                                       std::span<const Relation> relations,
                                       Int window) {
  ClosureReport report;
  report.verified_window = window;
  const auto all = all_factorizations(gens, window);
  for (Int a = 0; a <= window; ++a) {
    const auto& zs = all[static_cast<std::size_t>(a)];
    if (zs.size() < 2) continue;
    std::map<Factorization, std::size_t> index;
    for (std::size_t i = 0; i < zs.size(); ++i) index[zs[i]] = i;
    std::vector<bool> seen(zs.size(), false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (const auto& w : moves(zs[u], relations)) {
        auto it = index.find(w);
        if (it != index.end() && !seen[it->second]) {
          seen[it->second] = true;
          queue.push_back(it->second);
        }
      }
    }
    for (std::size_t i = 0; i < zs.size(); ++i) {
      if (!seen[i]) {
        report.failures.push_back({a, zs[0], zs[i]});
        break;
      }
    }
  }
  return report;
}

std::vector<Int> naive_betti_scan(std::span<const Int> gens, Int bound,
                                  std::size_t max_total) {
  std::vector<Int> out;
  const auto all = all_factorizations(gens, bound, max_total);
  for (Int a = 0; a <= bound; ++a) {
    const auto& zs = all[static_cast<std::size_t>(a)];
    if (zs.size() < 2) continue;
    std::vector<bool> seen(zs.size(), false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    std::size_t visited = 1;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < zs.size(); ++v) {
        if (seen[v]) continue;
        bool share = false;
        for (std::size_t i = 0; i < gens.size(); ++i) {
          if (zs[u][i] > 0 && zs[v][i] > 0) share = true;
        }
        if (share) {
          seen[v] = true;
          ++visited;
          queue.push_back(v);
        }
      }
    }
    if (visited < zs.size()) out.push_back(a);
  }
  return out;
}

bool monotone_chain_search(std::span<const Int> gens, Int a,
                           const Factorization& z, const Factorization& w,
                           std::span<const Relation> relations) {
  if (z == w) return true;
  if (z.value(gens) != a || w.value(gens) != a) {
    throw Error(ErrorCode::kInvalidInput, "factorizations are not of a");
  }
  // Non-increasing search from the longer end covers both monotone shapes,
  // since a chain reversed is still a chain.
  const Factorization& start = z.length() >= w.length() ? z : w;
  const Factorization& goal = z.length() >= w.length() ? w : z;
  std::map<Factorization, bool> seen{{start, true}};
  std::deque<Factorization> queue{start};
  while (!queue.empty()) {
    const Factorization u = queue.front();
    queue.pop_front();
    if (u == goal) return true;
    for (auto& v : moves(u, relations)) {
      if (v.length() > u.length() || v.length() < goal.length()) continue;
      if (seen.emplace(v, true).second) queue.push_back(std::move(v));
    }
  }
  return false;
}

Int catenary_by_chains(std::span<const Factorization> zs) {
  // Smallest N for which the distance-<=N graph is connected, trying N upward.
  for (Int n = 0;; ++n) {
    std::vector<bool> seen(zs.size(), false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    std::size_t visited = 1;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < zs.size(); ++v) {
        if (!seen[v] && distance(zs[u], zs[v]) <= n) {
          seen[v] = true;
          ++visited;
          queue.push_back(v);
        }
      }
    }
    if (visited == zs.size()) return n;
  }
}

Int tame_by_definition(std::span<const Factorization> zs) {
  const std::size_t t = zs.front().size();
  for (Int n = 0;; ++n) {
    bool ok = true;
    for (const auto& z : zs) {
      for (std::size_t i = 0; i < t && ok; ++i) {
        bool atom_reachable = false;
        bool within = false;
        for (const auto& w : zs) {
          if (w[i] > 0) {
            atom_reachable = true;
            if (distance(z, w) <= n) within = true;
          }
        }
        if (atom_reachable && !within) ok = false;
      }
    }
    if (ok) return n;
  }
}

}  // namespace shiftmon::oracle
