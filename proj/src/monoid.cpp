#include "shiftmon/monoid.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <queue>
#include <utility>

namespace shiftmon {

struct NumericalMonoid::Cache {
  std::once_flag once;
  AperyTable table;
};

Int AperyTable::max_entry() const {
  return *std::max_element(entries.begin(), entries.end());
}

NumericalMonoid::NumericalMonoid(std::vector<Int> gens)
    : gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
  gcd_ = 0;
  for (Int g : gens_) gcd_ = std::gcd(gcd_, g);
}

std::vector<Int> residue_distances(std::span<const Int> gens) {
  const Int mod = gens.front();
  std::vector<Int> dist(static_cast<std::size_t>(mod), -1);
  using Item = std::pair<Int, Int>;  // (distance, residue)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[0] = 0;
  heap.emplace(0, 0);
  while (!heap.empty()) {
    auto [du, u] = heap.top();
    heap.pop();
    if (du != dist[static_cast<std::size_t>(u)]) continue;
    for (std::size_t i = 1; i < gens.size(); ++i) {
      const Int v = (u + gens[i] % mod) % mod;
      const Int dv = checked::add(du, gens[i]);
      Int& slot = dist[static_cast<std::size_t>(v)];
      if (slot < 0 || dv < slot) {
        slot = dv;
        heap.emplace(dv, v);
      }
    }
  }
  return dist;
}

NumericalMonoid NumericalMonoid::normalize(std::span<const Int> raw) {
  if (raw.empty()) {
    throw Error(ErrorCode::kInvalidInput, "generator list is empty");
  }
  std::vector<Int> sorted(raw.begin(), raw.end());
  for (Int g : sorted) {
    if (g < 1) {
      throw Error(ErrorCode::kInvalidInput,
                  "generators must be positive, got " + std::to_string(g));
    }
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  // A generator can only be produced by strictly smaller ones, so scanning in
  // increasing order and testing against the kept prefix is enough.
  std::vector<Int> kept{sorted.front()};
  std::vector<Int> dist = residue_distances(kept);
  const Int mod = kept.front();
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const Int g = sorted[i];
    const Int reach = dist[static_cast<std::size_t>(g % mod)];
    if (reach >= 0 && reach <= g) continue;
    kept.push_back(g);
    dist = residue_distances(kept);
  }
  return NumericalMonoid(std::move(kept));
}

NumericalMonoid NumericalMonoid::from_minimal(std::span<const Int> generators) {
  if (generators.empty()) {
    throw Error(ErrorCode::kInvalidInput, "generator list is empty");
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i] < 1 || (i > 0 && generators[i] <= generators[i - 1])) {
      throw Error(ErrorCode::kInvalidInput,
                  "generators must be positive and strictly increasing");
    }
  }
  return NumericalMonoid(std::vector<Int>(generators.begin(), generators.end()));
}

const AperyTable& NumericalMonoid::apery() const {
  if (!primitive()) {
    throw Error(ErrorCode::kNonPrimitive,
                "monoid is not primitive (gcd " + std::to_string(gcd_) + ")");
  }
  std::call_once(cache_->once, [this] {
    cache_->table.modulus = gens_.front();
    cache_->table.entries = residue_distances(gens_);
  });
  return cache_->table;
}

NumericalMonoid normalize_generators(std::span<const Int> raw) {
  return NumericalMonoid::normalize(raw);
}

AperyTable apery(const NumericalMonoid& m) { return m.apery(); }

bool contains(const NumericalMonoid& m, Int a) {
  if (a < 0) {
    throw Error(ErrorCode::kInvalidInput, "element must be non-negative");
  }
  const AperyTable& ap = m.apery();
  return a >= ap.entries[static_cast<std::size_t>(a % ap.modulus)];
}

Int frobenius(const NumericalMonoid& m) {
  const AperyTable& ap = m.apery();
  return ap.max_entry() - ap.modulus;
}

}  // namespace shiftmon
