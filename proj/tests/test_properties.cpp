#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "shiftmon/invariants.hpp"
#include "shiftmon/oracle.hpp"
#include "shiftmon/presentations.hpp"
#include "shiftmon/shift_family.hpp"

using namespace shiftmon;

namespace {

const std::vector<std::vector<Int>> kFamilies{
    {6, 9, 20}, {3, 14}, {2, 5, 7}, {4, 6}, {1, 3}, {5, 6, 9, 13}};

// Each stable-range member M_n, r_k^2 < n <= r_k^2 + span, that is primitive.
template <class F>
void for_stable_members(Int span, F&& f) {
  for (const auto& r : kFamilies) {
    const ShiftedFamily s(r);
    for (Int n = s.threshold() + 1; n <= s.threshold() + span; ++n) {
      const auto member = monoid_at(s, n);
      if (member.primitive) f(s, n, member.monoid);
    }
  }
}

// Deterministic small-instance corpus: generators <= 60, primitive, minimal.
std::vector<NumericalMonoid> corpus() {
  std::mt19937_64 rng(0x5eed);
  std::vector<NumericalMonoid> out;
  for (Int a = 2; a <= 8; ++a) {
    for (Int b = a + 1; b <= 12; ++b) {
      const std::vector<Int> g{a, b};
      if (std::gcd(a, b) == 1) out.push_back(NumericalMonoid::normalize(g));
    }
  }
  while (out.size() < 120) {
    std::vector<Int> g(3 + rng() % 2);
    for (auto& x : g) x = 10 + static_cast<Int>(rng() % 51);
    auto m = NumericalMonoid::normalize(g);
    if (m.primitive() && m.rank() >= 3) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

TEST_CASE("factorizations in different components of a Betti graph") {
  for_stable_members(2 * 20 + 5, [](const ShiftedFamily& s, Int n,
                                    const NumericalMonoid& m) {
    CAPTURE(n);
    for (const auto& g : betti_graphs(m)) {
      for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        for (std::size_t j = 0; j < g.vertices.size(); ++j) {
          if (g.component_of[i] == g.component_of[j]) continue;
          const auto& z = g.vertices[i];
          const auto& w = g.vertices[j];
          const Int diff = z.length() - w.length();
          CHECK((diff == 0 || diff == s.d() || diff == -s.d()));
          if (diff > 0) {
            CHECK(z[0] > 0);
            CHECK(w[s.k()] > 0);
          }
        }
      }
    }
  });
}

TEST_CASE("minimum length grows by one per largest generator") {
  auto check = [](std::span<const Int> gens, Int upto) {
    const Int mt = gens.back();
    const Int start = gens[gens.size() - 2] * mt + 1;
    const auto reach = oracle::reachable(gens, upto + mt);
    for (Int a = start; a <= upto; ++a) {
      if (!reach[a]) continue;
      const auto m1 = length_profile(factorizations(gens, a), a).min_length();
      const auto m2 = length_profile(factorizations(gens, a + mt), a + mt).min_length();
      REQUIRE(m2 == m1 + 1);
    }
  };
  for (const auto& g : corpus()) {
    check(g.generators(), g.generators()[g.rank() - 2] * g.largest() + 300);
  }
  // Neither primitive nor minimally generated.
  check(std::vector<Int>{4, 6, 10, 14}, 600);
  check(std::vector<Int>{6, 9, 20}, 1000);
  check(std::vector<Int>{3, 14}, 500);
}

TEST_CASE("bounds on factorizations of the offset monoid") {
  for (const auto& r : kFamilies) {
    CAPTURE(r.size());
    const Int rk = r.back();
    const Int rk1 = r.size() >= 2 ? r[r.size() - 2] : 0;
    const Int top = rk * rk + 600;
    for (Int a = rk1 * rk + 1; a <= top; ++a) {
      const auto zs = factorizations(std::span<const Int>(r), a);
      if (zs.empty()) continue;
      const auto profile = length_profile(zs, a);
      for (const auto& z : zs) {
        if (z.length() == profile.min_length()) CHECK(z[r.size() - 1] > 0);
        if (a > rk * rk) CHECK(z.length() >= rk);
      }
    }
  }
}

TEST_CASE("fast Betti elements agree with the pairwise scan") {
  for (const auto& m : corpus()) {
    const auto gens = m.generators();
    const Int bound = std::min<Int>(1200, default_window(m));
    auto fast = betti_elements(m);
    std::erase_if(fast, [&](Int b) { return b > bound; });
    const auto slow = oracle::naive_betti_scan(gens, bound);
    REQUIRE(fast == slow);
  }
  for (Int n = 2; n <= 500; n += 7) {
    const ShiftedFamily s({6, 9, 20});
    if (std::gcd(n, Int{1}) != 1 || n <= 20) continue;
    const auto member = monoid_at(s, n);
    auto fast = betti_elements(member.monoid);
    std::erase_if(fast, [](Int b) { return b > 1200; });
    REQUIRE(fast == oracle::naive_betti_scan(member.monoid.generators(), 1200));
  }
}

TEST_CASE("minimal presentations generate the kernel") {
  for (const auto& m : corpus()) {
    const auto p = minimal_presentation(m);
    const auto report = oracle::congruence_closure_check(
        m.generators(), p.relations(),
        std::min<Int>(1200, frobenius(m) + 2 * m.largest()));
    REQUIRE(report.ok());
  }
}

TEST_CASE("Betti count is periodic in the stable range") {
  for (const auto& r : kFamilies) {
    const ShiftedFamily s(r);
    for (Int n = s.threshold() + 1; n <= s.threshold() + 2 * s.largest_offset(); ++n) {
      const auto a = monoid_at(s, n);
      const auto b = monoid_at(s, n + s.largest_offset());
      if (!a.primitive || !b.primitive) continue;
      CHECK(betti_elements(a.monoid).size() == betti_elements(b.monoid).size());
    }
  }
}

TEST_CASE("accelerated and direct presentations coincide") {
  for_stable_members(45, [](const ShiftedFamily& s, Int n, const NumericalMonoid& m) {
    CAPTURE(n);
    const auto direct = minimal_presentation(m);
    const auto fast = accelerated_minimal_presentation(s, n);
    CHECK(canonicalize(m, fast, false) == canonicalize(m, direct, false));
  });
}
