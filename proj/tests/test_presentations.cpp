#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "shiftmon/oracle.hpp"
#include "shiftmon/presentations.hpp"

using namespace shiftmon;

namespace {

NumericalMonoid M(std::vector<Int> g) { return NumericalMonoid::normalize(g); }

std::set<std::pair<Factorization, Factorization>> unordered(
    const std::vector<Relation>& rels) {
  std::set<std::pair<Factorization, Factorization>> out;
  for (const auto& r : rels) {
    const auto o = oriented(r);
    out.emplace(o.left, o.right);
  }
  return out;
}

}  // namespace

TEST_CASE("factorization graph components") {
  const auto m = M({6, 9, 20});
  const auto g18 = factorization_graph(m, 18);
  CHECK(g18.component_count == 2);
  CHECK(g18.components().size() == 2);

  const auto g60 = factorization_graph(m, 60);
  CHECK(g60.component_count == 2);
  // (0,0,3) shares no atom with the four 6/9 factorizations.
  const auto comps = g60.components();
  CHECK(comps[0].size() == 1);
  CHECK(g60.vertices[comps[0][0]] == Factorization{0, 0, 3});
  CHECK(comps[1].size() == 4);

  const auto g126 = factorization_graph(m, 126);
  CHECK(g126.connected());

  const auto atom = factorization_graph(m, 6);
  CHECK(atom.connected());
  CHECK(atom.vertices.size() == 1);

  CHECK_THROWS_AS(factorization_graph(m, 43), Error);
}

TEST_CASE("components match pairwise shared-atom search") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Int> raw(3 + rng() % 2);
    for (auto& g : raw) g = 5 + static_cast<Int>(rng() % 40);
    const auto m = M(raw);
    if (!m.primitive() || m.rank() < 3) continue;
    const auto naive = oracle::naive_betti_scan(m.generators(), 500);
    for (Int a = 1; a <= 500; ++a) {
      const auto zs = factorizations(m, a);
      if (zs.empty()) continue;
      const bool disconnected = !factorization_graph(m, a, zs).connected();
      CHECK(disconnected == std::binary_search(naive.begin(), naive.end(), a));
    }
  }
}

TEST_CASE("betti elements") {
  CHECK(betti_elements(M({6, 9, 20})) == std::vector<Int>{18, 60});
  CHECK(betti_elements(M({450, 456, 459, 470})) ==
        std::vector<Int>{1368, 3210, 3672, 11280, 11700, 11706});
  CHECK(betti_elements(M({2, 3})) == std::vector<Int>{6});
  CHECK(betti_elements(M({1})).empty());
  CHECK_THROWS_AS(betti_elements(M({4, 6})), Error);

  // The M_450 value list is pi of the example relations.
  std::set<Int> from_relations;
  for (const auto& r : fixtures::m450()) {
    from_relations.insert(r.left.value(std::vector<Int>{450, 456, 459, 470}));
  }
  CHECK(std::vector<Int>(from_relations.begin(), from_relations.end()) ==
        betti_elements(M({450, 456, 459, 470})));
}

TEST_CASE("minimal presentation is the canonical star") {
  const auto p23 = minimal_presentation(M({2, 3}));
  CHECK(p23.relations() == std::vector<Relation>{{{3, 0}, {0, 2}, 6}});

  const auto p = minimal_presentation(M({6, 9, 20}));
  CHECK(p.relations() == std::vector<Relation>{{{3, 0, 0}, {0, 2, 0}, 18},
                                               {{1, 6, 0}, {0, 0, 3}, 60}});

  const auto m450 = M({450, 456, 459, 470});
  const auto p450 = minimal_presentation(m450);
  CHECK(p450.size() == 6);
  CHECK(p450.betti_elements() == betti_elements(m450));
  CHECK(oracle::congruence_closure_check(m450.generators(), p450.relations(),
                                         frobenius(m450) + 2 * 470)
            .ok());
  // The source example chose different representatives; both are minimal
  // with the same component structure.
  const Presentation listed(fixtures::tagged(fixtures::m450(), m450.generators()));
  CHECK(canonicalize(m450, listed) == canonicalize(m450, p450));
}

TEST_CASE("all minimal presentations") {
  const auto m = M({6, 9, 20});
  const auto all = all_minimal_presentations(m, 100);
  CHECK(all.count == 4);
  CHECK_FALSE(all.saturated);
  REQUIRE(all.items.size() == 4);
  std::set<std::set<std::pair<Factorization, Factorization>>> got;
  for (const auto& p : all.items) got.insert(unordered(p.relations()));
  const Factorization b18l{3, 0, 0}, b18r{0, 2, 0}, c{0, 0, 3};
  std::set<std::set<std::pair<Factorization, Factorization>>> expected;
  for (Factorization z : {Factorization{10, 0, 0}, Factorization{7, 2, 0},
                          Factorization{4, 4, 0}, Factorization{1, 6, 0}}) {
    expected.insert(unordered({{b18l, b18r, 18}, {z, c, 60}}));
  }
  CHECK(got == expected);

  const auto capped = all_minimal_presentations(m, 2);
  CHECK(capped.count == 4);
  CHECK(capped.items.size() == 2);

  CHECK(all_minimal_presentations(M({2, 3}), 10).count == 1);
  CHECK(all_minimal_presentations(M({1}), 10).count == 1);
}

TEST_CASE("presentation sizes and counts for M_417 and M_420") {
  for (auto [n, size] : {std::pair<Int, std::size_t>{417, 8}, {420, 4}}) {
    const auto m = M({n, n + 6, n + 9, n + 20});
    const auto all = all_minimal_presentations(m, 50);
    REQUIRE_FALSE(all.items.empty());
    for (const auto& p : all.items) CHECK(p.size() == size);
  }
}

TEST_CASE("spanning tree counts") {
  const std::vector<std::size_t> two{4, 1};
  CHECK(spanning_tree_count(two) == 4);
  // Three singleton components: K_3 has 3 spanning trees.
  const std::vector<std::size_t> k3{1, 1, 1};
  CHECK(spanning_tree_count(k3) == 3);
  // Generalized Cayley: prod(s_i) * N^(c-2).
  const std::vector<std::size_t> mixed{2, 3, 1, 4};
  CHECK(spanning_tree_count(mixed) == Int{2 * 3 * 1 * 4} * 10 * 10);
  const std::vector<std::size_t> huge(40, std::size_t{1} << 20);
  CHECK_FALSE(spanning_tree_count(huge).has_value());
}

TEST_CASE("spanning tree enumeration on a three-component Betti element") {
  // 30 = 5*6 = 3*10 = 2*15, pairwise disjoint supports.
  const auto m = M({6, 10, 15});
  const auto graphs = betti_graphs(m);
  Int product = 1;
  bool three = false;
  for (const auto& g : graphs) {
    std::vector<std::size_t> sizes;
    for (const auto& c : g.components()) sizes.push_back(c.size());
    if (g.element == 30) {
      CHECK(g.component_count == 3);
      three = true;
    }
    product *= *spanning_tree_count(sizes);
  }
  CHECK(three);
  const auto all = all_minimal_presentations(m, 1000);
  CHECK(all.count == product);
  CHECK(static_cast<Int>(all.items.size()) == product);
  std::set<std::vector<Relation>> distinct;
  for (const auto& p : all.items) {
    distinct.insert(p.relations());
    CHECK(oracle::congruence_closure_check(m.generators(), p.relations(), 120).ok());
  }
  CHECK(distinct.size() == all.items.size());
}

TEST_CASE("canonicalize rejects non-minimal relation sets") {
  const auto m = M({6, 9, 20});
  const Presentation missing({{{3, 0, 0}, {0, 2, 0}, 18}});
  CHECK_THROWS_AS(canonicalize(m, missing), Error);
  CHECK_NOTHROW(canonicalize(m, missing, false));
  const Presentation same_component(
      {{{3, 0, 0}, {0, 2, 0}, 18}, {{10, 0, 0}, {1, 6, 0}, 60}});
  CHECK_THROWS_AS(canonicalize(m, same_component), Error);
  const Presentation wrong_value({{{3, 0, 0}, {0, 2, 0}, 19}});
  CHECK_THROWS_AS(canonicalize(m, wrong_value, false), Error);
}
