#pragma once

#include <optional>
#include <set>
#include <span>

#include "shiftmon/factorizations.hpp"
#include "shiftmon/monoid.hpp"
#include "shiftmon/shift_family.hpp"

namespace shiftmon {

// Identifies M as M_n of a shifted family, enabling the results that hold
// for n > r_k^2.
struct FamilyContext {
  ShiftedFamily family;
  Int n = 0;

  bool in_stable_range() const { return n > family.threshold(); }
};

// Context for M when it is M_{m_1} of its own family with m_1 > r_k^2.
std::optional<FamilyContext> detect_family(const NumericalMonoid& m);

// m_{t-1} m_t + 2 m_t, which covers every Betti element.
Int default_window(const NumericalMonoid& m);

Int catenary_of_element(const NumericalMonoid& m, Int a,
                        const Budget& budget = {});
Int catenary_of_element(std::span<const Factorization> zs);

Int catenary_of_monoid(const NumericalMonoid& m, const Budget& budget = {});

struct MonotoneEqual {
  Int monotone = 0;
  Int equal = 0;
};

MonotoneEqual monotone_equal_catenary(const NumericalMonoid& m, Int a,
                                      const Budget& budget = {});
MonotoneEqual monotone_equal_catenary(std::span<const Factorization> zs);

struct CatenaryReport {
  Int ordinary = 0;
  Int monotone = 0;
  Int equal = 0;
  // Set when monotone/equal are sups over [0, window] rather than exact.
  bool lower_bound = false;
  Int window = 0;
};

CatenaryReport monoid_catenary_report(
    const NumericalMonoid& m, Int window,
    const std::optional<FamilyContext>& context = std::nullopt,
    const Budget& budget = {});

struct DeltaSetResult {
  std::set<Int> values;
  bool window_limited = false;
  Int window = 0;
};

DeltaSetResult delta_set(const NumericalMonoid& m, Int window,
                         const std::optional<FamilyContext>& context = std::nullopt,
                         const Budget& budget = {});

Int tame_degree(const NumericalMonoid& m, Int a, const Budget& budget = {});
Int tame_degree(std::span<const Factorization> zs);

struct WindowedTame {
  Int value = 0;
  Int attained_at = 0;
  bool window_limited = true;
  Int window = 0;
};

WindowedTame tame_degree_windowed(const NumericalMonoid& m, Int window,
                                  const Budget& budget = {});

}  // namespace shiftmon
