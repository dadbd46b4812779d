#pragma once

#include <span>
#include <vector>

#include "shiftmon/monoid.hpp"
#include "shiftmon/presentations.hpp"

namespace shiftmon {

// r_1 < ... < r_k defining S = <r_1, ..., r_k> and M_n = <n, n+r_1, ..., n+r_k>.
class ShiftedFamily {
 public:
  explicit ShiftedFamily(std::vector<Int> r);

  const std::vector<Int>& offsets() const noexcept { return r_; }
  std::size_t k() const noexcept { return r_.size(); }
  Int largest_offset() const noexcept { return r_.back(); }
  Int d() const noexcept { return d_; }
  // r_k^2; the bijection between presentations holds for n strictly above.
  Int threshold() const noexcept { return threshold_; }

  std::vector<Int> generators_at(Int n) const;
  // pi_n(z) = z_0 n + sum z_i (n + r_i).
  Int evaluate(Int n, const Factorization& z) const;

  friend bool operator==(const ShiftedFamily&, const ShiftedFamily&) = default;

 private:
  std::vector<Int> r_;
  Int d_ = 0;
  Int threshold_ = 0;
};

struct FamilyMember {
  ShiftedFamily family;
  Int n = 0;
  NumericalMonoid monoid;
  bool primitive = false;
};

// Throws kNotMinimal when n <= r_k and the tuple is not minimally generating.
FamilyMember monoid_at(const ShiftedFamily& f, Int n);

// Recognizes M = <m_1, ..., m_t> as M_{m_1} of the family r_i = m_{i+1} - m_1.
// Requires t >= 2.
ShiftedFamily family_of(const NumericalMonoid& m);

Relation phi(const ShiftedFamily& f, Int n, const Relation& rel);
// Inverse of phi at shift n: rel lives in ker pi_{n + r_k}, the result in
// ker pi_n.
Relation phi_inverse(const ShiftedFamily& f, Int n, const Relation& rel);

Presentation lift_presentation(const ShiftedFamily& f, Int n,
                               const Presentation& p, Int steps);

// Smallest n0 > r_k^2 with n0 = n (mod r_k).
Int base_shift(const ShiftedFamily& f, Int n);

struct AcceleratedOptions {
  bool structural_check = true;
  // Adds a congruence-closure check on [0, paranoid_window] (0 picks
  // frobenius + 2 m_t).
  bool paranoid = false;
  Int paranoid_window = 0;
  Budget budget;
};

struct AcceleratedResult {
  Presentation presentation;
  Int base_n = 0;
  Int steps = 0;
  bool direct = false;
};

AcceleratedResult accelerated_minimal_presentation_detailed(
    const ShiftedFamily& f, Int n, const AcceleratedOptions& options = {});
Presentation accelerated_minimal_presentation(
    const ShiftedFamily& f, Int n, const AcceleratedOptions& options = {});

// Equal-length relations of p with coordinate 0 dropped, checked to present
// S on a window; kInternal if that check fails.
std::vector<Relation> equal_length_projection(const ShiftedFamily& f, Int n,
                                              const Presentation& p);

}  // namespace shiftmon
