#include "shiftmon/shift_family.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "shiftmon/oracle.hpp"

namespace shiftmon {

ShiftedFamily::ShiftedFamily(std::vector<Int> r) : r_(std::move(r)) {
  if (r_.empty()) {
    throw Error(ErrorCode::kInvalidInput, "family needs at least one offset");
  }
  for (std::size_t i = 0; i < r_.size(); ++i) {
    if (r_[i] < 1 || (i > 0 && r_[i] <= r_[i - 1])) {
      throw Error(ErrorCode::kInvalidInput,
                  "offsets must be positive and strictly increasing");
    }
    d_ = std::gcd(d_, r_[i]);
  }
  threshold_ = checked::mul(r_.back(), r_.back());
}

std::vector<Int> ShiftedFamily::generators_at(Int n) const {
  std::vector<Int> gens{n};
  for (Int r : r_) gens.push_back(checked::add(n, r));
  return gens;
}

Int ShiftedFamily::evaluate(Int n, const Factorization& z) const {
  return z.value(generators_at(n));
}

FamilyMember monoid_at(const ShiftedFamily& f, Int n) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidInput, "shift must be at least 1");
  }
  const auto gens = f.generators_at(n);
  // Past r_k any two generators sum beyond the largest, so no generator is
  // redundant.
  if (n <= f.largest_offset()) {
    const auto normal = NumericalMonoid::normalize(gens);
    if (normal.generators() != gens) {
      throw Error(ErrorCode::kNotMinimal,
                  "M_" + std::to_string(n) + " is not minimally generated");
    }
  }
  FamilyMember out{f, n, NumericalMonoid::from_minimal(gens), false};
  out.primitive = std::gcd(n, f.d()) == 1;
  return out;
}

ShiftedFamily family_of(const NumericalMonoid& m) {
  if (m.rank() < 2) {
    throw Error(ErrorCode::kInvalidInput,
                "a shifted family needs at least two generators");
  }
  std::vector<Int> r;
  for (std::size_t i = 1; i < m.rank(); ++i) {
    r.push_back(m.generator(i) - m.multiplicity());
  }
  return ShiftedFamily(std::move(r));
}

namespace {

void require_relation(const ShiftedFamily& f, Int n, const Relation& rel) {
  const std::size_t dim = f.k() + 1;
  if (rel.left.size() != dim || rel.right.size() != dim) {
    throw Error(ErrorCode::kNotARelation,
                "relation must have " + std::to_string(dim) + " coordinates");
  }
  if (f.evaluate(n, rel.left) != f.evaluate(n, rel.right)) {
    throw Error(ErrorCode::kNotARelation,
                "sides evaluate differently at n = " + std::to_string(n));
  }
}

// Adds `amount` to coordinate 0 of the longer side and coordinate k of the
// shorter side; equal-length relations are fixed points.
Relation shift_relation(const Relation& rel, Int amount, std::size_t k) {
  Relation out = rel;
  const Int ll = rel.left.length();
  const Int lr = rel.right.length();
  if (ll > lr) {
    out.left[0] = checked::add(out.left[0], amount);
    out.right[k] = checked::add(out.right[k], amount);
  } else if (ll < lr) {
    out.right[0] = checked::add(out.right[0], amount);
    out.left[k] = checked::add(out.left[k], amount);
  }
  return out;
}

}  // namespace

Relation phi(const ShiftedFamily& f, Int n, const Relation& rel) {
  require_relation(f, n, rel);
  const Int gap = std::abs(rel.left.length() - rel.right.length());
  const Int next = checked::add(n, f.largest_offset());
  Relation out = shift_relation(rel, gap, f.k());
  out.betti = f.evaluate(next, out.left);
  if (out.betti != f.evaluate(next, out.right)) {
    throw Error(ErrorCode::kInternal, "phi produced a non-relation");
  }
  return out;
}

Relation phi_inverse(const ShiftedFamily& f, Int n, const Relation& rel) {
  const Int next = checked::add(n, f.largest_offset());
  require_relation(f, next, rel);
  const Int ll = rel.left.length();
  const Int lr = rel.right.length();
  const Int gap = std::abs(ll - lr);
  if (gap > 0) {
    const Factorization& longer = ll > lr ? rel.left : rel.right;
    const Factorization& shorter = ll > lr ? rel.right : rel.left;
    if (longer[0] < gap || shorter[f.k()] < gap) {
      throw Error(ErrorCode::kNotInImage, "relation is not in the image of phi");
    }
  }
  Relation out = shift_relation(rel, -gap, f.k());
  out.betti = f.evaluate(n, out.left);
  return out;
}

Presentation lift_presentation(const ShiftedFamily& f, Int n,
                               const Presentation& p, Int steps) {
  if (n <= f.threshold()) {
    throw Error(ErrorCode::kPrecondition,
                "lifting needs n > r_k^2 = " + std::to_string(f.threshold()));
  }
  if (steps < 0) {
    throw Error(ErrorCode::kInvalidInput, "steps must be non-negative");
  }
  const Int target = checked::add(n, checked::mul(steps, f.largest_offset()));
  std::vector<Relation> out;
  out.reserve(p.size());
  for (const auto& rel : p.relations()) {
    require_relation(f, n, rel);
    // phi preserves the length gap, so every step adds the same amount.
    const Int gap = std::abs(rel.left.length() - rel.right.length());
    Relation lifted = shift_relation(rel, checked::mul(steps, gap), f.k());
    lifted.betti = f.evaluate(target, lifted.left);
    out.push_back(std::move(lifted));
  }
  return Presentation(std::move(out));
}

Int base_shift(const ShiftedFamily& f, Int n) {
  const Int start = f.threshold() + 1;
  if (n < start) return n;
  return start + (n - start) % f.largest_offset();
}

AcceleratedResult accelerated_minimal_presentation_detailed(
    const ShiftedFamily& f, Int n, const AcceleratedOptions& options) {
  const FamilyMember member = monoid_at(f, n);
  if (!member.primitive) {
    throw Error(ErrorCode::kNonPrimitive,
                "M_" + std::to_string(n) + " is not primitive");
  }
  AcceleratedResult result;
  if (n <= f.threshold() + f.largest_offset()) {
    result.presentation = minimal_presentation(member.monoid, options.budget);
    result.base_n = n;
    result.direct = true;
  } else {
    result.base_n = base_shift(f, n);
    result.steps = (n - result.base_n) / f.largest_offset();
    const FamilyMember base = monoid_at(f, result.base_n);
    result.presentation =
        lift_presentation(f, result.base_n,
                          minimal_presentation(base.monoid, options.budget),
                          result.steps);
    if (options.structural_check) {
      canonicalize(member.monoid, result.presentation, false, options.budget);
    }
  }
  if (options.paranoid) {
    const Int window = options.paranoid_window > 0
                           ? options.paranoid_window
                           : frobenius(member.monoid) + 2 * member.monoid.largest();
    const auto report = oracle::congruence_closure_check(
        member.monoid.generators(), result.presentation.relations(), window);
    if (!report.ok()) {
      throw Error(ErrorCode::kVerificationFailed,
                  "closure check failed at " +
                      std::to_string(report.failures.front().element));
    }
  }
  return result;
}

Presentation accelerated_minimal_presentation(const ShiftedFamily& f, Int n,
                                              const AcceleratedOptions& options) {
  return accelerated_minimal_presentation_detailed(f, n, options).presentation;
}

std::vector<Relation> equal_length_projection(const ShiftedFamily& f, Int n,
                                              const Presentation& p) {
  if (n <= f.threshold()) {
    throw Error(ErrorCode::kPrecondition,
                "projection needs n > r_k^2 = " + std::to_string(f.threshold()));
  }
  std::vector<Relation> tau;
  Int largest = 0;
  for (const auto& rel : p.relations()) {
    require_relation(f, n, rel);
    if (rel.left.length() != rel.right.length()) continue;
    Relation r;
    r.left = Factorization(
        std::vector<Int>(rel.left.coords().begin() + 1, rel.left.coords().end()));
    r.right = Factorization(std::vector<Int>(rel.right.coords().begin() + 1,
                                             rel.right.coords().end()));
    r.betti = r.left.value(f.offsets());
    largest = std::max(largest, r.betti);
    tau.push_back(std::move(r));
  }
  std::sort(tau.begin(), tau.end(), [](const Relation& a, const Relation& b) {
    return std::tie(a.betti, a.left, a.right) < std::tie(b.betti, b.left, b.right);
  });

  const std::size_t k = f.k();
  const Int rk = f.largest_offset();
  const Int below = k >= 2 ? f.offsets()[k - 2] * rk : rk;
  const Int window = std::max(largest, below) + 2 * rk;
  const auto report = oracle::congruence_closure_check(f.offsets(), tau, window);
  if (!report.ok()) {
    throw Error(ErrorCode::kInternal,
                "equal-length projection fails to present S at " +
                    std::to_string(report.failures.front().element));
  }
  return tau;
}

}  // namespace shiftmon
