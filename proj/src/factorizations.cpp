#include "shiftmon/factorizations.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace shiftmon {

Int Factorization::length() const {
  Int total = 0;
  for (Int c : coords_) total = checked::add(total, c);
  return total;
}

Int Factorization::value(std::span<const Int> generators) const {
  if (generators.size() != coords_.size()) {
    throw Error(ErrorCode::kInvalidInput, "factorization has wrong dimension");
  }
  Int total = 0;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    total = checked::add(total, checked::mul(coords_[i], generators[i]));
  }
  return total;
}

std::ostream& operator<<(std::ostream& os, const Factorization& z) {
  os << '(';
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (i) os << ',';
    os << z[i];
  }
  return os << ')';
}

void Budget::check_deadline() const {
  if (deadline && std::chrono::steady_clock::now() > *deadline) {
    throw Error(ErrorCode::kBudgetExceeded, "time budget exceeded");
  }
}

namespace {

// Modular inverse of x modulo mod (gcd(x, mod) == 1, mod >= 1).
Int inverse_mod(Int x, Int mod) {
  if (mod == 1) return 0;
  Int old_r = x % mod, r = mod, old_s = 1, s = 0;
  while (r != 0) {
    const Int q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  old_s %= mod;
  return old_s < 0 ? old_s + mod : old_s;
}

class Enumerator {
 public:
  Enumerator(std::span<const Int> gens, const Budget& budget)
      : gens_(gens), budget_(budget), coords_(gens.size(), 0) {
    // prefix_gcd_[i] = gcd(gens[0..i]) bounds what the first i+1 generators
    // can reach.
    prefix_gcd_.resize(gens.size());
    Int g = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      g = std::gcd(g, gens[i]);
      prefix_gcd_[i] = g;
    }
    if (gens.size() >= 2) {
      const Int g01 = prefix_gcd_[1];
      const Int m0 = gens[0] / g01;
      step_ = m0;
      inv_ = inverse_mod((gens[1] / g01) % m0, m0);
    }
  }

  std::vector<Factorization> run(Int a) {
    recurse(gens_.size() - 1, a);
    return std::move(out_);
  }

 private:
  void emit() {
    if (out_.size() >= budget_.max_factorizations) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "factorization count exceeds budget of " +
                      std::to_string(budget_.max_factorizations));
    }
    out_.emplace_back(coords_);
  }

  void tick() {
    if ((++nodes_ & 0xFFF) == 0) budget_.check_deadline();
  }

  void recurse(std::size_t level, Int rest) {
    tick();
    if (rest % prefix_gcd_[level] != 0) return;
    if (level == 0) {
      coords_[0] = rest / gens_[0];
      emit();
      coords_[0] = 0;
      return;
    }
    if (level == 1) {
      solve_pair(rest);
      return;
    }
    const Int g = gens_[level];
    for (Int c = rest / g; c >= 0; --c) {
      coords_[level] = c;
      recurse(level - 1, rest - c * g);
    }
    coords_[level] = 0;
  }

  // rest = c0*g0 + c1*g1: c1 runs over one residue class mod g0/gcd(g0,g1),
  // visited in descending order.
  void solve_pair(Int rest) {
    const Int g01 = prefix_gcd_[1];
    const Int reduced = (rest / g01) % step_;
    const Int base = static_cast<Int>(
        (static_cast<__int128>(reduced) * inv_) % step_);
    const Int top = rest / gens_[1];
    if (top < base) return;
    for (Int c1 = top - (top - base) % step_; c1 >= 0; c1 -= step_) {
      tick();
      coords_[1] = c1;
      coords_[0] = (rest - c1 * gens_[1]) / gens_[0];
      emit();
    }
    coords_[0] = coords_[1] = 0;
  }

  std::span<const Int> gens_;
  const Budget& budget_;
  std::vector<Int> coords_;
  std::vector<Int> prefix_gcd_;
  Int step_ = 1;
  Int inv_ = 0;
  std::size_t nodes_ = 0;
  std::vector<Factorization> out_;
};

}  // namespace

std::vector<Factorization> factorizations(std::span<const Int> generators, Int a,
                                          const Budget& budget) {
  if (generators.empty()) {
    throw Error(ErrorCode::kInvalidInput, "generator list is empty");
  }
  if (a < 0) {
    throw Error(ErrorCode::kInvalidInput, "element must be non-negative");
  }
  return Enumerator(generators, budget).run(a);
}

std::vector<Factorization> factorizations(const NumericalMonoid& m, Int a,
                                          const Budget& budget) {
  return factorizations(std::span<const Int>(m.generators()), a, budget);
}

LengthProfile length_profile(std::span<const Factorization> zs, Int element) {
  if (zs.empty()) {
    throw Error(ErrorCode::kNotAnElement,
                std::to_string(element) + " is not in the monoid");
  }
  std::set<Int> lengths;
  for (const auto& z : zs) lengths.insert(z.length());
  LengthProfile p;
  p.element = element;
  p.lengths.assign(lengths.begin(), lengths.end());
  for (std::size_t i = 1; i < p.lengths.size(); ++i) {
    p.deltas.push_back(p.lengths[i] - p.lengths[i - 1]);
  }
  return p;
}

LengthProfile length_profile(const NumericalMonoid& m, Int a,
                             const Budget& budget) {
  const auto zs = factorizations(m, a, budget);
  return length_profile(zs, a);
}

Int distance(const Factorization& z, const Factorization& w) {
  if (z.size() != w.size()) {
    throw Error(ErrorCode::kInvalidInput, "factorizations differ in dimension");
  }
  Int left = 0, right = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const Int common = std::min(z[i], w[i]);
    left += z[i] - common;
    right += w[i] - common;
  }
  return std::max(left, right);
}

}  // namespace shiftmon
