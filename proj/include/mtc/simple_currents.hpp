#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mtc/liealg.hpp"

namespace mtc {

/// J^p for the generator J = (k, 0, ..., 0) of Pic(C_{N,k}) ≅ Z/N.
struct SimpleCurrent {
  int p = 0;  // in [0, N)
  Weight weight;
};

/// J^p = (0, ..., k, ..., 0) with k in position p (1-based); J^0 is the unit.
SimpleCurrent simple_current(int N, int k, int p);

/// p-fold iterate of J: (λ_1, ..., λ_{N-1}) ↦ (k - Σλ_i, λ_1, ..., λ_{N-2}).
/// p may be any integer; it is reduced mod N.
Weight act(int N, int k, int p, const Weight& lambda);

/// Order of J^p in Z/N, i.e. N / gcd(p, N); order(N, 0) = 1.
int order(int N, int p);

/// perm[i] = index of J^p·alcove[i].
std::vector<std::size_t> action_permutation(const Alcove& alcove, int p);

struct EffectiveCenter {
  std::vector<int> exponents;    // sorted p with J^p in Pic°
  std::optional<int> generator;  // smallest positive exponent
  bool contains(int p) const;
  std::size_t size() const { return exponents.size(); }
};

/// {p : |J^p| Δ_{J^p} ∈ Z}, with Δ taken from the WZW formula. Also checks the
/// result against effective_center_closed_form and throws InternalCheckFailed
/// if they disagree.
EffectiveCenter effective_center(int N, int k);

/// Full Z/N when N is odd or N, k are both even; ⟨J²⟩ when N is even and k odd.
EffectiveCenter effective_center_closed_form(int N, int k);

/// Δ_{J^p} = p(N-p)k / 2N.
Rational simple_current_weight_closed_form(int N, int k, int p);

}  // namespace mtc
