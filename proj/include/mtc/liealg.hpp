#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mtc/rational.hpp"

namespace mtc {

/// Dominant integral weight of su(N) in Dynkin labels (λ_1, ..., λ_{N-1}).
struct Weight {
  std::vector<int> labels;

  int level() const;
  bool is_zero() const;
  std::string to_string() const;  // "(1,0,2)"

  auto operator<=>(const Weight&) const = default;
};

/// Weights of su(N) at level k ordered lexicographically; index 0 is the unit.
class Alcove {
 public:
  Alcove(int N, int k);

  int rank() const { return N_; }
  int level() const { return k_; }
  std::size_t size() const { return weights_.size(); }
  const std::vector<Weight>& weights() const { return weights_; }
  const Weight& operator[](std::size_t i) const { return weights_[i]; }

  std::optional<std::size_t> find(const Weight& w) const;
  /// Like find, but throws InvalidArgument for weights outside the alcove.
  std::size_t index_of(const Weight& w) const;

 private:
  int N_;
  int k_;
  std::vector<Weight> weights_;
  std::map<std::vector<int>, std::size_t> index_;
};

/// All weights with Σλ_i ≤ k, lexicographic, zero weight first.
std::vector<Weight> enumerate_alcove(int N, int k);

/// Symmetrized inverse Cartan matrix G_ij = min(i,j)(N - max(i,j))/N.
/// Math indices are 1-based; storage is 0-based, so G[i-1][j-1] holds G_ij.
std::vector<std::vector<Rational>> inverse_cartan(int N);

/// (μ, ν) = Σ_ij μ_i ν_j G_ij.
Rational inner_product(int N, const Weight& mu, const Weight& nu);

/// Δ_λ = (λ, λ + 2ρ) / (2(k + N)), with ρ = (1, ..., 1) and h^∨ = N.
Rational conformal_weight(int N, int k, const Weight& lambda);

/// Label reversal, the charge conjugation λ ↦ λ̄ of su(N).
Weight conjugate(int N, const Weight& lambda);

/// N-ality Σ_j j·λ_j mod N, in [0, N).
int n_ality(int N, const Weight& lambda);

}  // namespace mtc
