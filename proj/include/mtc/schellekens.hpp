#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mtc/int_matrix.hpp"
#include "mtc/liealg.hpp"
#include "mtc/phase.hpp"
#include "mtc/simple_currents.hpp"

namespace mtc {

/// χ_i(g) = θ_{gi} θ_g⁻¹ θ_i⁻¹, i.e. turns (Δ_g + Δ_i - Δ_{gi}) mod 1.
RationalPhase character(int N, int k, const Weight& i, const SimpleCurrent& g);

/// Schellekens algebra with cyclic support H = ⟨J^p⟩ and Kreuzer-Schellekens
/// bihomomorphism Ξ(J^{ap}, J^{bp}) = θ_{J^p}^{ab}.
struct SchellekensAlgebra {
  int N = 2;
  int k = 0;
  int support_generator = 0;  // p, reduced mod N
  int order_H = 1;
  RationalPhase xi_base;      // θ_{J^p}

  /// Ξ(J^{ap}, J^{bp}).
  RationalPhase xi(int a, int b) const { return xi_base.pow(static_cast<std::int64_t>(a) * b); }
  /// Exponents {0, p, 2p, ...} mod N of the support, sorted.
  std::vector<int> support() const;
  bool is_trivial_algebra() const { return order_H == 1; }
};

/// Throws SupportNotInEffectiveCenter if ⟨J^p⟩ ⊄ Pic°(C_{N,k}).
SchellekensAlgebra build_algebra(int N, int k, int p);

struct TorusPartitionFunction {
  IntMatrix Z;
  SchellekensAlgebra algebra;
};

/// Z_ij(A) = 1/|H| Σ_{h,g∈H} χ_i(h) Ξ(h,g) δ_{j,gi}, evaluated exactly: for each
/// g = J^{bp} the sum over h is a character sum over the cyclic group H, equal
/// to |H| when the character a ↦ χ_i(J^{ap}) Ξ(J^{ap}, J^{bp}) is trivial and 0
/// otherwise.
TorusPartitionFunction torus_partition_function(const SchellekensAlgebra& algebra);
TorusPartitionFunction torus_partition_function(const SchellekensAlgebra& algebra,
                                                const Alcove& alcove);

/// True iff Z = c·1.
bool is_trivial(const IntMatrix& Z);

struct MatrixEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  int value = 0;
};

struct SupportSummary {
  int generator = 0;
  int order = 1;
  bool trivial = true;
};

struct ReducibilityReport {
  int N = 2;
  int k = 1;
  std::string case_label;   // see covering_case
  EffectiveCenter center;
  int support_generator = 0;
  int support_order = 1;
  IntMatrix Z;
  bool trivial = true;
  std::optional<MatrixEntry> witness;        // first off-diagonal nonzero entry
  std::optional<MatrixEntry> proof_witness;  // the entry named by the case argument
  std::vector<SupportSummary> supports;      // every cyclic subgroup inside Pic°
  std::string verdict;
};

inline constexpr const char* kVerdictReducible = "reducible (all g \xE2\x89\xA5 1)";
inline constexpr const char* kVerdictNoConclusion = "no conclusion from this criterion";

/// Which case of the reducibility argument covers (N, k): "N|k" (checked
/// first), "N odd", "N,k even", "N even, k odd", or "N=2".
std::string covering_case(int N, int k);

/// Support generator p chosen by the case split: ⟨J⟩ for N odd or for N, k even
/// with 4 ∤ k or gcd(N/2, k/2) ≠ 1; ⟨J²⟩ for N even with k odd, or 4 | k and
/// gcd(N/2, k/2) = 1. For N = 2: ⟨J⟩ for even k, trivial for odd k.
int case_support(int N, int k);

/// The entry (i, j), i ≠ j, that the argument for the covering case shows to
/// be 1; nullopt for N = 2.
std::optional<MatrixEntry> case_witness(int N, int k, const Alcove& alcove);

/// Builds the algebra on the case support (or on `support` if given),
/// evaluates Z and states the verdict.
ReducibilityReport reducibility_verdict(int N, int k, std::optional<int> support = std::nullopt);

}  // namespace mtc
