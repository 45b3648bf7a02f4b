#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "mtc/int_matrix.hpp"
#include "mtc/modular.hpp"

namespace mtc {

/// Joint commutant {X : XS = SX, XT = TX}.
struct CommutantReport {
  int dimension = 0;
  std::vector<Eigen::MatrixXcd> basis;  // orthonormal in the Frobenius inner product
};

/// Nullspace of X ↦ (XS - SX, XT - TX). T must be diagonal; X is restricted to
/// the entries where T_ii = T_jj (within 1e-9) before the S constraints are
/// solved. Singular values below 1e-9·σ_max count as zero.
CommutantReport commutant(const Eigen::MatrixXcd& S, const Eigen::MatrixXcd& T);

/// max |(ZS - SZ)_ij|, using the sparsity of Z.
double commutator_residual(const IntMatrix& Z, const Eigen::MatrixXcd& S);
/// max |(ZT - TZ)_ij| for diagonal T.
double commutator_residual_diagonal(const IntMatrix& Z, const Eigen::VectorXcd& t_diagonal);

struct EigenCluster {
  double value = 0;
  int multiplicity = 0;
  Eigen::MatrixXd basis;  // orthonormal columns spanning the eigenspace
};

/// Eigenvalues of a symmetric integer matrix clustered at 1e-6, in ascending
/// order. With require_integral, every eigenvalue must lie within 1e-6 of an
/// integer (InternalCheckFailed otherwise). Throws NonSymmetric.
std::vector<EigenCluster> decompose(const IntMatrix& Z, bool require_integral = false);

struct InvariantMatrix {
  IntMatrix Z;
  double residual_S = 0;
  double residual_T = 0;
  bool trivial = false;
  std::vector<EigenCluster> eigen_decomposition;  // empty if Z is not symmetric
};

struct SearchOptions {
  int max_entry = 3;
  std::size_t max_alcove = 36;  // alcove size guard
  int budget = 24;              // max free lattice coordinates after the S constraints
};

struct SearchStatistics {
  std::size_t masked_entries = 0;  // unknowns allowed by the exact θ mask
  int free_coordinates = 0;        // dimension of the solution space of ZS = SZ on the mask
  std::size_t nodes_visited = 0;
};

/// All Z with entries in {0..max_entry}, Z_00 = 1, supported where θ_i = θ_j
/// exactly, and ‖ZS - SZ‖ < 1e-9. Sorted, duplicate-free.
///
/// The S constraints are solved first (real nullspace on the masked entries);
/// the integer points of that subspace are then enumerated by depth-first
/// search over a well-conditioned set of free coordinates, pruning with
/// interval bounds on the dependent ones. Throws BudgetExceeded when the alcove
/// is larger than max_alcove or the solution space has more than `budget` free
/// coordinates.
std::vector<InvariantMatrix> enumerate_integer_invariants(const ModularDatum& datum,
                                                          const SearchOptions& options = {},
                                                          SearchStatistics* stats = nullptr);

InvariantMatrix describe_invariant(const IntMatrix& Z, const ModularDatum& datum);

}  // namespace mtc
