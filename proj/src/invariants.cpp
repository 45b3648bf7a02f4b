#include "mtc/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "mtc/errors.hpp"
#include "mtc/schellekens.hpp"

namespace mtc {

namespace {

using cd = std::complex<double>;
using Eigen::Index;

struct Entry {
  Index i;
  Index j;
};

// Right singular vectors of A with singular value below tol·σ_max.
template <typename Matrix>
Matrix nullspace(const Matrix& A, double tol) {
  const Index m = A.cols();
  if (A.rows() == 0) return Matrix::Identity(m, m);
  Eigen::BDCSVD<Matrix> svd(A, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = tol * std::max(sv.size() > 0 ? sv(0) : 0.0, 1.0);
  Index rank = 0;
  while (rank < sv.size() && sv(rank) > cutoff) ++rank;
  return svd.matrixV().rightCols(m - rank);
}

// Coefficients of X ↦ XS - SX restricted to the unknowns `entries`; row a*n+b
// holds (XS - SX)_ab.
Eigen::MatrixXcd commutator_operator(const Eigen::MatrixXcd& S, const std::vector<Entry>& entries) {
  const Index n = S.rows();
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n * n, static_cast<Index>(entries.size()));
  for (Index c = 0; c < static_cast<Index>(entries.size()); ++c) {
    const auto [i, j] = entries[c];
    for (Index b = 0; b < n; ++b) A(i * n + b, c) += S(j, b);
    for (Index a = 0; a < n; ++a) A(a * n + j, c) -= S(a, i);
  }
  return A;
}

}  // namespace

CommutantReport commutant(const Eigen::MatrixXcd& S, const Eigen::MatrixXcd& T) {
  const Index n = S.rows();
  std::vector<Entry> entries;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (std::abs(T(i, i) - T(j, j)) < 1e-9) entries.push_back({i, j});

  const Eigen::MatrixXcd K = nullspace(commutator_operator(S, entries), 1e-9);
  CommutantReport rep;
  rep.dimension = static_cast<int>(K.cols());
  for (Index c = 0; c < K.cols(); ++c) {
    Eigen::MatrixXcd X = Eigen::MatrixXcd::Zero(n, n);
    for (std::size_t e = 0; e < entries.size(); ++e)
      X(entries[e].i, entries[e].j) = K(static_cast<Index>(e), c);
    rep.basis.push_back(std::move(X));
  }
  return rep;
}

double commutator_residual(const IntMatrix& Z, const Eigen::MatrixXcd& S) {
  const std::size_t n = Z.size();
  struct Nonzero {
    Index i;
    double v;
  };
  // Nonzeros of Z grouped by column, so both products walk columns of S.
  std::vector<std::vector<Nonzero>> by_column(n);
  std::vector<std::pair<Index, Nonzero>> all;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (Z(i, j) != 0) {
        by_column[j].push_back({Index(i), double(Z(i, j))});
        all.push_back({Index(j), {Index(i), double(Z(i, j))}});
      }

  double worst = 0.0;
  Eigen::VectorXcd col(n);
  for (std::size_t b = 0; b < n; ++b) {
    const auto sb = S.col(Index(b));
    col.setZero();
    for (const auto& [j, e] : all) col(e.i) += e.v * sb(j);          // (ZS)_·b
    for (const auto& e : by_column[b]) col -= e.v * S.col(e.i);      // (SZ)_·b
    worst = std::max(worst, col.cwiseAbs().maxCoeff());
  }
  return worst;
}

double commutator_residual_diagonal(const IntMatrix& Z, const Eigen::VectorXcd& t_diagonal) {
  double worst = 0.0;
  for (std::size_t i = 0; i < Z.size(); ++i)
    for (std::size_t j = 0; j < Z.size(); ++j)
      if (Z(i, j) != 0)
        worst = std::max(worst, std::abs(double(Z(i, j)) * (t_diagonal(Index(j)) - t_diagonal(Index(i)))));
  return worst;
}

std::vector<EigenCluster> decompose(const IntMatrix& Z, bool require_integral) {
  if (!Z.is_symmetric()) throw NonSymmetric("decompose: Z is not symmetric");
  const Index n = static_cast<Index>(Z.size());
  std::vector<EigenCluster> out;
  if (n == 0) return out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Z.to_dense());
  const auto& values = es.eigenvalues();  // ascending
  Index start = 0;
  for (Index i = 1; i <= n; ++i) {
    if (i < n && values(i) - values(i - 1) < 1e-6) continue;
    EigenCluster c;
    c.multiplicity = static_cast<int>(i - start);
    c.value = values.segment(start, i - start).mean();
    c.basis = es.eigenvectors().middleCols(start, i - start);
    if (require_integral && std::abs(c.value - std::round(c.value)) >= 1e-6)
      throw InternalCheckFailed("decompose: eigenvalue " + std::to_string(c.value) + " is not integral");
    out.push_back(std::move(c));
    start = i;
  }
  return out;
}

InvariantMatrix describe_invariant(const IntMatrix& Z, const ModularDatum& datum) {
  InvariantMatrix inv;
  inv.Z = Z;
  inv.residual_S = commutator_residual(Z, datum.S);
  inv.residual_T = commutator_residual_diagonal(Z, datum.t_diagonal);
  inv.trivial = is_trivial(Z);
  if (Z.is_symmetric()) inv.eigen_decomposition = decompose(Z);
  return inv;
}

std::vector<InvariantMatrix> enumerate_integer_invariants(const ModularDatum& datum,
                                                          const SearchOptions& options,
                                                          SearchStatistics* stats) {
  const std::size_t n = datum.size();
  if (n > options.max_alcove)
    throw BudgetExceeded("alcove has " + std::to_string(n) + " weights, guard is " +
                         std::to_string(options.max_alcove));
  if (options.max_entry < 1) throw InvalidArgument("max_entry must be at least 1");

  std::vector<Entry> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (datum.theta[i] == datum.theta[j]) entries.push_back({Index(i), Index(j)});
  const Index m = static_cast<Index>(entries.size());

  const Eigen::MatrixXcd A = commutator_operator(datum.S, entries);
  Eigen::MatrixXd real(2 * A.rows(), m);
  real << A.real(), A.imag();
  const Eigen::MatrixXd K = nullspace(real, 1e-9);
  const Index d = K.cols();

  SearchStatistics local;
  local.masked_entries = entries.size();
  local.free_coordinates = static_cast<int>(d);
  if (d > options.budget) {
    if (stats) *stats = local;
    throw BudgetExceeded("search space has " + std::to_string(d) + " free coordinates, budget is " +
                         std::to_string(options.budget));
  }

  // Free coordinates: pivots of a column-pivoted QR of Kᵀ, so K_F is well
  // conditioned and z = P z_F with P = K K_F⁻¹.
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(K.transpose());
  std::vector<Index> free(d);
  for (Index t = 0; t < d; ++t) free[t] = qr.colsPermutation().indices()(t);
  Eigen::MatrixXd KF(d, d);
  for (Index t = 0; t < d; ++t) KF.row(t) = K.row(free[t]);
  const Eigen::MatrixXd P = K * KF.inverse();

  const double top = options.max_entry;
  const double eps = 1e-6;
  // Remaining range of Σ_{s≥t} P_rs z_s over z_s ∈ [0, top].
  Eigen::MatrixXd suffix_lo = Eigen::MatrixXd::Zero(m, d + 1);
  Eigen::MatrixXd suffix_hi = Eigen::MatrixXd::Zero(m, d + 1);
  for (Index t = d - 1; t >= 0; --t) {
    suffix_lo.col(t) = suffix_lo.col(t + 1) + (P.col(t) * top).cwiseMin(0.0);
    suffix_hi.col(t) = suffix_hi.col(t + 1) + (P.col(t) * top).cwiseMax(0.0);
  }
  Index unit = 0;  // position of Z_00 among the unknowns
  while (entries[unit].i != 0 || entries[unit].j != 0) ++unit;

  std::set<IntMatrix> found;
  Eigen::VectorXd partial = Eigen::VectorXd::Zero(m);

  auto feasible = [&](Index t) {
    for (Index r = 0; r < m; ++r) {
      const double lo = partial(r) + suffix_lo(r, t);
      const double hi = partial(r) + suffix_hi(r, t);
      if (hi < -eps || lo > top + eps) return false;
      if (r == unit && (hi < 1 - eps || lo > 1 + eps)) return false;
    }
    return true;
  };

  auto accept = [&]() {
    IntMatrix Z(n);
    for (Index r = 0; r < m; ++r) {
      const double v = partial(r);
      const double rounded = std::round(v);
      if (std::abs(v - rounded) > eps || rounded < 0 || rounded > top) return;
      Z(std::size_t(entries[r].i), std::size_t(entries[r].j)) = static_cast<int>(rounded);
    }
    if (Z(0, 0) != 1) return;
    if (commutator_residual(Z, datum.S) >= 1e-9) return;
    found.insert(std::move(Z));
  };

  auto dfs = [&](auto& self, Index t) -> void {
    ++local.nodes_visited;
    if (!feasible(t)) return;
    if (t == d) {
      accept();
      return;
    }
    for (int v = 0; v <= options.max_entry; ++v) {
      partial += P.col(t) * v;
      self(self, t + 1);
      partial -= P.col(t) * v;
    }
  };
  dfs(dfs, 0);

  if (stats) *stats = local;
  std::vector<InvariantMatrix> out;
  for (const auto& Z : found) out.push_back(describe_invariant(Z, datum));
  return out;
}

}  // namespace mtc
