#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mtc/errors.hpp"
#include "mtc/modular.hpp"
#include "mtc/simple_currents.hpp"

namespace mtc {

double RelationReport::max_residual() const {
  return std::max({symmetry, unitarity, s2_minus_c, s4_minus_1, st3_minus_s2, theta_vs_t,
                   qdim_defect, covariance});
}

std::string to_string(RelationMethod method) {
  switch (method) {
    case RelationMethod::automatic: return "automatic";
    case RelationMethod::dense: return "dense";
    case RelationMethod::simple_current_blocks: return "simple-current-blocks";
  }
  return "unknown";
}

namespace {

using cd = std::complex<double>;
using Eigen::Index;
using Eigen::MatrixXcd;

void common_checks(const ModularDatum& d, RelationReport& rep) {
  const auto& S = d.S;
  double sym = 0.0;
  for (Index j = 0; j < S.cols(); ++j)
    for (Index i = j + 1; i < S.rows(); ++i) sym = std::max(sym, std::abs(S(i, j) - S(j, i)));
  rep.symmetry = sym;
  double th = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i)
    th = std::max(th, std::abs(d.t_diagonal(i) * d.zeta - d.theta[i].value()));
  rep.theta_vs_t = th;
  double q = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const cd r = S(0, i) / S(0, 0);
    q = std::max(q, std::abs(r.imag()) / std::abs(r));
    if (!(r.real() > 0.0)) q = std::max(q, 1.0);
  }
  rep.qdim_defect = q;
}

RelationReport dense(const ModularDatum& d) {
  RelationReport rep;
  rep.method = RelationMethod::dense;
  common_checks(d, rep);
  const auto n = static_cast<Index>(d.size());
  const auto& S = d.S;
  const MatrixXcd I = MatrixXcd::Identity(n, n);
  const MatrixXcd C = d.c_matrix().cast<cd>();

  rep.unitarity = (S * S.adjoint() - I).cwiseAbs().maxCoeff();
  const MatrixXcd S2 = S * S;
  rep.s2_minus_c = (S2 - C).cwiseAbs().maxCoeff();
  rep.s4_minus_1 = (S2 * S2 - I).cwiseAbs().maxCoeff();
  const MatrixXcd ST = S * d.t_diagonal.asDiagonal();
  rep.st3_minus_s2 = (ST * ST * ST - S2).cwiseAbs().maxCoeff();
  return rep;
}

// S_{Jλ,μ} = ω^{-t(μ)} S_{λμ} with ω = e^{2πi/N} and t the N-ality. So for an orbit
// O = {J^p λ_O} of size s and r with rs ≡ 0 (mod N), the unit vector
// f_{O,r} = s^{-1/2} Σ_p ω^{rp} e_{J^p λ_O} is mapped by S into the span of the
// weights of N-ality r. Collecting these vectors into a unitary U, A = SU is
// block diagonal: block r maps the modes (O, r) to the weights R_r of N-ality r.
RelationReport blocked(const ModularDatum& d) {
  RelationReport rep;
  rep.method = RelationMethod::simple_current_blocks;
  common_checks(d, rep);

  const int N = d.N;
  const std::size_t n = d.size();
  const auto& S = d.S;
  const auto jperm = action_permutation(d.alcove, 1);

  std::vector<int> charge(n);
  for (std::size_t i = 0; i < n; ++i) charge[i] = n_ality(N, d.alcove[i]);

  std::vector<std::vector<std::size_t>> orbits;
  {
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[i]) continue;
      std::vector<std::size_t> orbit;
      for (std::size_t j = i; !seen[j]; j = jperm[j]) {
        seen[j] = true;
        orbit.push_back(j);
      }
      orbits.push_back(std::move(orbit));
    }
  }

  std::vector<std::vector<std::size_t>> rows(N);   // R_r
  std::vector<std::vector<std::size_t>> modes(N);  // orbit ids in M_r
  std::vector<std::size_t> row_pos(n);
  for (std::size_t i = 0; i < n; ++i) {
    row_pos[i] = rows[charge[i]].size();
    rows[charge[i]].push_back(i);
  }
  for (std::size_t o = 0; o < orbits.size(); ++o)
    for (int r = 0; r < N; ++r)
      if ((static_cast<std::size_t>(r) * orbits[o].size()) % N == 0) modes[r].push_back(o);
  for (int r = 0; r < N; ++r)
    if (rows[r].size() != modes[r].size()) {
      rep.covariance = std::numeric_limits<double>::infinity();
      return rep;
    }

  std::vector<cd> omega(N);
  for (int m = 0; m < N; ++m) omega[m] = std::polar(1.0, 2.0 * std::numbers::pi * m / N);
  auto coeff = [&](std::size_t s, int r, std::size_t p) {  // U_{o_p,(O,r)}
    return omega[(static_cast<std::size_t>(r) * p) % N] / std::sqrt(static_cast<double>(s));
  };
  auto neg = [N](int r) { return (N - r) % N; };

  // Blocks B_r and the largest entry of SU outside them.
  std::vector<MatrixXcd> B(N);
  double leak = 0.0;
  Eigen::VectorXcd col(n);
  for (int r = 0; r < N; ++r) {
    const std::size_t m = rows[r].size();
    B[r].resize(m, m);
    for (std::size_t c = 0; c < m; ++c) {
      const auto& orbit = orbits[modes[r][c]];
      col.setZero();
      for (std::size_t p = 0; p < orbit.size(); ++p) col += coeff(orbit.size(), r, p) * S.col(orbit[p]);
      for (std::size_t i = 0; i < n; ++i) {
        if (charge[i] == r)
          B[r](row_pos[i], c) = col(i);
        else
          leak = std::max(leak, std::abs(col(i)));
      }
    }
  }
  rep.covariance = leak;

  // SS† = AA† is block diagonal in the standard basis with blocks B_r B_r†.
  double unit = 0.0;
  for (int r = 0; r < N; ++r) {
    const auto m = B[r].rows();
    MatrixXcd G = MatrixXcd::Zero(m, m);
    G.selfadjointView<Eigen::Lower>().rankUpdate(B[r]);
    G.diagonal().array() -= 1.0;
    unit = std::max(unit, G.triangularView<Eigen::Lower>().toDenseMatrix().cwiseAbs().maxCoeff());
  }
  rep.unitarity = unit;

  // S = AU† = ŪAᵀ, so S² = A (U†Ū) Aᵀ. U†Ū pairs mode (O, r) with (O, -r), hence
  // S² maps R_{-r} to R_r through K_r = B_r B_{-r}ᵀ, and K_{-r} = K_rᵀ. C does the
  // same if t(λ̄) = -t(λ).
  std::vector<MatrixXcd> K(N);
  for (int r = 0; r < N; ++r)
    K[r] = r <= neg(r) ? MatrixXcd(B[r] * B[neg(r)].transpose()) : MatrixXcd(K[neg(r)].transpose());
  std::vector<std::vector<Index>> cperm(N);  // C restricted to R_r, as positions in R_{-r}
  std::vector<MatrixXcd> E(N);               // K_r - C_r
  double s2c = 0.0;
  for (int r = 0; r < N; ++r) {
    E[r] = K[r];
    cperm[r].assign(rows[r].size(), -1);
    for (std::size_t a = 0; a < rows[r].size(); ++a) {
      const std::size_t bar = d.conjugation[rows[r][a]];
      if (charge[bar] != neg(r)) {
        s2c = std::max(s2c, 1.0);
        continue;
      }
      cperm[r][a] = static_cast<Index>(row_pos[bar]);
      E[r](static_cast<Index>(a), cperm[r][a]) -= 1.0;
    }
    s2c = std::max(s2c, E[r].cwiseAbs().maxCoeff());
  }
  rep.s2_minus_c = s2c;

  // K_r K_{-r} - 1 = K_r C_{-r} - 1 + K_r E_{-r}. The first term is a column
  // permutation of K_r; entries of the second are bounded by row norms of K_r
  // times column norms of E_{-r}.
  double s4 = s2c >= 1.0 ? 1.0 : 0.0;
  for (int r = 0; r < N && s4 < 1.0; ++r) {
    const auto m = K[r].rows();
    const int nr = neg(r);
    MatrixXcd KC = MatrixXcd::Zero(m, m);
    for (std::size_t b = 0; b < rows[nr].size(); ++b)
      KC.col(cperm[nr][b]) = K[r].col(static_cast<Index>(b));
    KC.diagonal().array() -= 1.0;
    const double bound = std::sqrt(K[r].rowwise().squaredNorm().maxCoeff()) *
                         std::sqrt(E[nr].colwise().squaredNorm().maxCoeff());
    s4 = std::max(s4, KC.cwiseAbs().maxCoeff() + bound);
  }
  rep.s4_minus_1 = s4;

  // (ST)³ - S² = ST X T with X = STS - T⁻¹ST⁻¹. Since STS = Ū (AᵀTA) U† and AᵀTA
  // is block diagonal with blocks L_r = B_rᵀ T_{R_r} B_r, every entry of X costs
  // O(N). Each entry of ST X T is bounded by ‖row of S‖ · ‖column of X‖.
  std::vector<MatrixXcd> L(N);
  for (int r = 0; r < N; ++r) {
    Eigen::VectorXcd tr(rows[r].size());
    for (std::size_t a = 0; a < rows[r].size(); ++a) tr(static_cast<Index>(a)) = d.t_diagonal(rows[r][a]);
    const MatrixXcd TB = tr.asDiagonal() * B[r];
    L[r] = MatrixXcd::Zero(B[r].cols(), B[r].cols());
    L[r].triangularView<Eigen::Lower>() = B[r].transpose() * TB;
    L[r].triangularView<Eigen::StrictlyUpper>() = L[r].transpose();
  }
  std::vector<std::size_t> orbit_of(n), pos_in_orbit(n);
  for (std::size_t o = 0; o < orbits.size(); ++o)
    for (std::size_t p = 0; p < orbits[o].size(); ++p) {
      orbit_of[orbits[o][p]] = o;
      pos_in_orbit[orbits[o][p]] = p;
    }
  std::vector<std::vector<std::size_t>> mode_pos(orbits.size(), std::vector<std::size_t>(N, 0));
  for (int r = 0; r < N; ++r)
    for (std::size_t c = 0; c < modes[r].size(); ++c) mode_pos[modes[r][c]][r] = c;

  // uc[i][r] = conj(U_{i,(O_i,r)}), zero when (O_i, r) is not a mode.
  std::vector<cd> uc(n * N, cd(0.0));
  std::vector<Index> mp(n * N, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t si = orbits[orbit_of[i]].size();
    for (int r = 0; r < N; ++r)
      if ((static_cast<std::size_t>(r) * si) % N == 0) {
        uc[i * N + r] = std::conj(coeff(si, r, pos_in_orbit[i]));
        mp[i * N + r] = static_cast<Index>(mode_pos[orbit_of[i]][r]);
      }
  }

  const Eigen::VectorXcd tinv = d.t_diagonal.cwiseInverse();
  double worst_column = 0.0;
  std::vector<int> live;
  for (std::size_t j = 0; j < n; ++j) {
    live.clear();
    for (int r = 0; r < N; ++r)
      if (uc[j * N + r] != cd(0.0)) live.push_back(r);
    const Index jj = static_cast<Index>(j);
    double column2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      cd sts = 0.0;
      for (int r : live) {
        const cd ui = uc[i * N + r];
        if (ui == cd(0.0)) continue;
        sts += ui * uc[j * N + r] * L[r](mp[i * N + r], mp[j * N + r]);
      }
      const Index ii = static_cast<Index>(i);
      column2 += std::norm(sts - tinv(ii) * S(ii, jj) * tinv(jj));
    }
    worst_column = std::max(worst_column, column2);
  }
  double worst_row = 0.0;
  for (Index i = 0; i < static_cast<Index>(n); ++i) worst_row = std::max(worst_row, S.row(i).squaredNorm());
  rep.st3_minus_s2 = std::sqrt(worst_row) * std::sqrt(worst_column);
  return rep;
}

}  // namespace

RelationReport verify_relations(const ModularDatum& datum, RelationMethod method,
                                std::size_t dense_limit) {
  if (method == RelationMethod::automatic)
    method = datum.size() <= dense_limit ? RelationMethod::dense : RelationMethod::simple_current_blocks;
  if (method == RelationMethod::dense) return dense(datum);
  return blocked(datum);
}

}  // namespace mtc
