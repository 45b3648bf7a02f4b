#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mtc/liealg.hpp"
#include "mtc/phase.hpp"

namespace mtc {

/// Genus-1 modular data of C_{N,k}.
///
/// The twists are exact; S, T and ζ are complex doubles. T is diagonal and C a
/// permutation, so both are stored compactly: T_ii = t_diagonal[i] and
/// C_{i, conjugation[i]} = 1.
struct ModularDatum {
  int N = 2;
  int k = 0;
  Alcove alcove{2, 0};
  std::vector<Rational> conformal_weights;
  std::vector<RationalPhase> theta;
  Eigen::MatrixXcd S;
  Eigen::VectorXcd t_diagonal;
  std::vector<std::size_t> conjugation;
  std::complex<double> zeta{1.0, 0.0};
  std::vector<double> qdim;

  std::size_t size() const { return alcove.size(); }
  Eigen::MatrixXcd t_matrix() const;
  Eigen::MatrixXd c_matrix() const;
};

/// θ_λ = exp(-2πi Δ_λ), stored as (-Δ_λ) mod 1.
RationalPhase twist(int N, int k, const Weight& lambda);

/// Kac-Peterson S-matrix over the alcove, normalized to be unitary with S_00 > 0.
///
/// S_{λμ} ∝ det_{ab} exp(2πi x_a(λ) x_b(μ) / (k+N)), where x(λ) is the vector of
/// shifted weights ℓ_a(λ) = Σ_{j≥a} λ_j + (N-a), a = 1..N, projected to zero sum.
/// The phase sign matches the convention θ = exp(-2πiΔ).
Eigen::MatrixXcd s_matrix(const Alcove& alcove);
Eigen::MatrixXcd s_matrix(int N, int k);

/// Sugawara central charge k(N²-1)/(k+N).
Rational central_charge(int N, int k);

struct ZetaSelection {
  std::complex<double> zeta;
  std::vector<std::complex<double>> candidates;  // the six sixth roots
  std::vector<double> row_residuals;             // row 0 of (ST)^3 - S², per candidate
  std::vector<bool> passing;
};

/// Chooses ζ among the six sixth roots of Σθ_i d_i² / Σθ_i⁻¹ d_i² by testing
/// row 0 of (ST)^3 = S² with T = ζ⁻¹θ. Three candidates (a coset of the cube
/// roots of unity) always pass together; the one closest to exp(-2πi c/24) is
/// returned. Throws InternalCheckFailed if none passes.
ZetaSelection select_zeta(const Eigen::MatrixXcd& S, std::span<const RationalPhase> theta,
                          std::span<const double> qdim, const Rational& central_charge,
                          double tolerance = 1e-9);

/// Builds the full datum: alcove, Δ, θ, S, qdim, C, ζ and T.
ModularDatum build_modular_datum(int N, int k);

enum class RelationMethod {
  automatic,             // dense up to dense_limit, blocked above
  dense,                 // direct products, max-norm residuals
  simple_current_blocks  // block-diagonalized by the Z/N grading
};

struct RelationReport {
  RelationMethod method = RelationMethod::dense;
  double symmetry = 0;     // ‖S - Sᵀ‖
  double unitarity = 0;    // ‖SS† - 1‖
  double s2_minus_c = 0;   // ‖S² - C‖
  double s4_minus_1 = 0;   // ‖S⁴ - 1‖
  double st3_minus_s2 = 0; // ‖(ST)³ - S²‖
  double theta_vs_t = 0;   // max |T_ii ζ - θ_i|
  double qdim_defect = 0;  // max relative imaginary part of S_0i / S_00; 1 if one is not positive
  double covariance = 0;   // blocked method only: largest entry of S outside the graded blocks

  double max_residual() const;
  bool passed(double tolerance = 1e-9) const { return max_residual() < tolerance; }
};

std::string to_string(RelationMethod method);

/// Checks unitarity, symmetry, S² = C, S⁴ = 1 and (ST)³ = S².
///
/// The dense method forms every product and reports max-norm residuals. The
/// blocked method uses that S intertwines the action of J with the N-ality
/// grading: in the orbit-Fourier basis S becomes block diagonal with N blocks,
/// cutting the cost by ~N². Unitarity, S² = C and S⁴ = 1 are then exact max
/// norms; for (ST)³ = S² it reports an upper bound on the max norm obtained
/// from the equivalent form STS = T⁻¹ST⁻¹.
RelationReport verify_relations(const ModularDatum& datum,
                                RelationMethod method = RelationMethod::automatic,
                                std::size_t dense_limit = 400);

}  // namespace mtc
