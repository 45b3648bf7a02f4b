#include "mtc/modular.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "mtc/errors.hpp"
#include "mtc/simple_currents.hpp"

namespace mtc {

Eigen::MatrixXcd ModularDatum::t_matrix() const { return t_diagonal.asDiagonal(); }

Eigen::MatrixXd ModularDatum::c_matrix() const {
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(size(), size());
  for (std::size_t i = 0; i < conjugation.size(); ++i) C(i, conjugation[i]) = 1.0;
  return C;
}

RationalPhase twist(int N, int k, const Weight& lambda) {
  return RationalPhase(-conformal_weight(N, k, lambda));
}

Rational central_charge(int N, int k) {
  return Rational(static_cast<std::int64_t>(k) * (N * N - 1), k + N);
}

namespace {

using cd = std::complex<double>;

// Determinant by Gaussian elimination with partial pivoting; `a` is destroyed.
cd determinant(cd* a, int n) {
  cd det = 1.0;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    double best = std::norm(a[c * n + c]);
    for (int r = c + 1; r < n; ++r) {
      const double v = std::norm(a[r * n + c]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != c) {
      for (int j = c; j < n; ++j) std::swap(a[c * n + j], a[piv * n + j]);
      det = -det;
    }
    const cd d = a[c * n + c];
    det *= d;
    for (int r = c + 1; r < n; ++r) {
      const cd f = a[r * n + c] / d;
      if (f == cd(0.0)) continue;
      for (int j = c + 1; j < n; ++j) a[r * n + j] -= f * a[c * n + j];
    }
  }
  return det;
}

// N·ℓ_a(λ) - Σ_b ℓ_b(λ): the shifted weight in the orthonormal ε-basis, scaled by N.
std::vector<std::int64_t> centered_shifted_weight(int N, const Weight& w) {
  std::vector<std::int64_t> ell(N);
  std::int64_t tail = 0;
  for (int a = N; a >= 1; --a) {
    if (a <= N - 1) tail += w.labels[a - 1];
    ell[a - 1] = tail + (N - a);
  }
  std::int64_t sum = 0;
  for (auto v : ell) sum += v;
  for (auto& v : ell) v = N * v - sum;
  return ell;
}

}  // namespace

Eigen::MatrixXcd s_matrix(const Alcove& alcove) {
  const int N = alcove.rank();
  const int k = alcove.level();
  const std::size_t n = alcove.size();

  // Entry (a, b) of the determinant is exp(2πi x_a y_b / (k+N)) with x = X/N, y = Y/N,
  // i.e. exp(2πi m / M) with m = X_a Y_b mod M and M = N²(k+N).
  const std::int64_t M = static_cast<std::int64_t>(N) * N * (k + N);
  std::vector<cd> roots(M);
  for (std::int64_t m = 0; m < M; ++m)
    roots[m] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(M));

  std::vector<std::vector<std::int64_t>> X(n);
  for (std::size_t i = 0; i < n; ++i) X[i] = centered_shifted_weight(N, alcove[i]);

  // S_{Jλ,μ} = ω^{-t(μ)} S_{λμ} with ω = e^{2πi/N}, so one determinant per pair of
  // J-orbits fixes a whole |O|×|O'| block.
  const auto jperm = action_permutation(alcove, 1);
  std::vector<int> charge(n);
  for (std::size_t i = 0; i < n; ++i) charge[i] = n_ality(N, alcove[i]);
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
  std::vector<cd> omega(N);
  for (int m = 0; m < N; ++m) omega[m] = std::polar(1.0, 2.0 * std::numbers::pi * m / N);

  Eigen::MatrixXcd S(n, n);
  std::vector<cd> buf(static_cast<std::size_t>(N) * N);
  for (std::size_t oa = 0; oa < orbits.size(); ++oa) {
    const auto& A = orbits[oa];
    const auto& x = X[A[0]];
    for (std::size_t ob = oa; ob < orbits.size(); ++ob) {
      const auto& B = orbits[ob];
      const auto& y = X[B[0]];
      for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
          std::int64_t m = (x[a] * y[b]) % M;
          if (m < 0) m += M;
          buf[a * N + b] = roots[m];
        }
      const cd d = determinant(buf.data(), N);
      for (std::size_t q = 0; q < B.size(); ++q) {
        const cd col = omega[(N - (q * charge[A[0]]) % N) % N] * d;  // S(λ, J^q μ)
        for (std::size_t p = 0; p < A.size(); ++p) {
          const cd v = omega[(N - (p * charge[B[q]]) % N) % N] * col;
          S(A[p], B[q]) = v;
          S(B[q], A[p]) = v;
        }
      }
    }
  }

  const cd s00 = S(0, 0);
  const double norm = S.row(0).norm();
  S *= std::conj(s00) / (std::abs(s00) * norm);
  return S;
}

Eigen::MatrixXcd s_matrix(int N, int k) { return s_matrix(Alcove(N, k)); }

ZetaSelection select_zeta(const Eigen::MatrixXcd& S, std::span<const RationalPhase> theta,
                          std::span<const double> qdim, const Rational& central_charge,
                          double tolerance) {
  const auto n = S.rows();
  if (static_cast<std::size_t>(n) != theta.size() || theta.size() != qdim.size())
    throw InvalidArgument("select_zeta: S, theta and qdim sizes differ");

  cd num = 0.0, den = 0.0;
  Eigen::VectorXcd th(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    th(i) = theta[i].value();
    const double d2 = qdim[i] * qdim[i];
    num += th(i) * d2;
    den += std::conj(th(i)) * d2;
  }
  const cd base = std::pow(num / den, 1.0 / 6.0);

  // Row 0 of (Sθ)³ and of S². With T = ζ⁻¹θ, (ST)³ = ζ⁻³(Sθ)³.
  Eigen::RowVectorXcd v = S.row(0);
  const Eigen::RowVectorXcd s2_row = v * S;
  for (int rep = 0; rep < 3; ++rep) {
    v = v.cwiseProduct(th.transpose());
    if (rep < 2) v = v * S;
  }

  ZetaSelection sel;
  const cd target = std::polar(1.0, -2.0 * std::numbers::pi *
                                        boost::rational_cast<double>(central_charge) / 24.0);
  double best_distance = std::numeric_limits<double>::infinity();
  bool found = false;
  for (int m = 0; m < 6; ++m) {
    const cd z = base * std::polar(1.0, 2.0 * std::numbers::pi * m / 6.0);
    const cd zinv3 = std::pow(z, -3);
    const double r = (zinv3 * v - s2_row).cwiseAbs().maxCoeff();
    sel.candidates.push_back(z);
    sel.row_residuals.push_back(r);
    sel.passing.push_back(r < tolerance);
    if (r < tolerance && std::abs(z - target) < best_distance) {
      best_distance = std::abs(z - target);
      sel.zeta = z;
      found = true;
    }
  }
  if (!found)
    throw InternalCheckFailed("no sixth root of the Gauss-sum quotient satisfies (ST)^3 = S^2; "
                              "the S-matrix is inconsistent with the twists");
  return sel;
}

ModularDatum build_modular_datum(int N, int k) {
  ModularDatum d;
  d.N = N;
  d.k = k;
  d.alcove = Alcove(N, k);
  const std::size_t n = d.alcove.size();

  d.conformal_weights.reserve(n);
  d.theta.reserve(n);
  d.conjugation.reserve(n);
  for (const auto& w : d.alcove.weights()) {
    d.conformal_weights.push_back(conformal_weight(N, k, w));
    d.theta.push_back(RationalPhase(-d.conformal_weights.back()));
    d.conjugation.push_back(d.alcove.index_of(conjugate(N, w)));
  }

  d.S = s_matrix(d.alcove);
  d.qdim.resize(n);
  for (std::size_t i = 0; i < n; ++i) d.qdim[i] = (d.S(0, i) / d.S(0, 0)).real();

  d.zeta = select_zeta(d.S, d.theta, d.qdim, central_charge(N, k)).zeta;
  d.t_diagonal.resize(n);
  for (std::size_t i = 0; i < n; ++i) d.t_diagonal(i) = d.theta[i].value() / d.zeta;
  return d;
}

}  // namespace mtc
