#include "mtc/schellekens.hpp"

#include <algorithm>
#include <numeric>

#include "mtc/errors.hpp"
#include "mtc/modular.hpp"

namespace mtc {

RationalPhase character(int N, int k, const Weight& i, const SimpleCurrent& g) {
  const Weight gi = act(N, k, g.p, i);
  return RationalPhase(conformal_weight(N, k, g.weight) + conformal_weight(N, k, i) -
                       conformal_weight(N, k, gi));
}

std::vector<int> SchellekensAlgebra::support() const {
  std::vector<int> out;
  for (int a = 0; a < order_H; ++a) out.push_back((a * support_generator) % N);
  std::sort(out.begin(), out.end());
  return out;
}

SchellekensAlgebra build_algebra(int N, int k, int p) {
  if (N < 2 || k < 0) throw InvalidArgument("build_algebra: need N >= 2 and k >= 0");
  p = ((p % N) + N) % N;
  const EffectiveCenter center = effective_center(N, k);
  if (!center.contains(p))
    throw SupportNotInEffectiveCenter("J^" + std::to_string(p) + " is not in the effective center of su(" +
                                      std::to_string(N) + ") level " + std::to_string(k));
  SchellekensAlgebra alg;
  alg.N = N;
  alg.k = k;
  alg.support_generator = p;
  alg.order_H = order(N, p);
  alg.xi_base = twist(N, k, simple_current(N, k, p).weight);
  return alg;
}

TorusPartitionFunction torus_partition_function(const SchellekensAlgebra& algebra) {
  return torus_partition_function(algebra, Alcove(algebra.N, algebra.k));
}

TorusPartitionFunction torus_partition_function(const SchellekensAlgebra& algebra,
                                                const Alcove& alcove) {
  const int N = algebra.N;
  const int k = algebra.k;
  if (alcove.rank() != N || alcove.level() != k)
    throw InvalidArgument("torus_partition_function: alcove does not match the algebra");
  const int p = algebra.support_generator;
  const SimpleCurrent h = simple_current(N, k, p);
  const std::size_t n = alcove.size();

  TorusPartitionFunction out{IntMatrix(n), algebra};
  for (std::size_t i = 0; i < n; ++i) {
    const RationalPhase chi = character(N, k, alcove[i], h);
    for (int b = 0; b < algebra.order_H; ++b) {
      // a ↦ χ_i(h^a) Ξ(h^a, h^b) is a character of H; it sums to |H| or to 0.
      if (!(chi * algebra.xi(1, b)).is_one()) continue;
      const std::size_t j = alcove.index_of(act(N, k, b * p, alcove[i]));
      out.Z(i, j) += 1;
    }
  }
  return out;
}

bool is_trivial(const IntMatrix& Z) {
  const std::size_t n = Z.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && Z(i, j) != 0) return false;
      if (i == j && Z(i, i) != Z(0, 0)) return false;
    }
  return true;
}

std::string covering_case(int N, int k) {
  if (N == 2) return "N=2";
  if (k % N == 0) return "N|k";
  if (N % 2 == 1) return "N odd";
  if (k % 2 == 0) return "N,k even";
  return "N even, k odd";
}

int case_support(int N, int k) {
  if (N == 2) return k % 2 == 0 ? 1 : 0;
  if (N % 2 == 1) return 1;
  if (k % 2 == 1) return 2;
  const int half_n = N / 2;
  const int half_k = k / 2;
  if (k % 4 != 0 || std::gcd(half_n, half_k) != 1) return 1;
  return 2;
}

namespace {

MatrixEntry entry(const Alcove& alcove, const Weight& a, const Weight& b) {
  return {alcove.index_of(a), alcove.index_of(b), 1};
}

// X = (1, 0, ..., 0) and J^b X with b in [1, N) chosen so that the character
// of X matches Ξ(J, J^b): frac(b·Δ_J - 1/N) = 0.
std::optional<MatrixEntry> fundamental_witness(int N, int k, const Alcove& alcove) {
  Weight x{std::vector<int>(N - 1, 0)};
  x.labels[0] = 1;
  const Rational delta_j = simple_current_weight_closed_form(N, k, 1);
  for (int b = 1; b < N; ++b)
    if (is_integer(delta_j * b - Rational(1, N))) return entry(alcove, x, act(N, k, b, x));
  return std::nullopt;
}

}  // namespace

std::optional<MatrixEntry> case_witness(int N, int k, const Alcove& alcove) {
  if (N == 2 || k == 0) return std::nullopt;
  const Weight zero{std::vector<int>(N - 1, 0)};
  auto current = [&](int p) { return act(N, k, p, zero); };
  const std::string label = covering_case(N, k);
  if (label == "N|k") return entry(alcove, zero, current(N % 2 == 1 ? 1 : 2));
  if (label == "N odd") {
    const int q = std::gcd(k, N);
    if (q != 1) return entry(alcove, zero, current(N / q));
    return fundamental_witness(N, k, alcove);
  }
  const int half_n = N / 2;
  if (label == "N,k even") {
    const int q = std::gcd(k / 2, half_n);
    if (q != 1) return entry(alcove, zero, current(N / q));
    if (k % 4 != 0) return fundamental_witness(N, k, alcove);
    return entry(alcove, current(half_n - 1), current(half_n + 1));
  }
  const int q = std::gcd(k, half_n);
  if (q != 1) return entry(alcove, zero, current(N / q));
  return entry(alcove, current(half_n - 1), current(half_n + 1));
}

ReducibilityReport reducibility_verdict(int N, int k, std::optional<int> support) {
  if (N < 2 || k < 1) throw InvalidArgument("reducibility_verdict: need N >= 2 and k >= 1");
  const Alcove alcove(N, k);
  ReducibilityReport rep;
  rep.N = N;
  rep.k = k;
  rep.case_label = covering_case(N, k);
  rep.center = effective_center(N, k);

  const SchellekensAlgebra alg = build_algebra(N, k, support.value_or(case_support(N, k)));
  rep.support_generator = alg.support_generator;
  rep.support_order = alg.order_H;
  rep.Z = torus_partition_function(alg, alcove).Z;
  rep.trivial = is_trivial(rep.Z);
  const std::size_t n = alcove.size();
  for (std::size_t i = 0; i < n && !rep.witness; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && rep.Z(i, j) != 0) {
        rep.witness = MatrixEntry{i, j, rep.Z(i, j)};
        break;
      }
  if (!support) rep.proof_witness = case_witness(N, k, alcove);

  for (int g = 1; g <= N; ++g) {
    if (N % g != 0 || !rep.center.contains(g % N)) continue;
    const SchellekensAlgebra sub = build_algebra(N, k, g % N);
    rep.supports.push_back(
        {sub.support_generator, sub.order_H, is_trivial(torus_partition_function(sub, alcove).Z)});
  }
  rep.verdict = rep.trivial ? kVerdictNoConclusion : kVerdictReducible;
  return rep;
}

}  // namespace mtc
