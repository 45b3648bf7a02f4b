#include "mtc/simple_currents.hpp"

#include <algorithm>
#include <numeric>

#include "mtc/errors.hpp"

namespace mtc {

namespace {

int mod(int a, int n) {
  const int r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

SimpleCurrent simple_current(int N, int k, int p) {
  if (N < 2) throw InvalidArgument("su(N) needs N >= 2");
  SimpleCurrent J{mod(p, N), Weight{std::vector<int>(N - 1, 0)}};
  if (J.p != 0) J.weight.labels[J.p - 1] = k;
  return J;
}

Weight act(int N, int k, int p, const Weight& lambda) {
  if (lambda.labels.size() != static_cast<std::size_t>(N - 1))
    throw InvalidArgument("weight " + lambda.to_string() + " has the wrong rank for su(" +
                          std::to_string(N) + ")");
  Weight w = lambda;
  for (int step = mod(p, N); step > 0; --step) {
    const int zeroth = k - w.level();
    std::rotate(w.labels.rbegin(), w.labels.rbegin() + 1, w.labels.rend());
    w.labels.front() = zeroth;
  }
  return w;
}

int order(int N, int p) {
  const int r = mod(p, N);
  return r == 0 ? 1 : N / std::gcd(r, N);
}

std::vector<std::size_t> action_permutation(const Alcove& alcove, int p) {
  std::vector<std::size_t> perm(alcove.size());
  for (std::size_t i = 0; i < alcove.size(); ++i)
    perm[i] = alcove.index_of(act(alcove.rank(), alcove.level(), p, alcove[i]));
  return perm;
}

bool EffectiveCenter::contains(int p) const {
  return std::binary_search(exponents.begin(), exponents.end(), p);
}

namespace {

EffectiveCenter finish(std::vector<int> exponents) {
  EffectiveCenter c{std::move(exponents), std::nullopt};
  std::sort(c.exponents.begin(), c.exponents.end());
  for (int p : c.exponents)
    if (p > 0) {
      c.generator = p;
      break;
    }
  return c;
}

}  // namespace

EffectiveCenter effective_center_closed_form(int N, int k) {
  if (N < 2) throw InvalidArgument("su(N) needs N >= 2");
  std::vector<int> exps;
  const bool full = (N % 2 == 1) || (k % 2 == 0);
  for (int p = 0; p < N; ++p)
    if (full || p % 2 == 0) exps.push_back(p);
  return finish(std::move(exps));
}

Rational simple_current_weight_closed_form(int N, int k, int p) {
  const int r = mod(p, N);
  return Rational(static_cast<std::int64_t>(r) * (N - r) * k, 2 * N);
}

EffectiveCenter effective_center(int N, int k) {
  if (N < 2) throw InvalidArgument("su(N) needs N >= 2");
  std::vector<int> exps;
  for (int p = 0; p < N; ++p) {
    const Rational delta = conformal_weight(N, k, simple_current(N, k, p).weight);
    if (is_integer(delta * order(N, p))) exps.push_back(p);
  }
  EffectiveCenter c = finish(std::move(exps));
  if (c.exponents != effective_center_closed_form(N, k).exponents)
    throw InternalCheckFailed("effective center of C_{" + std::to_string(N) + "," +
                              std::to_string(k) + "} disagrees with the closed form");
  return c;
}

}  // namespace mtc
