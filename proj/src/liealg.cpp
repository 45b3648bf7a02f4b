#include "mtc/liealg.hpp"

#include <algorithm>
#include <numeric>

#include "mtc/errors.hpp"

namespace mtc {

int Weight::level() const { return std::accumulate(labels.begin(), labels.end(), 0); }

bool Weight::is_zero() const {
  return std::all_of(labels.begin(), labels.end(), [](int l) { return l == 0; });
}

std::string Weight::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(labels[i]);
  }
  return s + ")";
}

namespace {

void check_rank(int N) {
  if (N < 2) throw InvalidArgument("su(N) needs N >= 2, got " + std::to_string(N));
}

void check_labels(int N, const Weight& w) {
  if (w.labels.size() != static_cast<std::size_t>(N - 1))
    throw InvalidArgument("weight " + w.to_string() + " does not have " + std::to_string(N - 1) +
                          " Dynkin labels");
}

void fill(std::vector<int>& prefix, int slots, int remaining, std::vector<Weight>& out) {
  if (slots == 0) {
    out.push_back(Weight{prefix});
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    prefix.push_back(v);
    fill(prefix, slots - 1, remaining - v, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Weight> enumerate_alcove(int N, int k) {
  check_rank(N);
  if (k < 0) throw InvalidArgument("level must be non-negative, got " + std::to_string(k));
  std::vector<Weight> out;
  std::vector<int> prefix;
  prefix.reserve(N - 1);
  fill(prefix, N - 1, k, out);
  return out;
}

Alcove::Alcove(int N, int k) : N_(N), k_(k), weights_(enumerate_alcove(N, k)) {
  for (std::size_t i = 0; i < weights_.size(); ++i) index_.emplace(weights_[i].labels, i);
}

std::optional<std::size_t> Alcove::find(const Weight& w) const {
  auto it = index_.find(w.labels);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Alcove::index_of(const Weight& w) const {
  if (auto i = find(w)) return *i;
  throw InvalidArgument("weight " + w.to_string() + " is not in the level-" + std::to_string(k_) +
                        " alcove of su(" + std::to_string(N_) + ")");
}

std::vector<std::vector<Rational>> inverse_cartan(int N) {
  check_rank(N);
  const int r = N - 1;
  std::vector<std::vector<Rational>> G(r, std::vector<Rational>(r));
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) G[i - 1][j - 1] = Rational(std::min(i, j) * (N - std::max(i, j)), N);
  return G;
}

Rational inner_product(int N, const Weight& mu, const Weight& nu) {
  check_rank(N);
  check_labels(N, mu);
  check_labels(N, nu);
  // Σ_ij μ_i ν_j min(i,j)(N - max(i,j)) is an integer; divide by N once.
  std::int64_t acc = 0;
  for (int i = 1; i < N; ++i) {
    if (mu.labels[i - 1] == 0) continue;
    for (int j = 1; j < N; ++j)
      acc += static_cast<std::int64_t>(mu.labels[i - 1]) * nu.labels[j - 1] * std::min(i, j) *
             (N - std::max(i, j));
  }
  return Rational(acc, N);
}

Rational conformal_weight(int N, int k, const Weight& lambda) {
  check_labels(N, lambda);
  Weight shifted = lambda;
  for (auto& l : shifted.labels) l += 2;  // λ + 2ρ, ρ = (1, ..., 1)
  return inner_product(N, lambda, shifted) / Rational(2 * (k + N));
}

Weight conjugate(int N, const Weight& lambda) {
  check_labels(N, lambda);
  Weight out = lambda;
  std::reverse(out.labels.begin(), out.labels.end());
  return out;
}

int n_ality(int N, const Weight& lambda) {
  check_labels(N, lambda);
  std::int64_t t = 0;
  for (int j = 1; j < N; ++j) t += static_cast<std::int64_t>(j) * lambda.labels[j - 1];
  return static_cast<int>(t % N);
}

}  // namespace mtc
