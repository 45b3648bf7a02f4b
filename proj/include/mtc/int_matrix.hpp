#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace mtc {

/// Square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix permutation(const std::vector<std::size_t>& perm);  // M(i, perm[i]) = 1

  std::size_t size() const { return n_; }
  int& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  int operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  bool is_symmetric() const;
  int max_entry() const;
  Eigen::MatrixXd to_dense() const;

  bool operator==(const IntMatrix&) const = default;
  auto operator<=>(const IntMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<int> data_;
};

}  // namespace mtc
