#pragma once

// Scalar-generic dense kernels on row-major n x n storage. Instantiated for
// double by the public Matrix API, for long double by the determinant route,
// and for a multiprecision type by the alternant oracle.

#include <cmath>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace rlp::dense {

template <class T>
class Lu {
 public:
  Lu(std::vector<T> a, std::size_t n) : a_(std::move(a)), n_(n), perm_(n) {
    using std::abs;
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
    for (std::size_t k = 0; k < n_; ++k) {
      std::size_t pivot = k;
      T best = abs(at(k, k));
      for (std::size_t i = k + 1; i < n_; ++i) {
        const T v = abs(at(i, k));
        if (v > best) {
          best = v;
          pivot = i;
        }
      }
      if (best == T(0)) {
        singular_ = true;
        continue;
      }
      if (pivot != k) {
        for (std::size_t j = 0; j < n_; ++j) std::swap(at(k, j), at(pivot, j));
        std::swap(perm_[k], perm_[pivot]);
        parity_ = -parity_;
      }
      const T diag = at(k, k);
      for (std::size_t i = k + 1; i < n_; ++i) {
        const T factor = at(i, k) / diag;
        at(i, k) = factor;
        if (factor == T(0)) continue;
        for (std::size_t j = k + 1; j < n_; ++j) at(i, j) -= factor * at(k, j);
      }
    }
    sign_ = singular_ ? 0 : parity_;
    for (std::size_t i = 0; i < n_ && !singular_; ++i) {
      if (at(i, i) < T(0)) sign_ = -sign_;
    }
  }

  std::size_t size() const noexcept { return n_; }
  bool singular() const noexcept { return singular_; }
  int sign() const noexcept { return sign_; }

  T determinant() const {
    if (singular_) return T(0);
    T det = T(parity_);
    for (std::size_t i = 0; i < n_; ++i) det *= at(i, i);
    return det;
  }

  T log_abs_determinant() const {
    using std::abs;
    using std::log;
    if (singular_) return -T(INFINITY);
    T acc = T(0);
    for (std::size_t i = 0; i < n_; ++i) acc += log(abs(at(i, i)));
    return acc;
  }

  std::vector<T> solve(const std::vector<T>& rhs) const {
    std::vector<T> x(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      T acc = rhs[perm_[i]];
      for (std::size_t j = 0; j < i; ++j) acc -= at(i, j) * x[j];
      x[i] = acc;
    }
    for (std::size_t i = n_; i-- > 0;) {
      T acc = x[i];
      for (std::size_t j = i + 1; j < n_; ++j) acc -= at(i, j) * x[j];
      x[i] = acc / at(i, i);
    }
    return x;
  }

 private:
  T& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  std::vector<T> a_;
  std::size_t n_;
  std::vector<std::size_t> perm_;
  int parity_ = 1;
  int sign_ = 1;
  bool singular_ = false;
};

// Literal sum over all n! permutations, enumerated by Heap's algorithm so
// consecutive permutations differ by one transposition.
template <class T>
T permutation_sum(const std::vector<T>& a, std::size_t n) {
  if (n == 0) return T(1);
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<std::size_t> c(n, 0);
  auto term = [&] {
    T prod = T(1);
    for (std::size_t i = 0; i < n; ++i) prod *= a[i * n + p[i]];
    return prod;
  };
  T sign = T(1);
  T sum = term();
  std::size_t i = 1;
  while (i < n) {
    if (c[i] < i) {
      if (i % 2 == 0) {
        std::swap(p[0], p[i]);
      } else {
        std::swap(p[c[i]], p[i]);
      }
      sign = -sign;
      sum += sign * term();
      ++c[i];
      i = 1;
    } else {
      c[i] = 0;
      ++i;
    }
  }
  return sum;
}

}  // namespace rlp::dense
