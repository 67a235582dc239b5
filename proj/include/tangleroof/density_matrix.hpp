#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tangleroof/pure_state.hpp"

namespace tangleroof {

// Dense Hermitian density operator on n qubits, row-major 2^n x 2^n.
class DensityMatrix {
 public:
  DensityMatrix(int num_qubits, std::vector<cplx> entries)
      : num_qubits_(num_qubits), m_(std::move(entries)) {
    if (num_qubits_ < 1)
      throw std::invalid_argument("DensityMatrix: num_qubits must be positive");
    dim_ = std::size_t{1} << num_qubits_;
    if (m_.size() != dim_ * dim_)
      throw std::invalid_argument("DensityMatrix: entry count must be 4^num_qubits");
  }

  static DensityMatrix zero(int num_qubits) {
    const std::size_t d = std::size_t{1} << num_qubits;
    return DensityMatrix(num_qubits, std::vector<cplx>(d * d, cplx{0.0, 0.0}));
  }

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return dim_; }
  const std::vector<cplx>& entries() const { return m_; }
  cplx at(std::size_t i, std::size_t j) const { return m_[i * dim_ + j]; }
  cplx& at(std::size_t i, std::size_t j) { return m_[i * dim_ + j]; }

  cplx trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
    return t;
  }

  double hermiticity_error() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j)
        worst = std::max(worst, std::abs(at(i, j) - std::conj(at(j, i))));
    return worst;
  }

  DensityMatrix& add_scaled(const DensityMatrix& other, double w) {
    if (other.dim_ != dim_)
      throw std::invalid_argument("DensityMatrix: dimension mismatch");
    for (std::size_t k = 0; k < m_.size(); ++k) m_[k] += w * other.m_[k];
    return *this;
  }

 private:
  int num_qubits_;
  std::size_t dim_;
  std::vector<cplx> m_;
};

// |s><s|
inline DensityMatrix density_of(const PureState& s) {
  const std::size_t d = s.dim();
  std::vector<cplx> m(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      m[i * d + j] = s.amp(i) * std::conj(s.amp(j));
  return DensityMatrix(s.num_qubits(), std::move(m));
}

// Marginal over the qubits in `keep`, whose order defines the output
// qubit order. Indices use the same MSB-first labelling as PureState.
inline DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  const int n = rho.num_qubits();
  if (keep.empty() || keep.size() >= static_cast<std::size_t>(n) + 1)
    throw std::invalid_argument("partial_trace: bad keep list");
  std::vector<bool> seen(n, false);
  for (int q : keep) {
    if (q < 0 || q >= n || seen[q])
      throw std::invalid_argument("partial_trace: keep indices must be distinct and in range");
    seen[q] = true;
  }
  std::vector<int> traced;
  for (int q = 0; q < n; ++q)
    if (!seen[q]) traced.push_back(q);

  const int k = static_cast<int>(keep.size());
  const int t = static_cast<int>(traced.size());
  const std::size_t dk = std::size_t{1} << k;
  DensityMatrix out = DensityMatrix::zero(k);

  // bit q of the original index sits at position (n-1-q) from the LSB
  auto place = [n](int q, std::size_t bit) { return bit << (n - 1 - q); };
  for (std::size_t a = 0; a < dk; ++a) {
    for (std::size_t b = 0; b < dk; ++b) {
      cplx s = 0.0;
      for (std::size_t tr = 0; tr < (std::size_t{1} << t); ++tr) {
        std::size_t x = 0, y = 0;
        for (int pos = 0; pos < k; ++pos) {
          x |= place(keep[pos], (a >> (k - 1 - pos)) & 1);
          y |= place(keep[pos], (b >> (k - 1 - pos)) & 1);
        }
        for (int pos = 0; pos < t; ++pos) {
          const std::size_t bit = (tr >> (t - 1 - pos)) & 1;
          x |= place(traced[pos], bit);
          y |= place(traced[pos], bit);
        }
        s += rho.at(x, y);
      }
      out.at(a, b) = s;
    }
  }
  return out;
}

}  // namespace tangleroof
