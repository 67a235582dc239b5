#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tangleroof {

using cplx = std::complex<double>;

// n-qubit pure state as a dense amplitude vector of length 2^n.
// Amplitude index bit convention: qubit 0 (called A) is the most
// significant bit of the basis index, so |abcd> lives at a*8+b*4+c*2+d.
class PureState {
 public:
  PureState(int num_qubits, std::vector<cplx> amplitudes)
      : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
    if (num_qubits_ < 1)
      throw std::invalid_argument("PureState: num_qubits must be positive");
    if (amps_.size() != (std::size_t{1} << num_qubits_))
      throw std::invalid_argument("PureState: amplitude count must be 2^num_qubits");
  }

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<cplx>& amplitudes() const { return amps_; }
  cplx amp(std::size_t i) const { return amps_[i]; }

  double norm() const {
    double s = 0.0;
    for (const cplx& a : amps_) s += std::norm(a);
    return std::sqrt(s);
  }

 private:
  int num_qubits_;
  std::vector<cplx> amps_;
};

// Unit-norm copy; direction preserved (positive real scale factor).
inline PureState normalize(const PureState& s) {
  const double n = s.norm();
  if (n == 0.0)
    throw std::domain_error("normalize: zero-norm state is degenerate");
  std::vector<cplx> a = s.amplitudes();
  for (cplx& v : a) v /= n;
  return PureState(s.num_qubits(), std::move(a));
}

// <a|b>
inline cplx inner_product(const PureState& a, const PureState& b) {
  if (a.num_qubits() != b.num_qubits())
    throw std::invalid_argument("inner_product: qubit count mismatch");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    s += std::conj(a.amp(i)) * b.amp(i);
  return s;
}

// True when the two states differ by at most a global phase.
inline bool same_up_to_phase(const PureState& a, const PureState& b, double tol = 1e-12) {
  if (a.num_qubits() != b.num_qubits()) return false;
  return std::abs(std::abs(inner_product(a, b)) - 1.0) <= tol;
}

}  // namespace tangleroof
