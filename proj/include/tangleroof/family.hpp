#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

#include "tangleroof/density_matrix.hpp"
#include "tangleroof/pure_state.hpp"

namespace tangleroof {

// Ordered orthonormal pure pair spanning a rank-2 subspace.
class RankTwoFamily {
 public:
  RankTwoFamily(const PureState& phi, const PureState& w)
      : phi_(normalize(phi)), w_(normalize(w)) {
    if (phi_.num_qubits() != w_.num_qubits())
      throw std::invalid_argument("RankTwoFamily: members must share qubit count");
    if (std::abs(inner_product(phi_, w_)) > 1e-12)
      throw std::invalid_argument("RankTwoFamily: members must be orthogonal");
  }

  const PureState& phi() const { return phi_; }
  const PureState& w() const { return w_; }
  int num_qubits() const { return phi_.num_qubits(); }

 private:
  PureState phi_;
  PureState w_;
};

// sqrt(p)|phi> - e^{i.phase} sqrt(1-p)|w>; unit norm by orthogonality.
inline PureState superpose(const RankTwoFamily& fam, double p, double phase) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::domain_error("superpose: p must lie in [0,1]");
  const double cp = std::sqrt(p);
  const cplx cw = -std::exp(cplx{0.0, phase}) * std::sqrt(1.0 - p);
  std::vector<cplx> a(fam.phi().dim());
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] = cp * fam.phi().amp(i) + cw * fam.w().amp(i);
  return PureState(fam.num_qubits(), std::move(a));
}

// p|phi><phi| + (1-p)|w><w|
inline DensityMatrix mix(const RankTwoFamily& fam, double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::domain_error("mix: p must lie in [0,1]");
  DensityMatrix rho = density_of(fam.phi());
  const DensityMatrix rw = density_of(fam.w());
  for (std::size_t i = 0; i < rho.dim(); ++i)
    for (std::size_t j = 0; j < rho.dim(); ++j)
      rho.at(i, j) = p * rho.at(i, j) + (1.0 - p) * rw.at(i, j);
  return rho;
}

}  // namespace tangleroof
