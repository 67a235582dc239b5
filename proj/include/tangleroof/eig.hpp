#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "tangleroof/pure_state.hpp"

namespace tangleroof {

struct EigResult {
  int dim = 0;
  std::vector<double> values;   // descending
  std::vector<cplx> vectors;    // column-major: vectors[k*dim + i] = <i|v_k>
  const cplx* vector(int k) const { return vectors.data() + static_cast<std::size_t>(k) * dim; }
};

// Cyclic Jacobi diagonalization of a complex Hermitian matrix (row-major).
// Sized for the small matrices of this library (dim <= 16). Converges when
// the off-diagonal Frobenius norm drops below 1e-13; hard cap 100 sweeps.
inline EigResult hermitian_eig(std::vector<cplx> a, int dim) {
  if (dim < 1 || a.size() != static_cast<std::size_t>(dim) * dim)
    throw std::invalid_argument("hermitian_eig: bad dimension");
  auto at = [&a, dim](int i, int j) -> cplx& { return a[static_cast<std::size_t>(i) * dim + j]; };

  double herm = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j)
      herm = std::max(herm, std::abs(at(i, j) - std::conj(at(j, i))));
  if (herm > 1e-10)
    throw std::invalid_argument("hermitian_eig: matrix is not Hermitian within 1e-10");
  // Symmetrize away the dust so rotations stay exactly unitary on both triangles.
  for (int i = 0; i < dim; ++i) {
    at(i, i) = cplx{at(i, i).real(), 0.0};
    for (int j = i + 1; j < dim; ++j) {
      const cplx v = 0.5 * (at(i, j) + std::conj(at(j, i)));
      at(i, j) = v;
      at(j, i) = std::conj(v);
    }
  }

  std::vector<cplx> v(static_cast<std::size_t>(dim) * dim, cplx{0.0, 0.0});
  auto vat = [&v, dim](int i, int j) -> cplx& { return v[static_cast<std::size_t>(i) * dim + j]; };
  for (int i = 0; i < dim; ++i) vat(i, i) = 1.0;

  auto off_norm = [&]() {
    double s = 0.0;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        if (i != j) s += std::norm(at(i, j));
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < 100 && off_norm() >= 1e-13; ++sweep) {
    for (int p = 0; p < dim - 1; ++p) {
      for (int q = p + 1; q < dim; ++q) {
        const cplx apq = at(p, q);
        const double r = std::abs(apq);
        if (r < 1e-300) continue;
        const cplx phase = apq / r;
        const double tau = (at(q, q).real() - at(p, p).real()) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const cplx s = t * c * phase;  // U = [[c, s], [-conj(s), c]] on (p,q)

        for (int k = 0; k < dim; ++k) {  // columns: A <- A U
          const cplx akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - std::conj(s) * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < dim; ++k) {  // rows: A <- U^H A
          const cplx apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = std::conj(s) * apk + c * aqk;
        }
        at(p, q) = cplx{0.0, 0.0};
        at(q, p) = cplx{0.0, 0.0};
        for (int k = 0; k < dim; ++k) {
          const cplx vkp = vat(k, p), vkq = vat(k, q);
          vat(k, p) = c * vkp - std::conj(s) * vkq;
          vat(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  EigResult res;
  res.dim = dim;
  res.values.resize(dim);
  std::vector<int> order(dim);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> diag(dim);
  for (int i = 0; i < dim; ++i) diag[i] = at(i, i).real();
  std::stable_sort(order.begin(), order.end(),
                   [&diag](int x, int y) { return diag[x] > diag[y]; });
  res.vectors.resize(static_cast<std::size_t>(dim) * dim);
  for (int k = 0; k < dim; ++k) {
    res.values[k] = diag[order[k]];
    for (int i = 0; i < dim; ++i)
      res.vectors[static_cast<std::size_t>(k) * dim + i] = vat(i, order[k]);
  }
  return res;
}

// Hermitian square root of a PSD matrix. Eigenvalues in [-clamp_tol, 0)
// are treated as rounding dust and clamped to zero; anything more
// negative is rejected.
inline std::vector<cplx> psd_sqrt(const std::vector<cplx>& m, int dim, double clamp_tol = 1e-12) {
  EigResult e = hermitian_eig(m, dim);
  std::vector<double> root(dim);
  for (int k = 0; k < dim; ++k) {
    double lam = e.values[k];
    if (lam < -clamp_tol)
      throw std::domain_error("psd_sqrt: matrix has a negative eigenvalue beyond tolerance");
    root[k] = std::sqrt(std::max(lam, 0.0));
  }
  std::vector<cplx> out(static_cast<std::size_t>(dim) * dim, cplx{0.0, 0.0});
  for (int k = 0; k < dim; ++k) {
    const cplx* vk = e.vector(k);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        out[static_cast<std::size_t>(i) * dim + j] += root[k] * vk[i] * std::conj(vk[j]);
  }
  return out;
}

}  // namespace tangleroof
