#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "tangleroof/decomposition.hpp"
#include "tangleroof/density_matrix.hpp"
#include "tangleroof/invariants.hpp"
#include "tangleroof/reference.hpp"

namespace tangleroof {

// Bloch coordinates of a state supported on span{Phi2, W4}, with Phi2 at
// the north pole.
struct BlochVector {
  double x = 0.0, y = 0.0, z = 0.0;

  double length() const { return std::sqrt(x * x + y * y + z * z); }
};

struct Tetrahedron {
  std::array<BlochVector, 4> vertices;

  double volume() const {
    const BlochVector& o = vertices[0];
    const double a[3] = {vertices[1].x - o.x, vertices[1].y - o.y, vertices[1].z - o.z};
    const double b[3] = {vertices[2].x - o.x, vertices[2].y - o.y, vertices[2].z - o.z};
    const double c[3] = {vertices[3].x - o.x, vertices[3].y - o.y, vertices[3].z - o.z};
    const double det = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
                       a[2] * (b[0] * c[1] - b[1] * c[0]);
    return std::abs(det) / 6.0;
  }
};

namespace detail {

inline const PureState& span_e0() { return catalog_lookup("phi2").state; }
inline const PureState& span_e1() { return catalog_lookup("w4").state; }

inline cplx span_overlap(const PureState& a, const DensityMatrix& rho, const PureState& b) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < rho.dim(); ++i)
    for (std::size_t j = 0; j < rho.dim(); ++j)
      s += std::conj(a.amp(i)) * rho.at(i, j) * b.amp(j);
  return s;
}

}  // namespace detail

// rho = (P + r . sigma_span)/2 read off as r_k = tr(rho sigma_k) in the
// {Phi2, W4} basis. Rejects states whose support leaks out of the span.
inline BlochVector bloch_from_span_state(const DensityMatrix& rho) {
  if (rho.num_qubits() != 4)
    throw std::invalid_argument("bloch_from_span_state: need a 4-qubit density matrix");
  const PureState& e0 = detail::span_e0();
  const PureState& e1 = detail::span_e1();
  const cplx m00 = detail::span_overlap(e0, rho, e0);
  const cplx m11 = detail::span_overlap(e1, rho, e1);
  const cplx m01 = detail::span_overlap(e0, rho, e1);
  const double leak = std::abs(rho.trace() - (m00 + m11));
  if (leak > 1e-8)
    throw std::domain_error("bloch_from_span_state: support leaks outside span{Phi2, W4}");
  return {2.0 * m01.real(), -2.0 * m01.imag(), (m00 - m11).real()};
}

// Lift Bloch coordinates back to the 16x16 span state.
inline DensityMatrix density_from_bloch(const BlochVector& r) {
  const PureState& e0 = detail::span_e0();
  const PureState& e1 = detail::span_e1();
  DensityMatrix rho = DensityMatrix::zero(4);
  const cplx c01 = 0.5 * cplx{r.x, -r.y};
  for (std::size_t i = 0; i < rho.dim(); ++i)
    for (std::size_t j = 0; j < rho.dim(); ++j) {
      rho.at(i, j) = 0.5 * (1.0 + r.z) * e0.amp(i) * std::conj(e0.amp(j)) +
                     0.5 * (1.0 - r.z) * e1.amp(i) * std::conj(e1.amp(j)) +
                     c01 * e0.amp(i) * std::conj(e1.amp(j)) +
                     std::conj(c01) * e1.amp(i) * std::conj(e0.amp(j));
    }
  return rho;
}

// Vertices: W4 at the south pole and the three zero-F1 span states
// Z2(p0, 2 pi k/3) on the circle at height 2 p0 - 1.
inline Tetrahedron zero_tetrahedron() {
  const double p0 = breakpoints::p0_rho2();
  const double s = std::sqrt(p0 * (1.0 - p0));
  const double z = 2.0 * p0 - 1.0;
  return Tetrahedron{{{{0.0, 0.0, -1.0},
                       {-2.0 * s, 0.0, z},
                       {s, -std::sqrt(3.0) * s, z},
                       {s, std::sqrt(3.0) * s, z}}}};
}

// Inside-or-on-boundary test via four half-space checks.
inline bool contains(const Tetrahedron& t, const BlochVector& r, double tol = 1e-10) {
  if (t.volume() <= 1e-9)
    throw std::invalid_argument("contains: degenerate tetrahedron");
  for (int skip = 0; skip < 4; ++skip) {
    const BlochVector* f[3];
    int n = 0;
    for (int k = 0; k < 4; ++k)
      if (k != skip) f[n++] = &t.vertices[k];
    const double e1[3] = {f[1]->x - f[0]->x, f[1]->y - f[0]->y, f[1]->z - f[0]->z};
    const double e2[3] = {f[2]->x - f[0]->x, f[2]->y - f[0]->y, f[2]->z - f[0]->z};
    double nrm[3] = {e1[1] * e2[2] - e1[2] * e2[1], e1[2] * e2[0] - e1[0] * e2[2],
                     e1[0] * e2[1] - e1[1] * e2[0]};
    const double len = std::sqrt(nrm[0] * nrm[0] + nrm[1] * nrm[1] + nrm[2] * nrm[2]);
    for (double& v : nrm) v /= len;
    const BlochVector& apex = t.vertices[skip];
    const double side_apex = nrm[0] * (apex.x - f[0]->x) + nrm[1] * (apex.y - f[0]->y) +
                             nrm[2] * (apex.z - f[0]->z);
    const double side_r =
        nrm[0] * (r.x - f[0]->x) + nrm[1] * (r.y - f[0]->y) + nrm[2] * (r.z - f[0]->z);
    if (side_apex >= 0.0 ? side_r < -tol : side_r > tol) return false;
  }
  return true;
}

// Barycentric weights of r with respect to the tetrahedron vertices.
inline std::array<double, 4> barycentric_weights(const Tetrahedron& t, const BlochVector& r) {
  double m[4][5] = {
      {t.vertices[0].x, t.vertices[1].x, t.vertices[2].x, t.vertices[3].x, r.x},
      {t.vertices[0].y, t.vertices[1].y, t.vertices[2].y, t.vertices[3].y, r.y},
      {t.vertices[0].z, t.vertices[1].z, t.vertices[2].z, t.vertices[3].z, r.z},
      {1.0, 1.0, 1.0, 1.0, 1.0},
  };
  for (int col = 0; col < 4; ++col) {  // Gaussian elimination, partial pivoting
    int piv = col;
    for (int row = col + 1; row < 4; ++row)
      if (std::abs(m[row][col]) > std::abs(m[piv][col])) piv = row;
    for (int k = 0; k < 5; ++k) std::swap(m[col][k], m[piv][k]);
    for (int row = 0; row < 4; ++row) {
      if (row == col) continue;
      const double f = m[row][col] / m[col][col];
      for (int k = col; k < 5; ++k) m[row][k] -= f * m[col][k];
    }
  }
  return {m[0][4] / m[0][0], m[1][4] / m[1][1], m[2][4] / m[2][2], m[3][4] / m[3][3]};
}

// Barycentric mixture of the four vertex pure states; every vertex has
// vanishing F1, so the average certifies roof value zero for any point
// of the tetrahedron.
inline Decomposition zero_witness(const BlochVector& r) {
  const Tetrahedron t = zero_tetrahedron();
  if (!contains(t, r))
    throw std::domain_error("zero_witness: point lies outside the zero tetrahedron");
  const std::array<double, 4> w = barycentric_weights(t, r);
  const RankTwoFamily& fam = roof_family(FamilyId::Rho2);
  const double p0 = breakpoints::p0_rho2();

  Decomposition d{{}, density_from_bloch(r)};
  const PureState vertex_states[4] = {fam.w(), superpose(fam, p0, 0.0),
                                      superpose(fam, p0, 2.0 * M_PI / 3.0),
                                      superpose(fam, p0, 4.0 * M_PI / 3.0)};
  for (int k = 0; k < 4; ++k)
    detail::add_term(d.terms, std::max(w[k], 0.0), vertex_states[k]);
  return d;
}

}  // namespace tangleroof
