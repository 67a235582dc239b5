#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "tangleroof/density_matrix.hpp"
#include "tangleroof/eig.hpp"
#include "tangleroof/pauli.hpp"
#include "tangleroof/pure_state.hpp"

namespace tangleroof {

enum class InvariantKind { F1, F2, F3, G1, G2, G3, Tau3, Tau3Squared, Concurrence };

inline int required_qubits(InvariantKind kind) {
  switch (kind) {
    case InvariantKind::Tau3:
    case InvariantKind::Tau3Squared:
      return 3;
    case InvariantKind::Concurrence:
      return 2;
    default:
      return 4;
  }
}

inline const char* kind_name(InvariantKind kind) {
  switch (kind) {
    case InvariantKind::F1: return "F1";
    case InvariantKind::F2: return "F2";
    case InvariantKind::F3: return "F3";
    case InvariantKind::G1: return "G1";
    case InvariantKind::G2: return "G2";
    case InvariantKind::G3: return "G3";
    case InvariantKind::Tau3: return "tau3";
    case InvariantKind::Tau3Squared: return "tau3sq";
    case InvariantKind::Concurrence: return "C";
  }
  return "?";
}

namespace detail {

// One sigma factor per qubit maps basis row x to a single column x^mask
// with coefficient coef[x]; a four-factor product therefore contributes
// sum_x a_x a_{x^mask} coef_x to the bilinear form.
struct FormTable {
  unsigned mask = 0;
  std::array<cplx, 16> coef{};
};

inline FormTable make_form(int i0, int i1, int i2, int i3) {
  struct RowMap { int flip; cplx c0, c1; };
  auto row_map = [](int sigma) -> RowMap {
    switch (sigma) {
      case 0: return {0, {1, 0}, {1, 0}};
      case 1: return {1, {1, 0}, {1, 0}};
      case 2: return {1, {0, -1}, {0, 1}};
      default: return {0, {1, 0}, {-1, 0}};
    }
  };
  const RowMap m[4] = {row_map(i0), row_map(i1), row_map(i2), row_map(i3)};
  FormTable f;
  f.mask = static_cast<unsigned>(m[0].flip << 3 | m[1].flip << 2 | m[2].flip << 1 | m[3].flip);
  for (unsigned x = 0; x < 16; ++x) {
    cplx c = 1.0;
    for (int q = 0; q < 4; ++q)
      c *= ((x >> (3 - q)) & 1) ? m[q].c1 : m[q].c0;
    f.coef[x] = c;
  }
  return f;
}

inline cplx eval_form(const cplx* a, const FormTable& f) {
  cplx acc = 0.0;
  for (unsigned x = 0; x < 16; ++x) acc += a[x] * a[x ^ f.mask] * f.coef[x];
  return acc;
}

// 3x3 grid of form tables: contracted sigma indices {0,1,3} placed in
// slots (sa, sb), sigma_y in the remaining slots.
using FormGrid = std::array<std::array<FormTable, 3>, 3>;

inline const FormGrid& form_grid(int sa, int sb) {
  static const std::array<FormGrid, 6> grids = [] {
    std::array<FormGrid, 6> gs{};
    int slot = 0;
    for (int sa2 = 0; sa2 < 4; ++sa2)
      for (int sb2 = sa2 + 1; sb2 < 4; ++sb2, ++slot)
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) {
            int idx[4] = {2, 2, 2, 2};
            idx[sa2] = Metric::kContracted[i];
            idx[sb2] = Metric::kContracted[j];
            gs[slot][i][j] = make_form(idx[0], idx[1], idx[2], idx[3]);
          }
    return gs;
  }();
  static constexpr int pair_slot[4][4] = {
      {-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  return grids[pair_slot[sa][sb]];
}

using FormVals = std::array<std::array<cplx, 3>, 3>;

inline FormVals eval_grid(const cplx* a, int sa, int sb) {
  const FormGrid& g = form_grid(sa, sb);
  FormVals v;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      v[i][j] = eval_form(a, g[i][j]);
  return v;
}

constexpr std::array<double, 3> kG3 = {-1.0, 1.0, 1.0};  // metric over {0,1,3}

inline double f1_span(const cplx* a) {
  const FormVals a01 = eval_grid(a, 0, 1);
  const FormVals a02 = eval_grid(a, 0, 2);
  const FormVals a12 = eval_grid(a, 1, 2);
  cplx t = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        t += kG3[i] * kG3[j] * kG3[k] * a01[i][j] * a02[i][k] * a12[j][k];
  return std::abs(t);
}

inline double f2_span(const cplx* a) {
  const FormVals a01 = eval_grid(a, 0, 1);
  const FormVals a02 = eval_grid(a, 0, 2);
  const FormVals a13 = eval_grid(a, 1, 3);
  const FormVals a23 = eval_grid(a, 2, 3);
  cplx t = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const cplx pij = kG3[i] * kG3[j] * a01[i][j];
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          t += pij * kG3[k] * kG3[l] * a02[i][k] * a13[j][l] * a23[k][l];
    }
  return std::abs(t);
}

inline double f3_span(const cplx* a) {
  auto comb = [&a](int sa, int sb) {
    const FormVals v = eval_grid(a, sa, sb);
    cplx s = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        s += kG3[i] * kG3[j] * v[i][j] * v[i][j];
    return s;
  };
  return 0.5 * std::abs(comb(0, 1) * comb(0, 2) * comb(0, 3));
}

// Six-epsilon contraction over four copies of a three-qubit state,
// pairings (i1,i2)(i3,i4)(j1,j2)(j3,j4)(k1,k3)(k2,k4). Each epsilon has
// two nonzero entries, so the full contraction is a signed 64-term sum.
inline double tau3sq_span(const cplx* a) {
  cplx acc = 0.0;
  for (unsigned b = 0; b < 64; ++b) {
    const int c0 = b & 1, c1 = (b >> 1) & 1, c2 = (b >> 2) & 1;
    const int c3 = (b >> 3) & 1, c4 = (b >> 4) & 1, c5 = (b >> 5) & 1;
    // epsilon entry (c, 1-c) carries sign (+1 if c==0 else -1)
    const int sign_bits = c0 + c1 + c2 + c3 + c4 + c5;
    const int i1 = c0, i2 = 1 - c0, i3 = c1, i4 = 1 - c1;
    const int j1 = c2, j2 = 1 - c2, j3 = c3, j4 = 1 - c3;
    const int k1 = c4, k3 = 1 - c4, k2 = c5, k4 = 1 - c5;
    const cplx term = a[4 * i1 + 2 * j1 + k1] * a[4 * i2 + 2 * j2 + k2] *
                      a[4 * i3 + 2 * j3 + k3] * a[4 * i4 + 2 * j4 + k4];
    acc += (sign_bits & 1) ? -term : term;
  }
  return std::abs(2.0 * acc);
}

inline double concurrence_span(const cplx* a) {
  return 2.0 * std::abs(a[0] * a[3] - a[1] * a[2]);
}

inline double measure_span(InvariantKind kind, const cplx* a) {
  switch (kind) {
    case InvariantKind::F1: return f1_span(a);
    case InvariantKind::F2: return f2_span(a);
    case InvariantKind::F3: return f3_span(a);
    case InvariantKind::G1: return std::pow(f1_span(a), 1.0 / 3.0);
    case InvariantKind::G2: return std::pow(f2_span(a), 1.0 / 4.0);
    case InvariantKind::G3: return std::pow(f3_span(a), 1.0 / 6.0);
    case InvariantKind::Tau3: return std::sqrt(tau3sq_span(a));
    case InvariantKind::Tau3Squared: return tau3sq_span(a);
    case InvariantKind::Concurrence: return concurrence_span(a);
  }
  return 0.0;
}

}  // namespace detail

// Bilinear sigma-form sum_{x,y} s_x s_y (sigma_a x sigma_b x sigma_c x sigma_d)_{x,y}.
// Note this is bilinear, not sesquilinear: no amplitude is conjugated.
inline cplx antilinear_form(const PureState& s, int a, int b, int c, int d) {
  if (s.num_qubits() != 4)
    throw std::invalid_argument("antilinear_form: state must have 4 qubits");
  for (int idx : {a, b, c, d})
    if (idx < 0 || idx > 3) throw std::invalid_argument("antilinear_form: sigma index out of range");
  return detail::eval_form(s.amplitudes().data(), detail::make_form(a, b, c, d));
}

// Four-way monotones: metric-contracted products of bilinear sigma-forms,
// modulus taken once on the full contraction. Homogeneous of degree 6, 8
// and 12 in the amplitudes respectively.
inline double f_invariant(InvariantKind kind, const PureState& s) {
  if (s.num_qubits() != 4)
    throw std::invalid_argument("f_invariant: state must have 4 qubits");
  switch (kind) {
    case InvariantKind::F1: return detail::f1_span(s.amplitudes().data());
    case InvariantKind::F2: return detail::f2_span(s.amplitudes().data());
    case InvariantKind::F3: return detail::f3_span(s.amplitudes().data());
    default:
      throw std::invalid_argument("f_invariant: kind must be F1, F2 or F3");
  }
}

// Degree-2 companions F1^{1/3}, F2^{1/4}, F3^{1/6}.
inline double g_invariant(InvariantKind kind, const PureState& s) {
  if (s.num_qubits() != 4)
    throw std::invalid_argument("g_invariant: state must have 4 qubits");
  switch (kind) {
    case InvariantKind::G1: return std::pow(detail::f1_span(s.amplitudes().data()), 1.0 / 3.0);
    case InvariantKind::G2: return std::pow(detail::f2_span(s.amplitudes().data()), 1.0 / 4.0);
    case InvariantKind::G3: return std::pow(detail::f3_span(s.amplitudes().data()), 1.0 / 6.0);
    default:
      throw std::invalid_argument("g_invariant: kind must be G1, G2 or G3");
  }
}

inline double three_tangle_squared(const PureState& s) {
  if (s.num_qubits() != 3)
    throw std::invalid_argument("three_tangle: state must have 3 qubits");
  return detail::tau3sq_span(s.amplitudes().data());
}

inline double three_tangle(const PureState& s) {
  return std::sqrt(three_tangle_squared(s));
}

// 2|psi_00 psi_11 - psi_01 psi_10|
inline double concurrence_pure(const PureState& s) {
  if (s.num_qubits() != 2)
    throw std::invalid_argument("concurrence_pure: state must have 2 qubits");
  return detail::concurrence_span(s.amplitudes().data());
}

// Mixed two-qubit concurrence max(l1-l2-l3-l4, 0), computed through the
// Hermitian form sqrt(sqrt(rho) rho~ sqrt(rho)) so all spectra stay real.
inline double concurrence_mixed(const DensityMatrix& rho) {
  if (rho.num_qubits() != 2)
    throw std::invalid_argument("concurrence_mixed: density matrix must be 2-qubit");
  // rho~ = (sy x sy) rho* (sy x sy): sign-flip conjugate on mirrored indices
  static constexpr double sflip[4] = {-1.0, 1.0, 1.0, -1.0};
  std::vector<cplx> tilde(16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      tilde[i * 4 + j] = sflip[i] * sflip[j] * std::conj(rho.at(3 - i, 3 - j));

  const std::vector<cplx> root = psd_sqrt(rho.entries(), 4);
  auto mul = [](const std::vector<cplx>& x, const std::vector<cplx>& y) {
    std::vector<cplx> z(16, cplx{0.0, 0.0});
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) {
        const cplx xik = x[i * 4 + k];
        for (int j = 0; j < 4; ++j) z[i * 4 + j] += xik * y[k * 4 + j];
      }
    return z;
  };
  const EigResult e = hermitian_eig(mul(mul(root, tilde), root), 4);
  double lam[4];
  for (int k = 0; k < 4; ++k) lam[k] = std::sqrt(std::max(e.values[k], 0.0));
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

// Binary entropy of (1+sqrt(1-C^2))/2. Natural log by default; pass
// log2=true for bits.
inline double eof_from_concurrence(double c, bool log2 = false) {
  if (!(c >= 0.0 && c <= 1.0))
    throw std::domain_error("eof_from_concurrence: concurrence must lie in [0,1]");
  const double x = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c)));
  auto xlnx = [](double v) { return v > 0.0 ? v * std::log(v) : 0.0; };
  const double h = -xlnx(x) - xlnx(1.0 - x);
  return log2 ? h / std::log(2.0) : h;
}

// Dispatch by kind with qubit-count checking.
inline double measure(InvariantKind kind, const PureState& s) {
  if (s.num_qubits() != required_qubits(kind))
    throw std::invalid_argument(std::string("measure: ") + kind_name(kind) + " requires " +
                                std::to_string(required_qubits(kind)) + " qubits");
  return detail::measure_span(kind, s.amplitudes().data());
}

}  // namespace tangleroof
