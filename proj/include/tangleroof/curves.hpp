#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "tangleroof/family.hpp"
#include "tangleroof/invariants.hpp"
#include "tangleroof/parallel.hpp"

namespace tangleroof {

// Measure values of superpose(fam, p, phi) on a (p, phi) grid.
struct CurveGrid {
  std::vector<double> p_values;
  std::vector<double> phi_values;
  std::vector<double> samples;  // row-major [p][phi]

  double at(std::size_t i, std::size_t j) const { return samples[i * phi_values.size() + j]; }
};

inline std::vector<double> uniform_grid(double lo, double hi, int n) {
  if (n < 2) throw std::invalid_argument("uniform_grid: need at least 2 points");
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
  return g;
}

// n equally spaced phases in [0, 2pi)
inline std::vector<double> phase_grid(int n) {
  if (n < 1) throw std::invalid_argument("phase_grid: need at least 1 point");
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = 2.0 * M_PI * i / n;
  return g;
}

namespace detail {

// superpose into a caller-provided buffer; avoids per-sample allocation
inline void superpose_into(const RankTwoFamily& fam, double p, double phase, cplx* out) {
  const double cp = std::sqrt(p);
  const cplx cw = -std::exp(cplx{0.0, phase}) * std::sqrt(1.0 - p);
  const std::vector<cplx>& u = fam.phi().amplitudes();
  const std::vector<cplx>& w = fam.w().amplitudes();
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = cp * u[i] + cw * w[i];
}

inline double sample_measure(const RankTwoFamily& fam, InvariantKind kind, double p, double phase) {
  cplx buf[16];
  superpose_into(fam, p, phase, buf);
  return measure_span(kind, buf);
}

}  // namespace detail

inline CurveGrid characteristic_curve(const RankTwoFamily& fam, InvariantKind kind,
                                      const std::vector<double>& p_grid,
                                      const std::vector<double>& phi_grid) {
  if (fam.num_qubits() != required_qubits(kind))
    throw std::invalid_argument("characteristic_curve: family qubit count does not match measure");
  if (p_grid.empty() || phi_grid.empty())
    throw std::invalid_argument("characteristic_curve: empty grid");
  for (double p : p_grid)
    if (!(p >= 0.0 && p <= 1.0))
      throw std::domain_error("characteristic_curve: p outside [0,1]");

  CurveGrid grid;
  grid.p_values = p_grid;
  grid.phi_values = phi_grid;
  grid.samples.resize(p_grid.size() * phi_grid.size());
  parallel_for(p_grid.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      double* row = grid.samples.data() + i * phi_grid.size();
      for (std::size_t j = 0; j < phi_grid.size(); ++j)
        row[j] = detail::sample_measure(fam, kind, p_grid[i], phi_grid[j]);
    }
  });
  return grid;
}

// Pointwise minimum over phi; ties resolve to the smallest phi index.
inline std::vector<double> min_curve(const CurveGrid& grid) {
  std::vector<double> out(grid.p_values.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    double best = grid.at(i, 0);
    for (std::size_t j = 1; j < grid.phi_values.size(); ++j)
      best = std::min(best, grid.at(i, j));
    out[i] = best;
  }
  return out;
}

inline std::size_t argmin_phi(const CurveGrid& grid, std::size_t i) {
  std::size_t best = 0;
  for (std::size_t j = 1; j < grid.phi_values.size(); ++j)
    if (grid.at(i, j) < grid.at(i, best)) best = j;
  return best;
}

// Greatest convex function below the sampled points, evaluated back on
// the p grid. Monotone-chain lower hull; needs ascending p.
inline std::vector<double> lower_convex_envelope(const std::vector<double>& p,
                                                 const std::vector<double>& v) {
  if (p.size() != v.size() || p.size() < 2)
    throw std::invalid_argument("lower_convex_envelope: need at least 2 matching points");
  for (std::size_t i = 1; i < p.size(); ++i)
    if (!(p[i] >= p[i - 1]))
      throw std::invalid_argument("lower_convex_envelope: p values must ascend");

  std::vector<std::size_t> hull;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (hull.size() >= 2) {
      const std::size_t a = hull[hull.size() - 2], b = hull[hull.size() - 1];
      // keep b only if (a,b,i) turns left (strictly convex)
      if ((p[b] - p[a]) * (v[i] - v[a]) - (v[b] - v[a]) * (p[i] - p[a]) <= 0.0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(i);
  }

  std::vector<double> out(p.size());
  std::size_t seg = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (seg + 1 < hull.size() && p[hull[seg + 1]] < p[i]) ++seg;
    const std::size_t a = hull[seg];
    const std::size_t b = hull[std::min(seg + 1, hull.size() - 1)];
    if (a == b || p[b] == p[a]) {
      out[i] = v[a];
    } else {
      const double t = (p[i] - p[a]) / (p[b] - p[a]);
      out[i] = v[a] + t * (v[b] - v[a]);
    }
  }
  return out;
}

// Sampled min-characteristic curve plus its lower convex envelope.
struct EnvelopeResult {
  std::vector<double> p_values;
  std::vector<double> min_curve;
  std::vector<double> hull_curve;
};

// One refined interior minimum of the phi-minimized curve.
struct CurveMinimum {
  double p = 0.0;
  double value = 0.0;
};

namespace detail {

// Golden-section refinement of a unimodal bracket.
template <typename F>
double golden_min(const F& f, double lo, double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a), d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > 1e-13) {
    if (fc < fd) {
      b = d; d = c; fd = fc;
      c = b - kInvPhi * (b - a); fc = f(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + kInvPhi * (b - a); fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace detail

// Strict interior local minima of the sampled min-curve, sharpened by
// golden-section search along the minimizing phi column. The refinement
// keeps the roof's touching points (the nontrivial zeros) in the hull
// point set even when they fall between grid nodes.
inline std::vector<CurveMinimum> refined_interior_minima(const RankTwoFamily& fam,
                                                         InvariantKind kind,
                                                         const CurveGrid& grid,
                                                         int max_minima = 16) {
  const std::vector<double> mc = min_curve(grid);
  std::vector<CurveMinimum> out;
  for (std::size_t i = 1; i + 1 < mc.size() && static_cast<int>(out.size()) < max_minima; ++i) {
    if (!(mc[i] < mc[i - 1] && mc[i] < mc[i + 1])) continue;
    const double phi = grid.phi_values[argmin_phi(grid, i)];
    auto f = [&fam, kind, phi](double p) { return detail::sample_measure(fam, kind, p, phi); };
    const double pz = detail::golden_min(f, grid.p_values[i - 1], grid.p_values[i + 1]);
    out.push_back({pz, f(pz)});
  }
  return out;
}

// Envelope of the min characteristic curve. Hull points are the grid
// min-curve samples, the two pure endpoints (anchored even when the grid
// does not reach p=0 or p=1), and the refined interior minima.
inline EnvelopeResult envelope_from_grid(const RankTwoFamily& fam, InvariantKind kind,
                                         const CurveGrid& grid) {
  EnvelopeResult res;
  res.p_values = grid.p_values;
  res.min_curve = min_curve(grid);

  std::vector<double> hp = grid.p_values;
  std::vector<double> hv = res.min_curve;
  for (const CurveMinimum& m : refined_interior_minima(fam, kind, grid)) {
    hp.push_back(m.p);
    hv.push_back(m.value);
  }
  if (hp.front() > 0.0) {
    hp.push_back(0.0);
    hv.push_back(detail::sample_measure(fam, kind, 0.0, 0.0));
  }
  if (grid.p_values.back() < 1.0) {
    hp.push_back(1.0);
    hv.push_back(detail::sample_measure(fam, kind, 1.0, 0.0));
  }
  std::vector<std::size_t> order(hp.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&hp](std::size_t a, std::size_t b) { return hp[a] < hp[b]; });
  std::vector<double> sp, sv;  // sorted, duplicate p collapsed to the lower value
  sp.reserve(hp.size());
  sv.reserve(hp.size());
  for (std::size_t idx : order) {
    if (!sp.empty() && hp[idx] == sp.back())
      sv.back() = std::min(sv.back(), hv[idx]);
    else {
      sp.push_back(hp[idx]);
      sv.push_back(hv[idx]);
    }
  }

  const std::vector<double> hull = lower_convex_envelope(sp, sv);
  res.hull_curve.resize(grid.p_values.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < grid.p_values.size(); ++i) {
    while (k + 1 < sp.size() && sp[k] < grid.p_values[i]) ++k;
    // grid p values are a subset of sp, so sp[k] == p_values[i] here
    res.hull_curve[i] = hull[k];
  }
  return res;
}

inline EnvelopeResult envelope(const RankTwoFamily& fam, InvariantKind kind,
                               const std::vector<double>& p_grid,
                               const std::vector<double>& phi_grid) {
  return envelope_from_grid(fam, kind, characteristic_curve(fam, kind, p_grid, phi_grid));
}

inline void write_curve_csv(std::ostream& out, const CurveGrid& grid) {
  out << "p,phi,value\n";
  char buf[128];
  for (std::size_t i = 0; i < grid.p_values.size(); ++i)
    for (std::size_t j = 0; j < grid.phi_values.size(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g\n", grid.p_values[i],
                    grid.phi_values[j], grid.at(i, j));
      out << buf;
    }
}

inline void write_envelope_csv(std::ostream& out, const EnvelopeResult& env,
                               const std::vector<double>& reference) {
  if (reference.size() != env.p_values.size())
    throw std::invalid_argument("write_envelope_csv: reference length mismatch");
  out << "p,min,hull,reference\n";
  char buf[160];
  for (std::size_t i = 0; i < env.p_values.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g,%.12g\n", env.p_values[i],
                  env.min_curve[i], env.hull_curve[i], reference[i]);
    out << buf;
  }
}

}  // namespace tangleroof
