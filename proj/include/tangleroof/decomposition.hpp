#pragma once

#include <cmath>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "tangleroof/density_matrix.hpp"
#include "tangleroof/family.hpp"
#include "tangleroof/invariants.hpp"
#include "tangleroof/reference.hpp"

namespace tangleroof {

// Weighted pure-state list claimed to realize `target`.
struct Decomposition {
  struct Term {
    double weight;
    PureState state;
  };
  std::vector<Term> terms;
  DensityMatrix target;
};

namespace detail {

// Merge states equal up to global phase; drop vanishing weights. Keeps
// the term count within the rank-2 Caratheodory bound of five.
inline void add_term(std::vector<Decomposition::Term>& terms, double w, PureState s) {
  if (w <= 1e-14) return;
  for (Decomposition::Term& t : terms) {
    if (same_up_to_phase(t.state, s)) {
      t.weight += w;
      return;
    }
  }
  terms.push_back({w, std::move(s)});
}

}  // namespace detail

// The cited optimal decomposition for a supported case at mixing weight p,
// flattened to pure terms.
//
// Cases with a nontrivial zero p0 use the m-phase mixes: below p0 the
// target is (p/p0) * [equal mix of Z(p0, 2 pi k/m)] + (1 - p/p0) * W; on
// [p0, p1] (or [p0, 1]) the equal mix at p itself; beyond a tangent point
// p1 the mix of the first basis state with the m-phase mix pinned at p1.
// Linear G-kind roofs replace the upper branch by the Phi/Z(p0) mix.
// Identically-zero cases return the eigendecomposition {p, 1-p}.
inline Decomposition build_decomposition(std::string_view case_id, double p) {
  const RoofCase& c = find_case(case_id);
  if (!(p >= 0.0 && p <= 1.0))
    throw std::domain_error("build_decomposition: p must lie in [0,1]");
  const RankTwoFamily& fam = roof_family(c.family);

  Decomposition d{{}, mix(fam, p)};
  auto add_phase_mix = [&](double total_weight, double at_p, int m) {
    for (int k = 0; k < m; ++k)
      detail::add_term(d.terms, total_weight / m, superpose(fam, at_p, 2.0 * M_PI * k / m));
  };

  if (c.identically_zero) {
    detail::add_term(d.terms, p, fam.phi());
    detail::add_term(d.terms, 1.0 - p, fam.w());
    return d;
  }

  namespace bp = breakpoints;
  double p0 = 0.0;
  bool has_p0 = true;
  double p1 = -1.0;  // tangent point, when the middle branch loses convexity
  bool ramp_upper = false;

  if (c.id == "F1-rho1") p0 = bp::p0_rho1_f1();
  else if (c.id == "F2-rho1") p0 = bp::p0_rho1_f2();
  else if (c.id == "F3-rho1" || c.id == "G3-rho1") has_p0 = false;
  else if (c.id == "G1-rho1") { p0 = bp::p0_rho1_f1(); ramp_upper = true; }
  else if (c.id == "G2-rho1") { p0 = bp::p0_rho1_f2(); ramp_upper = true; }
  else if (c.id == "F1-rho2") { p0 = bp::p0_rho2(); p1 = solve_p1(); }
  else if (c.id == "G1-rho2") { p0 = bp::p0_rho2(); ramp_upper = true; }
  else if (c.id == "F3-rho3") p0 = bp::p0_rho3();
  else if (c.id == "G3-rho3") { p0 = bp::p0_rho3(); ramp_upper = true; }
  else if (c.id == "tau3sq-ghzw") { p0 = bp::p0_ghzw(); p1 = bp::p1_ghzw(); }
  else if (c.id == "tau3-ghzw") { p0 = bp::p0_ghzw(); ramp_upper = true; }

  if (!has_p0) {
    add_phase_mix(1.0, p, c.mix_phases);
    return d;
  }
  if (p <= p0) {
    add_phase_mix(p / p0, p0, c.mix_phases);
    detail::add_term(d.terms, 1.0 - p / p0, fam.w());
    return d;
  }
  if (ramp_upper) {
    detail::add_term(d.terms, (p - p0) / (1.0 - p0), fam.phi());
    add_phase_mix((1.0 - p) / (1.0 - p0), p0, c.mix_phases);
    return d;
  }
  if (p1 > 0.0 && p > p1) {
    detail::add_term(d.terms, (p - p1) / (1.0 - p1), fam.phi());
    add_phase_mix((1.0 - p) / (1.0 - p1), p1, c.mix_phases);
    return d;
  }
  add_phase_mix(1.0, p, c.mix_phases);
  return d;
}

struct VerifyResult {
  double residual;          // max-abs entry error of the reconstruction
  double avg_entanglement;  // weighted average of the measure over the terms
};

inline VerifyResult verify_decomposition(const Decomposition& d, InvariantKind kind) {
  DensityMatrix rec = DensityMatrix::zero(d.target.num_qubits());
  double avg = 0.0;
  for (const Decomposition::Term& t : d.terms) {
    rec.add_scaled(density_of(t.state), t.weight);
    avg += t.weight * measure(kind, t.state);
  }
  double residual = 0.0;
  for (std::size_t i = 0; i < rec.dim(); ++i)
    for (std::size_t j = 0; j < rec.dim(); ++j)
      residual = std::max(residual, std::abs(rec.at(i, j) - d.target.at(i, j)));
  return {residual, avg};
}

}  // namespace tangleroof
