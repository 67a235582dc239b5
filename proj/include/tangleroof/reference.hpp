#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tangleroof/catalog.hpp"
#include "tangleroof/errors.hpp"
#include "tangleroof/family.hpp"
#include "tangleroof/invariants.hpp"

namespace tangleroof {

// Breakpoints of the piecewise roof values.
namespace breakpoints {

inline double p0_rho1_f1() { return std::sqrt(3.0) / (std::sqrt(3.0) + 1.0); }  // ~0.634
inline double p0_rho1_f2() { return 2.0 / 3.0; }
inline double p0_rho2() {
  const double c = std::pow(2.0 * std::sqrt(6.0), 2.0 / 3.0);
  return c / (1.0 + c);  // ~0.743
}
inline double p0_rho3() { return 3.0 / 5.0; }
inline double p0_ghzw() {
  const double c = 4.0 * std::cbrt(2.0);
  return c / (3.0 + c);  // ~0.6269
}
inline double p1_ghzw() { return 0.5 + 3.0 * std::sqrt(465.0) / 310.0; }  // ~0.7087
inline double pstar_rho2() { return 0.9196; }  // convexity of g_I ends near here

}  // namespace breakpoints

// Root of 6 p (4p-3)^2 = (1-p)(1+2p)^2 in (p0_rho2, pstar), the point
// where the tangent-line construction for the rho2 roof departs from the
// middle branch. Bisection to |dp| <= 1e-12.
inline double solve_p1() {
  auto resid = [](double p) {
    const double l = 6.0 * p * (4.0 * p - 3.0) * (4.0 * p - 3.0);
    const double r = (1.0 - p) * (1.0 + 2.0 * p) * (1.0 + 2.0 * p);
    return l - r;
  };
  double lo = breakpoints::p0_rho2(), hi = breakpoints::pstar_rho2();
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (resid(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

namespace detail {

inline double ghzw_gI(double p) {
  return p * p - (8.0 * std::sqrt(6.0) / 9.0) * std::sqrt(p * (1 - p) * (1 - p) * (1 - p));
}

inline double ghzw_gI_prime(double p) {
  const double u = p * (1 - p) * (1 - p) * (1 - p);
  const double du = (1 - p) * (1 - p) * (1.0 - 4.0 * p);
  return 2.0 * p - (8.0 * std::sqrt(6.0) / 9.0) * du / (2.0 * std::sqrt(u));
}

inline double rho2_gI(double p) {
  return (8.0 / 9.0) * std::pow(p, 1.5) *
         (std::pow(p, 1.5) - 2.0 * std::sqrt(6.0) * std::pow(1.0 - p, 1.5));
}

inline double rho2_gII(double p, double p1) {
  const double at_p1 = std::pow(p1, 3.0) -
                       2.0 * std::sqrt(6.0) * std::pow(p1, 1.5) * std::pow(1.0 - p1, 1.5);
  return (8.0 / 9.0) * ((p - p1) / (1.0 - p1) + (1.0 - p) / (1.0 - p1) * at_p1);
}

}  // namespace detail

// Tangency point of the three-qubit middle branch: the p where the chord
// from (1, 1) touches gI. Bisection on gI(p) + (1-p) gI'(p) - 1.
inline double solve_tangent_p1_ghzw() {
  auto t = [](double p) { return detail::ghzw_gI(p) + (1.0 - p) * detail::ghzw_gI_prime(p) - 1.0; };
  double lo = breakpoints::p0_ghzw() + 1e-9, hi = 0.99;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (t(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

// Closed-form roof value of one supported case as a function of p.
struct PiecewiseFormula {
  std::string case_id;
  std::optional<double> p0;
  std::optional<double> p1;
  std::function<double(double)> eval;

  double operator()(double p) const { return eval(p); }
};

enum class FamilyId { Rho1, Rho2, Rho3, GhzW };

struct RoofCase {
  std::string id;
  InvariantKind kind;
  FamilyId family;
  int mix_phases;        // cross-term-cancelling phase count of the optimal mixes
  bool identically_zero; // the eigendecomposition itself is optimal
};

inline const std::vector<RoofCase>& supported_cases() {
  using K = InvariantKind;
  static const std::vector<RoofCase> cases = {
      {"F1-rho1", K::F1, FamilyId::Rho1, 4, false},
      {"F2-rho1", K::F2, FamilyId::Rho1, 4, false},
      {"F3-rho1", K::F3, FamilyId::Rho1, 2, false},
      {"G1-rho1", K::G1, FamilyId::Rho1, 4, false},
      {"G2-rho1", K::G2, FamilyId::Rho1, 4, false},
      {"G3-rho1", K::G3, FamilyId::Rho1, 2, false},
      {"F1-rho2", K::F1, FamilyId::Rho2, 3, false},
      {"F2-rho2", K::F2, FamilyId::Rho2, 0, true},
      {"F3-rho2", K::F3, FamilyId::Rho2, 0, true},
      {"G1-rho2", K::G1, FamilyId::Rho2, 3, false},
      {"G2-rho2", K::G2, FamilyId::Rho2, 0, true},
      {"G3-rho2", K::G3, FamilyId::Rho2, 0, true},
      {"F1-rho3", K::F1, FamilyId::Rho3, 0, true},
      {"F2-rho3", K::F2, FamilyId::Rho3, 0, true},
      {"F3-rho3", K::F3, FamilyId::Rho3, 2, false},
      {"G1-rho3", K::G1, FamilyId::Rho3, 0, true},
      {"G2-rho3", K::G2, FamilyId::Rho3, 0, true},
      {"G3-rho3", K::G3, FamilyId::Rho3, 2, false},
      {"tau3sq-ghzw", K::Tau3Squared, FamilyId::GhzW, 3, false},
      {"tau3-ghzw", K::Tau3, FamilyId::GhzW, 3, false},
  };
  return cases;
}

inline const RoofCase& find_case(std::string_view id) {
  for (const RoofCase& c : supported_cases())
    if (c.id == id) return c;
  throw UnknownCaseError("unsupported case '" + std::string(id) + "'");
}

inline const RankTwoFamily& roof_family(FamilyId fam) {
  static const RankTwoFamily rho1(catalog_lookup("phi1").state, catalog_lookup("w4").state);
  static const RankTwoFamily rho2(catalog_lookup("phi2").state, catalog_lookup("w4").state);
  static const RankTwoFamily rho3(catalog_lookup("phi3").state, catalog_lookup("w4").state);
  static const RankTwoFamily ghzw(catalog_lookup("ghz3").state, catalog_lookup("w3").state);
  switch (fam) {
    case FamilyId::Rho1: return rho1;
    case FamilyId::Rho2: return rho2;
    case FamilyId::Rho3: return rho3;
    case FamilyId::GhzW: return ghzw;
  }
  throw std::logic_error("roof_family: bad id");
}

// Step convention: the >= branch applies at the breakpoint itself.
inline PiecewiseFormula reference_formula(std::string_view case_id) {
  const RoofCase& c = find_case(case_id);  // validates the id
  PiecewiseFormula f;
  f.case_id = c.id;
  if (c.identically_zero) {
    f.eval = [](double) { return 0.0; };
    return f;
  }
  namespace bp = breakpoints;
  if (c.id == "F1-rho1") {
    const double p0 = bp::p0_rho1_f1();
    f.p0 = p0;
    f.eval = [p0](double p) { return p >= p0 ? p * (6.0 * p - 2.0 * p * p - 3.0) : 0.0; };
  } else if (c.id == "F2-rho1") {
    const double p0 = bp::p0_rho1_f2();
    f.p0 = p0;
    f.eval = [p0](double p) {
      return p >= p0 ? p * p * (p * p - 4.0 * (1.0 - p) * (1.0 - p)) : 0.0;
    };
  } else if (c.id == "F3-rho1") {
    f.eval = [](double p) { return 0.5 * std::pow(p, 6.0); };
  } else if (c.id == "G1-rho1" || c.id == "G2-rho1") {
    const double p0 = c.id == "G1-rho1" ? bp::p0_rho1_f1() : bp::p0_rho1_f2();
    f.p0 = p0;
    f.eval = [p0](double p) { return p >= p0 ? (p - p0) / (1.0 - p0) : 0.0; };
  } else if (c.id == "G3-rho1") {
    f.eval = [](double p) { return p / std::pow(2.0, 1.0 / 6.0); };
  } else if (c.id == "F1-rho2") {
    const double p0 = bp::p0_rho2();
    const double p1 = solve_p1();
    f.p0 = p0;
    f.p1 = p1;
    f.eval = [p0, p1](double p) {
      if (p < p0) return 0.0;
      if (p <= p1) return detail::rho2_gI(p);
      return detail::rho2_gII(p, p1);
    };
  } else if (c.id == "G1-rho2") {
    const double p0 = bp::p0_rho2();
    f.p0 = p0;
    f.eval = [p0](double p) {
      return p >= p0 ? std::cbrt(8.0 / 9.0) * (p - p0) / (1.0 - p0) : 0.0;
    };
  } else if (c.id == "F3-rho3") {
    f.p0 = bp::p0_rho3();
    f.eval = [](double p) {
      return p >= 0.6 ? 2.5 * std::pow(p, 5.0) * (p - 0.6) : 0.0;
    };
  } else if (c.id == "G3-rho3") {
    f.p0 = bp::p0_rho3();
    f.eval = [](double p) { return p >= 0.6 ? (p - 0.6) / 0.4 : 0.0; };
  } else if (c.id == "tau3sq-ghzw") {
    const double p0 = bp::p0_ghzw();
    const double p1 = bp::p1_ghzw();
    f.p0 = p0;
    f.p1 = p1;
    f.eval = [p0, p1](double p) {
      if (p < p0) return 0.0;
      if (p <= p1) return detail::ghzw_gI(p);
      return 1.0 - (1.0 - p) * (1.5 + std::sqrt(465.0) / 18.0);
    };
  } else {  // tau3-ghzw
    const double p0 = bp::p0_ghzw();
    f.p0 = p0;
    f.eval = [p0](double p) { return p >= p0 ? (p - p0) / (1.0 - p0) : 0.0; };
  }
  return f;
}

}  // namespace tangleroof
