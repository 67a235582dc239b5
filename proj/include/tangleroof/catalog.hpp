#pragma once

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "tangleroof/errors.hpp"
#include "tangleroof/pure_state.hpp"

namespace tangleroof {

struct NamedState {
  std::string key;
  PureState state;
  std::string description;
};

namespace detail {

inline PureState from_kets(int n, std::initializer_list<std::pair<unsigned, double>> terms) {
  std::vector<cplx> a(std::size_t{1} << n, cplx{0.0, 0.0});
  for (const auto& [idx, coeff] : terms) a[idx] = coeff;
  return normalize(PureState(n, std::move(a)));
}

}  // namespace detail

// Built-in states. Keys phi1..phi3 and w4 double as the G_abcd and
// L_ab3 class representatives; xi and eta are the L_{7+1} and L_{a4}
// representatives.
inline const std::vector<NamedState>& catalog() {
  static const std::vector<NamedState> states = [] {
    using detail::from_kets;
    const double s2 = std::sqrt(2.0);
    std::vector<NamedState> c;
    c.push_back({"phi1",
                 from_kets(4, {{0b0000, 1}, {0b1111, 1}}),
                 "maximally entangled (|0000>+|1111>)/sqrt2"});
    c.push_back({"phi2",
                 from_kets(4, {{0b1111, s2}, {0b1000, 1}, {0b0100, 1}, {0b0010, 1}, {0b0001, 1}}),
                 "maximally entangled (sqrt2|1111>+|1000>+|0100>+|0010>+|0001>)/sqrt6"});
    c.push_back({"phi3",
                 from_kets(4, {{0b1111, 1}, {0b1100, 1}, {0b0010, 1}, {0b0001, 1}}),
                 "maximally entangled (|1111>+|1100>+|0010>+|0001>)/2"});
    c.push_back({"w4",
                 from_kets(4, {{0b0111, 1}, {0b1011, 1}, {0b1101, 1}, {0b1110, 1}}),
                 "four-qubit W state, L_ab3 representative"});
    c.push_back({"ghz3", from_kets(3, {{0b000, 1}, {0b111, 1}}), "three-qubit GHZ state"});
    c.push_back({"w3", from_kets(3, {{0b001, 1}, {0b010, 1}, {0b100, 1}}), "three-qubit W state"});
    c.push_back({"xi",
                 from_kets(4, {{0b0000, 1}, {0b1011, 1}, {0b1101, 1}, {0b1110, 1}}),
                 "(|0000>+|1011>+|1101>+|1110>)/2, L_{7(+)1bar} representative"});
    c.push_back({"eta",
                 from_kets(4, {{0b0001, 1}, {0b0110, 1}, {0b1000, 1}}),
                 "(|0001>+|0110>+|1000>)/sqrt3, L_{a4} representative"});
    c.push_back({"labc2", from_kets(4, {{0b0000, 1}}), "|0000>, L_{abc2} representative"});
    c.push_back({"la2b2",
                 from_kets(4, {{0b0110, 1}, {0b0011, 1}}),
                 "(|0110>+|0011>)/sqrt2, L_{a2b2} representative"});
    c.push_back({"la2o31",
                 from_kets(4, {{0b0011, 1}, {0b0101, 1}, {0b0110, 1}}),
                 "(|0011>+|0101>+|0110>)/sqrt3, L_{a2 0_{3(+)1bar}} representative"});
    c.push_back({"lo31o31",
                 from_kets(4, {{0b0000, 1}, {0b0111, 1}}),
                 "(|0000>+|0111>)/sqrt2, L_{0_{3(+)1bar} 0_{3(+)1bar}} representative"});
    c.push_back({"l5o3",
                 from_kets(4, {{0b0000, 1}, {0b0101, 1}, {0b1000, 1}, {0b1110, 1}}),
                 "(|0000>+|0101>+|1000>+|1110>)/2, L_{5(+)3bar} representative"});
    return c;
  }();
  return states;
}

inline const NamedState& catalog_lookup(std::string_view key) {
  for (const NamedState& ns : catalog())
    if (ns.key == key) return ns;
  throw std::out_of_range("catalog_lookup: unknown key '" + std::string(key) + "'");
}

inline bool catalog_has(std::string_view key) {
  for (const NamedState& ns : catalog())
    if (ns.key == key) return true;
  return false;
}

}  // namespace tangleroof
