#pragma once

#include <array>
#include <complex>

#include "tangleroof/pure_state.hpp"

namespace tangleroof {

// sigma_0..sigma_3 = identity, sigma_x, sigma_y, sigma_z, row-major 2x2.
struct SigmaBasis {
  static constexpr int kCount = 4;
  static const std::array<std::array<cplx, 4>, 4>& matrices() {
    static const std::array<std::array<cplx, 4>, 4> m = {{
        {{{1, 0}, {0, 0}, {0, 0}, {1, 0}}},    // identity
        {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}},    // sigma_x
        {{{0, 0}, {0, -1}, {0, 1}, {0, 0}}},   // sigma_y
        {{{1, 0}, {0, 0}, {0, 0}, {-1, 0}}},   // sigma_z
    }};
    return m;
  }
  static cplx entry(int idx, int row, int col) { return matrices()[idx][row * 2 + col]; }
};

// Contraction metric diag(-1, 1, 0, 1): sigma_y never appears as a
// contracted index, so summed indices range over {0, 1, 3} only.
struct Metric {
  static constexpr std::array<double, 4> kWeights = {-1.0, 1.0, 0.0, 1.0};
  static constexpr std::array<int, 3> kContracted = {0, 1, 3};
  static constexpr double weight(int mu) { return kWeights[mu]; }
};

// Antisymmetric 2x2 tensor with eps_{01} = +1.
struct EpsilonTensor {
  static constexpr double value(int i, int j) {
    return (i == 0 && j == 1) ? 1.0 : (i == 1 && j == 0) ? -1.0 : 0.0;
  }
};

}  // namespace tangleroof
