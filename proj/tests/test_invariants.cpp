#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "tangleroof/catalog.hpp"
#include "tangleroof/density_matrix.hpp"
#include "tangleroof/family.hpp"
#include "tangleroof/invariants.hpp"
#include "tangleroof/pauli.hpp"

using namespace tangleroof;

namespace {

PureState random_state(std::mt19937& rng, int n, bool unit = true) {
  std::normal_distribution<double> g;
  std::vector<cplx> a(std::size_t{1} << n);
  for (cplx& v : a) v = cplx{g(rng), g(rng)};
  PureState s(n, std::move(a));
  return unit ? normalize(s) : s;
}

// Independent oracle: dense Kronecker product and an explicit double sum.
cplx dense_bilinear_form(const PureState& s, int a, int b, int c, int d) {
  const int idx[4] = {a, b, c, d};
  std::vector<cplx> m(256, cplx{1.0, 0.0});
  for (int x = 0; x < 16; ++x)
    for (int y = 0; y < 16; ++y)
      for (int q = 0; q < 4; ++q)
        m[x * 16 + y] *= SigmaBasis::entry(idx[q], (x >> (3 - q)) & 1, (y >> (3 - q)) & 1);
  cplx acc = 0.0;
  for (int x = 0; x < 16; ++x)
    for (int y = 0; y < 16; ++y)
      acc += s.amp(x) * s.amp(y) * m[x * 16 + y];
  return acc;
}

// Independent oracle: all 2^12 index tuples of the six-epsilon contraction.
double brute_force_tau3sq(const PureState& s) {
  auto eps = [](int i, int j) { return EpsilonTensor::value(i, j); };
  cplx acc = 0.0;
  for (int bits = 0; bits < 4096; ++bits) {
    const int i1 = bits & 1, i2 = (bits >> 1) & 1, i3 = (bits >> 2) & 1, i4 = (bits >> 3) & 1;
    const int j1 = (bits >> 4) & 1, j2 = (bits >> 5) & 1, j3 = (bits >> 6) & 1,
              j4 = (bits >> 7) & 1;
    const int k1 = (bits >> 8) & 1, k2 = (bits >> 9) & 1, k3 = (bits >> 10) & 1,
              k4 = (bits >> 11) & 1;
    const double e = eps(i1, i2) * eps(i3, i4) * eps(j1, j2) * eps(j3, j4) * eps(k1, k3) *
                     eps(k2, k4);
    if (e == 0.0) continue;
    acc += e * s.amp(4 * i1 + 2 * j1 + k1) * s.amp(4 * i2 + 2 * j2 + k2) *
           s.amp(4 * i3 + 2 * j3 + k3) * s.amp(4 * i4 + 2 * j4 + k4);
  }
  return std::abs(2.0 * acc);
}

std::array<cplx, 4> random_sl2(std::mt19937& rng) {
  std::normal_distribution<double> g;
  while (true) {
    std::array<cplx, 4> m = {cplx{g(rng), g(rng)}, cplx{g(rng), g(rng)},
                             cplx{g(rng), g(rng)}, cplx{g(rng), g(rng)}};
    const cplx det = m[0] * m[3] - m[1] * m[2];
    if (std::abs(det) < 1e-3) continue;
    const cplx scale = 1.0 / std::sqrt(det);
    for (cplx& v : m) v *= scale;
    return m;
  }
}

PureState apply_local(const PureState& s, const std::vector<std::array<cplx, 4>>& ops) {
  const int n = s.num_qubits();
  std::vector<cplx> a = s.amplitudes();
  for (int q = 0; q < n; ++q) {
    std::vector<cplx> next(a.size(), cplx{0, 0});
    const std::size_t bit = std::size_t{1} << (n - 1 - q);
    for (std::size_t x = 0; x < a.size(); ++x) {
      const int row = (x & bit) ? 1 : 0;
      next[x] = ops[q][row * 2 + 0] * a[x & ~bit] + ops[q][row * 2 + 1] * a[x | bit];
    }
    a = std::move(next);
  }
  return PureState(n, std::move(a));
}

const RankTwoFamily& family(const char* phi, const char* w) {
  static std::vector<std::pair<std::string, RankTwoFamily>> cache;
  const std::string key = std::string(phi) + "/" + w;
  for (const auto& [k, f] : cache)
    if (k == key) return f;
  cache.emplace_back(key, RankTwoFamily(catalog_lookup(phi).state, catalog_lookup(w).state));
  return cache.back().second;
}

}  // namespace

TEST_CASE("sigma basis, metric and epsilon invariants") {
  for (int idx = 0; idx < 4; ++idx) {  // unitarity
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        cplx dot = 0.0;
        for (int k = 0; k < 2; ++k)
          dot += std::conj(SigmaBasis::entry(idx, k, i)) * SigmaBasis::entry(idx, k, j);
        CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) < 1e-15);
      }
  }
  CHECK(std::abs(SigmaBasis::entry(2, 0, 1) + SigmaBasis::entry(2, 1, 0)) < 1e-15);  // antisym
  for (int idx = 1; idx < 4; ++idx)
    CHECK(std::abs(SigmaBasis::entry(idx, 0, 0) + SigmaBasis::entry(idx, 1, 1)) < 1e-15);

  CHECK(Metric::weight(0) == -1.0);
  CHECK(Metric::weight(1) == 1.0);
  CHECK(Metric::weight(2) == 0.0);
  CHECK(Metric::weight(3) == 1.0);

  CHECK(EpsilonTensor::value(0, 1) == 1.0);
  CHECK(EpsilonTensor::value(1, 0) == -1.0);
  CHECK(EpsilonTensor::value(0, 0) == 0.0);
  CHECK(EpsilonTensor::value(1, 1) == 0.0);
}

TEST_CASE("antilinear_form matches the dense Kronecker oracle") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 12; ++trial) {
    const PureState s = random_state(rng, 4);
    const int a = static_cast<int>(rng() % 4), b = static_cast<int>(rng() % 4);
    const int c = static_cast<int>(rng() % 4), d = static_cast<int>(rng() % 4);
    CHECK(std::abs(antilinear_form(s, a, b, c, d) - dense_bilinear_form(s, a, b, c, d)) < 1e-12);
  }
}

TEST_CASE("antilinear_form pinned values") {
  const PureState& phi1 = catalog_lookup("phi1").state;
  // bilinear convention: sigma_y^x4 on (|0000>+|1111>)/sqrt2 gives +1
  CHECK(std::abs(antilinear_form(phi1, 2, 2, 2, 2) - cplx{1.0, 0.0}) < 1e-14);
  CHECK(std::abs(antilinear_form(phi1, 1, 1, 2, 2) - cplx{-1.0, 0.0}) < 1e-14);

  // every sigma_y-bearing form annihilates |0000>, which is what makes
  // all three four-way measures vanish on products
  std::vector<cplx> zero16(16, cplx{0, 0});
  zero16[0] = 1.0;
  const PureState ket0(4, zero16);
  CHECK(std::abs(antilinear_form(ket0, 0, 0, 2, 2)) < 1e-15);
  CHECK(std::abs(antilinear_form(ket0, 1, 3, 2, 2)) < 1e-15);
  CHECK(std::abs(antilinear_form(ket0, 2, 2, 2, 2)) < 1e-15);

  CHECK_THROWS_AS(antilinear_form(catalog_lookup("ghz3").state, 0, 0, 0, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(antilinear_form(phi1, 0, 0, 0, 4), std::invalid_argument);
}

TEST_CASE("four-way invariants reproduce the published pure-state values") {
  const struct { const char* key; double f1, f2, f3; } rows[] = {
      {"phi1", 1.0, 1.0, 0.5},
      {"phi2", 8.0 / 9.0, 0.0, 0.0},
      {"phi3", 0.0, 0.0, 1.0},
      {"w4", 0.0, 0.0, 0.0},
  };
  for (const auto& row : rows) {
    const PureState& s = catalog_lookup(row.key).state;
    CHECK(std::abs(f_invariant(InvariantKind::F1, s) - row.f1) < 1e-12);
    CHECK(std::abs(f_invariant(InvariantKind::F2, s) - row.f2) < 1e-12);
    CHECK(std::abs(f_invariant(InvariantKind::F3, s) - row.f3) < 1e-12);
  }
}

TEST_CASE("characteristic closed forms hold on a sample grid") {
  const RankTwoFamily& r1 = family("phi1", "w4");
  const RankTwoFamily& r2 = family("phi2", "w4");
  const RankTwoFamily& r3 = family("phi3", "w4");
  const double s6 = std::sqrt(6.0);
  for (int i = 0; i <= 40; ++i) {
    const double p = i / 40.0;
    for (int j = 0; j < 24; ++j) {
      const double phi = 2.0 * M_PI * j / 24.0;
      const cplx ph4 = std::exp(cplx{0.0, 4.0 * phi});
      const cplx ph3 = std::exp(cplx{0.0, 3.0 * phi});
      const cplx ph2 = std::exp(cplx{0.0, 2.0 * phi});

      const PureState z1 = superpose(r1, p, phi);
      CHECK(std::abs(f_invariant(InvariantKind::F1, z1) -
                     p * std::abs(p * p - 3.0 * (1 - p) * (1 - p) * ph4)) < 1e-10);
      CHECK(std::abs(f_invariant(InvariantKind::F2, z1) -
                     p * p * std::abs(p * p - 4.0 * (1 - p) * (1 - p) * ph4)) < 1e-10);
      CHECK(std::abs(f_invariant(InvariantKind::F3, z1) - 0.5 * std::pow(p, 6.0)) < 1e-10);

      const PureState z2 = superpose(r2, p, phi);
      CHECK(std::abs(f_invariant(InvariantKind::F1, z2) -
                     (8.0 / 9.0) * std::pow(p, 1.5) *
                         std::abs(std::pow(p, 1.5) - 2.0 * s6 * std::pow(1 - p, 1.5) * ph3)) <
            1e-10);

      const PureState z3 = superpose(r3, p, phi);
      CHECK(std::abs(f_invariant(InvariantKind::F3, z3) -
                     std::pow(p, 5.0) * std::abs(p - 1.5 * (1 - p) * ph2)) < 1e-10);
    }
  }
}

TEST_CASE("g_invariant values") {
  const PureState& phi1 = catalog_lookup("phi1").state;
  CHECK(std::abs(g_invariant(InvariantKind::G3, phi1) - std::pow(0.5, 1.0 / 6.0)) < 1e-13);
  CHECK(std::abs(g_invariant(InvariantKind::G3, phi1) - 0.8908987181403393) < 1e-13);

  const PureState& w4 = catalog_lookup("w4").state;
  for (InvariantKind k : {InvariantKind::G1, InvariantKind::G2, InvariantKind::G3})
    CHECK(g_invariant(k, w4) < 1e-10);

  // G3 along the first family is p / 2^(1/6) independent of phase
  const RankTwoFamily& r1 = family("phi1", "w4");
  for (double p : {0.2, 0.5, 0.8})
    for (double phi : {0.0, 1.0, 2.5})
      CHECK(std::abs(g_invariant(InvariantKind::G3, superpose(r1, p, phi)) -
                     p / std::pow(2.0, 1.0 / 6.0)) < 1e-12);

  CHECK_THROWS_AS(g_invariant(InvariantKind::F1, phi1), std::invalid_argument);
  CHECK_THROWS_AS(f_invariant(InvariantKind::G1, phi1), std::invalid_argument);
}

TEST_CASE("three_tangle on the benchmark states") {
  CHECK(std::abs(three_tangle(catalog_lookup("ghz3").state) - 1.0) < 1e-12);
  CHECK(three_tangle(catalog_lookup("w3").state) < 1e-12);
  std::vector<cplx> sep(8, cplx{0, 0});
  sep[0] = 1.0;
  CHECK(three_tangle(PureState(3, sep)) < 1e-15);
  CHECK_THROWS_AS(three_tangle(catalog_lookup("phi1").state), std::invalid_argument);
}

TEST_CASE("three_tangle agrees with the brute-force epsilon contraction") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const PureState s = random_state(rng, 3);
    CHECK(std::abs(three_tangle_squared(s) - brute_force_tau3sq(s)) < 1e-12);
  }
}

TEST_CASE("three-qubit characteristic curve closed form") {
  const RankTwoFamily& gw = family("ghz3", "w3");
  const double c = 8.0 * std::sqrt(6.0) / 9.0;
  for (double p : {0.0, 0.2, 0.5, 0.6269, 0.8, 1.0})
    for (double phi : {0.0, 0.7, 2.0, 4.4}) {
      const double expected =
          std::abs(p * p - c * std::sqrt(p * (1 - p) * (1 - p) * (1 - p)) *
                               std::exp(cplx{0.0, 3.0 * phi}));
      CHECK(std::abs(three_tangle_squared(superpose(gw, p, phi)) - expected) < 1e-10);
    }
}

TEST_CASE("concurrence of pure two-qubit states") {
  std::vector<cplx> bell(4, cplx{0, 0});
  bell[0] = bell[3] = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(concurrence_pure(PureState(2, bell)) - 1.0) < 1e-14);

  std::vector<cplx> prod(4, cplx{0, 0});
  prod[1] = 1.0;
  CHECK(concurrence_pure(PureState(2, prod)) < 1e-15);

  std::vector<cplx> tilted(4, cplx{0, 0});
  tilted[0] = std::sqrt(0.3);
  tilted[3] = std::sqrt(0.7);
  CHECK(std::abs(concurrence_pure(PureState(2, tilted)) - 2.0 * std::sqrt(0.21)) < 1e-14);
  CHECK(std::abs(concurrence_pure(PureState(2, tilted)) - 0.916515138991168) < 1e-14);
}

TEST_CASE("mixed concurrence: Wootters values") {
  std::vector<cplx> bell(4, cplx{0, 0});
  bell[0] = bell[3] = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(concurrence_mixed(density_of(PureState(2, bell))) - 1.0) < 1e-10);

  DensityMatrix mm = DensityMatrix::zero(2);
  for (int i = 0; i < 4; ++i) mm.at(i, i) = 0.25;
  CHECK(concurrence_mixed(mm) < 1e-12);

  // two-qubit marginal of W4 carries concurrence 1/2
  const DensityMatrix w4ab = partial_trace(density_of(catalog_lookup("w4").state), {0, 1});
  CHECK(std::abs(concurrence_mixed(w4ab) - 0.5) < 1e-10);

  CHECK_THROWS_AS(concurrence_mixed(DensityMatrix::zero(3)), std::invalid_argument);
}

TEST_CASE("mixed concurrence is consistent with the pure formula on rank-1 inputs") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 25; ++trial) {
    const PureState s = random_state(rng, 2);
    CHECK(std::abs(concurrence_mixed(density_of(s)) - concurrence_pure(s)) < 1e-10);
  }
}

TEST_CASE("entanglement of formation from concurrence") {
  CHECK(eof_from_concurrence(0.0) == 0.0);
  CHECK(std::abs(eof_from_concurrence(1.0) - std::log(2.0)) < 1e-15);
  CHECK(std::abs(eof_from_concurrence(0.5) - 0.24577536666847116) < 1e-14);
  CHECK(std::abs(eof_from_concurrence(1.0, /*log2=*/true) - 1.0) < 1e-15);
  CHECK_THROWS_AS(eof_from_concurrence(1.2), std::domain_error);
  CHECK_THROWS_AS(eof_from_concurrence(-0.1), std::domain_error);
}

TEST_CASE("homogeneity degrees under amplitude scaling") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 6; ++trial) {
    const PureState s4 = random_state(rng, 4, /*unit=*/false);
    std::vector<cplx> scaled = s4.amplitudes();
    const double lam = 1.37;
    for (cplx& v : scaled) v *= lam;
    const PureState t4(4, scaled);

    auto rel = [](double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); };
    CHECK(rel(f_invariant(InvariantKind::F1, t4),
              std::pow(lam, 6.0) * f_invariant(InvariantKind::F1, s4)) < 1e-10);
    CHECK(rel(f_invariant(InvariantKind::F2, t4),
              std::pow(lam, 8.0) * f_invariant(InvariantKind::F2, s4)) < 1e-10);
    CHECK(rel(f_invariant(InvariantKind::F3, t4),
              std::pow(lam, 12.0) * f_invariant(InvariantKind::F3, s4)) < 1e-10);
    for (InvariantKind k : {InvariantKind::G1, InvariantKind::G2, InvariantKind::G3})
      CHECK(rel(g_invariant(k, t4), lam * lam * g_invariant(k, s4)) < 1e-10);

    const PureState s3 = random_state(rng, 3, /*unit=*/false);
    std::vector<cplx> scaled3 = s3.amplitudes();
    for (cplx& v : scaled3) v *= lam;
    CHECK(rel(three_tangle(PureState(3, scaled3)), lam * lam * three_tangle(s3)) < 1e-10);
  }
}

TEST_CASE("invariance under determinant-1 local operations") {
  std::mt19937 rng(53);
  double worst = 0.0;
  for (int trial = 0; trial < 25; ++trial) {
    const PureState s = random_state(rng, 4);
    const PureState t = apply_local(
        s, {random_sl2(rng), random_sl2(rng), random_sl2(rng), random_sl2(rng)});
    for (InvariantKind k : {InvariantKind::F1, InvariantKind::F2, InvariantKind::F3}) {
      const double a = f_invariant(k, s), b = f_invariant(k, t);
      worst = std::max(worst, std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-9}));
    }
  }
  for (int trial = 0; trial < 25; ++trial) {
    const PureState s = random_state(rng, 3);
    const PureState t = apply_local(s, {random_sl2(rng), random_sl2(rng), random_sl2(rng)});
    const double a = three_tangle(s), b = three_tangle(t);
    worst = std::max(worst, std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-9}));
  }
  for (int trial = 0; trial < 25; ++trial) {
    const PureState s = random_state(rng, 2);
    const PureState t = apply_local(s, {random_sl2(rng), random_sl2(rng)});
    const double a = concurrence_pure(s), b = concurrence_pure(t);
    worst = std::max(worst, std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-9}));
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("fully separable products carry no four-way entanglement") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<cplx> a(16);
    const PureState q0 = random_state(rng, 1), q1 = random_state(rng, 1),
                    q2 = random_state(rng, 1), q3 = random_state(rng, 1);
    for (int x = 0; x < 16; ++x)
      a[x] = q0.amp((x >> 3) & 1) * q1.amp((x >> 2) & 1) * q2.amp((x >> 1) & 1) *
             q3.amp(x & 1);
    const PureState prod(4, a);
    CHECK(f_invariant(InvariantKind::F1, prod) < 1e-12);
    CHECK(f_invariant(InvariantKind::F2, prod) < 1e-12);
    CHECK(f_invariant(InvariantKind::F3, prod) < 1e-12);
  }
}

TEST_CASE("measure dispatch enforces qubit counts") {
  CHECK_THROWS_AS(measure(InvariantKind::F1, catalog_lookup("ghz3").state),
                  std::invalid_argument);
  CHECK_THROWS_AS(measure(InvariantKind::Tau3, catalog_lookup("phi1").state),
                  std::invalid_argument);
  CHECK_THROWS_AS(measure(InvariantKind::Concurrence, catalog_lookup("w3").state),
                  std::invalid_argument);
  CHECK(std::abs(measure(InvariantKind::Tau3, catalog_lookup("ghz3").state) - 1.0) < 1e-12);
}
