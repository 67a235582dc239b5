#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tangleroof/errors.hpp"
#include "tangleroof/pure_state.hpp"

namespace tangleroof {

// Text state format:
//   QSTATE <num_qubits>
//   <index> <re> <im>     (2^n lines, decimal index, ascending)
// '#' starts a comment line.
inline PureState read_state(std::istream& in, bool allow_unnormalized = false) {
  auto next_line = [&in](std::string& line) -> bool {
    while (std::getline(in, line)) {
      const auto pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos) continue;
      if (line[pos] == '#') continue;
      return true;
    }
    return false;
  };

  std::string line;
  if (!next_line(line)) throw StateFileError("state file: missing QSTATE header");
  std::istringstream hdr(line);
  std::string tag;
  int n = 0;
  if (!(hdr >> tag >> n) || tag != "QSTATE" || n < 1)
    throw StateFileError("state file: malformed QSTATE header: '" + line + "'");
  if (n > 20) throw StateFileError("state file: qubit count too large");

  const std::size_t d = std::size_t{1} << n;
  std::vector<cplx> amps(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (!next_line(line))
      throw StateFileError("state file: expected " + std::to_string(d) + " amplitude lines");
    std::istringstream row(line);
    std::size_t idx = 0;
    double re = 0.0, im = 0.0;
    if (!(row >> idx >> re >> im))
      throw StateFileError("state file: malformed amplitude line: '" + line + "'");
    std::string extra;
    if (row >> extra)
      throw StateFileError("state file: trailing tokens on line: '" + line + "'");
    if (idx != i)
      throw StateFileError("state file: indices must be ascending from 0; saw " +
                           std::to_string(idx) + ", expected " + std::to_string(i));
    amps[i] = cplx{re, im};
  }

  PureState s(n, std::move(amps));
  const double norm = s.norm();
  if (norm == 0.0) throw StateFileError("state file: zero-norm state");
  if (!allow_unnormalized && std::abs(norm - 1.0) > 1e-6)
    throw StateFileError("state file: norm deviates from 1 by more than 1e-6 "
                         "(pass the unnormalized override to accept)");
  return normalize(s);
}

inline PureState read_state_file(const std::string& path, bool allow_unnormalized = false) {
  std::ifstream in(path);
  if (!in) throw StateFileError("cannot open state file: " + path);
  return read_state(in, allow_unnormalized);
}

inline void write_state(std::ostream& out, const PureState& s) {
  out << "QSTATE " << s.num_qubits() << "\n";
  char buf[80];
  for (std::size_t i = 0; i < s.dim(); ++i) {
    std::snprintf(buf, sizeof(buf), "%zu %.17g %.17g\n", i, s.amp(i).real(), s.amp(i).imag());
    out << buf;
  }
}

inline void write_state_file(const std::string& path, const PureState& s) {
  std::ofstream out(path);
  if (!out) throw StateFileError("cannot open output state file: " + path);
  write_state(out, s);
}

}  // namespace tangleroof
