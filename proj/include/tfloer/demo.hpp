#pragma once

#include <string>
#include <vector>

#include "tfloer/fibersum.hpp"

namespace tf {

// Genus-1 data of the rational elliptic surface: 1/(t-1) on the class with c_1 = 0.
ClosedInvariant elliptic_e1(int trunc = kDefaultTrunc);
// E(n), n >= 2, as iterated genus-1 sums with E(1).
ClosedInvariant elliptic_en(int n, int trunc = kDefaultTrunc);
// E(n) relative to a genus n-1 surface meeting the fibre twice: class m PD[F] has k = m.
ClosedInvariant elliptic_en_genus(int n, int trunc = kDefaultTrunc);

struct DemoResult {
  std::string computed;
  std::string expected;
  bool pass = false;
  std::vector<std::string> notes;
};

DemoResult demo_en(int n, int trunc = kDefaultTrunc);
DemoResult demo_xn(int n, int trunc = kDefaultTrunc);

}  // namespace tf
