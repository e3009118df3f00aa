#include "tfloer/linalg.hpp"

#include <algorithm>

namespace tf {

using RatRow = std::map<int, Rational>;

std::optional<std::vector<IntRow>> integer_inverse(const std::vector<IntRow>& rows) {
  const int n = static_cast<int>(rows.size());
  // augmented [M | I], columns n.. hold the identity part
  std::vector<RatRow> aug(n);
  for (int r = 0; r < n; ++r) {
    for (const auto& [c, v] : rows[r])
      if (v != 0) aug[r][c] = Rational(v);
    aug[r][n + r] = 1;
  }
  std::vector<int> pivot_of(n, -1);
  std::vector<bool> used(n, false);
  for (int c = 0; c < n; ++c) {
    int best = -1;
    for (int r = 0; r < n; ++r) {
      if (used[r] || !aug[r].count(c)) continue;
      if (best < 0 || aug[r].size() < aug[best].size()) best = r;
    }
    if (best < 0) return std::nullopt;
    used[best] = true;
    pivot_of[c] = best;
    Rational inv = 1 / aug[best].at(c);
    for (auto& [k, v] : aug[best]) v *= inv;
    const RatRow& p = aug[best];
    for (int r = 0; r < n; ++r) {
      if (r == best) continue;
      auto it = aug[r].find(c);
      if (it == aug[r].end()) continue;
      Rational f = it->second;
      for (const auto& [k, v] : p) {
        Rational& x = aug[r][k];
        x -= f * v;
        if (x == 0) aug[r].erase(k);
      }
    }
  }
  std::vector<IntRow> inv(n);
  for (int c = 0; c < n; ++c) {
    for (const auto& [k, v] : aug[pivot_of[c]]) {
      if (k < n) continue;
      if (denominator(v) != 1) return std::nullopt;
      inv[c][k - n] = numerator(v);
    }
  }
  return inv;
}

std::vector<IntRow> transpose(const std::vector<IntRow>& rows, int ncols) {
  std::vector<IntRow> t(ncols);
  for (int r = 0; r < static_cast<int>(rows.size()); ++r)
    for (const auto& [c, v] : rows[r]) t[c][r] = v;
  return t;
}

}  // namespace tf
