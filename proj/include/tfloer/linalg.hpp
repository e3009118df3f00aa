#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tfloer/groupring.hpp"

namespace tf {

using IntRow = std::map<int, Integer>;

// Inverse of a square integer matrix given by sparse rows; nullopt when singular or
// when the inverse is not integral.
std::optional<std::vector<IntRow>> integer_inverse(const std::vector<IntRow>& rows);
std::vector<IntRow> transpose(const std::vector<IntRow>& rows, int ncols);

}  // namespace tf
