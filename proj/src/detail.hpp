#pragma once

#include <vector>

#include "sevac/involution.hpp"

namespace sevac {

// Skips validation; callers guarantee `values` is an involution.
Involution make_trusted_involution(std::vector<int> values);

}  // namespace sevac
