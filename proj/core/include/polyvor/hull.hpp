#pragma once

#include <cstddef>
#include <vector>

#include "polyvor/affine.hpp"

namespace polyvor {

/// Indices of the extreme points of `points`, counterclockwise, starting at
/// the lexicographically smallest point. Points lying on a hull edge are
/// dropped (only edge endpoints are kept), duplicates are reported once.
/// All predicates are exact.
std::vector<std::size_t> convex_hull(const std::vector<ExactPoint2>& points);

}  // namespace polyvor
