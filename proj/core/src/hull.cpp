#include "polyvor/hull.hpp"

#include <algorithm>
#include <numeric>

namespace polyvor {
namespace {

int turn(const ExactPoint2& o, const ExactPoint2& a, const ExactPoint2& b) {
  return orientation({a.x - o.x, a.y - o.y}, {b.x - o.x, b.y - o.y});
}

}  // namespace

// Andrew's monotone chain.
std::vector<std::size_t> convex_hull(const std::vector<ExactPoint2>& points) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (points[a].x != points[b].x) return points[a].x < points[b].x;
    return points[a].y < points[b].y;
  });
  order.erase(std::unique(order.begin(), order.end(),
                          [&](std::size_t a, std::size_t b) { return points[a] == points[b]; }),
              order.end());
  if (order.size() < 3) return order;

  std::vector<std::size_t> hull(2 * order.size());
  std::size_t k = 0;
  for (std::size_t idx : order) {
    while (k >= 2 && turn(points[hull[k - 2]], points[hull[k - 1]], points[idx]) <= 0) --k;
    hull[k++] = idx;
  }
  const std::size_t lower = k + 1;
  for (auto it = order.rbegin() + 1; it != order.rend(); ++it) {
    while (k >= lower && turn(points[hull[k - 2]], points[hull[k - 1]], points[*it]) <= 0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace polyvor
