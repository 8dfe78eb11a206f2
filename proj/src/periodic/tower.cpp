#include "lietab/periodic.hpp"

#include <algorithm>

namespace lietab {

std::size_t TowerSlice::occupied() const {
  std::size_t count = 0;
  for (const auto& floor : floors)
    for (const auto& sub : floor.subshells)
      for (const auto& point : sub.points) count += point.element.has_value();
  return count;
}

TowerSlice projection_slice(const std::vector<Element>& elements, Spin s) {
  int top = 0;
  for (const auto& e : elements) top = std::max(top, e.ket.n < 0 ? -e.ket.n : e.ket.n);
  TowerSlice slice{s, {}};
  for (int n = 1; n <= top; ++n) {
    Floor floor{n, {}};
    for (int l = 0; l < n; ++l) {
      Subshell sub{l, {}};
      for (int m = -l; m <= l; ++m) sub.points.push_back({m, std::nullopt});
      floor.subshells.push_back(std::move(sub));
    }
    slice.floors.push_back(std::move(floor));
  }
  for (const auto& e : elements) {
    if (e.anti || e.ket.s != s) continue;
    slice.floors[e.ket.n - 1].subshells[e.ket.l].points[e.ket.m + e.ket.l].element = e;
  }
  return slice;
}

TowerSlice antimatter_slice(const TowerSlice& matter) {
  TowerSlice out{matter.s, matter.floors};
  for (auto& floor : out.floors) {
    floor.n = -floor.n;
    for (auto& sub : floor.subshells)
      for (auto& point : sub.points)
        if (point.element) point.element = antimatter_mirror(*point.element);
  }
  return out;
}

std::vector<std::size_t> period_lengths(const std::vector<Element>& elements) {
  std::vector<std::size_t> out;
  for (const auto& e : elements) {
    if (e.anti) continue;
    bool opens = e.ket.l == 0 && e.ket.s == Spin::minus_half;
    if (opens || out.empty()) out.push_back(0);
    ++out.back();
  }
  return out;
}

HaenzelStats haenzel_stats(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("haenzel_stats needs n >= 1");
  std::uint64_t size = n;
  return {2 * size * size, size * size, size};
}

std::vector<HomologStep> homolog_steps(const TowerSlice& slice) {
  std::vector<HomologStep> out;
  for (std::size_t f = 0; f + 1 < slice.floors.size(); ++f) {
    const Floor& lower = slice.floors[f];
    const Floor& upper = slice.floors[f + 1];
    for (const auto& sub : lower.subshells)
      for (std::size_t i = 0; i < sub.points.size(); ++i) {
        const auto& below = sub.points[i].element;
        const auto& above = upper.subshells[sub.l].points[i].element;
        if (below && above) out.push_back({sub.l, sub.points[i].m, below->z, above->z});
      }
  }
  return out;
}

}  // namespace lietab
