#include "lietab/periodic.hpp"

namespace lietab {

std::vector<MadelungKet> madelung_sequence(std::size_t max_z) {
  std::vector<MadelungKet> out;
  out.reserve(max_z);
  for (int sum = 1; out.size() < max_z; ++sum) {
    // n ascending within a diagonal means l descending
    for (int l = (sum - 1) / 2; l >= 0 && out.size() < max_z; --l) {
      int n = sum - l;
      for (Spin s : {Spin::minus_half, Spin::plus_half})
        for (int m = -l; m <= l && out.size() < max_z; ++m) out.push_back(MadelungKet::make(n, l, m, s));
    }
  }
  return out;
}

}  // namespace lietab
