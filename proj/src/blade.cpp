#include "cliff/blade.hpp"

#include <algorithm>

namespace cliff {

std::vector<BladeMask> canonical_blades(int n) {
  std::vector<BladeMask> all(std::size_t{1} << n);
  for (std::size_t m = 0; m < all.size(); ++m) all[m] = static_cast<BladeMask>(m);
  std::sort(all.begin(), all.end(), blade_less);
  return all;
}

int canonical_index(BladeMask m, int n) {
  // rank within the grade = lexicographic rank of the ascending index tuple,
  // preceded by the binomial counts of all lower grades
  static constexpr int kChoose[13][13] = {
      {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {1, 3, 3, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {1, 4, 6, 4, 1, 0, 0, 0, 0, 0, 0, 0, 0},
      {1, 5, 10, 10, 5, 1, 0, 0, 0, 0, 0, 0, 0},
      {1, 6, 15, 20, 15, 6, 1, 0, 0, 0, 0, 0, 0},
      {1, 7, 21, 35, 35, 21, 7, 1, 0, 0, 0, 0, 0},
      {1, 8, 28, 56, 70, 56, 28, 8, 1, 0, 0, 0, 0},
      {1, 9, 36, 84, 126, 126, 84, 36, 9, 1, 0, 0, 0},
      {1, 10, 45, 120, 210, 252, 210, 120, 45, 10, 1, 0, 0},
      {1, 11, 55, 165, 330, 462, 462, 330, 165, 55, 11, 1, 0},
      {1, 12, 66, 220, 495, 792, 924, 792, 495, 220, 66, 12, 1},
  };
  const int k = grade(m);
  int index = 0;
  for (int g = 0; g < k; ++g) index += kChoose[n][g];
  // count equal-grade tuples that precede this one lexicographically
  int remaining = k;
  int prev = -1;
  for (int bit = 0; bit < n && remaining > 0; ++bit) {
    if (m >> bit & 1) {
      // tuples sharing the prefix but picking an earlier index here
      for (int j = prev + 1; j < bit; ++j)
        index += kChoose[n - 1 - j][remaining - 1];
      prev = bit;
      --remaining;
    }
  }
  return index;
}

}  // namespace cliff
