// Measures exact minimum nonempty bitrade sizes on small cubes and prints
// them next to the 2^(t+1) subcube bound.

#include <iostream>

#include "qcube/search.hpp"

int main() {
  using namespace qcube;

  const std::pair<int, int> shapes[] = {{2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}, {5, 2}};
  for (const auto& [q, n] : shapes) {
    const CubeShape shape(q, n);
    std::cout << "q=" << q << " n=" << n << ":";
    for (int t = 0; t < n; ++t) {
      try {
        const MinBitradeResult r = min_bitrade(shape, t);
        std::cout << "  t=" << t << ": " << r.minimum_size << " (bound " << (1 << (t + 1)) << ")";
      } catch (const ResourceError&) {
        std::cout << "  t=" << t << ": refused";
      }
    }
    std::cout << "\n";
  }
  return 0;
}
