// Builds the minimum-energy spline through a small point set, prints its
// tangents and the fairness of each segment, and compares against
// Catmull-Rom.

#include <cstdio>
#include <vector>

#include "mqs/fairness.hpp"
#include "mqs/spline.hpp"

int main() {
  const std::vector<mqs::Point2> points{{0, 0}, {1, 3}, {2, 1}, {3, 2}, {5, 2.5}, {6, 0}};

  for (const mqs::TangentMethod& method : {mqs::TangentMethod{mqs::MinEnergyQuad{}}, mqs::TangentMethod{mqs::CatmullRom{}}}) {
    const auto spline = mqs::build_spline(points, method);
    std::printf("%s\n", mqs::method_name(method).c_str());
    for (std::size_t i = 0; i < points.size(); ++i) {
      std::printf("  v%zu = (%.4f, %.4f)\n", i + 1, spline.tangents()[i].x, spline.tangents()[i].y);
    }
    for (std::size_t s = 0; s < spline.segment_count(); ++s) {
      const auto seg = spline.segment(s);
      std::printf("  segment %zu: E = %.4f  V = %.4f\n", s + 1, mqs::segment_energy(seg, seg.t_start, seg.t_end()),
                  mqs::segment_variation(seg, seg.t_start, seg.t_end()));
    }
  }
  return 0;
}
