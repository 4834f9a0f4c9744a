#include "gnf/quadrature.hpp"

namespace gnf {

namespace {

std::vector<TriQuadPoint> build_rule() {
  struct Orbit {
    double w;
    double a, b, c;  // barycentric coordinates
  };
  const Orbit orbits[] = {
      {0.116786275726379, 0.501426509658179, 0.249286745170910, 0.249286745170910},
      {0.050844906370207, 0.873821971016996, 0.063089014491502, 0.063089014491502},
      {0.082851075618374, 0.053145049844817, 0.310352451033784, 0.636502499121399},
  };
  std::vector<TriQuadPoint> pts;
  for (const Orbit& o : orbits) {
    const double l[3] = {o.a, o.b, o.c};
    const bool full = (o.b != o.c);
    const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    const int count = full ? 6 : 3;
    for (int k = 0; k < count; ++k) {
      const double l1 = l[perms[k][1]];
      const double l2 = l[perms[k][2]];
      pts.push_back({l1, l2, 0.5 * o.w});
    }
  }
  return pts;
}

}  // namespace

const std::vector<TriQuadPoint>& triangle_rule() {
  static const std::vector<TriQuadPoint> rule = build_rule();
  return rule;
}

}  // namespace gnf
