#include "gnf/cross_section.hpp"

#include <cmath>
#include <stdexcept>

namespace gnf {

void FlowParams::validate() const {
  model().validate();
  if (!(p >= 1.5)) throw std::invalid_argument("the flow problem needs p >= 3/2");
  if (!(delta >= 0.0 && delta < 1.0)) throw std::invalid_argument("curvature ratio must lie in [0, 1)");
  if (!(re >= 0.0) || !std::isfinite(re)) throw std::invalid_argument("Reynolds number must be non-negative");
  if (!std::isfinite(g)) throw std::invalid_argument("pressure gradient must be finite");
}

CrossSection make_cross_section(std::shared_ptr<const FeSpace> space, const ShapeSpec& shape,
                                double h, double delta) {
  if (!(delta >= 0.0 && delta < 1.0)) throw std::invalid_argument("curvature ratio must lie in [0, 1)");
  const Mesh& mesh = space->mesh();
  for (const auto& v : mesh.vertices)
    if (std::hypot(v[0], v[1]) > 1.0 + 1e-12)
      throw std::invalid_argument("cross-section is not contained in the unit disk");
  CrossSection cs;
  cs.space = std::move(space);
  cs.shape = shape;
  cs.h = h;
  cs.delta = delta;
  cs.m = 1.0 / (1.0 + delta * mesh.x2_min);
  cs.n = 1.0 + delta * mesh.x2_max;
  const FeSpace& fe = *cs.space;
  cs.area = fe.area();
  double bl1 = 0.0;
  for (int g = 0; g < fe.n_qp(); ++g) bl1 += fe.qp(g).w * cs.weight(fe.qp(g).x2);
  cs.b_l1 = bl1;
  return cs;
}

CrossSection build_cross_section(const ShapeSpec& shape, double delta, double h) {
  if (shape.kind == ShapeKind::rectangle &&
      0.25 * (shape.a * shape.a + shape.b * shape.b) > 1.0 + 1e-12)
    throw std::invalid_argument("rectangle is not contained in the unit disk");
  auto mesh = std::make_shared<const Mesh>(build_mesh(shape, h));
  auto space = std::make_shared<const FeSpace>(mesh);
  return make_cross_section(space, shape, h, delta);
}

CrossSection CrossSection::with_delta(double d) const { return make_cross_section(space, shape, h, d); }

}  // namespace gnf
