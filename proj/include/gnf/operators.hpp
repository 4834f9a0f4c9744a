#pragma once

#include <Eigen/Core>
#include <array>

#include "gnf/fields.hpp"

namespace gnf {

// Toroidal differential operators. With B = 1 + delta x2 and no dependence
// on the axial coordinate, the gradient picks up the extra row
// (0, -delta/B u3, delta/B u2). Rows index the derivative direction.
Mat3 grad_star(const PointValue& v, double b, double delta);
SymTensor3 d_star(const PointValue& v, double b, double delta);
// Symmetric gradient of the in-plane part (u1, u2, 0).
SymTensor3 d_plane(const PointValue& v);
// (1/B) div(B u).
double weighted_divergence(const PointValue& v, double b, double delta);
// Divergence of a symmetric tensor field given its value and its x1, x2
// derivatives.
std::array<double, 3> div_star(const SymTensor3& s, const SymTensor3& ds1, const SymTensor3& ds2,
                               double b, double delta);

double frobenius(const Mat3& a);

// Field versions; the curvature comes from the cross-section.
QuadTensor d_star(const CrossSection& cs, const QuadField& f);
QuadTensor d_flat(const QuadField& f);   // ordinary symmetric gradient
QuadTensor d_plane(const QuadField& f);
QuadScalar grad_star_magnitude(const CrossSection& cs, const QuadField& f);
QuadScalar grad_magnitude(const QuadField& f);
QuadScalar grad_component_magnitude(const QuadField& f, int i);
QuadScalar dx1_magnitude(const QuadField& f);
QuadScalar weighted_divergence(const CrossSection& cs, const QuadField& f);

// Entries (S, B D*phi) over the velocity basis, i.e. the weak form of
// -(div* S, B phi). Boundary rows are kept.
Eigen::VectorXd div_star_weak(const CrossSection& cs, const QuadTensor& s);

// (u . grad* v, B w).
double trilinear_star(const CrossSection& cs, const QuadField& u, const QuadField& v, const QuadField& w);
// Skew-symmetric variant used by the discretisation; transporting field Bu.
double trilinear_skew(const CrossSection& cs, const QuadField& u, const QuadField& v, const QuadField& w);
// (u . grad v, w) without weight.
double trilinear_flat(const CrossSection& cs, const QuadField& u, const QuadField& v, const QuadField& w);

struct IdentityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  // |lhs - rhs| / max(|lhs|, |rhs|)
};

// ||grad* u||^2 = 2 ||D* u||^2 - ||(1/B) div(B u)||^2 in L2_B.
IdentityCheck korn_identity(const CrossSection& cs, const QuadField& f);
// 2||D* u||^2 expanded into the in-plane, axial and curvature parts.
IdentityCheck korn_expansion(const CrossSection& cs, const QuadField& f);
// ||grad* u||^2 = 2 ||D* u||^2 for B-divergence-free u.
IdentityCheck korn_div_free(const CrossSection& cs, const QuadField& f);

// Korn constant for exponent p built from the classical constant.
double korn_thin_constant(const CrossSection& cs, double p, double classical);
InequalityCheck korn_thin_check(const CrossSection& cs, const QuadField& f, double p, double classical);
InequalityCheck grad_star_dominates(const CrossSection& cs, const QuadField& f);

// ||d1 u||_{q,B} - ||u||_{q,B}; non-negative for fields vanishing on the
// boundary of a section of width at most 2 along x1.
double poincare_residual(const CrossSection& cs, const QuadField& f, double q);
InequalityCheck sobolev_check(const CrossSection& cs, const QuadField& f, double q, double r);

}  // namespace gnf
