#pragma once

#include <vector>

#include "gnf/constants.hpp"
#include "gnf/fields.hpp"

namespace gnf {

// Integrated continuity, coercivity and monotonicity of tau on tensor
// fields sampled at quadrature points. Unit shear-rate scale is assumed.
std::vector<InequalityCheck> tensor_field_estimates_thick(const CrossSection& cs, double p,
                                                          const QuadTensor& f, const QuadTensor& g);
std::vector<InequalityCheck> tensor_field_estimates_thin(const CrossSection& cs, double p,
                                                         const QuadTensor& f, const QuadTensor& g);

// Bound on div*(tau(f)) - div(tau(f)) in L^{p'} (unweighted).
InequalityCheck divergence_gap_check(const CrossSection& cs, double p, const QuadTensor& f);

// |(u . grad* v, B w)| against the product of the L_B norms of D*.
InequalityCheck trilinear_bound_thick(const CrossSection& cs, const QuadField& u, const QuadField& v,
                                      const QuadField& w);
InequalityCheck trilinear_bound_thin(const CrossSection& cs, double p, double korn_classical,
                                     const QuadField& u, const QuadField& v, const QuadField& w);

// Estimates of the sigma source for scalar fields u, v vanishing on the
// boundary (their axial components are used).
std::vector<InequalityCheck> sigma_estimate_checks(const CrossSection& cs, const SigmaSpec& sigma, double q,
                                                   const QuadField& u, const QuadField& v);

}  // namespace gnf
