#pragma once

#include <vector>

#include "nrange/geometry.hpp"
#include "nrange/linalg.hpp"

namespace nrange::fov {

struct SupportPoint {
    double support;  // lambda_max of the Hermitian part of e^{-i theta} A
    cplx point;      // x^* A x for the top eigenvector x
};

/// Supporting line of F(A) with outward normal e^{i theta}.
SupportPoint support_point(const ComplexMatrix& a, double theta);

/// Sampled boundary of the field of values F(A) = {x^*Ax : |x| = 1}.
BoundaryCurve fov_boundary(const ComplexMatrix& a, std::size_t n_angles = kDefaultAngles);

/// F(A) as a Region: Point for scalar matrices, Segment when the boundary collapses onto a
/// line (e.g. Hermitian A), otherwise the sampled boundary.
Region fov_region(const ComplexMatrix& a, std::size_t n_angles = kDefaultAngles);

/// Default corner detection parameters for a curve sampled with n_angles angles: three
/// consecutive grid angles sharing one maximizer, clustered at 1e-6 of the matrix scale.
double default_min_cone_width(std::size_t n_angles);
double default_cluster_tol(const ComplexMatrix& a);

/// Sharp points of F(A) moved onto the spectrum. A corner of a field of values is an
/// eigenvalue, so a detected corner is replaced by the nearest eigenvalue of A when that
/// eigenvalue lies within spread + cluster_tol of it; otherwise it is kept as detected.
std::vector<SharpPoint> sharp_eigenvalues(const ComplexMatrix& a, const BoundaryCurve& curve,
                                          double min_cone_width, double cluster_tol);

/// Distance from z to the nearest point of a finite set.
double distance_to_set(cplx z, std::span<const cplx> set);

}  // namespace nrange::fov
