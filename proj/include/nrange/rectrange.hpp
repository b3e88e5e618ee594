#pragma once

#include <cstdint>
#include <vector>

#include "nrange/geometry.hpp"
#include "nrange/linalg.hpp"

namespace nrange::rect {

/// Unit x in C^n, unit y in C^m and z = y^* A x.
struct WitnessVectors {
    CVector x;
    CVector y;
    cplx value;
};

struct WRange {
    Region region;
    double sigma_max = 0.0;
    /// Set for 1x1 input: {conj(y) a x : |x| = |y| = 1} is the circle |z| = |a|, not a disc.
    bool scalar_circle = false;
};

/// w(A) = {y^*Ax} = D(0, sigma_1(A)); Point(0) for A = 0.
WRange w_disc(const ComplexMatrix& a);

/// y^*Ax for unit vectors (|norm - 1| <= 1e-8).
cplx w_value(const ComplexMatrix& a, std::span<const cplx> x, std::span<const cplx> y);

/// Witness for the boundary point sigma_1 e^{i theta} from the top singular pair.
WitnessVectors boundary_witness(const ComplexMatrix& a, double theta);

/// Witness for any |z| <= sigma_1: x is the top right singular vector and y mixes the
/// phase-rotated top left vector with a unit vector orthogonal to it.
WitnessVectors interior_witness(const ComplexMatrix& a, cplx z);

/// ||Xi^* A H||_2 for orthonormal frames Xi (m x l) and H (n x k).
double compression_radius(const ComplexMatrix& a, const ComplexMatrix& xi, const ComplexMatrix& h);

/// Frobenius-norm range w_F(A, B) = D(c, |A - cB|_F sqrt(1 - |B|_F^{-2})), c = <A,B>/|B|_F^2.
/// Requires |B|_F >= 1.
Region wnorm_disc(const ComplexMatrix& a, const ComplexMatrix& b);

struct WnormUnionReport {
    std::size_t n_discs = 0;
    std::size_t violations = 0;   // discs not inside D(0, |A|_F + 1e-9)
    double sup_abs = 0.0;         // max over discs of |center| + radius
    double frobenius = 0.0;       // |A|_F
    std::vector<Region> discs;    // random discs first, then the 32 attaining discs
};

/// Union of w_F(A, B) over random B with |B|_F in [1, 3] plus B0(theta) = A e^{-i theta}/|A|_F
/// at 32 angles, whose discs collapse onto the circle |z| = |A|_F.
WnormUnionReport wnorm_union(const ComplexMatrix& a, std::size_t n_samples, std::uint64_t seed);

struct CenterBound {
    bool hypothesis = false;   // |sigma(B)|_2 >= sqrt(rank B)
    bool bound_holds = false;  // |<A,B>|/|B|_F^2 <= sigma_1(A)
    std::size_t rank = 0;
    double center_abs = 0.0;
    double sigma_max = 0.0;
};

CenterBound center_bound_check(const ComplexMatrix& a, const ComplexMatrix& b);

/// <A, y x^*> evaluated as a Frobenius inner product.
cplx rank1_value(const ComplexMatrix& a, std::span<const cplx> y, std::span<const cplx> x);

/// omega^* [[0, 2A], [0, 0]] omega with omega = (y; x)/sqrt(2); equals y^*Ax.
cplx block_embedding_value(const ComplexMatrix& a, std::span<const cplx> x, std::span<const cplx> y);

}  // namespace nrange::rect
