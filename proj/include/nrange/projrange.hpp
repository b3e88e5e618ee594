#pragma once

#include <vector>

#include "nrange/geometry.hpp"
#include "nrange/linalg.hpp"

namespace nrange::proj {

enum class Orientation { Tall, Wide };

/// A rectangular matrix together with the orthonormal frame H used to square it up.
///
/// Tall (m >= n): H is m x n, w_l = F(H^*A) (n x n) and w_h = F(AH^*) (m x m).
/// Wide (m < n):  H is n x m, w_l = F(AH)   (m x m) and w_h = F(HA)   (n x n).
class ProjectorSetting {
public:
    ProjectorSetting(ComplexMatrix a, ComplexMatrix h);

    /// H = [I; 0] (tall) or its wide analogue.
    static ProjectorSetting leading(ComplexMatrix a);

    const ComplexMatrix& a() const noexcept { return a_; }
    const Isometry& h() const noexcept { return h_; }
    Orientation orientation() const noexcept { return orientation_; }

    ComplexMatrix lower_matrix() const;   // H^*A or AH
    ComplexMatrix higher_matrix() const;  // AH^* or HA

private:
    ComplexMatrix a_;
    Isometry h_;
    Orientation orientation_;
};

BoundaryCurve w_lower(const ProjectorSetting& s, std::size_t n_angles = kDefaultAngles);
BoundaryCurve w_higher(const ProjectorSetting& s, std::size_t n_angles = kDefaultAngles);

/// w_h of a column vector a = (a_1; b) with H = e_1.
///
/// The range is the elliptical disc with foci 0 and a_1 whose full major axis is |a|_2 and
/// full minor axis is |b|_2 (so a_1 = 0 gives the disc of radius |b|_2 / 2 and b = 0 the
/// segment [0, a_1]). The axis lengths are full lengths, as confirmed against the sampled
/// field of values of [a 0].
Region vector_ellipse(std::span<const cplx> a);

/// The 2x2 compression [[a_1, 0], [|b| a_2/|a_2|, 0]] that [a 0] reduces to by a Householder
/// similarity (phase taken as 1 when a_2 = 0).
ComplexMatrix ellipse_compression(std::span<const cplx> a);

/// diag(1, R) [a 0] diag(1, R^*) for the Householder reflector R with R b = |b| (a_2/|a_2|) e_1.
ComplexMatrix householder_reduction(std::span<const cplx> a);

struct ReImParts {
    ComplexMatrix real_part;  // [[H(A1), A2^*/2], [A2/2, 0]]
    ComplexMatrix imag_part;  // [[(A1 - A1^*)/2i, i A2^*/2], [-i A2/2, 0]]
};

/// Hermitian matrices whose fields of values are Re w_h(A) and Im w_h(A) for H = [I_n; 0].
/// The imaginary part is returned in Hermitian form: it is the skew-Hermitian part of
/// [A 0] divided by i, so its field of values is a real interval.
ReImParts re_im_parts(const ComplexMatrix& a);

struct Interval {
    double lo, hi;
};

/// Projections of a boundary curve onto the real and imaginary axes, read off the support
/// values at theta = 0, pi (real) and pi/2, 3pi/2 (imaginary). n_angles must be divisible by 4.
Interval real_projection(const BoundaryCurve& c);
Interval imag_projection(const BoundaryCurve& c);

struct SharpTransfer {
    cplx lambda0;
    bool in_spectrum = false;     // distance to sigma(H^*A) <= 1e-6
    bool sharp_in_lower = false;  // a sharp point of w_l within 1e-6 * scale
    double spectrum_distance = 0.0;
    double lower_distance = 0.0;
};

/// For every nonzero sharp point of w_h (tall orientation) report whether it lies in the
/// spectrum of H^*A and is also a sharp point of w_l.
std::vector<SharpTransfer> sharp_transfer_report(const ProjectorSetting& s,
                                                 std::size_t n_angles = kDefaultAngles);

}  // namespace nrange::proj
