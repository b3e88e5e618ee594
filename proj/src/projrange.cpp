#include "nrange/projrange.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nrange/detail/mutation.hpp"
#include "nrange/fov.hpp"

namespace nrange::proj {

ProjectorSetting::ProjectorSetting(ComplexMatrix a, ComplexMatrix h) : a_(std::move(a)) {
    require_finite(a_, "projector setting A");
    const std::size_t m = a_.rows();
    const std::size_t n = a_.cols();
    orientation_ = m >= n ? Orientation::Tall : Orientation::Wide;
    const std::size_t hr = orientation_ == Orientation::Tall ? m : n;
    const std::size_t hc = orientation_ == Orientation::Tall ? n : m;
    if (h.rows() != hr || h.cols() != hc) {
        throw InputError("projector setting: H must be " + std::to_string(hr) + "x" + std::to_string(hc) +
                         " for A of shape " + shape_string(a_) + ", got " + shape_string(h));
    }
    h_ = Isometry(std::move(h));
}

ProjectorSetting ProjectorSetting::leading(ComplexMatrix a) {
    const std::size_t big = std::max(a.rows(), a.cols());
    const std::size_t small = std::min(a.rows(), a.cols());
    ComplexMatrix h(big, small);
    for (std::size_t i = 0; i < small; ++i) h(i, i) = 1.0;
    return ProjectorSetting(std::move(a), std::move(h));
}

ComplexMatrix ProjectorSetting::lower_matrix() const {
    const ComplexMatrix& h = h_.matrix();
    return orientation_ == Orientation::Tall ? h.adjoint() * a_ : a_ * h;
}

ComplexMatrix ProjectorSetting::higher_matrix() const {
    const ComplexMatrix& h = h_.matrix();
    return orientation_ == Orientation::Tall ? a_ * h.adjoint() : h * a_;
}

BoundaryCurve w_lower(const ProjectorSetting& s, std::size_t n_angles) {
    return fov::fov_boundary(s.lower_matrix(), n_angles);
}

BoundaryCurve w_higher(const ProjectorSetting& s, std::size_t n_angles) {
    return fov::fov_boundary(s.higher_matrix(), n_angles);
}

namespace {

void require_vector(std::span<const cplx> a, const char* what) {
    if (a.size() < 2) throw InputError(std::string(what) + ": need a vector of length >= 2");
    for (const auto& z : a) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw InputError(std::string(what) + ": non-finite entry");
    }
}

cplx unit_phase(cplx z) { return std::abs(z) > 0.0 ? z / std::abs(z) : cplx{1.0}; }

}  // namespace

Region vector_ellipse(std::span<const cplx> a) {
    require_vector(a, "vector_ellipse");
    const double minor = norm2(a.subspan(1));
    const double major = norm2(a) * detail::mutation_factor(detail::Mutant::VectorEllipse);
    if (minor == 0.0) return Region::segment(0.0, a[0]);
    if (a[0] == cplx{}) return Region::disc(0.0, major / 2.0);
    return Region::ellipse(0.0, a[0], major);
}

ComplexMatrix ellipse_compression(std::span<const cplx> a) {
    require_vector(a, "ellipse_compression");
    const double nb = norm2(a.subspan(1));
    return ComplexMatrix{{a[0], 0.0}, {nb * unit_phase(a[1]), 0.0}};
}

ComplexMatrix householder_reduction(std::span<const cplx> a) {
    require_vector(a, "householder_reduction");
    const std::size_t m = a.size();
    const std::span<const cplx> b = a.subspan(1);
    const double nb = norm2(b);
    CVector u(b.begin(), b.end());
    u[0] -= nb * unit_phase(a[1]);
    const double un2 = std::pow(norm2(u), 2);

    ComplexMatrix r = ComplexMatrix::identity(m);  // diag(1, I - 2uu^*/|u|^2)
    if (un2 > 1e-28 * nb * nb) {
        for (std::size_t i = 0; i + 1 < m; ++i)
            for (std::size_t j = 0; j + 1 < m; ++j) r(i + 1, j + 1) -= 2.0 * u[i] * std::conj(u[j]) / un2;
    }
    ComplexMatrix padded(m, m);
    for (std::size_t i = 0; i < m; ++i) padded(i, 0) = a[i];
    return r * padded * r.adjoint();
}

ReImParts re_im_parts(const ComplexMatrix& a) {
    require_finite(a, "re_im_parts");
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (m <= n) throw InputError("re_im_parts: needs m > n, got " + shape_string(a));
    const ComplexMatrix a1 = a.block(0, 0, n, n);
    const ComplexMatrix a2 = a.block(n, 0, m - n, n);
    const ComplexMatrix z = zeros(m - n, m - n);
    const cplx half{0.5, 0.0};
    const cplx half_over_i{0.0, -0.5};  // 1/(2i)

    ReImParts out;
    out.real_part = block2x2(half * (a1 + a1.adjoint()), half * a2.adjoint(), half * a2, z);
    out.imag_part = block2x2(half_over_i * (a1 - a1.adjoint()), cplx{0.0, 0.5} * a2.adjoint(),
                             cplx{0.0, -0.5} * a2, z);
    return out;
}

namespace {

double support_at_grid(const BoundaryCurve& c, double theta) {
    const std::size_t n = c.size();
    if (n % 4 != 0) throw InputError("axis projection: angle count must be divisible by 4");
    const auto idx = static_cast<std::size_t>(std::llround(theta / (2.0 * kPi) * static_cast<double>(n))) % n;
    if (std::abs(c.angles[idx] - theta) > 1e-9) throw InputError("axis projection: grid is not equispaced from 0");
    return c.support[idx];
}

}  // namespace

Interval real_projection(const BoundaryCurve& c) {
    return {-support_at_grid(c, kPi), support_at_grid(c, 0.0)};
}

Interval imag_projection(const BoundaryCurve& c) {
    return {-support_at_grid(c, 1.5 * kPi), support_at_grid(c, 0.5 * kPi)};
}

std::vector<SharpTransfer> sharp_transfer_report(const ProjectorSetting& s, std::size_t n_angles) {
    if (s.orientation() != Orientation::Tall) throw InputError("sharp_transfer_report: needs the tall orientation (m > n)");
    const double sigma = spectral_norm(s.a());
    const double scale = sigma > 0.0 ? sigma : 1.0;
    const double tol = 1e-6 * scale;
    const double cone = fov::default_min_cone_width(n_angles);

    const ComplexMatrix higher = s.higher_matrix();
    const ComplexMatrix lower = s.lower_matrix();
    const auto sharp_h = fov::sharp_eigenvalues(higher, fov::fov_boundary(higher, n_angles), cone, tol);
    const auto sharp_l = fov::sharp_eigenvalues(lower, fov::fov_boundary(lower, n_angles), cone, tol);
    const CVector spec_l = eigenvalues(lower);

    std::vector<SharpTransfer> out;
    for (const auto& p : sharp_h) {
        if (std::abs(p.location) <= tol) continue;
        SharpTransfer t;
        t.lambda0 = p.location;
        t.spectrum_distance = fov::distance_to_set(p.location, spec_l);
        t.in_spectrum = t.spectrum_distance <= 1e-6;
        t.lower_distance = std::numeric_limits<double>::infinity();
        for (const auto& q : sharp_l) t.lower_distance = std::min(t.lower_distance, std::abs(q.location - p.location));
        t.sharp_in_lower = t.lower_distance <= tol;
        out.push_back(t);
    }
    return out;
}

}  // namespace nrange::proj
