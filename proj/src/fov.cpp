#include "nrange/fov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nrange::fov {

namespace {

void require_square(const ComplexMatrix& a, const char* what) {
    require_finite(a, what);
    if (!a.is_square()) {
        throw InputError(std::string(what) + ": field of values needs a square matrix, got " +
                         shape_string(a) + " (use the rectangular range w instead)");
    }
}

}  // namespace

SupportPoint support_point(const ComplexMatrix& a, double theta) {
    require_square(a, "support_point");
    const std::size_t n = a.rows();
    const cplx rot = std::polar(1.0, -theta);
    ComplexMatrix k(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) k(i, j) = 0.5 * (rot * a(i, j) + std::conj(rot * a(j, i)));
    const HermEig eig = hermitian_eigen(k);
    const CVector x = eig.frame.matrix().col(0);
    return {eig.lambda.front(), dot(x, a * std::span<const cplx>(x))};
}

BoundaryCurve fov_boundary(const ComplexMatrix& a, std::size_t n_angles) {
    require_square(a, "fov_boundary");
    if (n_angles < 8) throw InputError("fov_boundary: need at least 8 angles");
    BoundaryCurve c;
    c.angles = angle_grid(n_angles);
    c.support.resize(n_angles);
    c.points.resize(n_angles);
    for (std::size_t i = 0; i < n_angles; ++i) {
        const SupportPoint sp = support_point(a, c.angles[i]);
        c.support[i] = sp.support;
        c.points[i] = sp.point;
    }
    return c;
}

Region fov_region(const ComplexMatrix& a, std::size_t n_angles) {
    BoundaryCurve c = fov_boundary(a, n_angles);
    const double scale = std::max(1.0, a.frobenius_norm());
    const double tol = 1e-10 * scale;

    // Width of the curve in the direction orthogonal to its longest chord.
    std::size_t ia = 0, ib = 0;
    double longest = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) {
            const double d = std::abs(c.points[i] - c.points[j]);
            if (d > longest) {
                longest = d;
                ia = i;
                ib = j;
            }
        }
    if (longest <= tol) return Region::point(c.points.front());
    const cplx dir = (c.points[ib] - c.points[ia]) / longest;
    double width = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        width = std::max(width, std::abs(((c.points[i] - c.points[ia]) * std::conj(dir)).imag()));
    }
    if (width <= tol) return Region::segment(c.points[ia], c.points[ib]);
    return Region::boundary(std::move(c));
}

double default_min_cone_width(std::size_t n_angles) {
    return 3.0 * 2.0 * kPi / static_cast<double>(n_angles);
}

double default_cluster_tol(const ComplexMatrix& a) {
    const double s = spectral_norm(a);
    return 1e-6 * (s > 0.0 ? s : 1.0);
}

double distance_to_set(cplx z, std::span<const cplx> set) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& w : set) best = std::min(best, std::abs(z - w));
    return best;
}

std::vector<SharpPoint> sharp_eigenvalues(const ComplexMatrix& a, const BoundaryCurve& curve,
                                          double min_cone_width, double cluster_tol) {
    std::vector<SharpPoint> pts = sharp_points(curve, min_cone_width, cluster_tol);
    const CVector spec = eigenvalues(a);
    for (auto& p : pts) {
        const cplx* nearest = nullptr;
        double best = std::numeric_limits<double>::infinity();
        for (const auto& l : spec) {
            const double d = std::abs(l - p.location);
            if (d < best) {
                best = d;
                nearest = &l;
            }
        }
        if (nearest != nullptr && best <= p.spread + cluster_tol) {
            p.spread = std::max(p.spread, best);
            p.location = *nearest;
        }
    }
    return pts;
}

}  // namespace nrange::fov
