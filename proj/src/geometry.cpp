#include "nrange/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nrange {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

inline double directional(cplx z, double theta) {
    return z.real() * std::cos(theta) + z.imag() * std::sin(theta);
}

struct EllipseFrame {
    cplx center;
    cplx axis;  // unit vector along the focal axis
    double a, b;
};

EllipseFrame frame_of(const shape::Ellipse& e) {
    const cplx d = e.focus2 - e.focus1;
    const double c = std::abs(d) / 2.0;
    const double a = e.major_axis / 2.0;
    return {(e.focus1 + e.focus2) / 2.0, std::abs(d) > 0.0 ? d / std::abs(d) : cplx{1.0}, a,
            std::sqrt(std::max(0.0, a * a - c * c))};
}

cplx support_point(const Region& r, double theta) {
    const cplx dir = std::polar(1.0, theta);
    return std::visit(
        [&](const auto& s) -> cplx {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, shape::Empty>) {
                throw InputError("support point of an empty region");
            } else if constexpr (std::is_same_v<T, shape::Point>) {
                return s.z;
            } else if constexpr (std::is_same_v<T, shape::Segment>) {
                return directional(s.a, theta) >= directional(s.b, theta) ? s.a : s.b;
            } else if constexpr (std::is_same_v<T, shape::Disc> || std::is_same_v<T, shape::Circle>) {
                return s.center + s.radius * dir;
            } else if constexpr (std::is_same_v<T, shape::Annulus>) {
                return s.center + s.outer * dir;
            } else if constexpr (std::is_same_v<T, shape::Ellipse>) {
                const EllipseFrame f = frame_of(s);
                const cplx local = dir / f.axis;  // direction in the ellipse frame
                const double cs = local.real();
                const double sn = local.imag();
                const double h = std::sqrt(f.a * f.a * cs * cs + f.b * f.b * sn * sn);
                if (h == 0.0) return f.center;
                const cplx p{f.a * f.a * cs / h, f.b * f.b * sn / h};
                return f.center + f.axis * p;
            } else {
                const auto& c = s.curve;
                std::size_t best = 0;
                double bv = kNegInf;
                for (std::size_t i = 0; i < c.points.size(); ++i) {
                    const double v = directional(c.points[i], theta);
                    if (v > bv) {
                        bv = v;
                        best = i;
                    }
                }
                return c.points[best];
            }
        },
        r.shape());
}

}  // namespace

double BoundaryCurve::support_at(double theta) const {
    double best = kNegInf;
    for (const auto& z : points) best = std::max(best, directional(z, theta));
    return best;
}

std::vector<double> angle_grid(std::size_t n) {
    std::vector<double> a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n);
    return a;
}

std::string_view to_string(RegionKind k) {
    switch (k) {
        case RegionKind::Empty: return "empty";
        case RegionKind::Point: return "point";
        case RegionKind::Segment: return "segment";
        case RegionKind::Disc: return "disc";
        case RegionKind::Circle: return "circle";
        case RegionKind::Annulus: return "annulus";
        case RegionKind::Ellipse: return "ellipse";
        case RegionKind::Boundary: return "boundary";
    }
    return "?";
}

RegionKind region_kind_from_string(std::string_view s) {
    for (int i = 0; i <= static_cast<int>(RegionKind::Boundary); ++i) {
        const auto k = static_cast<RegionKind>(i);
        if (to_string(k) == s) return k;
    }
    throw InputError("unknown region kind '" + std::string(s) + "'");
}

// ---------------------------------------------------------------------------
// Factories

namespace {
void require_radius(double r, const char* what) {
    if (!(r >= 0.0) || !std::isfinite(r)) throw InputError(std::string(what) + ": radius must be finite and >= 0");
}
}  // namespace

Region Region::point(cplx z) { return Region(shape::Point{z}); }

Region Region::segment(cplx a, cplx b) {
    if (a == b) return point(a);
    return Region(shape::Segment{a, b});
}

Region Region::disc(cplx center, double radius) {
    require_radius(radius, "disc");
    if (radius == 0.0) return point(center);
    return Region(shape::Disc{center, radius});
}

Region Region::circle(cplx center, double radius) {
    require_radius(radius, "circle");
    if (radius == 0.0) return point(center);
    return Region(shape::Circle{center, radius});
}

Region Region::annulus(cplx center, double inner, double outer) {
    require_radius(inner, "annulus inner");
    require_radius(outer, "annulus outer");
    if (inner > outer) throw InputError("annulus: inner radius exceeds outer radius");
    if (inner == outer) return circle(center, outer);
    if (inner == 0.0) return disc(center, outer);
    return Region(shape::Annulus{center, inner, outer});
}

Region Region::ellipse(cplx focus1, cplx focus2, double major_axis) {
    require_radius(major_axis, "ellipse major axis");
    const double d = std::abs(focus1 - focus2);
    if (major_axis < d * (1.0 - 1e-14)) throw InputError("ellipse: major axis shorter than focal distance");
    if (d == 0.0) return disc(focus1, major_axis / 2.0);
    if (major_axis <= d) return segment(focus1, focus2);
    return Region(shape::Ellipse{focus1, focus2, major_axis});
}

Region Region::boundary(BoundaryCurve curve) {
    if (curve.angles.empty() || curve.angles.size() != curve.support.size() ||
        curve.angles.size() != curve.points.size()) {
        throw InputError("boundary curve: inconsistent lengths");
    }
    return Region(shape::Boundary{std::move(curve)});
}

double Region::outer_radius() const {
    return std::visit(
        [&](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, shape::Empty>) {
                return 0.0;
            } else if constexpr (std::is_same_v<T, shape::Point>) {
                return std::abs(s.z);
            } else if constexpr (std::is_same_v<T, shape::Segment>) {
                return std::max(std::abs(s.a), std::abs(s.b));
            } else if constexpr (std::is_same_v<T, shape::Disc> || std::is_same_v<T, shape::Circle>) {
                return std::abs(s.center) + s.radius;
            } else if constexpr (std::is_same_v<T, shape::Annulus>) {
                return std::abs(s.center) + s.outer;
            } else if constexpr (std::is_same_v<T, shape::Ellipse>) {
                double best = 0.0;
                for (double t : angle_grid(4096)) best = std::max(best, std::abs(support_point(*this, t)));
                return best;
            } else {
                double best = 0.0;
                for (const auto& z : s.curve.points) best = std::max(best, std::abs(z));
                return best;
            }
        },
        v_);
}

// ---------------------------------------------------------------------------
// Predicates

bool region_contains(const Region& r, cplx z, double tol) {
    if (!(tol >= 0.0)) throw InputError("region_contains: tol must be >= 0");
    return std::visit(
        [&](const auto& s) -> bool {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, shape::Empty>) {
                return false;
            } else if constexpr (std::is_same_v<T, shape::Point>) {
                return std::abs(z - s.z) <= tol;
            } else if constexpr (std::is_same_v<T, shape::Segment>) {
                const cplx d = s.b - s.a;
                double t = ((z - s.a) * std::conj(d)).real() / std::norm(d);
                t = std::clamp(t, 0.0, 1.0);
                return std::abs(z - (s.a + t * d)) <= tol;
            } else if constexpr (std::is_same_v<T, shape::Disc>) {
                return std::abs(z - s.center) <= s.radius + tol;
            } else if constexpr (std::is_same_v<T, shape::Circle>) {
                return std::abs(std::abs(z - s.center) - s.radius) <= tol;
            } else if constexpr (std::is_same_v<T, shape::Annulus>) {
                const double d = std::abs(z - s.center);
                return d >= s.inner - tol && d <= s.outer + tol;
            } else if constexpr (std::is_same_v<T, shape::Ellipse>) {
                return std::abs(z - s.focus1) + std::abs(z - s.focus2) <= s.major_axis + 2.0 * tol;
            } else {
                const auto& c = s.curve;
                for (std::size_t i = 0; i < c.size(); ++i) {
                    if (directional(z, c.angles[i]) > c.support[i] + tol) return false;
                }
                return true;
            }
        },
        r.shape());
}

double region_support(const Region& r, double theta) {
    if (r.kind() == RegionKind::Empty) return kNegInf;
    return directional(support_point(r, theta), theta);
}

BoundaryCurve sample_region(const Region& r, std::span<const double> angles) {
    if (r.kind() == RegionKind::Empty) throw InputError("sample_region: empty region has no support curve");
    BoundaryCurve c;
    c.angles.assign(angles.begin(), angles.end());
    c.support.reserve(angles.size());
    c.points.reserve(angles.size());
    for (double t : angles) {
        const cplx p = support_point(r, t);
        c.points.push_back(p);
        c.support.push_back(directional(p, t));
    }
    return c;
}

BoundaryCurve hull_curve(std::span<const cplx> pts, std::span<const double> angles) {
    if (pts.empty()) throw InputError("hull_curve: no points");
    BoundaryCurve c;
    c.angles.assign(angles.begin(), angles.end());
    for (double t : angles) {
        std::size_t best = 0;
        double bv = kNegInf;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const double v = directional(pts[i], t);
            if (v > bv) {
                bv = v;
                best = i;
            }
        }
        c.support.push_back(bv);
        c.points.push_back(pts[best]);
    }
    return c;
}

double support_gap(const BoundaryCurve& a, const BoundaryCurve& b) {
    if (a.size() != b.size()) throw InputError("support_gap: angle grids differ in length");
    double gap = kNegInf;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a.angles[i] - b.angles[i]) > 1e-12) throw InputError("support_gap: angle grids differ");
        gap = std::max(gap, a.support[i] - b.support[i]);
    }
    return gap;
}

BoundaryCurve rebuild_curve(const BoundaryCurve& c) { return hull_curve(c.points, c.angles); }

double convexity_defect(const BoundaryCurve& c) {
    double worst = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (const auto& z : c.points) worst = std::max(worst, directional(z, c.angles[i]) - c.support[i]);
    }
    return worst;
}

std::vector<SharpPoint> sharp_points(const BoundaryCurve& curve, double min_cone_width,
                                     double cluster_tol) {
    std::vector<SharpPoint> out;
    const std::size_t n = curve.size();
    if (n == 0) return out;
    const double step = 2.0 * kPi / static_cast<double>(n);

    std::vector<bool> link(n);
    for (std::size_t i = 0; i < n; ++i) link[i] = std::abs(curve.points[(i + 1) % n] - curve.points[i]) <= cluster_tol;

    auto emit = [&](std::size_t start, std::size_t len) {
        const double width = static_cast<double>(len) * step;
        if (width < min_cone_width * (1.0 - 1e-12)) return;
        SharpPoint sp;
        sp.location = curve.points[(start + len / 2) % n];
        sp.normal_cone_width = width;
        sp.cone_start = curve.angles[start];
        for (std::size_t j = 0; j < len; ++j) sp.spread = std::max(sp.spread, std::abs(curve.points[(start + j) % n] - sp.location));
        out.push_back(sp);
    };

    const auto first_break = std::find(link.begin(), link.end(), false);
    if (first_break == link.end()) {
        emit(0, n);
        return out;
    }
    // Runs start right after a broken link.
    const std::size_t s0 = (static_cast<std::size_t>(first_break - link.begin()) + 1) % n;
    std::size_t i = 0;
    while (i < n) {
        const std::size_t start = (s0 + i) % n;
        std::size_t len = 1;
        while (link[(start + len - 1) % n] && i + len < n) ++len;
        emit(start, len);
        i += len;
    }
    std::sort(out.begin(), out.end(), [](const SharpPoint& a, const SharpPoint& b) { return a.cone_start < b.cone_start; });
    return out;
}

}  // namespace nrange
