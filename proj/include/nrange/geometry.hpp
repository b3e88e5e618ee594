#pragma once

#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "nrange/linalg.hpp"

namespace nrange {

/// Angle-indexed support data of a compact convex set.
///
/// support[i] = max Re(e^{-i angles[i]} z) over the set and points[i] is a maximizer.
struct BoundaryCurve {
    std::vector<double> angles;  // ascending in [0, 2pi)
    std::vector<double> support;
    CVector points;

    std::size_t size() const noexcept { return angles.size(); }
    /// Max over the stored points of Re(e^{-i theta} z).
    double support_at(double theta) const;
};

/// Corner of a convex curve: one point maximizing Re(e^{-i theta} .) over a cone of directions.
struct SharpPoint {
    cplx location;
    double normal_cone_width = 0.0;  // radians
    double cone_start = 0.0;         // first grid angle of the cone
    double spread = 0.0;             // max distance from location to the clustered maximizers
};

/// n equispaced angles k * 2pi / n.
std::vector<double> angle_grid(std::size_t n);
inline constexpr std::size_t kDefaultAngles = 720;

namespace shape {
struct Empty {};
struct Point {
    cplx z;
};
struct Segment {
    cplx a, b;
};
struct Disc {
    cplx center;
    double radius;
};
struct Circle {
    cplx center;
    double radius;
};
struct Annulus {
    cplx center;
    double inner, outer;
};
/// Elliptical disc {z : |z - focus1| + |z - focus2| <= major_axis}.
struct Ellipse {
    cplx focus1, focus2;
    double major_axis;
};
struct Boundary {
    BoundaryCurve curve;
};
}  // namespace shape

enum class RegionKind { Empty, Point, Segment, Disc, Circle, Annulus, Ellipse, Boundary };

std::string_view to_string(RegionKind k);
RegionKind region_kind_from_string(std::string_view s);

/// Closed subset of the complex plane produced by a range computation.
///
/// Factories normalize degenerate shapes: a zero-radius disc or circle is a Point, an annulus
/// with inner == outer is a Circle and with inner == 0 a Disc, a zero-length segment is a
/// Point, an ellipse with coincident foci is a Disc.
class Region {
public:
    using Variant = std::variant<shape::Empty, shape::Point, shape::Segment, shape::Disc,
                                 shape::Circle, shape::Annulus, shape::Ellipse, shape::Boundary>;

    Region() : v_(shape::Empty{}) {}

    static Region empty() { return Region(); }
    static Region point(cplx z);
    static Region segment(cplx a, cplx b);
    static Region disc(cplx center, double radius);
    static Region circle(cplx center, double radius);
    static Region annulus(cplx center, double inner, double outer);
    static Region ellipse(cplx focus1, cplx focus2, double major_axis);
    static Region boundary(BoundaryCurve curve);

    RegionKind kind() const noexcept { return static_cast<RegionKind>(v_.index()); }
    const Variant& shape() const noexcept { return v_; }

    template <typename T>
    const T& as() const {
        return std::get<T>(v_);
    }

    /// Largest |z| over the region (0 for Empty).
    double outer_radius() const;

private:
    explicit Region(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

/// True iff z lies within distance tol of r. Ellipses use the focal-sum test with slack 2 tol;
/// boundary curves use support-function dominance on their own grid.
bool region_contains(const Region& r, cplx z, double tol);

/// Support function h(theta) = sup Re(e^{-i theta} z) over r; -inf for Empty.
double region_support(const Region& r, double theta);

/// Samples the support function of a non-empty region on a grid.
BoundaryCurve sample_region(const Region& r, std::span<const double> angles);

/// Support curve of the convex hull of a finite point set.
BoundaryCurve hull_curve(std::span<const cplx> pts, std::span<const double> angles);

/// max over theta of p_a(theta) - p_b(theta); a is inside b iff the result is <= tol.
double support_gap(const BoundaryCurve& a, const BoundaryCurve& b);

/// Rebuild a curve from its own points on its own grid.
BoundaryCurve rebuild_curve(const BoundaryCurve& c);

/// Max violation of the support-function convexity test
/// p(theta) >= Re(e^{-i theta} z_j) for all stored points z_j.
double convexity_defect(const BoundaryCurve& c);

/// Corners of a curve: runs of at least min_cone_width of consecutive grid angles whose
/// maximizers stay within cluster_tol of each other.
std::vector<SharpPoint> sharp_points(const BoundaryCurve& curve, double min_cone_width,
                                     double cluster_tol);

}  // namespace nrange
