#include "nrange/svg.hpp"

#include <cmath>
#include <algorithm>
#include <cstdio>

namespace nrange::svg {

namespace {

constexpr double kSize = 800.0;
constexpr double kHalf = kSize / 2.0;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v == 0.0 ? 0.0 : v);
    return buf;
}

std::string dash(bool dashed) { return dashed ? " stroke-dasharray=\"8 6\"" : ""; }

}  // namespace

Canvas::Canvas(double extent) {
    const double e = extent > 0.0 && std::isfinite(extent) ? extent : 1.0;
    scale_ = kHalf / (1.1 * e);
}

double Canvas::sx(double x) const { return kHalf + x * scale_; }
double Canvas::sy(double y) const { return kHalf - y * scale_; }
double Canvas::len(double r) const { return r * scale_; }

void Canvas::circle(cplx c, double r, const std::string& stroke, bool dashed) {
    body_.push_back("<circle cx=\"" + fmt(sx(c.real())) + "\" cy=\"" + fmt(sy(c.imag())) + "\" r=\"" +
                    fmt(len(r)) + "\" fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"1.5\"" + dash(dashed) +
                    "/>");
}

void Canvas::polyline(const CVector& pts, const std::string& stroke, bool closed) {
    std::string p;
    for (const auto& z : pts) p += fmt(sx(z.real())) + "," + fmt(sy(z.imag())) + " ";
    if (!p.empty()) p.pop_back();
    body_.push_back(std::string(closed ? "<polygon" : "<polyline") + " points=\"" + p + "\" fill=\"none\" stroke=\"" +
                    stroke + "\" stroke-width=\"1.5\"/>");
}

void Canvas::region(const Region& r, const std::string& fill, const std::string& stroke, bool dashed) {
    const std::string style = "\" fill=\"" + fill + "\" fill-opacity=\"0.25\" stroke=\"" + stroke +
                              "\" stroke-width=\"1.5\"" + dash(dashed) + "/>";
    switch (r.kind()) {
        case RegionKind::Empty: break;
        case RegionKind::Point: marker(r.as<shape::Point>().z, stroke); break;
        case RegionKind::Segment: {
            const auto& s = r.as<shape::Segment>();
            polyline({s.a, s.b}, stroke, false);
            break;
        }
        case RegionKind::Disc: {
            const auto& d = r.as<shape::Disc>();
            body_.push_back("<circle cx=\"" + fmt(sx(d.center.real())) + "\" cy=\"" + fmt(sy(d.center.imag())) +
                            "\" r=\"" + fmt(len(d.radius)) + style);
            break;
        }
        case RegionKind::Circle: {
            const auto& c = r.as<shape::Circle>();
            circle(c.center, c.radius, stroke, dashed);
            break;
        }
        case RegionKind::Annulus: {
            const auto& a = r.as<shape::Annulus>();
            const double cx = sx(a.center.real()), cy = sy(a.center.imag());
            const double ro = len(a.outer), ri = len(a.inner);
            auto ring = [&](double rad, int sweep) {
                return "M " + fmt(cx + rad) + " " + fmt(cy) + " A " + fmt(rad) + " " + fmt(rad) + " 0 1 " +
                       std::to_string(sweep) + " " + fmt(cx - rad) + " " + fmt(cy) + " A " + fmt(rad) + " " +
                       fmt(rad) + " 0 1 " + std::to_string(sweep) + " " + fmt(cx + rad) + " " + fmt(cy) + " Z";
            };
            body_.push_back("<path fill-rule=\"evenodd\" d=\"" + ring(ro, 1) + " " + ring(ri, 0) + style);
            break;
        }
        case RegionKind::Ellipse: {
            const auto& e = r.as<shape::Ellipse>();
            const cplx c = 0.5 * (e.focus1 + e.focus2);
            const double a = e.major_axis / 2.0;
            const double f = std::abs(e.focus2 - e.focus1) / 2.0;
            const double b = std::sqrt(std::max(0.0, a * a - f * f));
            const double deg = -std::arg(e.focus2 - e.focus1) * 180.0 / kPi;
            body_.push_back("<ellipse cx=\"" + fmt(sx(c.real())) + "\" cy=\"" + fmt(sy(c.imag())) + "\" rx=\"" +
                            fmt(len(a)) + "\" ry=\"" + fmt(len(b)) + "\" transform=\"rotate(" + fmt(deg) + " " +
                            fmt(sx(c.real())) + " " + fmt(sy(c.imag())) + ")" + style);
            break;
        }
        case RegionKind::Boundary: {
            std::string p;
            for (const auto& z : r.as<shape::Boundary>().curve.points) p += fmt(sx(z.real())) + "," + fmt(sy(z.imag())) + " ";
            if (!p.empty()) p.pop_back();
            body_.push_back("<polygon points=\"" + p + style);
            break;
        }
    }
}

void Canvas::marker(cplx z, const std::string& color, const std::string& label) {
    const double x = sx(z.real()), y = sy(z.imag());
    body_.push_back("<path d=\"M " + fmt(x - 5) + " " + fmt(y - 5) + " L " + fmt(x + 5) + " " + fmt(y + 5) + " M " +
                    fmt(x - 5) + " " + fmt(y + 5) + " L " + fmt(x + 5) + " " + fmt(y - 5) + "\" stroke=\"" + color +
                    "\" stroke-width=\"2\"/>");
    if (!label.empty()) {
        body_.push_back("<text x=\"" + fmt(x + 8) + "\" y=\"" + fmt(y - 8) + "\" font-size=\"14\" fill=\"" + color +
                        "\">" + label + "</text>");
    }
}

void Canvas::highlight(cplx z, const std::string& color) {
    body_.push_back("<circle cx=\"" + fmt(sx(z.real())) + "\" cy=\"" + fmt(sy(z.imag())) +
                    "\" r=\"9.000\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"2.5\"/>");
}

void Canvas::note(const std::string& text) { notes_.push_back(text); }

std::string Canvas::str() const {
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
    out += "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
    out += "<line x1=\"0\" y1=\"400\" x2=\"800\" y2=\"400\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    out += "<line x1=\"400\" y1=\"0\" x2=\"400\" y2=\"800\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    // Unit tick at the axis extent.
    const double extent = kHalf / scale_ / 1.1;
    out += "<text x=\"" + fmt(sx(extent) - 30) + "\" y=\"418\" font-size=\"12\" fill=\"#555\">" + fmt(extent) + "</text>\n";
    out += "<text x=\"406\" y=\"" + fmt(sy(extent) + 4) + "\" font-size=\"12\" fill=\"#555\">" + fmt(extent) + "i</text>\n";
    for (const auto& b : body_) out += b + "\n";
    double y = 20.0;
    for (const auto& n : notes_) {
        out += "<text x=\"10\" y=\"" + fmt(y) + "\" font-size=\"13\" fill=\"black\">" + n + "</text>\n";
        y += 18.0;
    }
    out += "</svg>\n";
    return out;
}

}  // namespace nrange::svg
