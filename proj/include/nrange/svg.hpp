#pragma once

#include <string>
#include <vector>

#include "nrange/geometry.hpp"

namespace nrange::svg {

/// Fixed 800x800 plot of the complex plane; axes span +-1.1 * extent.
/// Coordinates are printed with three decimals so output depends only on the inputs.
class Canvas {
public:
    explicit Canvas(double extent);

    void region(const Region& r, const std::string& fill, const std::string& stroke, bool dashed = false);
    void circle(cplx center, double radius, const std::string& stroke, bool dashed = false);
    void polyline(const CVector& pts, const std::string& stroke, bool closed = true);
    void marker(cplx z, const std::string& color, const std::string& label = {});
    void highlight(cplx z, const std::string& color);
    void note(const std::string& text);

    std::string str() const;

private:
    double sx(double x) const;
    double sy(double y) const;
    double len(double r) const;

    double scale_;
    std::vector<std::string> body_;
    std::vector<std::string> notes_;
};

}  // namespace nrange::svg
