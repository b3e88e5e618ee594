#pragma once

#include "nrange/linalg.hpp"

// Worked matrices used by the verify suites, the figures and the tests.
namespace nrange::fixtures {

/// 2x3 example; |A|_F^2 = 98.25.
inline ComplexMatrix a1() {
    return ComplexMatrix{{{6.0, 1.0}, 0.0, 0.5}, {-4.0, {-3.0, -6.0}, 0.0}};
}

/// 4x3 example whose compressed range has a corner at 5i that the padded range lacks.
inline ComplexMatrix a2() {
    return ComplexMatrix{{{1.0, 1.0}, -7.0, 0.0}, {{0.0, 5.0}, 0.02, 0.0}, {0.0, 0.0, {6.0, -1.0}}, {0.0, 0.0, 0.0}};
}

/// H = [0; I_3] for a2.
inline ComplexMatrix a2_frame() {
    ComplexMatrix h(4, 3);
    for (std::size_t i = 0; i < 3; ++i) h(i + 1, i) = 1.0;
    return h;
}

}  // namespace nrange::fixtures
