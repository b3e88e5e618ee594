#include "nrange/oracles.hpp"

#include <algorithm>
#include <cmath>

#include "nrange/rng.hpp"

namespace nrange::oracles {

namespace {

CVector unit_gaussian(Rng& rng, std::size_t n) {
    CVector v(n);
    double s = 0.0;
    do {
        s = 0.0;
        for (auto& c : v) {
            c = rng.complex_normal();
            s += std::norm(c);
        }
    } while (s == 0.0);
    const double inv = 1.0 / std::sqrt(s);
    for (auto& c : v) c *= inv;
    return v;
}

void record(McReport& rep, cplx z, bool store) {
    rep.sup_abs = std::max(rep.sup_abs, std::abs(z));
    if (store) rep.points.push_back(z);
}

}  // namespace

McReport mc_rect_sup(const ComplexMatrix& a, std::size_t n_samples, std::uint64_t seed, bool store_points) {
    require_finite(a, "mc_rect_sup");
    if (n_samples < 1) throw InputError("mc_rect_sup: need at least one sample");
    McReport rep{n_samples, 0.0, {}, seed};
    if (store_points) rep.points.reserve(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        Rng rng(mix_seed(seed, i));
        const CVector x = unit_gaussian(rng, a.cols());
        const CVector y = unit_gaussian(rng, a.rows());
        record(rep, dot(y, a * x), store_points);
    }
    return rep;
}

McReport mc_fov_samples(const ComplexMatrix& a, std::size_t n_samples, std::uint64_t seed, bool store_points) {
    require_finite(a, "mc_fov_samples");
    if (!a.is_square()) throw InputError("mc_fov_samples: field of values needs a square matrix, got " + shape_string(a));
    if (n_samples < 1) throw InputError("mc_fov_samples: need at least one sample");
    McReport rep{n_samples, 0.0, {}, seed};
    if (store_points) rep.points.reserve(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        Rng rng(mix_seed(seed, i));
        const CVector x = unit_gaussian(rng, a.cols());
        record(rep, dot(x, a * x), store_points);
    }
    return rep;
}

double power_sigma_max(const ComplexMatrix& a, std::size_t n_iters, std::uint64_t seed) {
    require_finite(a, "power_sigma_max");
    if (n_iters < 1) throw InputError("power_sigma_max: need at least one iteration");
    Rng rng(seed);
    CVector x = unit_gaussian(rng, a.cols());
    const ComplexMatrix ah = a.adjoint();
    double est = norm2(a * x);
    for (std::size_t it = 0; it < n_iters; ++it) {
        CVector w = ah * (a * x);
        const double nw = norm2(w);
        if (nw == 0.0) return 0.0;
        for (auto& c : w) c /= nw;
        x = std::move(w);
        est = std::max(est, norm2(a * x));
    }
    return est;
}

}  // namespace nrange::oracles
