#pragma once

#include <cstdint>
#include <vector>

#include "nrange/linalg.hpp"

// Sampling and iteration based estimates. Nothing here touches the region code.
namespace nrange::oracles {

struct McReport {
    std::size_t n_samples = 0;
    double sup_abs = 0.0;
    std::vector<cplx> points;  // filled only on request
    std::uint64_t seed = 0;
};

/// Samples y^* A x for unit x, y drawn as normalized complex Gaussians.
/// Sample i uses its own generator seeded with mix_seed(seed, i).
McReport mc_rect_sup(const ComplexMatrix& a, std::size_t n_samples, std::uint64_t seed,
                     bool store_points = false);

/// Samples x^* A x for unit x (A square).
McReport mc_fov_samples(const ComplexMatrix& a, std::size_t n_samples, std::uint64_t seed,
                        bool store_points = true);

/// |A x| after n_iters steps of power iteration on A^* A from a random start.
double power_sigma_max(const ComplexMatrix& a, std::size_t n_iters, std::uint64_t seed);

}  // namespace nrange::oracles
