#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "nrange/geometry.hpp"
#include "nrange/linalg.hpp"

namespace nrange::rankk {

/// Isometries M (m x k), N (n x k) with M^* A N close to z I_k.
struct WitnessPair {
    Isometry m;
    Isometry n;
    cplx z;
    double residual = 0.0;  // |M^* A N - z I_k|_F
    int restarts_used = 0;
};

enum class Regime { Low, Ring, Empty };
std::string_view to_string(Regime r);

struct RankKClass {
    std::size_t k = 0;
    Regime regime = Regime::Empty;
    Region region;
    std::vector<double> sigma;
};

/// Regime of the rank-k range for an m x n matrix:
/// Low when k <= max(m, n)/2, Ring when max(m, n)/2 < k <= (m + n + 1)/3, Empty otherwise
/// (and whenever k > min(m, n), where no n x k or m x k isometry pair exists).
Regime classify(std::size_t m, std::size_t n, std::size_t k);

/// Closed-form rank-k numerical range phi_k(A) = {z : M^*AN = z I_k}.
///
/// Low:  D(0, sigma_k).
/// Ring: R(0; sigma_{m+n-2k+1}, sigma_k), sigma_j = 0 beyond min(m, n); collapses to a circle
///       when the radii agree and to a disc when the inner radius vanishes.
/// Empty: no points, except when sigma_{m+n-2k+1} = sigma_k (e.g. A a multiple of an
///       isometry, or A = 0), where the interlacing bounds pin |z| = sigma_k.
RankKClass phi_k_region(const ComplexMatrix& a, std::size_t k);

/// Interlacing test: |z| <= sigma_i for i = 1..k and |z| >= sigma_{i+m+n-2k} for
/// i = 1..min(2k - m, 2k - n), each with slack tol.
bool phi_k_contains(const ComplexMatrix& a, std::size_t k, cplx z, double tol = 1e-12);

/// Lambda_k of a Hermitian matrix: [lambda_{n-k+1}, lambda_k] (lambda descending), a Point when
/// the ends agree, Empty when they cross.
Region lambda_k_hermitian(const ComplexMatrix& h, std::size_t k);

struct WitnessOptions {
    int restarts = 20;
    int max_iter = 500;
    double tol = 1e-8;
};

struct WitnessSearch {
    bool success = false;
    WitnessPair best;  // certified pair on success, smallest-residual pair otherwise
};

/// Multi-start search for isometries with M^*AN = z I_k.
///
/// Each start runs Levenberg-Marquardt on the product of the two Stiefel manifolds with polar
/// retraction. Start 0 uses the top-k singular blocks, start 1 pairs top and bottom singular
/// vectors, the rest are random isometries from seeds derived from `seed`. Starts run in order
/// and the first one reaching `tol` is returned.
WitnessSearch find_witness(const ComplexMatrix& a, std::size_t k, cplx z, std::uint64_t seed,
                           const WitnessOptions& opt = {});

double witness_residual(const ComplexMatrix& a, const ComplexMatrix& m, const ComplexMatrix& n, cplx z);

/// (M e^{-i phi}, N) certifies e^{i phi} z whenever (M, N) certifies z.
WitnessPair rotate_witness(const ComplexMatrix& a, const WitnessPair& w, double phi);

struct ProjectorIntersection {
    double sigma_k = 0.0;
    double min_right = 0.0;       // min over sampled G of |A Q_G|_2
    double min_left = 0.0;        // min over sampled L of |P_L A|_2
    double optimal_right = 0.0;   // |A Q_G*|_2 for G* = span{v_k, ..., v_n}
    double optimal_left = 0.0;    // |P_L* A|_2 for L* = span{u_k, ..., u_m}
    double outer_radius = 0.0;    // outer radius of phi_k_region
    std::size_t below_sigma = 0;  // samples with norm < sigma_k - 1e-9
    std::size_t radius_violations = 0;  // sampled w(P_L A), w(A Q_G) radii below outer_radius
    std::size_t trials = 0;
};

/// Min-max bounds for phi_k(A) by compressions onto (n-k+1)-dimensional G and (m-k+1)-dimensional L.
ProjectorIntersection projector_intersection_check(const ComplexMatrix& a, std::size_t k,
                                                   std::size_t n_trials, std::uint64_t seed);

}  // namespace nrange::rankk
