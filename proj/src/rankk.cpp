#include "nrange/rankk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nrange/detail/mutation.hpp"
#include "nrange/rng.hpp"

namespace nrange::rankk {

std::string_view to_string(Regime r) {
    switch (r) {
        case Regime::Low: return "low";
        case Regime::Ring: return "ring";
        case Regime::Empty: return "empty";
    }
    return "?";
}

Regime classify(std::size_t m, std::size_t n, std::size_t k) {
    if (k < 1) throw InputError("rank-k range: k must be >= 1");
    if (k > std::min(m, n)) return Regime::Empty;
    const std::size_t big = std::max(m, n);
    if (2 * k <= big) return Regime::Low;
    if (3 * k <= m + n + 1) return Regime::Ring;
    return Regime::Empty;
}

namespace {

// sigma_j with 1-based j; zero beyond min(m, n).
double sigma_at(const std::vector<double>& s, std::size_t j) {
    return j >= 1 && j <= s.size() ? s[j - 1] : 0.0;
}

}  // namespace

RankKClass phi_k_region(const ComplexMatrix& a, std::size_t k) {
    require_finite(a, "phi_k_region");
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    RankKClass out;
    out.k = k;
    out.regime = classify(m, n, k);
    out.sigma = singular_values(a);
    if (k > std::min(m, n)) return out;

    const double outer = sigma_at(out.sigma, k) * detail::mutation_factor(detail::Mutant::PhiOuter);
    const double inner = sigma_at(out.sigma, m + n - 2 * k + 1) * detail::mutation_factor(detail::Mutant::PhiInner);
    switch (out.regime) {
        case Regime::Low:
            out.region = Region::disc(0.0, outer);
            break;
        case Regime::Ring:
            out.region = Region::annulus(0.0, std::min(inner, outer), outer);
            break;
        case Regime::Empty: {
            // Here m + n - 2k + 1 < k, so sigma_inner >= sigma_k and the bounds meet only on equality.
            const double s1 = out.sigma.front();
            if (std::abs(inner - outer) <= 1e-12 * s1) out.region = Region::circle(0.0, outer);
            break;
        }
    }
    return out;
}

bool phi_k_contains(const ComplexMatrix& a, std::size_t k, cplx z, double tol) {
    require_finite(a, "phi_k_contains");
    if (k < 1) throw InputError("phi_k_contains: k must be >= 1");
    const auto m = static_cast<long>(a.rows());
    const auto n = static_cast<long>(a.cols());
    const auto kk = static_cast<long>(k);
    if (kk > std::min(m, n)) return false;
    const std::vector<double> s = singular_values(a);
    const double r = std::abs(z);
    for (long i = 1; i <= kk; ++i) {
        if (r > sigma_at(s, static_cast<std::size_t>(i)) + tol) return false;
    }
    const long lower_count = std::min(2 * kk - m, 2 * kk - n);
    for (long i = 1; i <= lower_count; ++i) {
        if (r < sigma_at(s, static_cast<std::size_t>(i + m + n - 2 * kk)) - tol) return false;
    }
    return true;
}

Region lambda_k_hermitian(const ComplexMatrix& h, std::size_t k) {
    if (k < 1) throw InputError("lambda_k_hermitian: k must be >= 1");
    const HermEig eig = hermitian_eigen(h);
    const std::size_t n = eig.lambda.size();
    if (k > n) return Region::empty();
    const double hi = eig.lambda[k - 1];
    const double lo = eig.lambda[n - k];
    double scale = 1.0;
    for (double l : eig.lambda) scale = std::max(scale, std::abs(l));
    if (std::abs(hi - lo) <= 1e-12 * scale) return Region::point(0.5 * (hi + lo));
    if (hi < lo) return Region::empty();
    return Region::segment(lo, hi);
}

double witness_residual(const ComplexMatrix& a, const ComplexMatrix& m, const ComplexMatrix& n, cplx z) {
    ComplexMatrix r = m.adjoint() * a * n;
    for (std::size_t i = 0; i < r.rows(); ++i) r(i, i) -= z;
    return r.frobenius_norm();
}

WitnessPair rotate_witness(const ComplexMatrix& a, const WitnessPair& w, double phi) {
    const cplx ph = std::polar(1.0, -phi);
    ComplexMatrix m = ph * w.m.matrix();
    const cplx z = std::polar(1.0, phi) * w.z;
    WitnessPair out{Isometry::trusted(m), w.n, z, 0.0, w.restarts_used};
    out.residual = witness_residual(a, out.m.matrix(), out.n.matrix(), z);
    return out;
}

// ---------------------------------------------------------------------------
// Witness search

namespace {

ComplexMatrix polar_factor(const ComplexMatrix& x) {
    const SvdResult s = svd(x);
    return s.left.matrix() * s.right.matrix().adjoint();
}

// Real tangent basis of the Stiefel manifold at the isometry q (p x k):
// q * Omega for skew-Hermitian Omega, and q_perp * K for arbitrary K.
std::vector<ComplexMatrix> tangent_basis(const ComplexMatrix& q) {
    const std::size_t p = q.rows();
    const std::size_t k = q.cols();
    std::vector<ComplexMatrix> basis;
    basis.reserve(2 * p * k);
    for (std::size_t d = 0; d < k; ++d) {
        ComplexMatrix om(k, k);
        om(d, d) = kI;
        basis.push_back(q * om);
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            ComplexMatrix re(k, k), im(k, k);
            re(i, j) = 1.0;
            re(j, i) = -1.0;
            im(i, j) = kI;
            im(j, i) = kI;
            basis.push_back(q * re);
            basis.push_back(q * im);
        }
    if (p > k) {
        const ComplexMatrix full = complete_to_unitary(Isometry::trusted(q));
        for (std::size_t r = k; r < p; ++r)
            for (std::size_t c = 0; c < k; ++c)
                for (const cplx unit : {cplx{1.0}, kI}) {
                    ComplexMatrix xi(p, k);
                    for (std::size_t row = 0; row < p; ++row) xi(row, c) = full(row, r) * unit;
                    basis.push_back(std::move(xi));
                }
    }
    return basis;
}

std::vector<double> flatten(const ComplexMatrix& r) {
    std::vector<double> v;
    v.reserve(2 * r.rows() * r.cols());
    for (const auto& z : r.data()) {
        v.push_back(z.real());
        v.push_back(z.imag());
    }
    return v;
}

// Solves the symmetric positive definite system s x = b in place (Cholesky).
bool cholesky_solve(std::vector<double> s, std::vector<double>& b) {
    const std::size_t q = b.size();
    for (std::size_t j = 0; j < q; ++j) {
        double d = s[j * q + j];
        for (std::size_t l = 0; l < j; ++l) d -= s[j * q + l] * s[j * q + l];
        if (!(d > 0.0)) return false;
        d = std::sqrt(d);
        s[j * q + j] = d;
        for (std::size_t i = j + 1; i < q; ++i) {
            double v = s[i * q + j];
            for (std::size_t l = 0; l < j; ++l) v -= s[i * q + l] * s[j * q + l];
            s[i * q + j] = v / d;
        }
    }
    for (std::size_t i = 0; i < q; ++i) {
        double v = b[i];
        for (std::size_t l = 0; l < i; ++l) v -= s[i * q + l] * b[l];
        b[i] = v / s[i * q + i];
    }
    for (std::size_t ii = q; ii-- > 0;) {
        double v = b[ii];
        for (std::size_t l = ii + 1; l < q; ++l) v -= s[l * q + ii] * b[l];
        b[ii] = v / s[ii * q + ii];
    }
    return true;
}

struct LocalResult {
    ComplexMatrix m, n;
    double residual;
};

ComplexMatrix residual_matrix(const ComplexMatrix& a, const ComplexMatrix& m, const ComplexMatrix& n, cplx z) {
    ComplexMatrix r = m.adjoint() * a * n;
    for (std::size_t i = 0; i < r.rows(); ++i) r(i, i) -= z;
    return r;
}

LocalResult levenberg_marquardt(const ComplexMatrix& a, ComplexMatrix m, ComplexMatrix n, cplx z,
                                int max_iter, double target) {
    const double scale = std::max(spectral_norm(a), std::abs(z));
    const double s2 = scale > 0.0 ? scale * scale : 1.0;
    double mu = 1e-3 * s2;
    ComplexMatrix r = residual_matrix(a, m, n, z);
    double res = r.frobenius_norm();

    for (int it = 0; it < max_iter && res > target; ++it) {
        const std::vector<ComplexMatrix> bm = tangent_basis(m);
        const std::vector<ComplexMatrix> bn = tangent_basis(n);
        const ComplexMatrix an = a * n;
        const ComplexMatrix ma = m.adjoint() * a;
        std::vector<std::vector<double>> cols;
        cols.reserve(bm.size() + bn.size());
        for (const auto& xi : bm) cols.push_back(flatten(xi.adjoint() * an));
        for (const auto& eta : bn) cols.push_back(flatten(ma * eta));

        const std::vector<double> rv = flatten(r);
        const std::size_t q = rv.size();
        std::vector<double> jjt(q * q, 0.0);
        for (const auto& c : cols)
            for (std::size_t i = 0; i < q; ++i)
                for (std::size_t j = 0; j < q; ++j) jjt[i * q + j] += c[i] * c[j];

        bool improved = false;
        while (!improved && mu < 1e12 * s2) {
            std::vector<double> sys = jjt;
            for (std::size_t i = 0; i < q; ++i) sys[i * q + i] += mu;
            std::vector<double> y = rv;
            if (!cholesky_solve(std::move(sys), y)) {
                mu *= 10.0;
                continue;
            }
            ComplexMatrix mn = m;
            ComplexMatrix nn = n;
            for (std::size_t j = 0; j < cols.size(); ++j) {
                double d = 0.0;
                for (std::size_t i = 0; i < q; ++i) d -= cols[j][i] * y[i];
                if (j < bm.size()) {
                    mn += cplx{d} * bm[j];
                } else {
                    nn += cplx{d} * bn[j - bm.size()];
                }
            }
            mn = polar_factor(mn);
            nn = polar_factor(nn);
            ComplexMatrix rn = residual_matrix(a, mn, nn, z);
            const double resn = rn.frobenius_norm();
            if (resn < res) {
                m = std::move(mn);
                n = std::move(nn);
                r = std::move(rn);
                res = resn;
                mu = std::max(mu / 3.0, 1e-15 * s2);
                improved = true;
            } else {
                mu *= 4.0;
            }
        }
        if (!improved) break;
    }
    return {std::move(m), std::move(n), res};
}

// Columns (u_i + u_{p-1-i})/sqrt(2), i < k; nullopt when the pairing is not full rank.
std::optional<ComplexMatrix> mixed_block(const ComplexMatrix& full, std::size_t k) {
    const std::size_t p = full.rows();
    ComplexMatrix x(p, k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = p - 1 - i;
        for (std::size_t r = 0; r < p; ++r) x(r, i) = j == i ? full(r, i) : (full(r, i) + full(r, j)) / std::sqrt(2.0);
    }
    const std::vector<double> s = singular_values(x);
    if (s.back() < 1e-8) return std::nullopt;
    return polar_factor(x);
}

}  // namespace

WitnessSearch find_witness(const ComplexMatrix& a, std::size_t k, cplx z, std::uint64_t seed,
                           const WitnessOptions& opt) {
    require_finite(a, "find_witness");
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (k < 1 || k > std::min(m, n)) {
        throw InputError("find_witness: need 1 <= k <= min(m, n) = " + std::to_string(std::min(m, n)) +
                         ", got " + std::to_string(k));
    }
    const SvdResult s = svd(a);
    const ComplexMatrix u_full = complete_to_unitary(s.left);
    const ComplexMatrix v_full = complete_to_unitary(s.right);
    const cplx phase = std::abs(z) > 0.0 ? std::conj(z) / std::abs(z) : cplx{1.0};
    const double target = opt.tol * 1e-3;

    WitnessSearch out;
    out.best.residual = std::numeric_limits<double>::infinity();
    for (int restart = 0; restart < std::max(1, opt.restarts); ++restart) {
        ComplexMatrix m0, n0;
        if (restart == 0) {
            m0 = phase * u_full.cols_range(0, k);
            n0 = v_full.cols_range(0, k);
        } else if (restart == 1 && mixed_block(u_full, k) && mixed_block(v_full, k)) {
            m0 = phase * *mixed_block(u_full, k);
            n0 = *mixed_block(v_full, k);
        } else {
            const std::uint64_t sub = mix_seed(seed, static_cast<std::uint64_t>(restart));
            m0 = random_isometry(m, k, mix_seed(sub, 1)).matrix();
            n0 = random_isometry(n, k, mix_seed(sub, 2)).matrix();
        }
        LocalResult lr = levenberg_marquardt(a, std::move(m0), std::move(n0), z, opt.max_iter, target);
        const double res = witness_residual(a, lr.m, lr.n, z);
        if (res < out.best.residual) {
            out.best = WitnessPair{Isometry::trusted(std::move(lr.m)), Isometry::trusted(std::move(lr.n)), z, res,
                                   restart + 1};
        }
        out.best.restarts_used = restart + 1;
        if (res <= opt.tol) {
            out.success = true;
            break;
        }
    }
    return out;
}

ProjectorIntersection projector_intersection_check(const ComplexMatrix& a, std::size_t k,
                                                   std::size_t n_trials, std::uint64_t seed) {
    require_finite(a, "projector_intersection_check");
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (k < 1 || k > std::min(m, n)) throw InputError("projector_intersection_check: need 1 <= k <= min(m, n)");
    const SvdResult s = svd(a);
    ProjectorIntersection rep;
    rep.sigma_k = s.sigma[k - 1];
    rep.outer_radius = phi_k_region(a, k).region.outer_radius();
    rep.trials = n_trials;

    const ComplexMatrix v_full = complete_to_unitary(s.right);
    const ComplexMatrix u_full = complete_to_unitary(s.left);
    rep.optimal_right = spectral_norm(a * v_full.cols_range(k - 1, n - k + 1));
    rep.optimal_left = spectral_norm(u_full.cols_range(k - 1, m - k + 1).adjoint() * a);

    rep.min_right = rep.min_left = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < n_trials; ++t) {
        const Isometry g = random_isometry(n, n - k + 1, mix_seed(seed, 2 * t));
        const Isometry l = random_isometry(m, m - k + 1, mix_seed(seed, 2 * t + 1));
        const double right = spectral_norm(a * g.matrix());
        const double left = spectral_norm(l.matrix().adjoint() * a);
        rep.min_right = std::min(rep.min_right, right);
        rep.min_left = std::min(rep.min_left, left);
        if (right < rep.sigma_k - 1e-9) ++rep.below_sigma;
        if (left < rep.sigma_k - 1e-9) ++rep.below_sigma;
        if (rep.outer_radius > right + 1e-9) ++rep.radius_violations;
        if (rep.outer_radius > left + 1e-9) ++rep.radius_violations;
    }
    return rep;
}

}  // namespace nrange::rankk
