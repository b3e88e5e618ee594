#include "nrange/rectrange.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nrange/detail/mutation.hpp"
#include "nrange/rng.hpp"

namespace nrange::rect {

namespace {

void require_unit(std::span<const cplx> v, std::size_t len, const char* what) {
    if (v.size() != len) {
        throw InputError(std::string(what) + ": expected length " + std::to_string(len) + ", got " +
                         std::to_string(v.size()));
    }
    if (std::abs(norm2(v) - 1.0) > 1e-8) throw InputError(std::string(what) + ": vector is not a unit vector");
}

cplx bilinear(const ComplexMatrix& a, std::span<const cplx> x, std::span<const cplx> y) {
    return dot(y, a * x);
}

// Unit vector orthogonal to the unit vector u (needs dim >= 2).
CVector orthogonal_unit(std::span<const cplx> u) {
    const ComplexMatrix full = complete_to_unitary(Isometry::trusted(ComplexMatrix::column(u)));
    return full.col(1);
}

}  // namespace

WRange w_disc(const ComplexMatrix& a) {
    require_finite(a, "w_disc");
    WRange out;
    out.sigma_max = spectral_norm(a);
    const double r = out.sigma_max * detail::mutation_factor(detail::Mutant::WDisc);
    if (a.rows() == 1 && a.cols() == 1) {
        out.scalar_circle = true;
        out.region = Region::circle(0.0, r);
    } else {
        out.region = Region::disc(0.0, r);
    }
    return out;
}

cplx w_value(const ComplexMatrix& a, std::span<const cplx> x, std::span<const cplx> y) {
    require_finite(a, "w_value");
    require_unit(x, a.cols(), "w_value x");
    require_unit(y, a.rows(), "w_value y");
    return bilinear(a, x, y);
}

WitnessVectors boundary_witness(const ComplexMatrix& a, double theta) {
    const SvdResult s = svd(a);
    if (s.sigma.front() == 0.0) throw DomainError("boundary_witness: zero matrix has no boundary witness");
    WitnessVectors w;
    w.x = s.right.matrix().col(0);
    w.y = s.left.matrix().col(0);
    const cplx ph = std::polar(1.0, -theta);
    for (auto& c : w.y) c *= ph;  // y^* A x = e^{i theta} sigma_1
    w.value = bilinear(a, w.x, w.y);
    return w;
}

WitnessVectors interior_witness(const ComplexMatrix& a, cplx z) {
    require_finite(a, "interior_witness");
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (m == 1 && n == 1) throw InputError("interior_witness: 1x1 matrices have no interior points");
    if (m == 1) {
        // w(A) = w(A^*) with the roles of x and y swapped and z conjugated.
        const WitnessVectors t = interior_witness(a.adjoint(), std::conj(z));
        WitnessVectors w{t.y, t.x, {}};
        w.value = bilinear(a, w.x, w.y);
        return w;
    }
    const SvdResult s = svd(a);
    const double s1 = s.sigma.front();
    if (std::abs(z) > s1 + 1e-9) {
        std::ostringstream os;
        os << "interior_witness: |z| = " << std::abs(z) << " exceeds sigma_1 = " << s1;
        throw OutOfRangeError(os.str());
    }
    WitnessVectors w;
    w.x = s.right.matrix().col(0);
    const CVector u = s.left.matrix().col(0);  // A x = sigma_1 u
    const CVector y0 = orthogonal_unit(u);
    const double c = s1 > 0.0 ? std::min(1.0, std::abs(z) / s1) : 0.0;
    const double sn = std::sqrt(std::max(0.0, 1.0 - c * c));
    const cplx ph = std::abs(z) > 0.0 ? std::conj(z) / std::abs(z) : cplx{1.0};
    w.y.resize(m);
    for (std::size_t i = 0; i < m; ++i) w.y[i] = c * ph * u[i] + sn * y0[i];
    w.value = bilinear(a, w.x, w.y);
    return w;
}

double compression_radius(const ComplexMatrix& a, const ComplexMatrix& xi, const ComplexMatrix& h) {
    require_finite(a, "compression_radius");
    if (xi.rows() != a.rows() || h.rows() != a.cols()) throw InputError("compression_radius: frame dimensions do not match A");
    const Isometry fx(xi);
    const Isometry fh(h);
    return spectral_norm(fx.matrix().adjoint() * a * fh.matrix());
}

Region wnorm_disc(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_finite(a, "wnorm_disc A");
    require_finite(b, "wnorm_disc B");
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InputError("wnorm_disc: A is " + shape_string(a) + " but B is " + shape_string(b));
    }
    const double bn = b.frobenius_norm();
    const double bn2 = bn * bn;
    if (bn2 < 1.0 - 1e-12) {
        std::ostringstream os;
        os << "wnorm_disc: hypothesis |B|_F >= 1 violated (|B|_F = " << std::sqrt(bn2) << ")";
        throw DomainError(os.str());
    }
    const cplx c = frobenius_inner(a, b) / bn2;
    const double resid = (a - c * b).frobenius_norm();
    double r = resid * std::sqrt(std::max(0.0, 1.0 - 1.0 / bn2));
    if (r <= 1e-15 * std::max(1.0, a.frobenius_norm())) r = 0.0;
    return Region::disc(c, r * detail::mutation_factor(detail::Mutant::WnormDisc));
}

WnormUnionReport wnorm_union(const ComplexMatrix& a, std::size_t n_samples, std::uint64_t seed) {
    require_finite(a, "wnorm_union");
    WnormUnionReport rep;
    rep.frobenius = a.frobenius_norm();
    const double limit = rep.frobenius + 1e-9;

    auto account = [&](Region d) {
        double reach = 0.0;
        if (d.kind() == RegionKind::Point) {
            reach = std::abs(d.as<shape::Point>().z);
        } else {
            const auto& s = d.as<shape::Disc>();
            reach = std::abs(s.center) + s.radius;
        }
        rep.sup_abs = std::max(rep.sup_abs, reach);
        if (reach > limit) ++rep.violations;
        ++rep.n_discs;
        rep.discs.push_back(std::move(d));
    };

    for (std::size_t s = 0; s < n_samples; ++s) {
        const std::uint64_t sub = mix_seed(seed, s);
        ComplexMatrix g = random_gaussian(a.rows(), a.cols(), sub);
        Rng scale_rng(mix_seed(sub, 0xB));
        const double target = scale_rng.uniform(1.0, 3.0);
        g *= target / g.frobenius_norm();
        account(wnorm_disc(a, g));
    }
    constexpr int kAttaining = 32;
    for (int j = 0; j < kAttaining; ++j) {
        const double theta = 2.0 * kPi * j / kAttaining;
        ComplexMatrix b0(a.rows(), a.cols());
        if (rep.frobenius > 0.0) {
            b0 = (std::polar(1.0, -theta) / rep.frobenius) * a;
        } else {
            b0(0, 0) = std::polar(1.0, -theta);
        }
        account(wnorm_disc(a, b0));
    }
    return rep;
}

CenterBound center_bound_check(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_finite(a, "center_bound_check A");
    require_finite(b, "center_bound_check B");
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("center_bound_check: shape mismatch");
    const std::vector<double> sb = singular_values(b);
    if (sb.front() == 0.0) throw InputError("center_bound_check: B must be nonzero");
    CenterBound out;
    double ss = 0.0;
    for (double s : sb) {
        if (s > 1e-10 * sb.front()) ++out.rank;
        ss += s * s;
    }
    out.hypothesis = std::sqrt(ss) >= std::sqrt(static_cast<double>(out.rank)) * (1.0 - 1e-12);
    out.sigma_max = spectral_norm(a);
    out.center_abs = std::abs(frobenius_inner(a, b)) / ss;
    out.bound_holds = out.center_abs <= out.sigma_max * (1.0 + 1e-12) + 1e-300;
    return out;
}

cplx rank1_value(const ComplexMatrix& a, std::span<const cplx> y, std::span<const cplx> x) {
    require_unit(x, a.cols(), "rank1_value x");
    require_unit(y, a.rows(), "rank1_value y");
    return frobenius_inner(a, ComplexMatrix::column(y) * ComplexMatrix::column(x).adjoint());
}

cplx block_embedding_value(const ComplexMatrix& a, std::span<const cplx> x, std::span<const cplx> y) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    ComplexMatrix big = block2x2(zeros(m, m), 2.0 * a, zeros(n, m), zeros(n, n));
    CVector omega(m + n);
    const double s = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < m; ++i) omega[i] = s * y[i];
    for (std::size_t j = 0; j < n; ++j) omega[m + j] = s * x[j];
    return dot(omega, big * std::span<const cplx>(omega));
}

}  // namespace nrange::rect
