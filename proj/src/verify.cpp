#include "nrange/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "nrange/fixtures.hpp"
#include "nrange/fov.hpp"
#include "nrange/io.hpp"
#include "nrange/oracles.hpp"
#include "nrange/projrange.hpp"
#include "nrange/rankk.hpp"
#include "nrange/rectrange.hpp"
#include "nrange/rng.hpp"

namespace nrange::verify {

namespace {

class Check {
public:
    Check(std::string suite, std::string name) { r_.suite = std::move(suite), r_.name = std::move(name); }

    // Records err against limit; the first failing instance is kept.
    void observe(double err, double limit, const std::function<std::string()>& instance) {
        if (std::isnan(err)) err = std::numeric_limits<double>::infinity();
        r_.worst = std::max(r_.worst, err);
        if (err > limit && r_.passed) {
            r_.passed = false;
            r_.detail = instance();
        }
    }
    void require(bool ok, const std::function<std::string()>& instance) { observe(ok ? 0.0 : 1.0, 0.5, instance); }

    CheckResult done() { return std::move(r_); }

private:
    CheckResult r_;
};

std::string mat(const ComplexMatrix& a) {
    std::string s = io::matrix_to_json(a);
    if (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string cnum(cplx z) { return "(" + num(z.real()) + ", " + num(z.imag()) + ")"; }

std::size_t draw_dim(Rng& rng, std::size_t lo, std::size_t hi) {
    const auto span = static_cast<double>(hi - lo + 1);
    return lo + std::min(hi - lo, static_cast<std::size_t>(rng.uniform() * span));
}

// Gaussian matrix with m != n drawn from [lo, hi].
ComplexMatrix random_rect(std::uint64_t seed, std::size_t lo, std::size_t hi) {
    Rng rng(mix_seed(seed, 0x5A));
    std::size_t m = 0, n = 0;
    do {
        m = draw_dim(rng, lo, hi);
        n = draw_dim(rng, lo, hi);
    } while (m == n);
    return random_gaussian(m, n, mix_seed(seed, 0x5B));
}

double radius_of(const rect::WRange& w) { return w.region.outer_radius(); }

// (inner, outer) radii of a circularly symmetric region about 0.
struct Radii {
    bool empty = true;
    double inner = 0.0, outer = 0.0;
};

Radii radii(const Region& r) {
    switch (r.kind()) {
        case RegionKind::Point: return {false, std::abs(r.as<shape::Point>().z), std::abs(r.as<shape::Point>().z)};
        case RegionKind::Disc: return {false, 0.0, r.as<shape::Disc>().radius};
        case RegionKind::Circle: return {false, r.as<shape::Circle>().radius, r.as<shape::Circle>().radius};
        case RegionKind::Annulus: return {false, r.as<shape::Annulus>().inner, r.as<shape::Annulus>().outer};
        default: return {};
    }
}

// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_prop1(const Options& opt) {
    const std::string s = "prop1";
    Check radius(s, "disc_radius_vs_power_iteration");
    Check bwit(s, "boundary_witness_attains_sigma1");
    Check iwit(s, "interior_witness_hits_target");
    Check mc_up(s, "mc_sup_below_sigma1");
    Check mc_att(s, "mc_sup_approaches_sigma1");
    Check rank1(s, "rank1_inner_product_equals_bilinear");
    Check embed(s, "block_embedding_equals_bilinear");
    Check invar(s, "radius_invariances");

    std::vector<ComplexMatrix> cases{fixtures::a1()};
    for (std::uint64_t t = 0; t < 20; ++t) cases.push_back(random_rect(mix_seed(opt.seed, t), 2, 8));

    for (std::size_t c = 0; c < cases.size(); ++c) {
        const ComplexMatrix& a = cases[c];
        const auto inst = [&] { return mat(a); };
        const double s1 = spectral_norm(a);
        const double r = radius_of(rect::w_disc(a));
        const double p = oracles::power_sigma_max(a, 5000, mix_seed(opt.seed, 100 + c));
        radius.observe(std::abs(r - p) / s1, opt.tol, [&] { return inst() + " radius=" + num(r) + " power=" + num(p); });

        for (int j = 0; j < 8; ++j) {
            const double th = 2.0 * kPi * j / 8.0;
            const auto w = rect::boundary_witness(a, th);
            bwit.observe(std::abs(std::abs(w.value) - s1) / std::max(1.0, s1), 1e-10, inst);
            bwit.observe(std::abs(w.value - std::polar(s1, th)) / std::max(1.0, s1), 1e-9, inst);
        }
        for (int j = 0; j < 4; ++j) {
            const cplx z = std::polar(s1 * (0.2 + 0.25 * j), 0.7 + 1.3 * j);
            const auto w = rect::interior_witness(a, z);
            iwit.observe(std::abs(w.value - z) / std::max(1.0, s1), 1e-9, [&] { return inst() + " z=" + cnum(z); });
            const cplx r1 = rect::rank1_value(a, w.y, w.x);
            rank1.observe(std::abs(r1 - w.value) / std::max(1.0, s1), 1e-10, inst);
            const cplx be = rect::block_embedding_value(a, w.x, w.y);
            embed.observe(std::abs(be - w.value) / std::max(1.0, s1), 1e-10, inst);
        }
        const auto mc = oracles::mc_rect_sup(a, 20000, mix_seed(opt.seed, 200 + c));
        mc_up.observe(mc.sup_abs - s1, 1e-12 * std::max(1.0, s1), [&] { return inst() + " sup=" + num(mc.sup_abs); });

        // Invariances of the disc radius.
        const double sc = 1e-12 * std::max(1.0, s1);
        const cplx k{-1.5, 2.0};
        invar.observe(std::abs(radius_of(rect::w_disc(k * a)) - std::abs(k) * r), 10 * sc, inst);
        invar.observe(std::abs(radius_of(rect::w_disc(a.adjoint())) - r), 10 * sc, inst);
        const ComplexMatrix sub = a.block(0, 0, a.rows() - 1, a.cols() - 1 > 0 ? a.cols() - 1 : 1);
        invar.observe(radius_of(rect::w_disc(sub)) - r, 10 * sc, inst);
        const ComplexMatrix u = random_unitary(a.rows(), mix_seed(opt.seed, 300 + c));
        const ComplexMatrix v = random_unitary(a.cols(), mix_seed(opt.seed, 400 + c));
        invar.observe(std::abs(radius_of(rect::w_disc(u.adjoint() * a * v)) - r), 100 * sc, inst);
        const ComplexMatrix b = random_gaussian(a.rows(), a.cols(), mix_seed(opt.seed, 500 + c));
        const double rb = radius_of(rect::w_disc(b));
        invar.observe(radius_of(rect::w_disc(a + b)) - (r + rb), 100 * sc, inst);
        const ComplexMatrix d = block2x2(a, zeros(a.rows(), b.cols()), zeros(b.rows(), a.cols()), b);
        invar.observe(std::abs(radius_of(rect::w_disc(d)) - std::max(r, rb)), 100 * sc, inst);
    }

    // The sampled sup gets close to sigma_1 only when the spheres are small.
    const ComplexMatrix a1 = fixtures::a1();
    const double s1 = spectral_norm(a1);
    const auto mc1 = oracles::mc_rect_sup(a1, 100000, opt.seed);
    mc_att.observe(0.97 * s1 - mc1.sup_abs, 0.0, [&] { return mat(a1) + " sup=" + num(mc1.sup_abs); });
    const ComplexMatrix v34{{3.0}, {4.0}};
    const auto mc2 = oracles::mc_rect_sup(v34, 10000, opt.seed);
    mc_att.observe(4.85 - mc2.sup_abs, 0.0, [&] { return mat(v34) + " sup=" + num(mc2.sup_abs); });

    return {radius.done(), bwit.done(), iwit.done(), mc_up.done(), mc_att.done(), rank1.done(), embed.done(),
            invar.done()};
}

// Support of the intersection of the discs D(z0, |A - z0 B|_F), found by nested golden-section
// minimization of Re(e^{-i theta} z0) + |A - z0 B|_F over z0 = e^{i theta}(s + i t).
double wnorm_support_oracle(const ComplexMatrix& a, const ComplexMatrix& b, double theta, double box) {
    const cplx rot = std::polar(1.0, theta);
    const auto f = [&](double s, double t) { return s + (a - (rot * cplx{s, t}) * b).frobenius_norm(); };
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    const auto golden = [&](auto&& fn, double lo, double hi) {
        double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
        double f1 = fn(x1), f2 = fn(x2);
        for (int it = 0; it < 90; ++it) {
            if (f1 < f2) {
                hi = x2, x2 = x1, f2 = f1;
                x1 = hi - g * (hi - lo), f1 = fn(x1);
            } else {
                lo = x1, x1 = x2, f1 = f2;
                x2 = lo + g * (hi - lo), f2 = fn(x2);
            }
        }
        const double x = 0.5 * (lo + hi);
        return std::pair{x, fn(x)};
    };
    const auto inner = [&](double s) { return golden([&](double t) { return f(s, t); }, -box, box).second; };
    return golden(inner, -box, box).second;
}

std::vector<CheckResult> suite_prop5(const Options& opt) {
    const std::string s = "prop5";
    Check contain(s, "union_inside_frobenius_disc");
    Check attain(s, "union_attains_frobenius_circle");
    Check support(s, "disc_matches_intersection_support");
    Check center(s, "center_bound_under_hypothesis");
    Check unit(s, "unit_norm_B_gives_point");
    Check hyp(s, "small_B_rejected");

    const ComplexMatrix a1 = fixtures::a1();
    const auto rep = rect::wnorm_union(a1, 2000, opt.seed);
    contain.observe(static_cast<double>(rep.violations), 0.0, [&] { return mat(a1) + " violations=" + num(rep.violations); });
    attain.observe(std::abs(rep.sup_abs - std::sqrt(98.25)), 1e-9, [&] { return mat(a1) + " sup=" + num(rep.sup_abs); });

    std::vector<ComplexMatrix> cases{a1};
    for (std::uint64_t t = 0; t < 3; ++t) cases.push_back(random_rect(mix_seed(opt.seed, 50 + t), 2, 4));
    for (std::size_t c = 0; c < cases.size(); ++c) {
        const ComplexMatrix& a = cases[c];
        const double fa = a.frobenius_norm();
        for (std::uint64_t j = 0; j < 3; ++j) {
            ComplexMatrix b = random_gaussian(a.rows(), a.cols(), mix_seed(opt.seed, 1000 + 10 * c + j));
            Rng rng(mix_seed(opt.seed, 2000 + 10 * c + j));
            b *= rng.uniform(1.5, 3.0) / b.frobenius_norm();
            const Region d = rect::wnorm_disc(a, b);
            const double box = 4.0 * fa + 1.0;
            for (int q = 0; q < 12; ++q) {
                const double th = 2.0 * kPi * q / 12.0 + 0.1;
                const double h = wnorm_support_oracle(a, b, th, box);
                const double hd = region_support(d, th);
                support.observe(std::abs(h - hd), 1e-6 * std::max(1.0, fa),
                                [&] { return mat(a) + " B=" + mat(b) + " theta=" + num(th) + " oracle=" + num(h) + " disc=" + num(hd); });
            }
        }
        for (std::uint64_t j = 0; j < 100; ++j) {
            ComplexMatrix b = random_gaussian(a.rows(), a.cols(), mix_seed(opt.seed, 3000 + 200 * c + j));
            if (j % 2 == 0) {
                // Rank one with unit Frobenius norm.
                const CVector y = normalized(b.col(0));
                const CVector x = normalized(random_gaussian(a.cols(), 1, mix_seed(opt.seed, 3500 + 200 * c + j)).col(0));
                b = ComplexMatrix::column(y) * ComplexMatrix::column(x).adjoint();
            } else {
                Rng rng(mix_seed(opt.seed, 3700 + 200 * c + j));
                b *= rng.uniform(0.5, 3.0) / b.frobenius_norm();
            }
            const auto cb = rect::center_bound_check(a, b);
            if (cb.hypothesis) center.require(cb.bound_holds, [&] { return mat(a) + " B=" + mat(b); });
        }
        ComplexMatrix bu = random_gaussian(a.rows(), a.cols(), mix_seed(opt.seed, 4000 + c));
        bu *= 1.0 / bu.frobenius_norm();
        const Region pu = rect::wnorm_disc(a, bu);
        const cplx expect = frobenius_inner(a, bu);
        unit.require(pu.kind() == RegionKind::Point && std::abs(pu.as<shape::Point>().z - expect) <= 1e-12 * std::max(1.0, fa),
                     [&] { return mat(a) + " B=" + mat(bu); });
        bool threw = false;
        try {
            (void)rect::wnorm_disc(a, 0.5 * bu);
        } catch (const DomainError&) {
            threw = true;
        }
        hyp.require(threw, [&] { return mat(a); });
    }
    return {contain.done(), attain.done(), support.done(), center.done(), unit.done(), hyp.done()};
}

std::vector<CheckResult> suite_prop7(const Options& opt) {
    const std::string s = "prop7";
    Check ellipse(s, "ellipse_matches_sweep");
    Check axis(s, "zero_focus_disc_radius_is_half_minor");
    Check hh(s, "householder_compression_same_range");
    Check seg(s, "collinear_vector_gives_segment");

    const auto grid = angle_grid(kDefaultAngles);
    const auto padded = [](const CVector& a) {
        ComplexMatrix m(a.size(), a.size());
        for (std::size_t i = 0; i < a.size(); ++i) m(i, 0) = a[i];
        return m;
    };
    for (std::uint64_t t = 0; t < 20; ++t) {
        Rng rng(mix_seed(opt.seed, 700 + t));
        const std::size_t m = draw_dim(rng, 2, 6);
        CVector a(m);
        for (auto& c : a) c = rng.complex_normal();
        if (t == 0) a[0] = 0.0;
        const auto inst = [&] { return mat(ComplexMatrix::column(a)); };
        const double scale = std::max(1.0, norm2(a));
        const Region e = proj::vector_ellipse(a);
        const BoundaryCurve sweep = fov::fov_boundary(padded(a), kDefaultAngles);
        const BoundaryCurve ce = sample_region(e, grid);
        ellipse.observe(std::max(support_gap(ce, sweep), support_gap(sweep, ce)) / scale, opt.tol, inst);

        const BoundaryCurve comp = fov::fov_boundary(proj::ellipse_compression(a), kDefaultAngles);
        hh.observe(std::max(support_gap(comp, sweep), support_gap(sweep, comp)) / scale, opt.tol, inst);
        const ComplexMatrix red = proj::householder_reduction(a);
        const ComplexMatrix c2 = proj::ellipse_compression(a);
        double off = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                const cplx want = (i < 2 && j < 2) ? c2(i, j) : cplx{};
                off = std::max(off, std::abs(red(i, j) - want));
            }
        hh.observe(off / scale, 1e-12, inst);

        CVector az(a);
        az[0] = 0.0;
        const double minor = norm2(az);
        const Region dz = proj::vector_ellipse(az);
        const BoundaryCurve sz = fov::fov_boundary(padded(az), kDefaultAngles);
        axis.observe(std::abs(dz.outer_radius() - minor / 2.0) / scale, 1e-12, inst);
        axis.observe(std::abs(sz.support_at(0.0) - minor / 2.0) / scale, opt.tol, inst);

        CVector ac(m);
        ac[0] = a[0];
        const Region sg = proj::vector_ellipse(ac);
        seg.require(sg.kind() == RegionKind::Segment || (a[0] == cplx{} && sg.kind() == RegionKind::Point), inst);
    }
    return {ellipse.done(), axis.done(), hh.done(), seg.done()};
}

std::vector<CheckResult> suite_prop8(const Options& opt) {
    const std::string s = "prop8";
    Check incl(s, "lower_range_inside_higher_range");
    Check spec(s, "top_block_spectrum_inside_higher_range");
    Check reim(s, "re_im_parts_match_axis_projections");
    Check inner(s, "union_of_lower_ranges_is_disc");
    Check sim(s, "unitary_similarity_of_higher_range");

    constexpr std::size_t n_ang = 360;
    for (std::uint64_t t = 0; t < 50; ++t) {
        const ComplexMatrix a = random_rect(mix_seed(opt.seed, 800 + t), 2, 6);
        const std::size_t big = std::max(a.rows(), a.cols()), small = std::min(a.rows(), a.cols());
        const Isometry h = random_isometry(big, small, mix_seed(opt.seed, 900 + t));
        const proj::ProjectorSetting ps(a, h.matrix());
        const auto inst = [&] { return mat(a) + " H=" + mat(h.matrix()); };
        const double sc = std::max(1.0, spectral_norm(a));
        const BoundaryCurve wl = proj::w_lower(ps, n_ang);
        const BoundaryCurve wh = proj::w_higher(ps, n_ang);
        incl.observe(support_gap(wl, wh) / sc, 1e-9, inst);

        if (ps.orientation() == proj::Orientation::Tall && t < 20) {
            const auto lead = proj::ProjectorSetting::leading(a);
            const Region whr = Region::boundary(proj::w_higher(lead, n_ang));
            for (const cplx lam : eigenvalues(a.block(0, 0, small, small))) {
                spec.require(region_contains(whr, lam, 1e-8 * sc), [&] { return mat(a) + " lambda=" + cnum(lam); });
            }
            if (a.rows() > a.cols()) {
                const auto parts = proj::re_im_parts(a);
                const BoundaryCurve whl = proj::w_higher(lead, n_ang);
                const auto re = proj::real_projection(whl);
                const auto im = proj::imag_projection(whl);
                const HermEig er = hermitian_eigen(parts.real_part);
                const HermEig ei = hermitian_eigen(parts.imag_part);
                const double err = std::max({std::abs(re.hi - er.lambda.front()), std::abs(re.lo - er.lambda.back()),
                                             std::abs(im.hi - ei.lambda.front()), std::abs(im.lo - ei.lambda.back())});
                reim.observe(err / sc, opt.tol, inst);
            }
        }
        if (t < 10) {
            const double s1 = spectral_norm(a);
            double best = 0.0;
            for (std::uint64_t q = 0; q < 100; ++q) {
                const proj::ProjectorSetting pq(a, random_isometry(big, small, mix_seed(opt.seed, 10000 + 100 * t + q)).matrix());
                for (const cplx z : proj::w_lower(pq, 180).points) best = std::max(best, std::abs(z));
            }
            inner.observe(best - s1, 1e-9 * sc, inst);
            // H = U V^* maps v_1 to u_1, so the compression attains sigma_1.
            const SvdResult sv = svd(a);
            const ComplexMatrix hs = a.rows() >= a.cols() ? sv.left.matrix() * sv.right.matrix().adjoint()
                                                          : sv.right.matrix() * sv.left.matrix().adjoint();
            const proj::ProjectorSetting pu(a, hs);
            double top = 0.0;
            for (const cplx z : proj::w_lower(pu, n_ang).points) top = std::max(top, std::abs(z));
            inner.observe(std::abs(top - s1) / sc, 1e-9, inst);

            if (ps.orientation() == proj::Orientation::Tall) {
                const ComplexMatrix u = complete_to_unitary(h);
                const ComplexMatrix r = u.cols_range(small, big - small);
                const ComplexMatrix stacked = hstack(vstack(h.matrix().adjoint() * a, r.adjoint() * a), zeros(big, big - small));
                const BoundaryCurve ws = fov::fov_boundary(stacked, n_ang);
                sim.observe(std::max(support_gap(ws, wh), support_gap(wh, ws)) / sc, opt.tol, inst);
            }
        }
    }
    return {incl.done(), spec.done(), reim.done(), inner.done(), sim.done()};
}

std::vector<CheckResult> suite_prop9(const Options& opt) {
    const std::string s = "prop9";
    Check transfer(s, "higher_corners_transfer_to_lower");
    Check known(s, "constructed_corner_detected");
    Check conv_l(s, "a2_corner_5i_sharp_in_lower");
    Check conv_h(s, "a2_corner_5i_not_sharp_in_higher");
    Check spec(s, "a2_compressed_spectrum");

    for (std::uint64_t t = 0; t < 10; ++t) {
        Rng rng(mix_seed(opt.seed, 1100 + t));
        const std::size_t n = draw_dim(rng, 2, 4);
        const std::size_t m = n + draw_dim(rng, 1, 2);
        ComplexMatrix a = random_gaussian(m, n, mix_seed(opt.seed, 1200 + t));
        a *= 0.3;
        const cplx lam = std::polar(5.0 + rng.uniform(), rng.uniform(0.0, 2.0 * kPi));
        for (std::size_t i = 0; i < m; ++i) a(i, 0) = 0.0;
        for (std::size_t j = 0; j < n; ++j) a(0, j) = 0.0;
        a(0, 0) = lam;
        const auto inst = [&] { return mat(a) + " lambda0=" + cnum(lam); };
        const auto rep = proj::sharp_transfer_report(proj::ProjectorSetting::leading(a));
        bool found = false;
        for (const auto& e : rep) {
            transfer.require(e.in_spectrum && e.sharp_in_lower, inst);
            if (std::abs(e.lambda0 - lam) <= 1e-6) found = true;
        }
        known.require(found, inst);
    }

    const ComplexMatrix a2 = fixtures::a2();
    const proj::ProjectorSetting ps(a2, fixtures::a2_frame());
    const ComplexMatrix lower = ps.lower_matrix();
    const ComplexMatrix higher = ps.higher_matrix();
    const double tol = 1e-6 * spectral_norm(a2);
    const auto sl = fov::sharp_eigenvalues(lower, fov::fov_boundary(lower), fov::default_min_cone_width(kDefaultAngles), tol);
    const auto sh = fov::sharp_eigenvalues(higher, fov::fov_boundary(higher), fov::default_min_cone_width(kDefaultAngles), tol);
    const cplx five_i{0.0, 5.0};
    double dl = std::numeric_limits<double>::infinity(), dh = dl;
    for (const auto& p : sl) dl = std::min(dl, std::abs(p.location - five_i));
    for (const auto& p : sh) dh = std::min(dh, std::abs(p.location - five_i));
    conv_l.observe(dl, 1e-6, [&] { return mat(a2) + " distance=" + num(dl); });
    conv_h.require(dh > 1e-3, [&] { return mat(a2) + " distance=" + num(dh); });
    CVector ev = eigenvalues(lower);
    const CVector want{five_i, 0.0, 0.0};
    double err = 0.0;
    for (const cplx w : want) err = std::max(err, fov::distance_to_set(w, ev));
    for (const cplx e : ev) err = std::max(err, fov::distance_to_set(e, want));
    spec.observe(err, 1e-10, [&] { return mat(lower); });
    const CVector evh = eigenvalues(higher);
    spec.observe(std::max(fov::distance_to_set(five_i, evh), fov::distance_to_set(0.0, evh)), 1e-10, [&] { return mat(higher); });
    return {transfer.done(), known.done(), conv_l.done(), conv_h.done(), spec.done()};
}

const std::vector<std::pair<std::size_t, std::size_t>>& rank_shapes() {
    static const std::vector<std::pair<std::size_t, std::size_t>> s{{2, 2}, {3, 2}, {2, 3}, {3, 3}, {4, 2},
                                                                    {4, 3}, {5, 3}, {4, 4}, {6, 4}, {5, 5}};
    return s;
}

std::vector<CheckResult> suite_prop12(const Options& opt) {
    const std::string s = "prop12";
    Check first(s, "rank1_range_equals_rectangular_range");
    Check nest(s, "rank_k_ranges_nested");
    for (std::size_t c = 0; c < rank_shapes().size(); ++c) {
        const auto [m, n] = rank_shapes()[c];
        for (std::uint64_t t = 0; t < 3; ++t) {
            const ComplexMatrix a = random_gaussian(m, n, mix_seed(opt.seed, 1300 + 10 * c + t));
            const auto inst = [&] { return mat(a); };
            const double s1 = spectral_norm(a);
            const Region p1 = rankk::phi_k_region(a, 1).region;
            const Region w = rect::w_disc(a).region;
            first.require(p1.kind() == RegionKind::Disc, inst);
            first.observe(std::abs(p1.outer_radius() - w.outer_radius()) / s1, 1e-12, inst);
            first.observe(std::abs(p1.outer_radius() - oracles::power_sigma_max(a, 5000, opt.seed)) / s1, opt.tol, inst);
            for (std::size_t k = 1; k <= std::min(m, n); ++k) {
                const Radii outer = radii(rankk::phi_k_region(a, k).region);
                const Radii in = radii(rankk::phi_k_region(a, k + 1).region);
                if (in.empty) continue;
                nest.require(!outer.empty && in.outer <= outer.outer * (1 + 1e-12) && in.inner >= outer.inner * (1 - 1e-12),
                             [&] { return inst() + " k=" + std::to_string(k); });
            }
        }
    }
    return {first.done(), nest.done()};
}

std::vector<CheckResult> suite_prop13(const Options& opt) {
    const std::string s = "prop13";
    Check unitary(s, "unitary_invariance");
    Check conj(s, "adjoint_and_scaling");
    Check circ(s, "rotated_witness_certifies_rotated_point");
    Check block(s, "block_matrix_eigenvalues");
    Check lam(s, "hermitian_interval_of_block_matrix");
    Check proj_bound(s, "certified_points_project_into_interval");

    for (std::uint64_t t = 0; t < 10; ++t) {
        const ComplexMatrix a = random_rect(mix_seed(opt.seed, 1400 + t), 2, 5);
        const std::size_t m = a.rows(), n = a.cols(), q = std::min(m, n);
        const auto inst = [&] { return mat(a); };
        const std::vector<double> sig = singular_values(a);
        const double s1 = sig.front();

        const ComplexMatrix u = random_unitary(m, mix_seed(opt.seed, 1500 + t));
        const ComplexMatrix v = random_unitary(n, mix_seed(opt.seed, 1600 + t));
        const ComplexMatrix b = u.adjoint() * a * v;
        for (std::size_t k = 1; k <= q + 1; ++k) {
            const Radii ra = radii(rankk::phi_k_region(a, k).region);
            const Radii rb = radii(rankk::phi_k_region(b, k).region);
            const Radii rc = radii(rankk::phi_k_region(a.adjoint(), k).region);
            const Radii rs = radii(rankk::phi_k_region(cplx{0.0, -2.0} * a, k).region);
            unitary.require(ra.empty == rb.empty, inst);
            unitary.observe(std::max(std::abs(ra.inner - rb.inner), std::abs(ra.outer - rb.outer)) / s1, 1e-10, inst);
            conj.observe(std::max(std::abs(ra.inner - rc.inner), std::abs(ra.outer - rc.outer)) / s1, 1e-12, inst);
            conj.observe(std::max(std::abs(2 * ra.inner - rs.inner), std::abs(2 * ra.outer - rs.outer)) / s1, 1e-12, inst);
        }

        const ComplexMatrix big = block2x2(zeros(m, m), a, a.adjoint(), zeros(n, n));
        std::vector<double> want;
        for (double x : sig) want.push_back(x), want.push_back(-x);
        for (std::size_t i = 0; i < m + n - 2 * q; ++i) want.push_back(0.0);
        std::sort(want.begin(), want.end(), std::greater<>());
        const HermEig he = hermitian_eigen(big);
        double err = 0.0;
        for (std::size_t i = 0; i < want.size(); ++i) err = std::max(err, std::abs(he.lambda[i] - want[i]));
        block.observe(err, 1e-9 * std::max(1.0, s1), inst);
        for (std::size_t k = 1; k <= q; ++k) {
            const Region r = rankk::lambda_k_hermitian(big, k);
            double e = std::numeric_limits<double>::infinity();
            if (r.kind() == RegionKind::Segment) {
                const auto& sg = r.as<shape::Segment>();
                e = std::max(std::abs(sg.a - cplx{-sig[k - 1]}), std::abs(sg.b - cplx{sig[k - 1]}));
            } else if (r.kind() == RegionKind::Point) {
                e = std::abs(r.as<shape::Point>().z) + sig[k - 1];
            }
            lam.observe(e, 1e-9 * std::max(1.0, s1), [&] { return inst() + " k=" + std::to_string(k); });
        }

        for (std::size_t k = 1; k <= std::min<std::size_t>(q, 2); ++k) {
            const auto cls = rankk::phi_k_region(a, k);
            if (cls.region.kind() == RegionKind::Empty) continue;
            const Radii rr = radii(cls.region);
            const cplx z = std::polar(0.5 * (rr.inner + rr.outer), 0.4 + t);
            const auto w = rankk::find_witness(a, k, z, mix_seed(opt.seed, 1700 + t));
            if (!w.success) continue;
            const double sk = sig[k - 1];
            proj_bound.observe(std::max({std::abs(z.real()), std::abs(z.imag())}) - sk, 1e-9,
                               [&] { return inst() + " z=" + cnum(z); });
            for (double phi : {0.3, 1.7, -2.2}) {
                const auto rw = rankk::rotate_witness(a, w.best, phi);
                circ.observe(std::abs(rw.residual - w.best.residual), 1e-12, [&] { return inst() + " z=" + cnum(z); });
                circ.observe(std::abs(rw.z - std::polar(1.0, phi) * z), 1e-12 * std::max(1.0, s1), inst);
            }
        }
    }
    return {unitary.done(), conj.done(), circ.done(), block.done(), lam.done(), proj_bound.done()};
}

rankk::Regime expected_regime(std::size_t m, std::size_t n, std::size_t k) {
    if (k > std::min(m, n)) return rankk::Regime::Empty;
    const double half = std::max(m, n) / 2.0;
    if (static_cast<double>(k) <= half) return rankk::Regime::Low;
    if (static_cast<double>(k) <= (m + n + 1) / 3.0) return rankk::Regime::Ring;
    return rankk::Regime::Empty;
}

std::vector<CheckResult> suite_prop14(const Options& opt) {
    const std::string s = "prop14";
    Check tri(s, "regime_trichotomy");
    Check cases(s, "worked_cases");
    Check formula(s, "region_agrees_with_interlacing_test");
    Check witness(s, "witness_search_agrees_with_formula");

    for (std::size_t m = 1; m <= 7; ++m)
        for (std::size_t n = 1; n <= 7; ++n)
            for (std::size_t k = 1; k <= 8; ++k)
                tri.require(rankk::classify(m, n, k) == expected_regime(m, n, k),
                            [&] { return std::to_string(m) + "x" + std::to_string(n) + " k=" + std::to_string(k); });

    {
        const ComplexMatrix a64 = random_gaussian(6, 4, mix_seed(opt.seed, 1800));
        const auto c = rankk::phi_k_region(a64, 2);
        cases.require(c.region.kind() == RegionKind::Disc && std::abs(c.region.outer_radius() - c.sigma[1]) <= 1e-12 * c.sigma[0],
                      [&] { return mat(a64) + " k=2"; });
        const ComplexMatrix a32 = random_gaussian(3, 2, mix_seed(opt.seed, 1801));
        const auto c2 = rankk::phi_k_region(a32, 2);
        cases.require(c2.region.kind() == RegionKind::Circle && std::abs(c2.region.outer_radius() - c2.sigma[1]) <= 1e-12 * c2.sigma[0],
                      [&] { return mat(a32) + " k=2"; });
        const ComplexMatrix a22 = random_gaussian(2, 2, mix_seed(opt.seed, 1802));
        cases.require(rankk::phi_k_region(a22, 2).region.kind() == RegionKind::Empty, [&] { return mat(a22) + " k=2"; });
    }

    for (std::size_t c = 0; c < rank_shapes().size(); ++c) {
        const auto [m, n] = rank_shapes()[c];
        for (std::uint64_t t = 0; t < 3; ++t) {
            const ComplexMatrix a = random_gaussian(m, n, mix_seed(opt.seed, 1900 + 10 * c + t));
            const double s1 = spectral_norm(a);
            for (std::size_t k = 1; k <= std::min(m, n) + 1; ++k) {
                const auto cls = rankk::phi_k_region(a, k);
                const auto inst = [&] { return mat(a) + " k=" + std::to_string(k); };
                tri.require(cls.regime == expected_regime(m, n, k), inst);
                const double outer = k <= cls.sigma.size() ? cls.sigma[k - 1] : 0.0;
                const std::size_t ii = m + n - 2 * k + 1;
                const double inner = ii >= 1 && ii <= cls.sigma.size() ? cls.sigma[ii - 1] : 0.0;
                std::vector<double> probes{0.0, 0.5 * outer, outer * (1 - 1e-4), outer * (1 + 1e-4), 1.5 * outer,
                                           inner * (1 - 1e-4), inner * (1 + 1e-4), 0.5 * (inner + outer)};
                for (std::size_t p = 0; p < probes.size(); ++p) {
                    const cplx z = std::polar(probes[p], 0.9 + 0.77 * p);
                    const bool by_region = region_contains(cls.region, z, 1e-12 * s1);
                    const bool by_formula = rankk::phi_k_contains(a, k, z, 1e-12 * s1);
                    formula.require(by_region == by_formula, [&] { return inst() + " z=" + cnum(z); });
                }
                if (k > std::min(m, n) || t > 0 || m * n > 12) continue;
                for (double f : {0.3, 0.97, 1.03}) {
                    const cplx z = std::polar(f * outer + (1 - f) * inner, 2.1 + f);
                    const bool in = rankk::phi_k_contains(a, k, z, 1e-12 * s1);
                    rankk::WitnessOptions wo;
                    wo.restarts = in ? 20 : 3;
                    const auto w = rankk::find_witness(a, k, z, mix_seed(opt.seed, 2000 + c), wo);
                    if (in) {
                        witness.observe(w.best.residual, 1e-6, [&] { return inst() + " z=" + cnum(z); });
                    } else {
                        witness.require(!w.success, [&] { return inst() + " z=" + cnum(z); });
                    }
                }
            }
        }
    }
    return {tri.done(), cases.done(), formula.done(), witness.done()};
}

std::vector<CheckResult> suite_prop16(const Options& opt) {
    const std::string s = "prop16";
    Check lower(s, "sampled_compressions_bounded_below");
    Check attain(s, "singular_subspace_attains_sigma_k");
    Check radius(s, "outer_radius_below_sampled_radii");
    for (std::uint64_t t = 0; t < 10; ++t) {
        const ComplexMatrix a = random_rect(mix_seed(opt.seed, 2100 + t), 2, 6);
        for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
            const auto rep = rankk::projector_intersection_check(a, k, 100, mix_seed(opt.seed, 2200 + 10 * t + k));
            const auto inst = [&] { return mat(a) + " k=" + std::to_string(k); };
            lower.observe(static_cast<double>(rep.below_sigma), 0.0, inst);
            attain.observe(std::max(std::abs(rep.optimal_right - rep.sigma_k), std::abs(rep.optimal_left - rep.sigma_k)),
                           1e-9 * std::max(1.0, rep.sigma_k), inst);
            radius.observe(static_cast<double>(rep.radius_violations), 0.0, inst);
        }
    }
    return {lower.done(), attain.done(), radius.done()};
}

using SuiteFn = std::vector<CheckResult> (*)(const Options&);

const std::map<std::string, SuiteFn, std::less<>>& registry() {
    static const std::map<std::string, SuiteFn, std::less<>> r{
        {"prop1", suite_prop1},   {"prop5", suite_prop5},   {"prop7", suite_prop7},
        {"prop8", suite_prop8},   {"prop9", suite_prop9},   {"prop12", suite_prop12},
        {"prop13", suite_prop13}, {"prop14", suite_prop14}, {"prop16", suite_prop16}};
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"prop1",  "prop5",  "prop7",  "prop8", "prop9",
                                                "prop12", "prop13", "prop14", "prop16"};
    return names;
}

bool is_suite(std::string_view name) { return name == "all" || registry().contains(name); }

std::vector<CheckResult> run(std::string_view suite, const Options& opt) {
    if (!is_suite(suite)) throw InputError("unknown suite '" + std::string(suite) + "'");
    std::vector<CheckResult> out;
    for (const auto& name : suite_names()) {
        if (suite != "all" && suite != name) continue;
        for (auto& r : registry().find(name)->second(opt)) out.push_back(std::move(r));
    }
    return out;
}

std::string format_table(const std::vector<CheckResult>& results) {
    std::ostringstream os;
    std::size_t fails = 0;
    for (const auto& r : results) {
        char buf[256];
        std::snprintf(buf, sizeof buf, "%-4s  %-7s %-48s worst=%.3e\n", r.passed ? "PASS" : "FAIL", r.suite.c_str(),
                      r.name.c_str(), r.worst);
        os << buf;
        if (!r.passed) ++fails;
    }
    os << results.size() - fails << "/" << results.size() << " checks passed\n";
    return os.str();
}

}  // namespace nrange::verify
