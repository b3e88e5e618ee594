// Acceptance run: one PASS/FAIL line per criterion.
//
// Exit status is 0 when the set of failing criteria equals --known-failures (empty by default),
// so a criterion that starts passing or a new failure both turn the run red.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nrange/fixtures.hpp"
#include "nrange/fov.hpp"
#include "nrange/oracles.hpp"
#include "nrange/projrange.hpp"
#include "nrange/rankk.hpp"
#include "nrange/rectrange.hpp"
#include "nrange/rng.hpp"

using namespace nrange;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void fail(std::string why) {
        if (pass) notes.insert(notes.begin(), "first failure: " + why);
        pass = false;
    }
    void note(std::string s) { notes.push_back(std::move(s)); }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string shape(const ComplexMatrix& a) { return shape_string(a); }

std::size_t draw_dim(Rng& rng, std::size_t lo, std::size_t hi) {
    return lo + std::min(hi - lo, static_cast<std::size_t>(rng.uniform() * static_cast<double>(hi - lo + 1)));
}

ComplexMatrix random_rect(std::uint64_t seed, std::size_t lo, std::size_t hi) {
    Rng rng(mix_seed(seed, 1));
    std::size_t m = 0, n = 0;
    do {
        m = draw_dim(rng, lo, hi);
        n = draw_dim(rng, lo, hi);
    } while (m == n);
    return random_gaussian(m, n, mix_seed(seed, 2));
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double two_way_gap(const BoundaryCurve& a, const BoundaryCurve& b) {
    return std::max(support_gap(a, b), support_gap(b, a));
}

// ---------------------------------------------------------------------------

Outcome disc_radius() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<ComplexMatrix> mats;
    for (std::uint64_t i = 0; i < 20; ++i) mats.push_back(random_rect(mix_seed(kSeed, 100 + i), 2, 8));
    mats.push_back(fixtures::a1());

    double worst_power = 0.0, worst_witness = 0.0, min_ratio = 1e300, max_excess = -1e300;
    std::size_t mc_low = 0;
    for (std::size_t i = 0; i < mats.size(); ++i) {
        const ComplexMatrix& a = mats[i];
        const double s1 = spectral_norm(a);
        const double r = rect::w_disc(a).region.outer_radius();
        const double p = oracles::power_sigma_max(a, 20000, mix_seed(kSeed, 200 + i));
        const double rel = std::abs(r - p) / s1;
        worst_power = std::max(worst_power, rel);
        if (rel > 1e-8) o.fail(shape(a) + " radius " + fmt(r) + " vs power " + fmt(p));

        for (int j = 0; j < 8; ++j) {
            const auto w = rect::boundary_witness(a, j * kPi / 4.0 + 0.1);
            const double err = std::abs(std::abs(rect::w_value(a, w.x, w.y)) - s1);
            worst_witness = std::max(worst_witness, err);
            if (err > 1e-10) o.fail(shape(a) + " witness misses sigma_1 by " + fmt(err));
        }

        const auto mc = oracles::mc_rect_sup(a, 100000, mix_seed(kSeed, 300 + i));
        min_ratio = std::min(min_ratio, mc.sup_abs / s1);
        max_excess = std::max(max_excess, mc.sup_abs - s1);
        if (mc.sup_abs > s1 + 1e-12) o.fail(shape(a) + " Monte Carlo sup exceeds sigma_1");
        if (mc.sup_abs < 0.97 * s1) {
            ++mc_low;
            o.fail(shape(a) + " Monte Carlo sup " + fmt(mc.sup_abs / s1) + " sigma_1 < 0.97 sigma_1");
        }
    }
    const double secs = seconds_since(t0);
    if (secs >= 30.0) o.fail("runtime " + fmt(secs) + " s");
    o.note("radius vs power iteration rel " + fmt(worst_power) + ", witness |y*Ax| err " + fmt(worst_witness));
    o.note("Monte Carlo sup/sigma_1 min " + fmt(min_ratio) + ", " + std::to_string(mc_low) + "/" +
           std::to_string(mats.size()) + " below 0.97, max overshoot " + fmt(max_excess));
    o.note("runtime " + fmt(secs) + " s");
    return o;
}

Outcome field_of_values() {
    Outcome o;
    double worst = 0.0;
    for (std::uint64_t t = 0; t < 20; ++t) {
        Rng rng(mix_seed(kSeed, 400 + t));
        const std::size_t n = draw_dim(rng, 1, 6);
        const ComplexMatrix u = random_unitary(n, mix_seed(kSeed, 500 + t));
        CVector lam(n);
        ComplexMatrix d = zeros(n, n);
        for (std::size_t i = 0; i < n; ++i) d(i, i) = lam[i] = rng.complex_normal() * 2.0;
        const ComplexMatrix a = u * d * u.adjoint();
        const BoundaryCurve f = fov::fov_boundary(a);
        const double gap = two_way_gap(f, hull_curve(lam, f.angles));
        worst = std::max(worst, gap);
        if (gap > 1e-8) o.fail("normal " + shape(a) + " gap " + fmt(gap));
    }
    double circle = 0.0;
    for (const cplx a : {cplx{1.0, 0.0}, cplx{0.3, -1.7}, cplx{-2.5, 0.5}}) {
        const ComplexMatrix nil{{0.0, 2.0 * a}, {0.0, 0.0}};
        const BoundaryCurve f = fov::fov_boundary(nil);
        for (std::size_t i = 0; i < f.size(); ++i) {
            circle = std::max({circle, std::abs(std::abs(f.points[i]) - std::abs(a)), std::abs(f.support[i] - std::abs(a))});
        }
    }
    if (circle > 1e-8) o.fail("nilpotent boundary off the circle by " + fmt(circle));
    o.note("normal support gap " + fmt(worst) + ", nilpotent circle err " + fmt(circle));
    return o;
}

Outcome frobenius_union() {
    Outcome o;
    const auto rep = rect::wnorm_union(fixtures::a1(), 2000, kSeed);
    const double want = std::sqrt(98.25);
    if (rep.violations != 0) o.fail(std::to_string(rep.violations) + " discs leave D(0, |A|_F)");
    if (std::abs(rep.frobenius - want) > 1e-12) o.fail("|A_1|_F = " + fmt(rep.frobenius));
    if (std::abs(rep.sup_abs - want) > 1e-9) o.fail("sup " + fmt(rep.sup_abs) + " vs " + fmt(want));
    o.note(std::to_string(rep.n_discs) + " discs, sup - sqrt(98.25) = " + fmt(rep.sup_abs - want));
    return o;
}

Outcome vector_ellipse() {
    Outcome o;
    double worst = 0.0;
    for (std::uint64_t t = 0; t < 21; ++t) {
        Rng rng(mix_seed(kSeed, 600 + t));
        const std::size_t m = draw_dim(rng, 2, 6);
        CVector a(m);
        for (auto& x : a) x = rng.complex_normal();
        if (t == 20) a[0] = 0.0;
        ComplexMatrix pad = zeros(m, m);
        for (std::size_t i = 0; i < m; ++i) pad(i, 0) = a[i];
        const BoundaryCurve f = fov::fov_boundary(pad);
        const double gap = two_way_gap(sample_region(proj::vector_ellipse(a), f.angles), f);
        worst = std::max(worst, gap);
        if (gap > 1e-8) o.fail("m=" + std::to_string(m) + " gap " + fmt(gap));
        if (t == 20) {
            std::vector<cplx> b(a.begin() + 1, a.end());
            const double half = norm2(b) / 2.0;
            const Region e = proj::vector_ellipse(a);
            const bool ok = e.kind() == RegionKind::Disc && std::abs(e.outer_radius() - half) <= 1e-12 * norm2(b);
            if (!ok) o.fail("a_1 = 0 does not give the disc of radius |b|/2");
            o.note("a_1 = 0: disc radius " + fmt(e.outer_radius()) + " = |b|/2, so the full minor axis is |b|");
        }
    }
    o.note("ellipse vs field-of-values sweep gap " + fmt(worst));
    return o;
}

Outcome projector_ranges() {
    Outcome o;
    double worst = 0.0;
    for (std::uint64_t t = 0; t < 50; ++t) {
        const ComplexMatrix a = random_rect(mix_seed(kSeed, 700 + t), 2, 6);
        const std::size_t big = std::max(a.rows(), a.cols()), small = std::min(a.rows(), a.cols());
        const proj::ProjectorSetting s(a, random_isometry(big, small, mix_seed(kSeed, 800 + t)).matrix());
        const double gap = support_gap(proj::w_lower(s), proj::w_higher(s));
        worst = std::max(worst, gap);
        if (gap > 1e-9) o.fail(shape(a) + " w_l leaves w_h by " + fmt(gap));
    }

    const ComplexMatrix a1 = fixtures::a1();
    const Region wh = Region::boundary(proj::w_higher(proj::ProjectorSetting::leading(a1)));
    CVector spec = eigenvalues(a1.block(0, 0, 2, 2));
    spec.push_back(0.0);
    for (const cplx lam : spec)
        if (!region_contains(wh, lam, 1e-8)) o.fail("eigenvalue of A_1 outside w_h");

    std::size_t corners = 0;
    for (std::uint64_t t = 0; t < 10; ++t) {
        Rng rng(mix_seed(kSeed, 900 + t));
        const std::size_t n = draw_dim(rng, 2, 4);
        const std::size_t m = n + draw_dim(rng, 1, 2);
        ComplexMatrix a = random_gaussian(m, n, mix_seed(kSeed, 1000 + t));
        a *= 0.3;
        for (std::size_t i = 0; i < m; ++i) a(i, 0) = 0.0;
        for (std::size_t j = 0; j < n; ++j) a(0, j) = 0.0;
        const cplx lam = std::polar(5.0 + rng.uniform(), rng.uniform(0.0, 2.0 * kPi));
        a(0, 0) = lam;
        bool found = false;
        for (const auto& e : proj::sharp_transfer_report(proj::ProjectorSetting::leading(a))) {
            if (!e.in_spectrum || !e.sharp_in_lower) o.fail(shape(a) + " corner of w_h not a sharp eigenvalue of w_l");
            found = found || std::abs(e.lambda0 - lam) <= 1e-6;
        }
        if (found) ++corners;
        else o.fail(shape(a) + " planted corner not reported");
    }

    const proj::ProjectorSetting s2(fixtures::a2(), fixtures::a2_frame());
    const ComplexMatrix lower = s2.lower_matrix(), higher = s2.higher_matrix();
    const double cone = fov::default_min_cone_width(kDefaultAngles);
    const double tol = 1e-6 * spectral_norm(fixtures::a2());
    const cplx five_i{0.0, 5.0};
    double dl = 1e300, dh = 1e300;
    for (const auto& p : fov::sharp_eigenvalues(lower, fov::fov_boundary(lower), cone, tol))
        dl = std::min(dl, std::abs(p.location - five_i));
    for (const auto& p : fov::sharp_eigenvalues(higher, fov::fov_boundary(higher), cone, tol))
        dh = std::min(dh, std::abs(p.location - five_i));
    if (dl > 1e-6) o.fail("5i not sharp in w_l (distance " + fmt(dl) + ")");
    if (dh <= 1e-3) o.fail("w_h has a sharp point near 5i");
    const CVector ev = eigenvalues(lower);
    const CVector want{five_i, 0.0, 0.0};
    double err = 0.0;
    for (const cplx w : want) err = std::max(err, fov::distance_to_set(w, ev));
    for (const cplx e : ev) err = std::max(err, fov::distance_to_set(e, want));
    if (err > 1e-10) o.fail("spectrum of H*A_2 off {5i, 0, 0} by " + fmt(err));
    o.note("w_l in w_h gap " + fmt(worst) + ", planted corners found " + std::to_string(corners) + "/10");
    o.note("A_2: 5i sharp in w_l at " + fmt(dl) + ", nearest w_h corner " + (dh > 1e299 ? std::string("none") : fmt(dh)));
    return o;
}

Outcome rank_k() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<std::pair<std::size_t, std::size_t>> shapes{{2, 2}, {3, 2}, {3, 3}, {4, 2}, {4, 3}, {5, 3}};
    const std::vector<double> fractions{0.0, 0.25, 0.5, 0.7, 0.85, 0.95, 1.05, 1.15, 1.3, 1.6, 2.0, 3.0};
    std::size_t certified = 0, inside = 0, searches = 0;
    double worst_inside = 0.0;
    for (std::size_t c = 0; c < shapes.size(); ++c) {
        const auto [m, n] = shapes[c];
        for (std::uint64_t t = 0; t < 5; ++t) {
            const ComplexMatrix a = random_gaussian(m, n, mix_seed(kSeed, 1100 + 10 * c + t));
            const std::vector<double> sig = singular_values(a);
            const double s1 = sig.front();
            double prev_outer = 1e300, prev_inner = 0.0;
            bool prev_empty = false;
            for (std::size_t k = 1; k <= std::min(m, n) + 1; ++k) {
                const auto cls = rankk::phi_k_region(a, k);
                const std::string tag = shape(a) + " k=" + std::to_string(k);
                if (cls.regime != rankk::classify(m, n, k)) o.fail(tag + " regime");
                const bool want_low = 2 * k <= std::max(m, n) && k <= std::min(m, n);
                const bool want_ring = !want_low && k <= std::min(m, n) && 3 * k <= m + n + 1;
                const auto want = want_low ? rankk::Regime::Low : want_ring ? rankk::Regime::Ring : rankk::Regime::Empty;
                if (cls.regime != want) o.fail(tag + " regime " + std::string(rankk::to_string(cls.regime)));

                const bool empty = cls.region.kind() == RegionKind::Empty;
                const double outer = empty ? 0.0 : cls.region.outer_radius();
                double inner = 0.0;
                if (cls.region.kind() == RegionKind::Annulus) inner = cls.region.as<shape::Annulus>().inner;
                if (cls.region.kind() == RegionKind::Circle) inner = outer;
                if (!empty && (prev_empty || outer > prev_outer * (1 + 1e-12) || inner < prev_inner * (1 - 1e-12)))
                    o.fail(tag + " not nested in the rank-" + std::to_string(k - 1) + " range");
                prev_empty = empty, prev_outer = outer, prev_inner = inner;

                const double sk = k <= sig.size() ? sig[k - 1] : sig.back();
                for (std::size_t j = 0; j < fractions.size(); ++j) {
                    const cplx z = std::polar(fractions[j] * sk, j * 2.0 * kPi / 12.0 + 0.3);
                    const bool in = rankk::phi_k_contains(a, k, z, 1e-12 * s1);
                    if (in != region_contains(cls.region, z, 1e-12 * s1)) o.fail(tag + " region disagrees with interlacing");
                    if (k > std::min(m, n)) {
                        if (in) o.fail(tag + " contains points without isometries");
                        continue;
                    }
                    ++searches;
                    const auto w = rankk::find_witness(a, k, z, mix_seed(kSeed, 1200 + 100 * c + 10 * t + k));
                    if (w.success) {
                        ++certified;
                        if (!in) o.fail(tag + " witness for z outside the formula region");
                        if (std::max(std::abs(z.real()), std::abs(z.imag())) > sig[k - 1] + 1e-9)
                            o.fail(tag + " certified z projects outside [-sigma_k, sigma_k]");
                    }
                    if (in) {
                        ++inside;
                        worst_inside = std::max(worst_inside, w.best.residual);
                        if (w.best.residual > 1e-6) o.fail(tag + " no witness for inside z, residual " + fmt(w.best.residual));
                    }
                }
            }
        }
    }
    const double secs = seconds_since(t0);
    if (secs >= 120.0) o.fail("runtime " + fmt(secs) + " s");
    o.note(std::to_string(searches) + " witness searches, " + std::to_string(inside) + " inside, " +
           std::to_string(certified) + " certified, worst inside residual " + fmt(worst_inside));
    o.note("runtime " + fmt(secs) + " s");
    return o;
}

Outcome block_identity() {
    Outcome o;
    double worst = 0.0;
    for (std::uint64_t t = 0; t < 10; ++t) {
        const ComplexMatrix a = random_rect(mix_seed(kSeed, 1300 + t), 2, 6);
        const std::size_t m = a.rows(), n = a.cols(), q = std::min(m, n);
        const std::vector<double> sig = singular_values(a);
        const ComplexMatrix big = block2x2(zeros(m, m), a, a.adjoint(), zeros(n, n));
        std::vector<double> want(m + n - 2 * q, 0.0);
        for (double s : sig) want.push_back(s), want.push_back(-s);
        std::sort(want.begin(), want.end(), std::greater<>());
        const HermEig he = hermitian_eigen(big);
        for (std::size_t i = 0; i < want.size(); ++i) worst = std::max(worst, std::abs(he.lambda[i] - want[i]));
        for (std::size_t k = 1; k <= q; ++k) {
            const Region r = rankk::lambda_k_hermitian(big, k);
            if (r.kind() != RegionKind::Segment) {
                o.fail(shape(a) + " k=" + std::to_string(k) + " Lambda_k is " + std::string(to_string(r.kind())));
                continue;
            }
            const auto& s = r.as<shape::Segment>();
            worst = std::max({worst, std::abs(s.a + sig[k - 1]), std::abs(s.b - sig[k - 1])});
        }
    }
    if (worst > 1e-9) o.fail("error " + fmt(worst));
    o.note("worst eigenvalue / interval error " + fmt(worst));
    return o;
}

Outcome compressions() {
    Outcome o;
    std::size_t below = 0, trials = 0;
    double attain = 0.0;
    for (std::uint64_t t = 0; t < 10; ++t) {
        const ComplexMatrix a = random_rect(mix_seed(kSeed, 1400 + t), 2, 6);
        for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
            const auto rep = rankk::projector_intersection_check(a, k, 100, mix_seed(kSeed, 1500 + 10 * t + k));
            below += rep.below_sigma;
            trials += rep.trials;
            attain = std::max(attain, std::abs(rep.optimal_right - rep.sigma_k));
        }
    }
    if (below > 0) o.fail(std::to_string(below) + " compressions below sigma_k - 1e-9");
    if (attain > 1e-9) o.fail("optimal subspace misses sigma_k by " + fmt(attain));
    o.note(std::to_string(trials) + " sampled subspaces, attainment err " + fmt(attain));
    return o;
}

int run_status(const std::string& cmd) {
    const int rc = std::system((cmd + " >/dev/null 2>&1").c_str());
    return rc != -1 && WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

Outcome command_line(const std::string& cli_path, const std::vector<std::string>& mutant_paths) {
    Outcome o;
    const std::string cli = "\"" + cli_path + "\"";
    const std::filesystem::path work = std::filesystem::current_path() / "acceptance_out";
    std::filesystem::remove_all(work);
    for (const char* fig : {"sec2-example", "sec3-example"}) {
        std::string outputs[2];
        for (int run = 0; run < 2; ++run) {
            const auto dir = work / ("run" + std::to_string(run));
            const int rc = run_status(cli + " reproduce --figure " + fig + " --seed 7 --out-dir \"" + dir.string() + "\"");
            if (rc != 0) o.fail(std::string(fig) + " exit " + std::to_string(rc));
            outputs[run] = slurp(dir / (std::string(fig) + ".svg"));
        }
        if (outputs[0].empty() || outputs[0] != outputs[1]) o.fail(std::string(fig) + " differs between runs");
    }
    const int ok = run_status(cli + " verify --suite all");
    if (ok != 0) o.fail("verify --suite all exits " + std::to_string(ok));

    std::string caught;
    for (const auto& path : mutant_paths) {
        const int rc = run_status("\"" + path + "\" verify --suite all");
        if (rc != 1) o.fail(std::filesystem::path(path).filename().string() + " exits " + std::to_string(rc));
        caught += " " + std::to_string(rc);
    }
    if (mutant_paths.empty()) o.fail("no mutant builds");
    o.note("figures byte-identical, verify exit " + std::to_string(ok) + ", mutant exits" + caught);
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance run"};
    std::vector<int> known;
    std::string cli;
    std::vector<std::string> mutants;
    app.add_option("--known-failures", known, "Criteria expected to fail");
    app.add_option("--cli", cli, "nrange executable")->required();
    app.add_option("--mutant", mutants, "nrange build with one radius perturbed; repeatable");
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"rectangular range is the spectral-norm disc", disc_radius},
        {"field of values boundary sweep", field_of_values},
        {"union of Frobenius-norm ranges", frobenius_union},
        {"vector ellipse", vector_ellipse},
        {"projector ranges and sharp points", projector_ranges},
        {"rank-k range regimes and witnesses", rank_k},
        {"block matrix and Lambda_k", block_identity},
        {"compressions onto subspaces", compressions},
        {"command line reproducibility and mutants", [&] { return command_line(cli, mutants); }},
    };

    std::set<int> failed;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::cout << "criterion " << id << " " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << "\n";
        for (const auto& n : o.notes) std::cout << "    " << n << "\n";
        std::cout.flush();
        if (!o.pass) failed.insert(id);
    }

    const std::set<int> expected(known.begin(), known.end());
    std::cout << (criteria.size() - failed.size()) << "/" << criteria.size() << " criteria passed\n";
    if (failed != expected) {
        std::cout << "failing set differs from --known-failures\n";
        return 1;
    }
    return 0;
}
