// nrange: numerical ranges of rectangular matrices from the command line.
//
// Exit codes: 0 ok, 1 verification failure, 2 bad flags, 3 unparsable input,
// 4 hypothesis/domain violation, 5 file system failure.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nrange/fixtures.hpp"
#include "nrange/fov.hpp"
#include "nrange/io.hpp"
#include "nrange/projrange.hpp"
#include "nrange/rankk.hpp"
#include "nrange/rectrange.hpp"
#include "nrange/rng.hpp"
#include "nrange/svg.hpp"
#include "nrange/verify.hpp"

using namespace nrange;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kBadFlags = 2, kParse = 3, kDomain = 4, kIo = 5 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("NRANGE_SEED")) {
        try {
            std::size_t pos = 0;
            const auto v = std::stoull(env, &pos);
            if (pos == std::string(env).size()) return v;
        } catch (const std::exception&) {
        }
        throw UsageError("NRANGE_SEED must be a non-negative integer, got '" + std::string(env) + "'");
    }
    return 1;
}

struct ComputeArgs {
    std::string input, set, out, h_path, b_path, svg_path;
    std::optional<std::size_t> k;
    std::size_t angles = kDefaultAngles;
    std::optional<std::uint64_t> seed;
};

void draw_region(svg::Canvas& c, const Region& r) { c.region(r, "#4a7ab5", "#1f3f6e"); }

int cmd_compute(const ComputeArgs& a) {
    const ComplexMatrix m = io::read_matrix(a.input);
    if (a.angles < 8) throw UsageError("--angles must be at least 8");
    io::RegionFile f;
    f.meta.set = a.set;
    f.meta.tool_version = io::kToolVersion;
    f.meta.sigma = singular_values(m);

    if (a.set == "w") {
        f.region = rect::w_disc(m).region;
        if (m.rows() == 1 && m.cols() == 1) std::cerr << "warning: a 1x1 matrix has a circle, not a disc, as its range\n";
    } else if (a.set == "fov") {
        if (!m.is_square()) {
            throw UsageError("--set fov needs a square matrix but the input is " + shape_string(m) +
                             "; use --set w for the rectangular numerical range");
        }
        f.region = fov::fov_region(m, a.angles);
    } else if (a.set == "wl" || a.set == "wh") {
        if (m.rows() == m.cols()) throw UsageError("--set " + a.set + " needs a non-square matrix");
        const proj::ProjectorSetting s = a.h_path.empty() ? proj::ProjectorSetting::leading(m)
                                                          : proj::ProjectorSetting(m, io::read_matrix(a.h_path));
        f.region = Region::boundary(a.set == "wl" ? proj::w_lower(s, a.angles) : proj::w_higher(s, a.angles));
    } else if (a.set == "phik") {
        if (!a.k) throw UsageError("--set phik needs --k");
        if (*a.k < 1) throw UsageError("--k must be at least 1");
        f.region = rankk::phi_k_region(m, *a.k).region;
        f.meta.k = a.k;
    } else if (a.set == "wnorm") {
        if (a.b_path.empty()) throw UsageError("--set wnorm needs --B");
        f.region = rect::wnorm_disc(m, io::read_matrix(a.b_path));
    }

    io::write_text(a.out, io::region_to_json(f));
    if (!a.svg_path.empty()) {
        const double s1 = f.meta.sigma.empty() ? 0.0 : f.meta.sigma.front();
        double extent = std::max(f.region.outer_radius(), s1);
        if (a.set == "wnorm") extent = std::max(extent, m.frobenius_norm());
        svg::Canvas c(extent);
        draw_region(c, f.region);
        if (s1 > 0.0) c.circle(0.0, s1, "#999999", true);
        std::string sig = "sigma =";
        for (double s : f.meta.sigma) sig += " " + std::to_string(s);
        c.note("set " + a.set + (a.k ? " k=" + std::to_string(*a.k) : std::string()) + "  kind " +
               std::string(to_string(f.region.kind())));
        c.note(sig);
        io::write_text(a.svg_path, c.str());
    }
    std::cout << a.out << "\n";
    if (!a.svg_path.empty()) std::cout << a.svg_path << "\n";
    return kOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, double tol) {
    if (!verify::is_suite(suite)) throw UsageError("unknown suite '" + suite + "'");
    const auto results = verify::run(suite, {seed, tol});
    std::cout << verify::format_table(results);
    bool ok = true;
    for (const auto& r : results) {
        if (r.passed) continue;
        ok = false;
        std::cerr << "failed " << r.suite << " " << r.name << ": " << r.detail << "\n";
    }
    return ok ? kOk : kVerifyFailed;
}

std::string sec2_figure(std::uint64_t seed) {
    const ComplexMatrix a = fixtures::a1();
    const double fro = a.frobenius_norm();
    svg::Canvas c(fro);
    c.circle(0.0, fro, "#000000");
    static const char* colors[] = {"#d62728", "#2ca02c", "#1f77b4", "#ff7f0e", "#9467bd", "#8c564b"};
    for (std::uint64_t j = 0; j < 6; ++j) {
        ComplexMatrix b = random_gaussian(a.rows(), a.cols(), mix_seed(seed, j));
        Rng rng(mix_seed(mix_seed(seed, j), 0xB));
        b *= rng.uniform(1.0, 3.0) / b.frobenius_norm();
        c.region(rect::wnorm_disc(a, b), colors[j], colors[j]);
    }
    c.circle(0.0, spectral_norm(a), "#000000", true);
    c.note("discs for six B with |B|_F >= 1 inside D(0, |A|_F), |A|_F = " + std::to_string(fro));
    c.note("dashed: w(A), radius " + std::to_string(spectral_norm(a)));
    return c.str();
}

std::string sec3_figure() {
    const proj::ProjectorSetting s(fixtures::a2(), fixtures::a2_frame());
    const ComplexMatrix lower = s.lower_matrix();
    const ComplexMatrix higher = s.higher_matrix();
    const BoundaryCurve wl = proj::w_lower(s);
    const BoundaryCurve wh = proj::w_higher(s);
    double extent = 0.0;
    for (const cplx z : wh.points) extent = std::max(extent, std::abs(z));
    svg::Canvas c(extent);
    c.region(Region::boundary(wh), "#9ecae1", "#3182bd");
    c.region(Region::boundary(wl), "#fdae6b", "#e6550d");
    for (const cplx ev : eigenvalues(lower)) c.marker(ev, "#000000");
    c.marker(0.0, "#000000", "0");
    c.marker({0.0, 5.0}, "#000000", "5i");
    const double tol = 1e-6 * spectral_norm(fixtures::a2());
    const double cone = fov::default_min_cone_width(kDefaultAngles);
    for (const auto& p : fov::sharp_eigenvalues(lower, wl, cone, tol)) c.highlight(p.location, "#e6550d");
    for (const auto& p : fov::sharp_eigenvalues(higher, wh, cone, tol)) c.highlight(p.location, "#3182bd");
    c.note("orange: w_l = F(H*A), blue: w_h = F(AH*), H = [0; I3]");
    c.note("circles mark detected sharp points");
    return c.str();
}

int cmd_reproduce(const std::string& figure, const std::string& out_dir, std::uint64_t seed) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw io::IoError("cannot create '" + out_dir + "': " + ec.message());
    const std::string path = (std::filesystem::path(out_dir) / (figure + ".svg")).string();
    io::write_text(path, figure == "sec2-example" ? sec2_figure(seed) : sec3_figure());
    std::cout << path << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical ranges of rectangular matrices"};
    app.require_subcommand(1);

    ComputeArgs ca;
    auto* compute = app.add_subcommand("compute", "Compute a range and write it as JSON");
    compute->add_option("--input", ca.input, "Matrix file (JSON or CSV)")->required();
    compute->add_option("--set", ca.set, "Which range")->required()->check(CLI::IsMember({"w", "fov", "wl", "wh", "phik", "wnorm"}));
    compute->add_option("--k", ca.k, "Rank for phik");
    compute->add_option("--H", ca.h_path, "Isometry file for wl/wh (default [I; 0])");
    compute->add_option("--B", ca.b_path, "Matrix B for wnorm");
    compute->add_option("--angles", ca.angles, "Sweep angles")->capture_default_str();
    compute->add_option("--out", ca.out, "Region JSON output")->required();
    compute->add_option("--svg", ca.svg_path, "Optional SVG output");
    compute->add_option("--seed", ca.seed, "Seed");

    std::string suite;
    std::optional<std::uint64_t> vseed;
    double tol = 1e-8;
    auto* ver = app.add_subcommand("verify", "Run property suites");
    ver->add_option("--suite", suite, "all|prop1|prop5|prop7|prop8|prop9|prop12|prop13|prop14|prop16")->required();
    ver->add_option("--seed", vseed, "Seed");
    ver->add_option("--tol", tol, "Tolerance")->capture_default_str();

    std::string figure, out_dir;
    std::optional<std::uint64_t> rseed;
    auto* rep = app.add_subcommand("reproduce", "Write the worked-example figures");
    rep->add_option("--figure", figure, "Figure name")->required()->check(CLI::IsMember({"sec2-example", "sec3-example"}));
    rep->add_option("--out-dir", out_dir, "Output directory")->required();
    rep->add_option("--seed", rseed, "Seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadFlags;
    }

    try {
        if (*compute) return cmd_compute(ca);
        if (*ver) return cmd_verify(suite, resolve_seed(vseed), tol);
        if (*rep) return cmd_reproduce(figure, out_dir, resolve_seed(rseed));
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadFlags;
    } catch (const io::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const io::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kIo;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kDomain;
    } catch (const OutOfRangeError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kDomain;
    } catch (const InputError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kBadFlags;
    }
    return kBadFlags;
}
