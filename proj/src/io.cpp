#include "nrange/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nrange::io {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Reads an optionally signed decimal from the front of s; returns false when none is there.
bool take_number(std::string_view& s, double& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, out, std::chars_format::general);
    if (ec != std::errc{} || ptr == first) return false;
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    return true;
}

// Drops whitespace, but only where it borders a sign or the imaginary unit; "1 2" stays malformed.
std::string strip_spaces(std::string_view s) {
    std::string out;
    const auto is_glue = [](char c) { return c == '+' || c == '-' || c == 'i'; };
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (!std::isspace(static_cast<unsigned char>(c))) {
            out.push_back(c);
            continue;
        }
        std::size_t j = i;
        while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        const bool edge = out.empty() || j == s.size();
        if (!edge && !is_glue(out.back()) && !is_glue(s[j])) out.push_back(' ');
        i = j - 1;
    }
    return out;
}

double finite_or_throw(double v, std::string_view where) {
    if (!std::isfinite(v)) throw ParseError("non-finite number in " + std::string(where));
    return v;
}

}  // namespace

cplx parse_complex(std::string_view text) {
    const std::string compact = strip_spaces(text);
    std::string_view s = compact;
    if (s.empty()) throw ParseError("empty complex literal");
    const auto bad = [&] { return ParseError("malformed complex literal '" + std::string(trim(text)) + "'"); };

    // Pure imaginary unit with optional sign: "i", "-i", "+i".
    auto unit_imag = [](std::string_view t, double& im) {
        if (t == "i" || t == "+i") return im = 1.0, true;
        if (t == "-i") return im = -1.0, true;
        return false;
    };
    double im = 0.0;
    if (unit_imag(s, im)) return {0.0, im};

    double re = 0.0;
    if (!take_number(s, re)) throw bad();
    if (s.empty()) return {finite_or_throw(re, text), 0.0};
    if (s == "i") return {0.0, finite_or_throw(re, text)};
    if (s.front() != '+' && s.front() != '-') throw bad();
    if (unit_imag(s, im)) return {finite_or_throw(re, text), im};
    const bool negative = s.front() == '-';
    s.remove_prefix(1);
    if (s.empty() || s.front() == '+' || s.front() == '-') throw bad();
    if (!take_number(s, im) || s != "i") throw bad();
    return {finite_or_throw(re, text), finite_or_throw(negative ? -im : im, text)};
}

namespace {

ComplexMatrix parse_matrix_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("matrix JSON: ") + e.what());
    }
    try {
        const auto rows = j.at("rows").get<std::size_t>();
        const auto cols = j.at("cols").get<std::size_t>();
        const json& data = j.at("data");
        if (rows == 0 || cols == 0) throw ParseError("matrix JSON: rows and cols must be positive");
        if (!data.is_array() || data.size() != rows * cols) {
            throw ParseError("matrix JSON: data has " + std::to_string(data.is_array() ? data.size() : 0) +
                             " entries, expected rows*cols = " + std::to_string(rows * cols));
        }
        std::vector<cplx> entries;
        entries.reserve(rows * cols);
        for (const json& e : data) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
                throw ParseError("matrix JSON: each entry must be [re, im]");
            }
            entries.emplace_back(finite_or_throw(e[0].get<double>(), "matrix JSON"),
                                 finite_or_throw(e[1].get<double>(), "matrix JSON"));
        }
        return ComplexMatrix(rows, cols, std::move(entries));
    } catch (const json::exception& e) {
        throw ParseError(std::string("matrix JSON: ") + e.what());
    }
}

ComplexMatrix parse_matrix_csv(std::string_view text) {
    std::vector<std::string> tokens;
    std::string line;
    std::istringstream in{std::string(text)};
    std::size_t rows = 0, cols = 0;
    bool header = false;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        std::istringstream ls(line);
        std::string tok;
        std::vector<std::string> fields;
        while (std::getline(ls, tok, ',')) fields.push_back(tok);
        if (!line.empty() && line.back() == ',') fields.emplace_back();
        if (!header) {
            if (fields.size() != 2) throw ParseError("matrix CSV: header must be 'rows,cols'");
            double r = 0, c = 0;
            std::string_view fr = trim(fields[0]), fc = trim(fields[1]);
            if (!take_number(fr, r) || !fr.empty() || !take_number(fc, c) || !fc.empty() || r < 1 || c < 1 ||
                r != std::floor(r) || c != std::floor(c)) {
                throw ParseError("matrix CSV: header must be two positive integers 'rows,cols'");
            }
            rows = static_cast<std::size_t>(r);
            cols = static_cast<std::size_t>(c);
            header = true;
            continue;
        }
        for (auto& f : fields) tokens.push_back(f);
    }
    if (!header) throw ParseError("matrix CSV: missing 'rows,cols' header");
    if (tokens.size() != rows * cols) {
        throw ParseError("matrix CSV: found " + std::to_string(tokens.size()) + " entries, expected " +
                         std::to_string(rows * cols));
    }
    std::vector<cplx> entries;
    entries.reserve(tokens.size());
    for (const auto& t : tokens) entries.push_back(parse_complex(t));
    return ComplexMatrix(rows, cols, std::move(entries));
}

}  // namespace

ComplexMatrix parse_matrix(std::string_view text) {
    const std::string_view t = trim(text);
    if (t.empty()) throw ParseError("matrix file is empty");
    return t.front() == '{' ? parse_matrix_json(t) : parse_matrix_csv(t);
}

std::string read_text(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void write_text(const std::string& path, std::string_view text) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!f) throw IoError("write to '" + path + "' failed");
}

ComplexMatrix read_matrix(const std::string& path) { return parse_matrix(read_text(path)); }

namespace {

json cjson(cplx z) { return json::array({z.real(), z.imag()}); }

cplx jcplx(const json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("region JSON: complex values are [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

std::string matrix_to_json(const ComplexMatrix& a) {
    json data = json::array();
    for (const auto& z : a.data()) data.push_back(cjson(z));
    return json{{"rows", a.rows()}, {"cols", a.cols()}, {"data", data}}.dump() + "\n";
}

std::string region_to_json(const RegionFile& f) {
    json j;
    j["kind"] = std::string(to_string(f.region.kind()));
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, shape::Point>) {
                j["z"] = cjson(s.z);
            } else if constexpr (std::is_same_v<T, shape::Segment>) {
                j["a"] = cjson(s.a);
                j["b"] = cjson(s.b);
            } else if constexpr (std::is_same_v<T, shape::Disc> || std::is_same_v<T, shape::Circle>) {
                j["center"] = cjson(s.center);
                j["radius"] = s.radius;
            } else if constexpr (std::is_same_v<T, shape::Annulus>) {
                j["center"] = cjson(s.center);
                j["inner"] = s.inner;
                j["outer"] = s.outer;
            } else if constexpr (std::is_same_v<T, shape::Ellipse>) {
                j["focus1"] = cjson(s.focus1);
                j["focus2"] = cjson(s.focus2);
                j["major_axis"] = s.major_axis;
            } else if constexpr (std::is_same_v<T, shape::Boundary>) {
                json pts = json::array();
                for (const auto& z : s.curve.points) pts.push_back(cjson(z));
                j["angles"] = s.curve.angles;
                j["support"] = s.curve.support;
                j["points"] = pts;
            }
        },
        f.region.shape());
    json meta{{"set", f.meta.set}, {"sigma", f.meta.sigma}, {"tool_version", f.meta.tool_version}};
    if (f.meta.k) meta["k"] = *f.meta.k;
    j["meta"] = meta;
    return j.dump(2) + "\n";
}

RegionFile region_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("region JSON: ") + e.what());
    }
    try {
        RegionFile f;
        const std::string kind = j.at("kind").get<std::string>();
        RegionKind rk;
        try {
            rk = region_kind_from_string(kind);
        } catch (const InputError& e) {
            throw ParseError(std::string("region JSON: ") + e.what());
        }
        switch (rk) {
            case RegionKind::Empty: f.region = Region::empty(); break;
            case RegionKind::Point: f.region = Region::point(jcplx(j.at("z"))); break;
            case RegionKind::Segment: f.region = Region::segment(jcplx(j.at("a")), jcplx(j.at("b"))); break;
            case RegionKind::Disc:
                f.region = Region::disc(jcplx(j.at("center")), j.at("radius").get<double>());
                break;
            case RegionKind::Circle:
                f.region = Region::circle(jcplx(j.at("center")), j.at("radius").get<double>());
                break;
            case RegionKind::Annulus:
                f.region = Region::annulus(jcplx(j.at("center")), j.at("inner").get<double>(),
                                           j.at("outer").get<double>());
                break;
            case RegionKind::Ellipse:
                f.region = Region::ellipse(jcplx(j.at("focus1")), jcplx(j.at("focus2")),
                                           j.at("major_axis").get<double>());
                break;
            case RegionKind::Boundary: {
                BoundaryCurve c;
                c.angles = j.at("angles").get<std::vector<double>>();
                c.support = j.at("support").get<std::vector<double>>();
                for (const json& p : j.at("points")) c.points.push_back(jcplx(p));
                if (c.support.size() != c.angles.size() || c.points.size() != c.angles.size()) {
                    throw ParseError("region JSON: boundary arrays differ in length");
                }
                f.region = Region::boundary(std::move(c));
                break;
            }
        }
        if (f.region.kind() != rk) throw ParseError("region JSON: payload does not match kind '" + kind + "'");
        const json& meta = j.at("meta");
        f.meta.set = meta.at("set").get<std::string>();
        if (meta.contains("k")) f.meta.k = meta.at("k").get<std::size_t>();
        f.meta.sigma = meta.at("sigma").get<std::vector<double>>();
        f.meta.tool_version = meta.at("tool_version").get<std::string>();
        return f;
    } catch (const json::exception& e) {
        throw ParseError(std::string("region JSON: ") + e.what());
    } catch (const InputError& e) {
        throw ParseError(std::string("region JSON: ") + e.what());
    }
}

RegionFile read_region(const std::string& path) { return region_from_json(read_text(path)); }

}  // namespace nrange::io
