#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nrange/geometry.hpp"
#include "nrange/linalg.hpp"

namespace nrange::io {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses one complex literal: "3", "-2.5", "1+2i", "1 - 2i", "-4i", "i", "1e-3-i".
cplx parse_complex(std::string_view s);

/// Matrix file contents. JSON: {"rows": m, "cols": n, "data": [[re, im], ...]} row-major.
/// CSV: a "rows,cols" header line, then rows*cols comma or newline separated entries.
ComplexMatrix parse_matrix(std::string_view text);
ComplexMatrix read_matrix(const std::string& path);

std::string matrix_to_json(const ComplexMatrix& a);

struct RegionMeta {
    std::string set;
    std::optional<std::size_t> k;
    std::vector<double> sigma;
    std::string tool_version;
};

struct RegionFile {
    Region region;
    RegionMeta meta;
};

std::string region_to_json(const RegionFile& f);
RegionFile region_from_json(std::string_view text);
RegionFile read_region(const std::string& path);

std::string read_text(const std::string& path);
void write_text(const std::string& path, std::string_view text);

inline constexpr const char* kToolVersion = "0.3.0";

}  // namespace nrange::io
