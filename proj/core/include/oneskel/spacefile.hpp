#ifndef ONESKEL_SPACEFILE_HPP
#define ONESKEL_SPACEFILE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "oneskel/lattice.hpp"
#include "oneskel/space.hpp"
#include "oneskel/toric.hpp"

namespace oneskel {

/// Parses a space document. Structural problems raise ParseError with a
/// "line L, column C" or key-path location; no semantic validation is done.
SpaceData parse_space(std::string_view text);

/// Canonical form: sorted keys, two-space indent, rationals as "p/q" strings,
/// trailing newline. Byte-identical for equal data.
std::string emit_space(const SpaceData& space);

struct PolytopeFile
{
    std::size_t dim = 0;
    std::vector<RationalVector> vertices;
    std::optional<IntMatrix> iota;
};

PolytopeFile parse_polytope_file(std::string_view text);

/// "1,0;0,1;0,0": rows separated by ';', entries by ','.
IntMatrix parse_matrix(std::string_view text);

/// "1,-2"
LatticeVector parse_lattice_vector(std::string_view text);

/// Whole file contents; throws IoError.
std::string read_file(const std::filesystem::path& path);

void write_file(const std::filesystem::path& path, std::string_view contents);

SpaceData load_space(const std::filesystem::path& path);

} // namespace oneskel

#endif
