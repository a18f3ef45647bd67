#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "earmap/mesh.hpp"

namespace earmap {

// Plain-text polygon format: one "x y" pair per line, '#' comments and
// blank lines ignored. Doubles are written with shortest round-trip
// precision, so write -> read is lossless and byte-stable.
Polygon read_polygon(std::istream& in, const std::string& name = "<stream>");
Polygon read_polygon(const std::filesystem::path& path);
void write_polygon(std::ostream& out, const Polygon& poly);
void write_polygon(const std::filesystem::path& path, const Polygon& poly);

// Shortest round-trip decimal form of a double.
std::string format_double(double value);

// Wavefront OBJ of one side (z = 0), 1-indexed faces, deterministic bytes.
void emit_obj(std::ostream& out, const CompatibleMeshPair& pair, Side side);
// Writes <prefix>_A.obj and <prefix>_B.obj.
void emit_obj_pair(const std::filesystem::path& prefix, const CompatibleMeshPair& pair);

enum class SvgColoring { None, Stretch };

// Standalone SVG of one side. Stretch coloring shades triangles white to
// red by log stretch of the map leaving that side.
void emit_svg(std::ostream& out, const CompatibleMeshPair& pair, Side side, SvgColoring coloring);
void emit_svg(const std::filesystem::path& path, const CompatibleMeshPair& pair, Side side,
              SvgColoring coloring);

}  // namespace earmap
