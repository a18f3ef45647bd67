#include "earmap/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace earmap {

std::string format_double(double value) {
  std::array<char, 32> buf{};
  const std::to_chars_result res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

namespace {

bool parse_double(std::string_view token, double& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const std::from_chars_result res = std::from_chars(first, last, out);
  return res.ec == std::errc() && res.ptr == last && std::isfinite(out);
}

}  // namespace

Polygon read_polygon(std::istream& in, const std::string& name) {
  std::vector<Point2> verts;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string sx, sy, extra;
    if (!(fields >> sx)) continue;  // blank line
    double x = 0.0, y = 0.0;
    if (!(fields >> sy) || (fields >> extra) || !parse_double(sx, x) || !parse_double(sy, y))
      fail(ErrorCode::IoError,
           name + ":" + std::to_string(lineno) + ": expected two numbers, got '" + line + "'");
    verts.push_back(Point2(x, y));
  }
  if (verts.size() < 3)
    fail(ErrorCode::IoError, name + ": polygon needs at least 3 vertices, got " +
                                 std::to_string(verts.size()));
  try {
    return Polygon(std::move(verts));
  } catch (const Error& e) {
    fail(ErrorCode::IoError, name + ": " + e.what());
  }
}

Polygon read_polygon(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open " + path.string());
  return read_polygon(in, path.string());
}

void write_polygon(std::ostream& out, const Polygon& poly) {
  out << "# " << poly.size() << " vertices\n";
  for (const Point2& p : poly.vertices())
    out << format_double(p.x) << ' ' << format_double(p.y) << '\n';
}

void write_polygon(const std::filesystem::path& path, const Polygon& poly) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  write_polygon(out, poly);
  if (!out.flush()) fail(ErrorCode::IoError, "write failed for " + path.string());
}

void emit_obj(std::ostream& out, const CompatibleMeshPair& pair, Side side) {
  for (const Point2& p : pair.verts(side))
    out << "v " << format_double(p.x) << ' ' << format_double(p.y) << " 0\n";
  for (const Triangle& t : pair.tris())
    out << "f " << t.a + 1 << ' ' << t.b + 1 << ' ' << t.c + 1 << '\n';
}

void emit_obj_pair(const std::filesystem::path& prefix, const CompatibleMeshPair& pair) {
  for (const Side side : {Side::A, Side::B}) {
    std::filesystem::path path = prefix;
    path += side == Side::A ? "_A.obj" : "_B.obj";
    std::ofstream out(path);
    if (!out) fail(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
    emit_obj(out, pair, side);
    if (!out.flush()) fail(ErrorCode::IoError, "write failed for " + path.string());
  }
}

namespace {

struct SvgFrame {
  double xmin, ymax, scale;
  double width, height;

  double x(double wx) const { return (wx - xmin) * scale; }
  double y(double wy) const { return (ymax - wy) * scale; }  // flip to y-down
};

SvgFrame frame_for(const std::vector<Point2>& verts) {
  double xmin = verts[0].x, xmax = verts[0].x, ymin = verts[0].y, ymax = verts[0].y;
  for (const Point2& p : verts) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-12});
  const double pad = span * 0.03;
  xmin -= pad;
  xmax += pad;
  ymin -= pad;
  ymax += pad;
  const double scale = 800.0 / span;
  return {xmin, ymax, scale, (xmax - xmin) * scale, (ymax - ymin) * scale};
}

std::string stretch_fill(double stretch, double log_min, double log_max) {
  double w = 0.0;
  if (log_max > log_min)
    w = (std::log10(std::max(stretch, 1e-300)) - log_min) / (log_max - log_min);
  w = std::clamp(w, 0.0, 1.0);
  const int gb = static_cast<int>(std::lround(255.0 * (1.0 - w)));
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#ff%02x%02x", gb, gb);
  return buf;
}

}  // namespace

void emit_svg(std::ostream& out, const CompatibleMeshPair& pair, Side side, SvgColoring coloring) {
  const std::vector<Point2>& verts = pair.verts(side);
  const SvgFrame f = frame_for(verts);

  StretchReport stretch;
  if (coloring == SvgColoring::Stretch)
    stretch = l2_stretch(pair, side == Side::A ? MapDirection::AtoB : MapDirection::BtoA);

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_double(f.width)
      << "\" height=\"" << format_double(f.height) << "\" viewBox=\"0 0 "
      << format_double(f.width) << ' ' << format_double(f.height) << "\">\n";
  const double edge = std::max(f.width, f.height);
  const std::string thin = format_double(edge / 1600.0);
  const std::string thick = format_double(edge / 400.0);

  for (size_t ti = 0; ti < pair.tris().size(); ++ti) {
    const Triangle& t = pair.tris()[ti];
    const std::string fill =
        coloring == SvgColoring::Stretch
            ? stretch_fill(stretch.per_tri[ti], stretch.log_min, stretch.log_max)
            : std::string("#f5f5f5");
    out << "<polygon points=\"";
    for (const int v : {t.a, t.b, t.c}) {
      const Point2& p = verts[static_cast<size_t>(v)];
      out << format_double(f.x(p.x)) << ',' << format_double(f.y(p.y)) << ' ';
    }
    out << "\" fill=\"" << fill << "\" stroke=\"#9a9a9a\" stroke-width=\"" << thin << "\"/>\n";
  }

  out << "<polygon points=\"";
  for (const int b : pair.boundary()) {
    const Point2& p = verts[static_cast<size_t>(b)];
    out << format_double(f.x(p.x)) << ',' << format_double(f.y(p.y)) << ' ';
  }
  out << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" << thick << "\"/>\n";
  out << "</svg>\n";
}

void emit_svg(const std::filesystem::path& path, const CompatibleMeshPair& pair, Side side,
              SvgColoring coloring) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  emit_svg(out, pair, side, coloring);
  if (!out.flush()) fail(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace earmap
