#include "pia/io.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "pia/error.hpp"

namespace pia {

namespace {

std::string full_precision(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string short_precision(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace

std::string polygon_to_json(const Polygon& poly) {
  std::string out = "[";
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (i) out += ',';
    out += '[' + full_precision(poly[i].x) + ',' + full_precision(poly[i].y) + ']';
  }
  out += ']';
  return out;
}

Polygon polygon_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed polygon JSON: ") + e.what());
  }
  if (!doc.is_array()) throw Error(ErrorCode::InvalidInput, "polygon must be a JSON array");
  std::vector<Point> vertices;
  vertices.reserve(doc.size());
  for (const auto& pair : doc) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw Error(ErrorCode::InvalidInput, "each vertex must be an [x, y] pair of numbers");
    }
    vertices.push_back({pair[0].get<double>(), pair[1].get<double>()});
  }
  return Polygon(std::move(vertices));
}

std::vector<Polygon> read_corpus(std::istream& in) {
  std::vector<Polygon> corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      corpus.push_back(polygon_from_json(line));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return corpus;
}

void write_corpus(std::ostream& out, std::span<const Polygon> corpus) {
  for (const Polygon& poly : corpus) out << polygon_to_json(poly) << '\n';
}

std::string render_svg(const Polygon& poly, const PiaResult& result, const SvgOptions& options) {
  const Region box = bounding_box(poly);
  const double pad = 0.05 * std::max(box.width(), box.height());
  const double x0 = box.min_x() - pad;
  const double y0 = box.min_y() - pad;
  const double w = box.width() + 2 * pad;
  const double h = box.height() + 2 * pad;
  const double stroke = 0.004 * std::max(w, h);
  const auto fmt = short_precision;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(x0) << ' ' << fmt(y0) << ' '
     << fmt(w) << ' ' << fmt(h) << "\" width=\"800\" height=\"" << fmt(800.0 * h / w) << "\">\n";
  // Flip y so the drawing uses mathematical orientation.
  os << "  <g transform=\"translate(0," << fmt(2 * y0 + h) << ") scale(1,-1)\">\n";

  os << "    <polygon fill=\"#eef3f8\" stroke=\"#1f3b57\" stroke-width=\"" << fmt(stroke) << "\" points=\"";
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (i) os << ' ';
    os << fmt(poly[i].x) << ',' << fmt(poly[i].y);
  }
  os << "\"/>\n";

  if (!options.nodes.empty()) {
    const double s = 0.004 * std::max(w, h);
    os << "    <path fill=\"#c0392b\" fill-opacity=\"0.5\" d=\"";
    for (const Point& p : options.nodes) {
      os << 'M' << fmt(p.x - 0.5 * s) << ' ' << fmt(p.y - 0.5 * s) << 'h' << fmt(s) << 'v' << fmt(s)
         << 'h' << fmt(-s) << 'z';
    }
    os << "\"/>\n";
  }

  os << "    <circle cx=\"" << fmt(result.center.x) << "\" cy=\"" << fmt(result.center.y) << "\" r=\""
     << fmt(result.radius) << "\" fill=\"none\" stroke=\"#27ae60\" stroke-width=\"" << fmt(stroke)
     << "\"/>\n";
  os << "    <path stroke=\"#27ae60\" stroke-width=\"" << fmt(stroke) << "\" d=\"M"
     << fmt(result.center.x - 2 * stroke) << ' ' << fmt(result.center.y) << 'h' << fmt(4 * stroke) << 'M'
     << fmt(result.center.x) << ' ' << fmt(result.center.y - 2 * stroke) << 'v' << fmt(4 * stroke)
     << "\"/>\n";
  os << "  </g>\n</svg>\n";
  return os.str();
}

}  // namespace pia
