#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pia/geometry.hpp"
#include "pia/search.hpp"

namespace pia {

/// `[[x,y],[x,y],...]` with 17 significant digits per coordinate, so
/// doubles round-trip exactly.
std::string polygon_to_json(const Polygon& poly);

/// Parses one polygon from the interchange format. Throws
/// Error(InvalidInput) on malformed JSON and Error(InvalidPolygon) when the
/// vertices do not form a valid polygon.
Polygon polygon_from_json(std::string_view text);

/// One polygon per line; blank lines are skipped.
std::vector<Polygon> read_corpus(std::istream& in);
void write_corpus(std::ostream& out, std::span<const Polygon> corpus);

struct SvgOptions {
  /// Evaluated nodes to overlay, drawn as small squares in one path.
  std::span<const Point> nodes;
};

/// Standalone SVG of the polygon, the inscribed circle and its center.
/// Viewport is the bounding box padded by 5%.
std::string render_svg(const Polygon& poly, const PiaResult& result, const SvgOptions& options = {});

}  // namespace pia
