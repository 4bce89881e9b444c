#include <doctest.h>

#include <sstream>

#include "pia/error.hpp"
#include "pia/io.hpp"
#include "pia/lp_formulation.hpp"
#include "pia/polygen.hpp"
#include "shapes.hpp"

using namespace pia;

namespace {

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("polygon JSON interchange") {
  CHECK(polygon_to_json(test::unit_square()) == "[[0,0],[1,0],[1,1],[0,1]]");
  CHECK(polygon_from_json("[[0,0],[1,0],[1,1],[0,1]]") == test::unit_square());
  CHECK(polygon_from_json(" [ [0, 0], [4, 0], [0, 3] ] ") == test::right_triangle_345());

  auto code_of = [](const char* text) {
    try {
      polygon_from_json(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::NotConvex;
  };
  CHECK(code_of("[[0,0],[1,0]") == ErrorCode::InvalidInput);
  CHECK(code_of("{\"x\":1}") == ErrorCode::InvalidInput);
  CHECK(code_of("[[0,0,1],[1,0],[0,1]]") == ErrorCode::InvalidInput);
  CHECK(code_of("[[0,\"a\"],[1,0],[0,1]]") == ErrorCode::InvalidInput);
  CHECK(code_of("[[0,0],[1,0],[2,0]]") == ErrorCode::InvalidPolygon);
}

TEST_CASE("corpus round-trips exactly") {
  const auto corpus = generate_corpus(CorpusShape::Convex, 25, 17, 9);
  std::stringstream buffer;
  write_corpus(buffer, corpus);
  const auto back = read_corpus(buffer);
  CHECK(back == corpus);

  std::istringstream with_blank("[[0,0],[1,0],[0,1]]\n\n  \n[[0,0],[4,0],[0,3]]\n");
  CHECK(read_corpus(with_blank).size() == 2);

  std::istringstream broken("[[0,0],[1,0],[0,1]]\nnot json\n");
  try {
    read_corpus(broken);
    FAIL("expected parse failure");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("render_svg") {
  const auto poly = test::right_triangle_345();
  const auto result = solve_chebyshev(poly);
  const std::string svg = render_svg(poly, result);
  CHECK(svg.starts_with("<?xml"));
  CHECK(count(svg, "<circle") == 1);
  CHECK(count(svg, "<polygon") == 1);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("viewBox=\"-0.2 -0.2 4.4 3.4\"") != std::string::npos);

  const std::vector<Point> nodes{{1, 1}, {2, 0.5}, {0.5, 2}};
  SvgOptions options;
  options.nodes = nodes;
  const std::string with_nodes = render_svg(poly, result, options);
  CHECK(count(with_nodes, "<circle") == 1);
  CHECK(count(with_nodes, "z") >= 3);
}
