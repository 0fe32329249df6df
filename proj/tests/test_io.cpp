#include <doctest.h>

#include <string>

#include "sqpack/bounds.hpp"
#include "sqpack/construct.hpp"
#include "sqpack/io.hpp"

using namespace sqpack;

TEST_CASE("packing documents round-trip byte-for-byte") {
  for (long long n : {1ll, 4ll, 7ll, 12ll}) {
    Packing p = n == 5 ? construct_conjectured(n, Rational(1, 100)) : construct_conjectured(n);
    std::string text = io::serialize_packing(p);
    Packing back = io::parse_packing(text);
    CHECK(back.label == p.label);
    REQUIRE(back.size() == p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      CHECK(back.squares[i].x == p.squares[i].x);
      CHECK(back.squares[i].y == p.squares[i].y);
      CHECK(back.squares[i].side == p.squares[i].side);
    }
    CHECK(io::serialize_packing(back) == text);
  }
}

TEST_CASE("packing parse errors name the field") {
  std::string zero_den = R"({
    "format_version": 1,
    "label": "bad",
    "squares": [{"x": "0", "y": "0", "side": "1/0"}]
  })";
  CHECK_THROWS_WITH_AS(io::parse_packing(zero_den),
                       doctest::Contains("squares[0].side"), io::ParseError);

  std::string decimal = R"({
    "format_version": 1,
    "label": "bad",
    "squares": [{"x": "0.5", "y": "0", "side": "1/2"}]
  })";
  CHECK_THROWS_WITH_AS(io::parse_packing(decimal), doctest::Contains("squares[0].x"),
                       io::ParseError);

  std::string missing = R"({
    "format_version": 1,
    "label": "bad",
    "squares": [{"x": "0", "side": "1/2"}]
  })";
  CHECK_THROWS_WITH_AS(io::parse_packing(missing), doctest::Contains("squares[0].y"),
                       io::ParseError);

  std::string version = R"({
    "format_version": 99,
    "label": "bad",
    "squares": []
  })";
  CHECK_THROWS_WITH_AS(io::parse_packing(version), doctest::Contains("format_version"),
                       io::ParseError);

  CHECK_THROWS_AS(io::parse_packing("not json at all"), io::ParseError);
}

TEST_CASE("certificate documents round-trip and keep checking") {
  BoundCertificate cert = limit_bound(3, 1, Direction::FromBelow, {10, 100, 1000});
  std::string text = io::serialize_certificate(cert);
  BoundCertificate back = io::parse_certificate(text);
  CHECK(back.k == cert.k);
  CHECK(back.c == cert.c);
  CHECK(back.assumed_c == cert.assumed_c);
  CHECK(back.final_bound == cert.final_bound);
  REQUIRE(back.steps.size() == cert.steps.size());
  REQUIRE(back.limits.size() == cert.limits.size());
  CHECK(check_certificate(back).ok);
  CHECK(io::serialize_certificate(back) == text);

  // multi-hop chain keeps its intermediate claims
  BoundCertificate chain = chain_derive(0, -2, 7, {10, 100, 1000});
  std::string chain_text = io::serialize_certificate(chain);
  BoundCertificate chain_back = io::parse_certificate(chain_text);
  REQUIRE(chain_back.limits.size() == chain.limits.size());
  CHECK(check_certificate(chain_back).ok);
  CHECK(io::serialize_certificate(chain_back) == chain_text);
}

TEST_CASE("certificate parse errors name the field") {
  CHECK_THROWS_WITH_AS(io::parse_certificate(R"({"format_version": 1})"),
                       doctest::Contains("target"), io::ParseError);
  std::string bad_direction = R"({
    "assumed_premise": 0,
    "final_bound": "10/3",
    "format_version": 1,
    "limit_claim": {"c": 1, "direction": "sideways", "n": 12, "value": "10/3", "witness": []},
    "steps": [],
    "target": {"c": 1, "k": 3}
  })";
  CHECK_THROWS_WITH_AS(io::parse_certificate(bad_direction), doctest::Contains("direction"),
                       io::ParseError);
}

TEST_CASE("SVG carries one rect per square with high-precision attributes") {
  Packing g3 = grid(3);
  std::string svg = io::packing_svg(g3);
  std::size_t rects = 0, pos = 0;
  while ((pos = svg.find("<rect", pos)) != std::string::npos) {
    ++rects;
    pos += 5;
  }
  CHECK(rects == g3.size());
  // 1/3 of the viewBox must be rendered to at least 12 significant digits
  CHECK(svg.find("333.333333333333333") != std::string::npos);
  CHECK(svg.find("viewBox=\"0 0 1000 1000\"") != std::string::npos);

  // y axis is flipped: the square at (0,0) lands at SVG y = 1000 - side
  Packing corner;
  corner.squares.push_back({Rational(0), Rational(0), Rational(1, 4)});
  std::string corner_svg = io::packing_svg(corner);
  CHECK(corner_svg.find("y=\"750\"") != std::string::npos);
}
