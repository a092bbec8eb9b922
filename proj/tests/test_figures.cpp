#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "koebe/figures.hpp"
#include "oracles.hpp"

using Catch::Matchers::WithinAbs;
using koebe::FigureKind;

namespace {

std::size_t count(const std::string& s, const std::string& what) {
  std::size_t n = 0;
  for (std::size_t at = s.find(what); at != std::string::npos; at = s.find(what, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("domain boundary figure has five curves of the requested size", "[figures]") {
  const auto fig = koebe::build_figure({FigureKind::domain_boundary, 3, 128, std::nullopt});
  REQUIRE(fig.polylines.size() == 5);
  for (const auto& pl : fig.polylines) REQUIRE(pl.points.size() == 128);
  REQUIRE(fig.csv_rows.size() == 5 * 128);
  REQUIRE(fig.csv_header == std::vector<std::string>{"curve", "t", "a", "b"});
  // Gamma3+ ends where Gamma1 ends
  const auto& g3 = fig.polylines[3];  // curve order: gamma1, gamma2+, gamma2-, gamma3+, gamma3-
  REQUIRE(g3.label == "gamma3+");
  REQUIRE(std::abs(g3.points.back() - fig.polylines[0].points.back()) < 1e-12);
  // the extremal marker sits at (a0, b0)
  const auto [a0, b0] = oracle::extremal(3);
  REQUIRE(std::abs(fig.circles.at(0).center - std::complex<double>(a0, b0)) < 1e-14);
}

TEST_CASE("circle image is invariant under rotation by 2 pi / T", "[figures]") {
  const int n = 3 * 200;
  const auto fig = koebe::build_figure({FigureKind::circle_image, 3, n, std::nullopt});
  const auto& pts = fig.polylines.at(0).points;
  REQUIRE(pts.size() == static_cast<std::size_t>(n));
  const auto rot = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  for (int k = 0; k < n; ++k) REQUIRE(std::abs(pts[(k + n / 3) % n] - rot * pts[k]) < 1e-9);
  REQUIRE(fig.csv_header == std::vector<std::string>{"phi", "re", "im"});
}

TEST_CASE("disk comparison radii", "[figures]") {
  const auto fig = koebe::build_figure({FigureKind::disks_comparison, 3, 256, std::nullopt});
  REQUIRE(fig.polylines.size() == 2);
  REQUIRE(fig.circles.size() == 2);
  REQUIRE_THAT(fig.circles[0].radius, WithinAbs(0.6902785, 5e-8));
  REQUIRE_THAT(fig.circles[1].radius, WithinAbs(0.6991180, 5e-8));
  REQUIRE(fig.csv_header == std::vector<std::string>{"map", "phi", "re", "im"});
}

TEST_CASE("tangent line touches Gamma3+ at the extremal pair", "[figures]") {
  const auto fig = koebe::build_figure({FigureKind::tangent, 4, 256, std::nullopt});
  REQUIRE(fig.segments.size() == 1);
  const auto& s = fig.segments[0];
  const double r = oracle::radius(4);
  for (auto z : {s.from, s.to}) REQUIRE_THAT(-z.real() + z.imag(), WithinAbs(-1.0 + r, 1e-14));
  // the right half of the boundary stays on or above the line
  for (const auto& pl : fig.polylines)
    for (auto z : pl.points)
      if (z.real() >= 0.0) REQUIRE(1.0 - z.real() + z.imag() >= r - 1e-12);
}

TEST_CASE("CSV and SVG output", "[figures]") {
  const koebe::FigureSpec spec{FigureKind::domain_boundary, 2, 64, std::nullopt};
  const auto csv1 = koebe::render_csv(koebe::build_figure(spec));
  const auto csv2 = koebe::render_csv(koebe::build_figure(spec));
  REQUIRE(csv1 == csv2);
  REQUIRE(csv1.rfind("curve,t,a,b\n", 0) == 0);
  REQUIRE(count(csv1, "\n") == 1 + 5 * 64);

  const auto svg = koebe::render_svg(koebe::build_figure(spec));
  REQUIRE(svg.rfind("<?xml", 0) == 0);
  REQUIRE(count(svg, "viewBox=") == 1);
  REQUIRE(count(svg, "<polyline") == 5);
  REQUIRE(count(svg, "stroke=") >= 1);
  REQUIRE(count(svg, "<svg") == count(svg, "</svg>"));
  REQUIRE(count(svg, "<g") == count(svg, "</g>"));

  REQUIRE_THROWS_AS(koebe::build_figure({FigureKind::domain_boundary, 2, 63, std::nullopt}), std::invalid_argument);
  REQUIRE_THROWS_AS(koebe::figure_kind_from_string("histogram"), std::invalid_argument);
  REQUIRE(koebe::overlay_from_string("disk(R)") == koebe::Overlay::disk_R);
}

TEST_CASE("figure files", "[figures]") {
  const auto dir = std::filesystem::temp_directory_path() / "koebe_figure_test";
  std::filesystem::create_directories(dir);
  const auto fig = koebe::build_figure({FigureKind::circle_image, 2, 64, std::nullopt});
  const auto [svg, csv] = koebe::write_figure(fig, (dir / "img.svg").string());
  REQUIRE(std::filesystem::exists(svg));
  std::ifstream is(csv);
  std::stringstream ss;
  ss << is.rdbuf();
  REQUIRE(ss.str() == koebe::render_csv(fig));
  REQUIRE_THROWS_AS(koebe::write_figure(fig, (dir / "missing" / "x").string()), koebe::FigureWriteError);
}
