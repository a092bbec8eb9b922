#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "koebe/domain.hpp"
#include "koebe/objective.hpp"

namespace koebe {

enum class FigureKind { circle_image, domain_boundary, tangent, disks_comparison };

constexpr std::string_view to_string(FigureKind k) {
  switch (k) {
    case FigureKind::circle_image: return "circle-image";
    case FigureKind::domain_boundary: return "domain-boundary";
    case FigureKind::tangent: return "tangent";
    case FigureKind::disks_comparison: return "disks-comparison";
  }
  return "?";
}

inline FigureKind figure_kind_from_string(std::string_view s) {
  for (FigureKind k :
       {FigureKind::circle_image, FigureKind::domain_boundary, FigureKind::tangent, FigureKind::disks_comparison})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown figure kind: " + std::string(s));
}

enum class Overlay { extremal, suffridge, disk_r, disk_R, tangent_line };

constexpr std::string_view to_string(Overlay o) {
  switch (o) {
    case Overlay::extremal: return "extremal";
    case Overlay::suffridge: return "suffridge";
    case Overlay::disk_r: return "disk(r)";
    case Overlay::disk_R: return "disk(R)";
    case Overlay::tangent_line: return "tangent-line";
  }
  return "?";
}

inline Overlay overlay_from_string(std::string_view s) {
  for (Overlay o : {Overlay::extremal, Overlay::suffridge, Overlay::disk_r, Overlay::disk_R, Overlay::tangent_line})
    if (to_string(o) == s) return o;
  throw std::invalid_argument("unknown overlay: " + std::string(s));
}

struct FigureSpec {
  FigureKind kind = FigureKind::domain_boundary;
  int fold = 3;
  int samples = 512;
  std::optional<std::vector<Overlay>> overlays;  // empty: the kind's defaults
};

inline std::vector<Overlay> default_overlays(FigureKind k) {
  switch (k) {
    case FigureKind::circle_image: return {Overlay::disk_r};
    case FigureKind::domain_boundary: return {Overlay::extremal, Overlay::suffridge};
    case FigureKind::tangent: return {Overlay::extremal, Overlay::tangent_line};
    case FigureKind::disks_comparison: return {Overlay::disk_r, Overlay::disk_R};
  }
  return {};
}

struct Polyline {
  std::string label;
  std::vector<std::complex<double>> points;
  bool closed = false;
};

struct Circle {
  std::string label;
  std::complex<double> center;
  double radius = 0.0;
};

struct Segment {
  std::string label;
  std::complex<double> from, to;
};

struct Figure {
  FigureSpec spec;
  std::vector<Polyline> polylines;
  std::vector<Circle> circles;
  std::vector<Segment> segments;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
};

namespace detail {

inline std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Image of the unit circle under F, samples points, phi_k = 2 pi k / samples.
inline Polyline circle_image(const std::string& label, const Trinomial& f, int samples,
                             std::vector<std::vector<std::string>>* rows, bool tagged) {
  Polyline pl{label, {}, true};
  for (int k = 0; k < samples; ++k) {
    const double ph = 2.0 * std::numbers::pi * k / samples;
    const std::complex<double> w = eval_trinomial(f, std::polar(1.0, ph));
    pl.points.push_back(w);
    if (tagged) {
      rows->push_back({label, num(ph), num(w.real()), num(w.imag())});
    } else {
      rows->push_back({num(ph), num(w.real()), num(w.imag())});
    }
  }
  return pl;
}

inline Polyline boundary_curve(const AlphaParam& p, CurveId c, int samples,
                               std::vector<std::vector<std::string>>& rows) {
  const ParamRange r = curve_range(p, c);
  Polyline pl{std::string(to_string(c)), {}, false};
  for (int i = 0; i < samples; ++i) {
    const double t = (i + 1 == samples) ? r.hi : r.lo + (r.hi - r.lo) * i / (samples - 1);
    const BoundaryPoint q = boundary_point(p, c, t);
    pl.points.emplace_back(q.a, q.b);
    rows.push_back({std::string(to_string(c)), num(t), num(q.a), num(q.b)});
  }
  return pl;
}

}  // namespace detail

/// Geometry and raw samples for one figure.
inline Figure build_figure(const FigureSpec& spec) {
  require_fold(spec.fold);
  if (spec.samples < 64) throw std::invalid_argument("build_figure: samples must be >= 64");
  Figure fig{spec, {}, {}, {}, {}, {}};
  const AlphaParam p = AlphaParam::from_fold(spec.fold);
  const auto [a0, b0] = extremal_coeffs(spec.fold);
  const BoundaryPoint sp = suffridge_point(p);
  const double r = koebe_radius(spec.fold);
  const Trinomial extremal{spec.fold, a0, b0};
  const Trinomial suffridge{spec.fold, sp.a, sp.b};

  switch (spec.kind) {
    case FigureKind::circle_image:
      fig.csv_header = {"phi", "re", "im"};
      fig.polylines.push_back(detail::circle_image("extremal", extremal, spec.samples, &fig.csv_rows, false));
      break;
    case FigureKind::domain_boundary:
      fig.csv_header = {"curve", "t", "a", "b"};
      for (CurveId c : all_curves) fig.polylines.push_back(detail::boundary_curve(p, c, spec.samples, fig.csv_rows));
      break;
    case FigureKind::tangent:
      fig.csv_header = {"curve", "t", "a", "b"};
      for (CurveId c : {CurveId::gamma2_plus, CurveId::gamma3_plus, CurveId::gamma1})
        fig.polylines.push_back(detail::boundary_curve(p, c, spec.samples, fig.csv_rows));
      break;
    case FigureKind::disks_comparison:
      fig.csv_header = {"map", "phi", "re", "im"};
      fig.polylines.push_back(detail::circle_image("extremal", extremal, spec.samples, &fig.csv_rows, true));
      fig.polylines.push_back(detail::circle_image("suffridge", suffridge, spec.samples, &fig.csv_rows, true));
      break;
  }

  const double marker = 0.01;
  for (Overlay o : spec.overlays.value_or(default_overlays(spec.kind))) {
    switch (o) {
      case Overlay::extremal: fig.circles.push_back({"extremal", {a0, b0}, marker}); break;
      case Overlay::suffridge: fig.circles.push_back({"suffridge", {sp.a, sp.b}, marker}); break;
      case Overlay::disk_r: fig.circles.push_back({"disk(r)", {0.0, 0.0}, r}); break;
      case Overlay::disk_R: fig.circles.push_back({"disk(R)", {0.0, 0.0}, suffridge_radius(p)}); break;
      case Overlay::tangent_line:
        // -a + b = -1 + r touches Gamma3+ at (a0, b0).
        fig.segments.push_back({"tangent-line", {a0 - 0.5, b0 - 0.5}, {a0 + 0.5, b0 + 0.5}});
        break;
    }
  }
  return fig;
}

inline std::string render_csv(const Figure& fig) {
  std::string out;
  for (std::size_t i = 0; i < fig.csv_header.size(); ++i) out += (i ? "," : "") + fig.csv_header[i];
  out += '\n';
  for (const auto& row : fig.csv_rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + row[i];
    out += '\n';
  }
  return out;
}

/// SVG in data coordinates (y flipped), geometry only.
inline std::string render_svg(const Figure& fig) {
  double x0 = std::numeric_limits<double>::infinity(), y0 = x0, x1 = -x0, y1 = -x0;
  auto grow = [&](std::complex<double> z, double pad) {
    x0 = std::min(x0, z.real() - pad);
    x1 = std::max(x1, z.real() + pad);
    y0 = std::min(y0, z.imag() - pad);
    y1 = std::max(y1, z.imag() + pad);
  };
  for (const Polyline& pl : fig.polylines)
    for (auto z : pl.points) grow(z, 0.0);
  for (const Circle& c : fig.circles) grow(c.center, c.radius);
  for (const Segment& s : fig.segments) grow(s.from, 0.0), grow(s.to, 0.0);
  const double pad = 0.05 * std::max(x1 - x0, y1 - y0);
  x0 -= pad, x1 += pad, y0 -= pad, y1 += pad;
  const double stroke = 0.002 * std::max(x1 - x0, y1 - y0);
  using detail::num;

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(x0) + " " + num(-y1) + " " + num(x1 - x0) +
         " " + num(y1 - y0) + "\">\n";
  out += "<g transform=\"scale(1,-1)\" fill=\"none\" stroke=\"black\" stroke-width=\"" + num(stroke) + "\">\n";
  for (const Polyline& pl : fig.polylines) {
    out += std::string("<") + (pl.closed ? "polygon" : "polyline") + " data-label=\"" + pl.label + "\" points=\"";
    for (std::size_t i = 0; i < pl.points.size(); ++i)
      out += (i ? " " : "") + num(pl.points[i].real()) + "," + num(pl.points[i].imag());
    out += "\"/>\n";
  }
  for (const Circle& c : fig.circles) {
    out += "<circle data-label=\"" + c.label + "\" cx=\"" + num(c.center.real()) + "\" cy=\"" + num(c.center.imag()) +
           "\" r=\"" + num(c.radius) + "\"/>\n";
  }
  for (const Segment& s : fig.segments) {
    out += "<line data-label=\"" + s.label + "\" x1=\"" + num(s.from.real()) + "\" y1=\"" + num(s.from.imag()) +
           "\" x2=\"" + num(s.to.real()) + "\" y2=\"" + num(s.to.imag()) + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

struct FigureWriteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Writes `stem`.svg and `stem`.csv. A trailing ".svg" on `path` is dropped.
inline std::pair<std::string, std::string> write_figure(const Figure& fig, std::string path) {
  if (path.size() > 4 && path.compare(path.size() - 4, 4, ".svg") == 0) path.resize(path.size() - 4);
  const std::string svg = path + ".svg", csv = path + ".csv";
  for (const auto& [file, body] : {std::pair{svg, render_svg(fig)}, std::pair{csv, render_csv(fig)}}) {
    std::ofstream os(file, std::ios::binary);
    if (!os) throw FigureWriteError("cannot open " + file);
    os << body;
    if (!os) throw FigureWriteError("write failed: " + file);
  }
  return {svg, csv};
}

}  // namespace koebe
