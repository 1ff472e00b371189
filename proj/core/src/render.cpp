#include "toricval/render.hpp"

#include <algorithm>
#include <cstdio>

namespace toricval {

namespace {

constexpr double kSize = 400.0;
constexpr double kMargin = 0.05 * kSize;

Polyhedron box(std::size_t d, const Viewport& v) {
  std::vector<HalfSpace> rows{{{1, 0}, v.xmin}, {{-1, 0}, -v.xmax}, {{0, 1}, v.ymin}, {{0, -1}, -v.ymax}};
  if (d == 1) rows = {{{1}, v.xmin}, {{-1}, -v.xmax}};
  return Polyhedron::from_rows(d, rows);
}

Viewport default_view(std::size_t d, const std::vector<Polyhedron>& cells) {
  std::vector<RatVec> pts;
  for (const auto& c : cells) pts.insert(pts.end(), c.points().begin(), c.points().end());
  Viewport v{-1, 1, -1, 1};
  if (pts.empty()) return v;
  v.xmin = v.xmax = pts.front()[0];
  if (d == 2) v.ymin = v.ymax = pts.front()[1];
  for (const auto& p : pts) {
    v.xmin = std::min(v.xmin, p[0]);
    v.xmax = std::max(v.xmax, p[0]);
    if (d == 2) {
      v.ymin = std::min(v.ymin, p[1]);
      v.ymax = std::max(v.ymax, p[1]);
    }
  }
  v.xmin -= 1;
  v.xmax += 1;
  if (d == 2) {
    v.ymin -= 1;
    v.ymax += 1;
  }
  return v;
}

// Counterclockwise order around c.
void sort_around(std::vector<RatVec>& pts, const RatVec& c) {
  auto half = [&](const RatVec& p) {
    Rat dx = p[0] - c[0], dy = p[1] - c[1];
    return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
  };
  std::sort(pts.begin(), pts.end(), [&](const RatVec& a, const RatVec& b) {
    if (half(a) != half(b)) return half(a) < half(b);
    return (a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0]) > 0;
  });
}

struct Mapper {
  Viewport v;
  std::size_t d;

  std::string xy(const RatVec& p) const {
    double x = kMargin + (p[0] - v.xmin).convert_to<double>() / (v.xmax - v.xmin).convert_to<double>() * (kSize - 2 * kMargin);
    double y = kSize / 2;
    if (d == 2) {
      y = kSize - kMargin - (p[1] - v.ymin).convert_to<double>() / (v.ymax - v.ymin).convert_to<double>() * (kSize - 2 * kMargin);
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f,%.3f", x, y);
    return buf;
  }
};

}  // namespace

std::vector<Polyhedron> render_cells(const FamilyComplex& phi, long n_max) {
  std::vector<Polyhedron> cells = phi.finite_part.maximal_cells();
  for (const auto& f : phi.families) {
    for (long n = f.n_min; n <= n_max; ++n) cells.push_back(family_eval(f, n));
  }
  return cells;
}

Svg export_svg(std::size_t d, const std::vector<Polyhedron>& cells, const std::optional<Viewport>& view) {
  if (d < 1 || d > 2) throw Error(ErrorKind::UnsupportedDimension, "rendering supports d = 1 and d = 2 only");
  Viewport v = view ? *view : default_view(d, cells);
  if (v.xmin >= v.xmax || (d == 2 && v.ymin >= v.ymax)) throw Error(ErrorKind::Input, "empty viewport");
  const Polyhedron clip = box(d, v);
  const Mapper map{v, d};
  Svg out;
  std::string body;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    Polyhedron c = intersect(cells[i], clip);
    if (c.is_empty()) continue;
    std::vector<RatVec> pts = c.vertices();
    const std::string idx = " data-cell=\"" + std::to_string(i) + "\"";
    if (c.dim() == 0) {
      std::string at = map.xy(pts.front());
      body += "  <circle class=\"point\"" + idx + " cx=\"" + at.substr(0, at.find(',')) + "\" cy=\"" +
              at.substr(at.find(',') + 1) + "\" r=\"3\"/>\n";
      ++out.census.points;
    } else if (c.dim() == 1) {
      std::sort(pts.begin(), pts.end());
      std::string a = map.xy(pts.front()), b = map.xy(pts.back());
      body += "  <line class=\"segment\"" + idx + " x1=\"" + a.substr(0, a.find(',')) + "\" y1=\"" +
              a.substr(a.find(',') + 1) + "\" x2=\"" + b.substr(0, b.find(',')) + "\" y2=\"" +
              b.substr(b.find(',') + 1) + "\"/>\n";
      ++out.census.segments;
    } else {
      RatVec centre(2, Rat(0));
      for (const auto& p : pts) centre = centre + p;
      centre = Rat(1, static_cast<long>(pts.size())) * centre;
      sort_around(pts, centre);
      std::string list;
      for (const auto& p : pts) list += (list.empty() ? "" : " ") + map.xy(p);
      body += "  <polygon class=\"cell\"" + idx + " points=\"" + list + "\"/>\n";
      ++out.census.polygons;
    }
  }
  out.text =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n"
      "  <style>.cell{fill:#9ecae1;fill-opacity:0.5;stroke:#08519c;stroke-width:1}"
      ".segment{stroke:#08519c;stroke-width:2}.point{fill:#08306b}</style>\n" +
      body + "</svg>\n";
  return out;
}

}  // namespace toricval
