#include "support/render_svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "expara/focal.hpp"
#include "expara/iteration.hpp"

namespace expara::cli {

namespace {

constexpr const char* kArcColors[3] = {"#c1541c", "#7a3d8f", "#1d7a5f"};
constexpr const char* kBlue = "#2060a8";
constexpr const char* kOrange = "#d2691e";
constexpr const char* kGray = "#b0b0b0";

struct Bbox {
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;

  void add(Point2 p) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  void add_circle(Point2 c, double r) {
    add({c.x - r, c.y - r});
    add({c.x + r, c.y + r});
  }
  void pad(double fraction) {
    const double m = fraction * std::max(xmax - xmin, ymax - ymin);
    xmin -= m;
    xmax += m;
    ymin -= m;
    ymax += m;
  }
};

// World-to-canvas map into a target rectangle, y axis flipped, aspect kept.
struct Canvas {
  double scale = 1.0;
  double ox = 0.0, oy = 0.0; // canvas offset
  Bbox world;

  Canvas(const Bbox& box, double tx, double ty, double tw, double th)
      : world(box) {
    const double dx = box.xmax - box.xmin;
    const double dy = box.ymax - box.ymin;
    scale = std::min(tw / dx, th / dy);
    ox = tx + 0.5 * (tw - dx * scale);
    oy = ty + 0.5 * (th - dy * scale);
  }

  double sx(double x) const { return ox + (x - world.xmin) * scale; }
  double sy(double y) const { return oy + (world.ymax - y) * scale; }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

class SvgWriter {
public:
  void open_document(double width, double height) {
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         << "viewBox=\"0 0 " << fmt(width) << " " << fmt(height)
         << "\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
         << "\">\n";
    out_ << "<rect x=\"0\" y=\"0\" width=\"" << fmt(width) << "\" height=\""
         << fmt(height) << "\" fill=\"white\"/>\n";
  }
  void close_document() { out_ << "</svg>\n"; }

  void line(const Canvas& c, Point2 a, Point2 b, const char* stroke,
            double width, bool dashed = false) {
    out_ << "<line x1=\"" << fmt(c.sx(a.x)) << "\" y1=\"" << fmt(c.sy(a.y))
         << "\" x2=\"" << fmt(c.sx(b.x)) << "\" y2=\"" << fmt(c.sy(b.y))
         << "\" stroke=\"" << stroke << "\" stroke-width=\"" << fmt(width)
         << "\"";
    if (dashed) out_ << " stroke-dasharray=\"6 4\"";
    out_ << "/>\n";
  }

  void polygon(const Canvas& c, const Point2* pts, int n, const char* stroke,
               double width, const char* fill = "none") {
    out_ << "<polygon points=\"";
    for (int i = 0; i < n; ++i) {
      if (i) out_ << ' ';
      out_ << fmt(c.sx(pts[i].x)) << ',' << fmt(c.sy(pts[i].y));
    }
    out_ << "\" fill=\"" << fill << "\" stroke=\"" << stroke
         << "\" stroke-width=\"" << fmt(width) << "\"/>\n";
  }

  void circle(const Canvas& c, Point2 center, double world_r,
              const char* stroke, double width) {
    out_ << "<circle cx=\"" << fmt(c.sx(center.x)) << "\" cy=\""
         << fmt(c.sy(center.y)) << "\" r=\"" << fmt(world_r * c.scale)
         << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
         << fmt(width) << "\"/>\n";
  }

  void dot(const Canvas& c, Point2 p, double r, const char* fill) {
    out_ << "<circle cx=\"" << fmt(c.sx(p.x)) << "\" cy=\"" << fmt(c.sy(p.y))
         << "\" r=\"" << fmt(r) << "\" fill=\"" << fill << "\"/>\n";
  }

  // Closed curve through the affine images of unit-circle samples; m maps
  // the unit circle to the desired ellipse in world coordinates.
  void unit_circle_image(const Canvas& c, const double m[4], Point2 t,
                         const char* stroke, double width) {
    out_ << "<polygon points=\"";
    constexpr int n = 120;
    for (int i = 0; i < n; ++i) {
      const double a = 2.0 * 3.141592653589793 * i / n;
      const double ux = std::cos(a), uy = std::sin(a);
      const Point2 p{m[0] * ux + m[1] * uy + t.x, m[2] * ux + m[3] * uy + t.y};
      if (i) out_ << ' ';
      out_ << fmt(c.sx(p.x)) << ',' << fmt(c.sy(p.y));
    }
    out_ << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
         << fmt(width) << "\"/>\n";
  }

  // One exact quadratic segment of the parabola over [u0, u1].
  void parabola_arc(const Canvas& c, const BezierParabola& p, double u0,
                    double u1, const char* stroke, double width) {
    const Point2 q0 = eval(p, u0);
    const Point2 q2 = eval(p, u1);
    const double w01 = (1.0 - u0) * u1 + u0 * (1.0 - u1);
    const Point2 q1{(1.0 - u0) * (1.0 - u1) * p.p0.x + w01 * p.p1.x +
                        u0 * u1 * p.p2.x,
                    (1.0 - u0) * (1.0 - u1) * p.p0.y + w01 * p.p1.y +
                        u0 * u1 * p.p2.y};
    out_ << "<path d=\"M " << fmt(c.sx(q0.x)) << ' ' << fmt(c.sy(q0.y))
         << " Q " << fmt(c.sx(q1.x)) << ' ' << fmt(c.sy(q1.y)) << ' '
         << fmt(c.sx(q2.x)) << ' ' << fmt(c.sy(q2.y))
         << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
         << fmt(width) << "\"/>\n";
  }

  void text(const Canvas& c, Point2 p, const std::string& s,
            const char* fill = "#222") {
    out_ << "<text x=\"" << fmt(c.sx(p.x) + 6.0) << "\" y=\""
         << fmt(c.sy(p.y) - 6.0)
         << "\" font-family=\"sans-serif\" font-size=\"14\" fill=\"" << fill
         << "\">" << s << "</text>\n";
  }

  std::string str() const { return out_.str(); }

private:
  std::ostringstream out_;
};

void draw_triangle(SvgWriter& svg, const Canvas& c, const Triangle& tri,
                   const char* stroke, double width = 1.8,
                   const char* fill = "none") {
  const Point2 pts[3] = {tri.a, tri.b, tri.c};
  svg.polygon(c, pts, 3, stroke, width, fill);
}

void draw_exparabola_arc(SvgWriter& svg, const Canvas& c, const Exparabola& e,
                         const char* color) {
  const double lo = std::min(0.0, e.t);
  const double hi = std::max(1.0, e.t);
  const double pad = 0.12 * (hi - lo);
  svg.parabola_arc(c, e.curve, lo - pad, hi + pad, color, 1.6);
}

void draw_axis_through(SvgWriter& svg, const Canvas& c, Point2 p, Vec2 dir,
                       double half_len, const char* color) {
  const Vec2 u = dir / norm(dir);
  svg.line(c, p - half_len * u, p + half_len * u, color, 1.0, true);
}

void draw_steiner_ellipse(SvgWriter& svg, const Canvas& c,
                          const Triangle& tri) {
  // Affine image of the unit circle under the map that carries the
  // equilateral reference triangle (on the unit circle) to `tri`; that map
  // takes the reference circumcircle to the Steiner circumellipse.
  const double ang[3] = {1.5707963267948966, 3.6651914291880923,
                         5.759586531581287};
  Point2 e[3];
  for (int i = 0; i < 3; ++i) e[i] = {std::cos(ang[i]), std::sin(ang[i])};
  const Point2 v[3] = {tri.a, tri.b, tri.c};

  const Vec2 de1 = e[0] - e[2], de2 = e[1] - e[2];
  const Vec2 dv1 = v[0] - v[2], dv2 = v[1] - v[2];
  const double det = cross(de1, de2);
  // m * [de1 de2] = [dv1 dv2]
  const double m[4] = {(dv1.dx * de2.dy - dv2.dx * de1.dy) / det,
                       (dv2.dx * de1.dx - dv1.dx * de2.dx) / det,
                       (dv1.dy * de2.dy - dv2.dy * de1.dy) / det,
                       (dv2.dy * de1.dx - dv1.dy * de2.dx) / det};
  const Point2 t{v[2].x - (m[0] * e[2].x + m[1] * e[2].y),
                 v[2].y - (m[2] * e[2].x + m[3] * e[2].y)};
  svg.unit_circle_image(c, m, t, "#4a8f3f", 1.0);
}

void label_vertices(SvgWriter& svg, const Canvas& c, const Triangle& tri) {
  svg.text(c, tri.a, "A");
  svg.text(c, tri.b, "B");
  svg.text(c, tri.c, "C");
}

std::string render_exparabola_figure(const Triangle& tri, double t) {
  const Exparabola e = make_exparabola(tri, t);
  const TriangleCenters cen = centers(tri);
  const Point2 f = focus(e.curve);

  Bbox box;
  box.add(tri.a);
  box.add(tri.b);
  box.add(tri.c);
  box.add_circle(cen.circumcenter, cen.circumradius);
  box.add(e.curve.p0);
  box.add(e.curve.p2);
  box.pad(0.05);

  Canvas c(box, 0, 0, 800, 800);
  SvgWriter svg;
  svg.open_document(800 * (box.xmax - box.xmin) /
                        std::max(box.xmax - box.xmin, box.ymax - box.ymin),
                    800 * (box.ymax - box.ymin) /
                        std::max(box.xmax - box.xmin, box.ymax - box.ymin));
  svg.circle(c, cen.circumcenter, cen.circumradius, "#888888", 1.0);
  draw_steiner_ellipse(svg, c, tri);
  draw_triangle(svg, c, tri, kBlue);
  draw_exparabola_arc(svg, c, e, kArcColors[0]);

  const TangencyTriple pts = tangency_points(t);
  for (const Homogeneous3* h : {&pts.on_bc, &pts.on_ca, &pts.on_ab}) {
    svg.dot(c, to_cartesian(tri, *h), 2.5, "#555555");
  }
  svg.dot(c, f, 3.5, kArcColors[0]);
  svg.text(c, f, "F");
  svg.dot(c, cen.centroid, 3.0, "#222222");
  svg.text(c, cen.centroid, "G");
  label_vertices(svg, c, tri);
  svg.close_document();
  return svg.str();
}

std::string render_max_figure(const Triangle& tri, bool with_focal,
                              bool region_only) {
  const TriangleCenters cen = centers(tri);
  const auto roots = max_exparabola_roots(tri);
  const FocalResult fr = focal_triangle(tri, {1, 1, 1});

  Bbox box;
  box.add(tri.a);
  box.add(tri.b);
  box.add(tri.c);
  box.add_circle(cen.circumcenter, cen.circumradius);
  const Triangle anti{tri.b + (tri.c - tri.a), tri.c + (tri.a - tri.b),
                      tri.a + (tri.b - tri.c)};
  if (region_only) {
    box.add(anti.a);
    box.add(anti.b);
    box.add(anti.c);
  }
  box.pad(0.05);

  const double w = 800 * (box.xmax - box.xmin) /
                   std::max(box.xmax - box.xmin, box.ymax - box.ymin);
  const double h = 800 * (box.ymax - box.ymin) /
                   std::max(box.xmax - box.xmin, box.ymax - box.ymin);
  Canvas c(box, 0, 0, w, h);
  SvgWriter svg;
  svg.open_document(w, h);

  if (region_only) {
    // Admissible region: the open interior of the anticomplementary
    // triangle, whose side lines run through the vertices parallel to the
    // opposite sides.
    const Point2 ap[3] = {anti.a, anti.b, anti.c};
    svg.polygon(c, ap, 3, "#c2a36b", 1.2, "#f6eedd");
  }

  svg.circle(c, cen.circumcenter, cen.circumradius, "#888888", 1.0);
  draw_triangle(svg, c, tri, kBlue);

  const double axis_len = 2.5 * cen.circumradius;
  for (int i = 0; i < 3; ++i) {
    const double t = roots[i];
    const Exparabola e = make_exparabola(tri, t);
    if (!region_only) draw_exparabola_arc(svg, c, e, kArcColors[i]);
    draw_axis_through(svg, c, cen.centroid, exparabola_axis(tri, t), axis_len,
                      region_only ? "#777777" : kArcColors[i]);
  }

  if (!region_only) {
    const TangencyGrid g = tangency_grid(roots[0], roots[1], roots[2]);
    for (const Homogeneous3* p : {&g.a0, &g.a1, &g.a2, &g.b0, &g.b1, &g.b2,
                                  &g.c0, &g.c1, &g.c2}) {
      svg.dot(c, to_cartesian(tri, *p), 2.0, "#555555");
    }
    svg.dot(c, fr.focus_b, 3.5, kArcColors[0]);
    svg.dot(c, fr.focus_c, 3.5, kArcColors[1]);
    svg.dot(c, fr.focus_a, 3.5, kArcColors[2]);
  }
  if (with_focal) {
    const Triangle focal{fr.focus_a, fr.focus_b, fr.focus_c};
    draw_triangle(svg, c, focal, kOrange);
    svg.text(c, fr.focus_a, "F_A", kOrange);
    svg.text(c, fr.focus_b, "F_B", kOrange);
    svg.text(c, fr.focus_c, "F_C", kOrange);
  }

  svg.dot(c, cen.centroid, 3.0, "#222222");
  svg.text(c, cen.centroid, "G");
  label_vertices(svg, c, tri);
  svg.close_document();
  return svg.str();
}

std::string render_sequence_figure(const Triangle& tri) {
  const auto steps = iterate(tri, 5);
  const LimitHexagon hex = limit_hexagon(tri, 1e-9);
  const TriangleCenters cen0 = centers(tri);

  Bbox box;
  box.add(tri.a);
  box.add(tri.b);
  box.add(tri.c);
  box.add_circle(cen0.circumcenter, cen0.circumradius);
  box.pad(0.05);

  SvgWriter svg;
  const double panel = 420.0;
  svg.open_document(2 * panel, 2 * panel);
  for (int i = 0; i < 4; ++i) {
    const double tx = (i % 2) * panel + 8.0;
    const double ty = (i / 2) * panel + 8.0;
    Canvas c(box, tx, ty, panel - 16.0, panel - 16.0);

    svg.circle(c, cen0.circumcenter, cen0.circumradius, "#888888", 1.0);
    draw_triangle(svg, c, hex.even_limit, kGray, 1.0);
    draw_triangle(svg, c, hex.odd_limit, kGray, 1.0);
    draw_triangle(svg, c, steps[i].tri, kBlue);
    draw_triangle(svg, c, steps[i + 1].tri, kOrange);

    svg.dot(c, steps[i].centroid, 2.5, "#222222");
    svg.text(c, steps[i].centroid, "G" + std::to_string(i));
    svg.dot(c, steps[i].orthocenter, 2.5, "#666666");
    svg.text(c, steps[i].orthocenter, "H" + std::to_string(i), "#666666");
  }
  svg.close_document();
  return svg.str();
}

} // namespace

std::optional<Figure> figure_from_name(std::string_view name) {
  if (name == "exparabola") return Figure::Exparabola;
  if (name == "max") return Figure::Max;
  if (name == "anticomplementary") return Figure::Anticomplementary;
  if (name == "focal") return Figure::Focal;
  if (name == "sequence") return Figure::Sequence;
  return std::nullopt;
}

std::string render_figure(const Triangle& tri, Figure figure, double t) {
  switch (figure) {
  case Figure::Exparabola:
    return render_exparabola_figure(tri, t);
  case Figure::Max:
    return render_max_figure(tri, false, false);
  case Figure::Anticomplementary:
    return render_max_figure(tri, false, true);
  case Figure::Focal:
    return render_max_figure(tri, true, false);
  case Figure::Sequence:
    return render_sequence_figure(tri);
  }
  throw DomainError("unknown figure");
}

} // namespace expara::cli
