#pragma once

// Weight diagrams: dots for weights, the projected hull polygon of the
// generating vertices, and arrows for the rays. Output is deterministic.

#include <algorithm>
#include <cstdio>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kmw/errors.hpp"
#include "kmw/modweights.hpp"
#include "kmw/oracle.hpp"
#include "kmw/rational.hpp"

namespace kmw {

/// 2 x n rational matrix sending simple-root coordinates to the plane.
using Projection = std::vector<std::vector<Rational>>;

/// Rank 1: vertical line. Rank 2: identity. Rank 3: the triangular frame with
/// alpha_0, alpha_1 splayed left and right and alpha_2 straight down. Higher
/// ranks fan the simple roots out below the x-axis.
inline Projection default_projection(std::size_t n) {
  Projection p(2, std::vector<Rational>(n, Rational(0)));
  if (n == 1) {
    p[1][0] = 1;
  } else if (n == 2) {
    p[0][0] = 1;
    p[1][1] = 1;
  } else if (n == 3) {
    p[0][0] = -2, p[1][0] = 1;
    p[0][1] = 2, p[1][1] = 1;
    p[0][2] = 0, p[1][2] = 2;
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      p[0][i] = static_cast<long>(2 * i) - static_cast<long>(n - 1);
      p[1][i] = 1 + static_cast<long>(i % 2);
    }
  }
  return p;
}

namespace detail {

using Point = std::pair<Rational, Rational>;

inline Point project(const Projection& P, const std::vector<Rational>& c) {
  Point q{0, 0};
  for (std::size_t i = 0; i < c.size(); ++i) {
    q.first += P[0][i] * c[i];
    q.second += P[1][i] * c[i];
  }
  return q;
}

inline std::vector<Rational> as_rational(const SignedOffset& v) {
  std::vector<Rational> r;
  for (auto x : v.values()) r.emplace_back(static_cast<long>(x));
  return r;
}

inline Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

/// Counter-clockwise convex hull (monotone chain), collinear points dropped.
inline std::vector<Point> convex_hull_2d(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && sgn(cross(h[k - 2], h[k - 1], p)) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && sgn(cross(h[k - 2], h[k - 1], pts[i])) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

inline std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x + 0.0);
  return buf;
}

inline std::size_t projection_rank(Projection P) {
  return exact_rank(std::move(P));
}

}  // namespace detail

inline std::string emit_svg(const WeightSet& ws, const HullModel& hull, const Projection& P) {
  using detail::Point;
  if (P.size() != 2) throw InputError("projection must have 2 rows");
  const std::size_t n = P[0].size();
  if (P[1].size() != n) throw InputError("projection rows differ in length");
  if (detail::projection_rank(P) < std::min<std::size_t>(2, n))
    throw InputError("projection is rank-deficient");

  std::vector<Point> dots;
  for (const auto& c : ws.members) dots.push_back(detail::project(P, detail::as_rational(c)));
  std::vector<Point> verts;
  for (const auto& v : hull.vertices) verts.push_back(detail::project(P, detail::as_rational(v)));
  const auto polygon = detail::convex_hull_2d(verts);

  // Each ray is drawn from every generating vertex whose orbit produced it,
  // long enough to cross the height window.
  std::vector<std::pair<Point, Point>> arrows;
  for (const auto& [v, r] : hull.anchored_rays) {
    const std::int64_t room = std::max<std::int64_t>(ws.height - v.height(), 0);
    Rational t(std::max<std::int64_t>(room, r.height()), r.height());
    auto start = detail::as_rational(v);
    auto end = start;
    for (std::size_t i = 0; i < end.size(); ++i) end[i] += t * Rational(static_cast<long>(r[i]));
    arrows.emplace_back(detail::project(P, start), detail::project(P, end));
  }

  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool first = true;
  auto grow = [&](const Point& p) {
    double x = p.first.get_d(), y = p.second.get_d();
    if (first) {
      xmin = xmax = x, ymin = ymax = y, first = false;
      return;
    }
    xmin = std::min(xmin, x), xmax = std::max(xmax, x);
    ymin = std::min(ymin, y), ymax = std::max(ymax, y);
  };
  grow(Point{0, 0});
  for (const auto& p : dots) grow(p);
  for (const auto& p : polygon) grow(p);
  for (const auto& [a, b] : arrows) grow(a), grow(b);

  const double size = 480, margin = 24;
  const double span = std::max({xmax - xmin, ymax - ymin, 1.0});
  const double scale = (size - 2 * margin) / span;
  auto X = [&](const Point& p) { return detail::fmt(margin + (p.first.get_d() - xmin) * scale); };
  auto Y = [&](const Point& p) { return detail::fmt(margin + (p.second.get_d() - ymin) * scale); };

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"480\" height=\"480\" viewBox=\"0 0 480 480\">\n";
  s += "<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"3\" orient=\"auto\">"
       "<path d=\"M0,0 L6,3 L0,6 z\" fill=\"#1f4e9c\"/></marker></defs>\n";
  s += "<rect width=\"480\" height=\"480\" fill=\"white\"/>\n";
  if (polygon.size() >= 3) {
    s += "<polygon class=\"hull\" fill=\"#9db8e8\" fill-opacity=\"0.5\" stroke=\"#1f4e9c\" points=\"";
    for (std::size_t i = 0; i < polygon.size(); ++i) s += (i ? " " : "") + X(polygon[i]) + "," + Y(polygon[i]);
    s += "\"/>\n";
  } else if (polygon.size() == 2) {
    s += "<line class=\"hull\" stroke=\"#1f4e9c\" stroke-width=\"2\" x1=\"" + X(polygon[0]) + "\" y1=\"" +
         Y(polygon[0]) + "\" x2=\"" + X(polygon[1]) + "\" y2=\"" + Y(polygon[1]) + "\"/>\n";
  }
  for (const auto& [a, b] : arrows)
    s += "<line class=\"ray\" stroke=\"#1f4e9c\" marker-end=\"url(#head)\" x1=\"" + X(a) + "\" y1=\"" + Y(a) +
         "\" x2=\"" + X(b) + "\" y2=\"" + Y(b) + "\"/>\n";
  for (const auto& p : dots)
    s += "<circle class=\"weight\" r=\"3\" fill=\"black\" cx=\"" + X(p) + "\" cy=\"" + Y(p) + "\"/>\n";
  const Point origin{0, 0};
  s += "<text x=\"" + detail::fmt(margin + (0 - xmin) * scale + 6) + "\" y=\"" + Y(origin) +
       "\" font-size=\"14\" font-family=\"serif\">&#955;</text>\n";
  s += "</svg>\n";
  return s;
}

}  // namespace kmw
