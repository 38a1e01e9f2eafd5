#pragma once

// n-dimensional primitives: distances, circumradii, circumcircles of
// triples and nearest points on circular arcs.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <initializer_list>
#include <numbers>
#include <optional>

#include "monochain/core.hpp"

namespace monochain {

/// Triples whose area falls below this fraction of (longest side)^2 are collinear.
inline constexpr double kCollinearTolerance = 1e-12;

/// Projections closer than this (relative to the circle or segment scale)
/// to the query point or an endpoint return that point exactly.
inline constexpr double kSnapTolerance = 1e-12;

inline double distance(const Point& a, const Point& b) { return norm(a - b); }

/// Circle embedded in R^n: center + radius * (cos t * u + sin t * v).
struct Circle {
  Point center;
  double radius = 0.0;
  Point u;
  Point v;

  Point at(double angle) const {
    return center + radius * (std::cos(angle) * u + std::sin(angle) * v);
  }

  /// Polar angle of the projection of p onto the circle's plane.
  double angle_of(const Point& p) const {
    const Point d = p - center;
    return std::atan2(dot(d, v), dot(d, u));
  }
};

namespace detail {

// 16 * area^2 from sides sorted as a >= b >= c, in Kahan's ordering.
// Negative when the sides violate the triangle inequality.
inline double kahan_area_product(double a, double b, double c) {
  return (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
}

inline std::array<double, 3> sorted_desc(double a, double b, double c) {
  std::array<double, 3> s{a, b, c};
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

}  // namespace detail

/// Circumradius from side lengths. Returns +inf for zero-area triangles
/// (area below kCollinearTolerance * longest^2).
inline Degree heron_circumradius(double a, double b, double c) {
  if (!(a >= 0.0 && b >= 0.0 && c >= 0.0) || !std::isfinite(a + b + c)) {
    throw InputError("side lengths must be finite and nonnegative");
  }
  const auto [l, m, s] = detail::sorted_desc(a, b, c);
  if (l == 0.0) return Degree::infinity();
  const double slack = s - (l - m);
  if (slack < -64.0 * std::numeric_limits<double>::epsilon() * l) {
    throw InputError("side lengths violate the triangle inequality");
  }
  const double product = std::max(0.0, detail::kahan_area_product(l, m, s));
  const double area = 0.25 * std::sqrt(product);
  if (area <= kCollinearTolerance * l * l) return Degree::infinity();
  return Degree((l * m) * s / (4.0 * area));
}

/// Circle through three points, or nullopt when they are collinear or coincident.
inline std::optional<Circle> try_circumcircle(const Point& p1, const Point& p2, const Point& p3) {
  Point::require_same_dimension(p1, p2);
  Point::require_same_dimension(p1, p3);
  const Point e = p2 - p1;
  const Point w = p3 - p1;
  const double len_e = norm(e);
  const double len_w = norm(w);
  const double longest = std::max({len_e, len_w, distance(p2, p3)});
  if (len_e == 0.0 || len_w == 0.0 || longest == 0.0) return std::nullopt;

  // Orthonormal basis of the triple's plane, Gram-Schmidt with one
  // re-orthogonalisation pass.
  const Point u = e / len_e;
  const double w_along = dot(w, u);
  Point perp = w - w_along * u;
  perp -= dot(perp, u) * u;
  const double height = norm(perp);
  const double area = 0.5 * len_e * height;
  if (!(area > kCollinearTolerance * longest * longest)) return std::nullopt;
  const Point v = perp / height;

  // Plane coordinates: p1 = (0,0), p2 = (bx,0), p3 = (cx,cy). Subtracting
  // the circle equations pairwise leaves
  //   2 bx x            = bx^2
  //   2 cx x + 2 cy y   = cx^2 + cy^2
  const double bx = len_e;
  const double cx = w_along;
  const double cy = height;
  const double x = 0.5 * bx;
  const double y = (cx * cx + cy * cy - 2.0 * cx * x) / (2.0 * cy);

  Circle circle;
  circle.center = p1 + x * u + y * v;
  circle.radius = std::hypot(x, y);
  circle.u = u;
  circle.v = v;
  return circle;
}

inline Circle circumcircle(const Point& p1, const Point& p2, const Point& p3) {
  if (auto c = try_circumcircle(p1, p2, p3)) return *std::move(c);
  throw DegenerateGeometry("circumcircle undefined for collinear or coincident points");
}

namespace detail {

// Returns the first of `targets` within `tol` of p, else p. Keeps exact
// coincidences (x already on the arc, x at an endpoint) exact instead of
// perturbing them by rounding.
inline Point snap(Point p, std::initializer_list<const Point*> targets, double tol) {
  for (const Point* t : targets) {
    if (distance(p, *t) <= tol) return *t;
  }
  return p;
}

inline double wrap_angle(double t) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  t = std::fmod(t, two_pi);
  if (t < 0.0) t += two_pi;
  return t;
}

}  // namespace detail

/// Closest point to x on the arc of `circle` between arc_from and arc_to
/// that does not pass through `excluded`.
///
/// x is projected onto the circle's plane, then radially onto the circle;
/// if that lands off the arc the nearer endpoint is returned instead. When
/// x projects onto the center the arc midpoint is returned.
inline Point project_onto_arc(const Point& x, const Circle& circle, const Point& arc_from,
                              const Point& arc_to, const Point& excluded) {
  Point::require_same_dimension(x, circle.center);
  const double t_from = circle.angle_of(arc_from);
  const double t_to = circle.angle_of(arc_to);
  const double t_excl = circle.angle_of(excluded);

  // Arc as [start, start + sweep] in the counter-clockwise sense.
  double start = t_from;
  double sweep = detail::wrap_angle(t_to - t_from);
  const Point* start_pt = &arc_from;
  const Point* end_pt = &arc_to;
  if (detail::wrap_angle(t_excl - t_from) < sweep) {
    start = t_to;
    sweep = detail::wrap_angle(t_from - t_to);
    std::swap(start_pt, end_pt);
  }

  const Point d = x - circle.center;
  const double du = dot(d, circle.u);
  const double dv = dot(d, circle.v);
  const double planar = std::hypot(du, dv);
  if (planar <= std::numeric_limits<double>::min() ||
      planar <= 1e-15 * std::max(circle.radius, norm(d))) {
    return circle.at(start + 0.5 * sweep);
  }

  const double t_x = std::atan2(dv, du);
  if (detail::wrap_angle(t_x - start) <= sweep) {
    Point p = circle.center + (circle.radius / planar) * (du * circle.u + dv * circle.v);
    return detail::snap(std::move(p), {&x, start_pt, end_pt}, kSnapTolerance * circle.radius);
  }
  return distance(x, *start_pt) <= distance(x, *end_pt) ? *start_pt : *end_pt;
}

/// Orthogonal projection of x onto segment [a, b].
inline Point project_onto_segment(const Point& x, const Point& a, const Point& b) {
  const Point ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return a;
  const double t = std::clamp(dot(x - a, ab) / len2, 0.0, 1.0);
  if (t == 0.0) return a;
  if (t == 1.0) return b;
  return detail::snap(a + t * ab, {&x, &a, &b}, kSnapTolerance * std::sqrt(len2));
}

}  // namespace monochain
