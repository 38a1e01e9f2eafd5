#pragma once

// Chain smoothing: centered moving averages and the sphere-preserving
// recursive filter, which never lowers the degree of monotonicity.

#include <array>
#include <cstddef>
#include <optional>

#include "monochain/core.hpp"
#include "monochain/geometry.hpp"
#include "monochain/monotonicity.hpp"

namespace monochain {

enum class FilterMethod { SP, MA };

struct FilterConfig {
  FilterMethod method = FilterMethod::SP;
  int window = 3;  // MA only
};

/// Centered moving average of odd width. Near the ends the window shrinks
/// symmetrically so every output is a centered mean.
inline Chain ma_filter(const Chain& chain, int window) {
  if (window < 1 || window % 2 == 0) throw InputError("moving-average window must be odd and >= 1");
  const std::size_t half = static_cast<std::size_t>(window / 2);
  const std::size_t m = chain.size();
  Chain out;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t h = std::min({half, i, m - 1 - i});
    Point sum(chain.dimension());
    for (std::size_t k = i - h; k <= i + h; ++k) sum += chain[k];
    out.push_back(sum / static_cast<double>(2 * h + 1));
  }
  return out;
}

/// min(R(A,B,X), R(B,X,C), R(X,C,D)).
inline Degree five_point_degree(const Point& a, const Point& b, const Point& x, const Point& c,
                                const Point& d) {
  return min(min(triple_degree(a, b, x), triple_degree(b, x, c)), triple_degree(x, c, d));
}

namespace detail {

// Nearest point to x on the arc B..C of the circle through (B, C, other)
// that avoids `other`; the segment BC when the three are collinear.
inline Point arc_candidate(const Point& x, const Point& b, const Point& c, const Point& other) {
  if (auto circle = try_circumcircle(other, b, c)) {
    return project_onto_arc(x, *circle, b, c, other);
  }
  return project_onto_segment(x, b, c);
}

}  // namespace detail

/// One filter step: replace X by whichever of X, its projection onto arc
/// BC of circle ABC, or its projection onto arc BC of circle BCD
/// maximises the five-point degree. Ties keep the earlier candidate.
inline Point sp_step(const Point& a, const Point& b, const Point& x, const Point& c,
                     const Point& d) {
  Point::require_same_dimension(a, b);
  Point::require_same_dimension(a, x);
  Point::require_same_dimension(a, c);
  Point::require_same_dimension(a, d);

  Point best = x;
  Degree best_degree = five_point_degree(a, b, x, c, d);
  for (const Point* other : {&a, &d}) {
    Point candidate = detail::arc_candidate(x, b, c, *other);
    const Degree r = five_point_degree(a, b, candidate, c, d);
    if (r > best_degree) {
      best_degree = r;
      best = std::move(candidate);
    }
  }
  return best;
}

/// Single left-to-right pass of the recursive filter
///   out[i] = f(out[i-2], out[i-1], in[i], in[i+1], in[i+2]).
/// The first two and last two samples are copied; chains shorter than 5
/// come back unchanged.
inline Chain sp_filter(const Chain& chain) {
  Chain out = chain;
  const std::size_t m = chain.size();
  if (m < 5) return out;
  for (std::size_t i = 2; i + 2 < m; ++i) {
    out.set(i, sp_step(out[i - 2], out[i - 1], chain[i], chain[i + 1], chain[i + 2]));
  }
  return out;
}

inline Chain apply_filter(const Chain& chain, const FilterConfig& config) {
  switch (config.method) {
    case FilterMethod::SP: return sp_filter(chain);
    case FilterMethod::MA: return ma_filter(chain, config.window);
  }
  throw InputError("unknown filter method");
}

}  // namespace monochain
