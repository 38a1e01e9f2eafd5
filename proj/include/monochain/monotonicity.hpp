#pragma once

// Degree of monotonicity of chains.
//
// For a triple (p1, p2, p3) the degree is the infimum radius of closed
// balls that contain p1 and p3 but miss p2. With a = |p1 - p2|,
// b = |p2 - p3| and c = |p1 - p3| this is c/2 when a^2 + b^2 > c^2 and
// the circumradius otherwise. The degree of a chain is the minimum over
// its consecutive triples; the global degree minimises over all triples.

#include <cstddef>
#include <utility>
#include <vector>

#include "monochain/core.hpp"
#include "monochain/geometry.hpp"

namespace monochain {

/// Degree of the triple (p1, p2, p3).
///
/// p1 == p2 or p2 == p3 yields +inf: every ball holding one of the pair
/// holds the other, so no ball separates the middle index.
inline Degree triple_degree(const Point& p1, const Point& p2, const Point& p3) {
  Point::require_same_dimension(p1, p2);
  Point::require_same_dimension(p2, p3);
  if (p1 == p2 || p2 == p3) return Degree::infinity();
  const double a = distance(p1, p2);
  const double b = distance(p2, p3);
  const double c = distance(p1, p3);
  if (a * a + b * b > c * c) return Degree(0.5 * c);
  return heron_circumradius(a, b, c);
}

struct TripleDegree {
  std::size_t index;  // first point of the triple
  Degree degree;
};

struct DegreeReport {
  Degree signal_degree = Degree::infinity();
  std::vector<TripleDegree> per_triple;
};

/// Per-triple degrees of consecutive samples and their minimum.
inline DegreeReport degree_report(const Chain& chain) {
  DegreeReport report;
  if (chain.size() < 3) return report;
  report.per_triple.reserve(chain.size() - 2);
  for (std::size_t i = 0; i + 2 < chain.size(); ++i) {
    const Degree d = triple_degree(chain[i], chain[i + 1], chain[i + 2]);
    report.per_triple.push_back({i, d});
    report.signal_degree = min(report.signal_degree, d);
  }
  return report;
}

inline Degree signal_degree(const Chain& chain) {
  Degree result = Degree::infinity();
  for (std::size_t i = 0; i + 2 < chain.size(); ++i) {
    result = min(result, triple_degree(chain[i], chain[i + 1], chain[i + 2]));
  }
  return result;
}

/// Minimum triple degree over every index triple i < j < k. Cubic in length.
inline Degree global_degree(const Chain& chain) {
  Degree result = Degree::infinity();
  const std::size_t m = chain.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        result = min(result, triple_degree(chain[i], chain[j], chain[k]));
      }
    }
  }
  return result;
}

/// Multiply every coordinate by alpha > 0.
inline Chain scale(const Chain& chain, double alpha) {
  if (!std::isfinite(alpha) || !(alpha > 0.0)) {
    throw InputError("scale factor must be finite and positive");
  }
  Chain out;
  for (const auto& p : chain) out.push_back(p * alpha);
  return out;
}

/// Copy of chain with the point at `index` removed.
inline Chain without_point(const Chain& chain, std::size_t index) {
  if (index >= chain.size()) throw InputError("point index out of range");
  Chain out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i != index) out.push_back(chain[i]);
  }
  return out;
}

}  // namespace monochain
