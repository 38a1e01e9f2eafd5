#pragma once

// Ordering an unordered point set into a chain of high degree of
// monotonicity. Small sets are searched exhaustively; larger ones are
// built by greedy insertion and refined by local search.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <tuple>
#include <utility>
#include <vector>

#include "monochain/core.hpp"
#include "monochain/geometry.hpp"
#include "monochain/monotonicity.hpp"

namespace monochain {

using Ordering = std::vector<std::size_t>;

namespace detail {

struct OrderScore {
  Degree degree;
  double length;
};

inline bool nearly_equal(double a, double b) {
  if (a == b) return true;
  return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b));
}

// Higher degree wins, then shorter total length. Near-ties on both count
// as equal so the caller's enumeration order decides.
inline bool better(const OrderScore& candidate, const OrderScore& incumbent) {
  if (!nearly_equal(candidate.degree.value(), incumbent.degree.value())) {
    return candidate.degree > incumbent.degree;
  }
  if (!nearly_equal(candidate.length, incumbent.length)) return candidate.length < incumbent.length;
  return false;
}

inline OrderScore score(const Chain& pts, const Ordering& order) {
  Degree d = Degree::infinity();
  double length = 0.0;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    length += distance(pts[order[i]], pts[order[i + 1]]);
    if (i + 2 < order.size()) {
      d = min(d, triple_degree(pts[order[i]], pts[order[i + 1]], pts[order[i + 2]]));
    }
  }
  return {d, length};
}

}  // namespace detail

inline Chain apply_ordering(const Chain& points, const Ordering& order) {
  Chain out;
  for (std::size_t i : order) out.push_back(points[i]);
  return out;
}

/// Best ordering over all permutations: maximal signal degree, then
/// minimal length, then lexicographically smallest index sequence.
inline Ordering exhaustive_order(const Chain& points) {
  Ordering order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (points.size() < 3) return order;
  Ordering best = order;
  detail::OrderScore best_score = detail::score(points, order);
  while (std::next_permutation(order.begin(), order.end())) {
    const auto s = detail::score(points, order);
    if (detail::better(s, best_score)) {
      best_score = s;
      best = order;
    }
  }
  return best;
}

namespace detail {

// Point pairs by decreasing distance (ties by index), at most `count`.
inline std::vector<std::pair<std::size_t, std::size_t>> farthest_pairs(const Chain& points,
                                                                       std::size_t count) {
  std::vector<std::tuple<double, std::size_t, std::size_t>> all;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      all.emplace_back(-distance(points[i], points[j]), i, j);
    }
  }
  count = std::min(count, all.size());
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(count), all.end());
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t k = 0; k < count; ++k) out.emplace_back(std::get<1>(all[k]), std::get<2>(all[k]));
  return out;
}

}  // namespace detail

/// Greedy insertion from the seed pair (fa, fb).
inline Ordering greedy_order(const Chain& points, std::size_t fa, std::size_t fb) {
  const std::size_t n = points.size();
  Ordering order{fa, fb};
  double length = distance(points[fa], points[fb]);
  std::vector<bool> used(n, false);
  used[fa] = used[fb] = true;

  auto td = [&](std::size_t i, std::size_t j, std::size_t k) {
    return triple_degree(points[i], points[j], points[k]);
  };

  while (order.size() < n) {
    const std::size_t len = order.size();
    // Triple degrees of the current chain with prefix / suffix minima.
    std::vector<Degree> triple(len >= 3 ? len - 2 : 0);
    for (std::size_t i = 0; i + 2 < len; ++i) triple[i] = td(order[i], order[i + 1], order[i + 2]);
    std::vector<Degree> prefix(triple.size() + 1, Degree::infinity());
    std::vector<Degree> suffix(triple.size() + 1, Degree::infinity());
    for (std::size_t i = 0; i < triple.size(); ++i) prefix[i + 1] = min(prefix[i], triple[i]);
    for (std::size_t i = triple.size(); i-- > 0;) suffix[i] = min(suffix[i + 1], triple[i]);

    bool found = false;
    std::size_t best_point = 0, best_pos = 0;
    detail::OrderScore best{};
    for (std::size_t p = 0; p < n; ++p) {
      if (used[p]) continue;
      for (std::size_t k = 0; k <= len; ++k) {
        // Inserting before order[k] breaks triples k-2 and k-1.
        Degree d = min(prefix[std::min(k >= 2 ? k - 2 : 0, triple.size())],
                       suffix[std::min(k, triple.size())]);
        if (k >= 2) d = min(d, td(order[k - 2], order[k - 1], p));
        if (k >= 1 && k < len) d = min(d, td(order[k - 1], p, order[k]));
        if (k + 1 < len) d = min(d, td(p, order[k], order[k + 1]));
        double l = length;
        if (k >= 1) l += distance(points[order[k - 1]], points[p]);
        if (k < len) l += distance(points[p], points[order[k]]);
        if (k >= 1 && k < len) l -= distance(points[order[k - 1]], points[order[k]]);
        const detail::OrderScore s{d, l};
        if (!found || detail::better(s, best)) {
          found = true;
          best = s;
          best_point = p;
          best_pos = k;
        }
      }
    }
    order.insert(order.begin() + static_cast<std::ptrdiff_t>(best_pos), best_point);
    used[best_point] = true;
    length = best.length;
  }
  return order;
}

/// Greedy insertion: seed with the farthest pair, then repeatedly insert
/// the (point, position) that keeps the signal degree highest. Ties go to
/// shorter length, then lower point index, then earlier position.
inline Ordering greedy_order(const Chain& points) {
  if (points.size() < 3) {
    Ordering order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    return order;
  }
  const auto [fa, fb] = detail::farthest_pairs(points, 1).front();
  return greedy_order(points, fa, fb);
}

namespace detail {

// Triple degrees sorted ascending, then total length. Comparing these
// lexicographically refines the max-min objective: among orderings with
// the same bottleneck, the one whose next-worst triple is better wins.
struct LeximinScore {
  std::vector<double> degrees;
  double length = 0.0;
};

inline LeximinScore leximin_score(const Chain& pts, const Ordering& order) {
  LeximinScore s;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    s.length += distance(pts[order[i]], pts[order[i + 1]]);
    if (i + 2 < order.size()) {
      s.degrees.push_back(
          triple_degree(pts[order[i]], pts[order[i + 1]], pts[order[i + 2]]).value());
    }
  }
  std::sort(s.degrees.begin(), s.degrees.end());
  return s;
}

inline bool better(const LeximinScore& candidate, const LeximinScore& incumbent) {
  for (std::size_t i = 0; i < candidate.degrees.size(); ++i) {
    if (!nearly_equal(candidate.degrees[i], incumbent.degrees[i])) {
      return candidate.degrees[i] > incumbent.degrees[i];
    }
  }
  if (!nearly_equal(candidate.length, incumbent.length)) return candidate.length < incumbent.length;
  return false;
}

}  // namespace detail

/// Local search on an ordering: segment reversals, pair swaps and
/// single-point relocations, each accepted only if it strictly improves
/// the sorted triple-degree profile (then length). Stops when a sweep
/// finds nothing or after `max_sweeps`. The signal degree never drops.
inline Ordering improve_order(const Chain& points, Ordering order, int max_sweeps = 50) {
  const std::size_t n = order.size();
  if (n < 4) return order;
  auto current = detail::leximin_score(points, order);
  auto try_accept = [&](Ordering& trial) {
    auto s = detail::leximin_score(points, trial);
    if (!detail::better(s, current)) return false;
    current = std::move(s);
    order = trial;
    return true;
  };
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool improved = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        Ordering trial = order;
        if (!(i == 0 && j == n - 1)) {
          std::reverse(trial.begin() + static_cast<std::ptrdiff_t>(i),
                       trial.begin() + static_cast<std::ptrdiff_t>(j) + 1);
          improved |= try_accept(trial);
        }
        trial = order;
        std::swap(trial[i], trial[j]);
        improved |= try_accept(trial);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t moved = order[i];
      Ordering rest = order;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      for (std::size_t k = 0; k <= rest.size(); ++k) {
        if (k == i) continue;
        Ordering trial = rest;
        trial.insert(trial.begin() + static_cast<std::ptrdiff_t>(k), moved);
        if (try_accept(trial)) {
          improved = true;
          break;
        }
      }
    }
    if (!improved) break;
  }
  return order;
}

/// Greedy insertion from each of the `restarts` farthest pairs, each
/// refined by improve_order; the best result wins (earliest on ties).
inline Ordering heuristic_order(const Chain& points, std::size_t restarts = 5) {
  if (points.size() < 4) return exhaustive_order(points);
  Ordering best;
  detail::LeximinScore best_score;
  for (const auto& [a, b] : detail::farthest_pairs(points, std::max<std::size_t>(restarts, 1))) {
    Ordering order = improve_order(points, greedy_order(points, a, b));
    auto s = detail::leximin_score(points, order);
    if (best.empty() || detail::better(s, best_score)) {
      best = std::move(order);
      best_score = std::move(s);
    }
  }
  return best;
}

/// Exhaustive search up to `exhaustive_limit` points, heuristic above.
inline Ordering reconstruct_order(const Chain& points, std::size_t exhaustive_limit = 8) {
  if (points.size() <= exhaustive_limit) return exhaustive_order(points);
  return heuristic_order(points);
}

inline Chain reconstruct(const Chain& points, std::size_t exhaustive_limit = 8) {
  return apply_ordering(points, reconstruct_order(points, exhaustive_limit));
}

}  // namespace monochain
