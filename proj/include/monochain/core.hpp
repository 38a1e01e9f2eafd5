#pragma once

// Basic value types shared by every monochain module: points, chains,
// the extended-real degree, and the error hierarchy.

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace monochain {

/// Bad arguments: dimension mismatch, invalid window, non-positive scale, ...
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Collinear or coincident points where a proper circle is required.
class DegenerateGeometry : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A statistic that has no defined value for the given data (zero variance).
class UndefinedStatistic : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A point in R^n. Coordinates are always finite.
class Point {
public:
  Point() = default;
  explicit Point(std::size_t dimension) : coords_(dimension, 0.0) {}
  Point(std::initializer_list<double> coords) : coords_(coords) { check_finite(); }
  explicit Point(std::vector<double> coords) : coords_(std::move(coords)) { check_finite(); }

  std::size_t dimension() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const noexcept { return coords_[i]; }
  double& operator[](std::size_t i) noexcept { return coords_[i]; }
  std::span<const double> coords() const noexcept { return coords_; }

  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  bool operator==(const Point&) const = default;

  Point& operator+=(const Point& o) {
    require_same_dimension(*this, o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Point& operator-=(const Point& o) {
    require_same_dimension(*this, o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  Point& operator*=(double s) noexcept {
    for (auto& x : coords_) x *= s;
    return *this;
  }
  Point& operator/=(double s) noexcept {
    for (auto& x : coords_) x /= s;
    return *this;
  }

  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(Point a, double s) { return a *= s; }
  friend Point operator*(double s, Point a) { return a *= s; }
  friend Point operator/(Point a, double s) { return a /= s; }

  static void require_same_dimension(const Point& a, const Point& b) {
    if (a.dimension() != b.dimension()) {
      throw InputError("dimension mismatch: " + std::to_string(a.dimension()) + " vs " +
                       std::to_string(b.dimension()));
    }
  }

private:
  void check_finite() const {
    for (double x : coords_) {
      if (!std::isfinite(x)) throw InputError("point coordinates must be finite");
    }
  }

  std::vector<double> coords_;
};

inline double dot(const Point& a, const Point& b) {
  Point::require_same_dimension(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const Point& a) {
  // hypot-style scaling keeps tiny and huge coordinates from under/overflowing
  double scale = 0.0;
  for (double x : a) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) return 0.0;
  double s = 0.0;
  for (double x : a) {
    const double y = x / scale;
    s += y * y;
  }
  return scale * std::sqrt(s);
}

/// Ordered sequence of points sharing one dimension.
class Chain {
public:
  Chain() = default;
  Chain(std::initializer_list<Point> points) {
    for (const auto& p : points) push_back(p);
  }
  explicit Chain(std::vector<Point> points) {
    points_.reserve(points.size());
    for (auto& p : points) push_back(std::move(p));
  }

  void push_back(Point p) {
    if (points_.empty()) {
      dimension_ = p.dimension();
    } else if (p.dimension() != dimension_) {
      throw InputError("chain point " + std::to_string(points_.size()) + " has dimension " +
                       std::to_string(p.dimension()) + ", expected " + std::to_string(dimension_));
    }
    points_.push_back(std::move(p));
  }

  /// Dimension shared by all points; 0 for an empty chain.
  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }

  const Point& operator[](std::size_t i) const noexcept { return points_[i]; }
  std::span<const Point> points() const noexcept { return points_; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  /// Replace a point in place; the dimension must not change.
  void set(std::size_t i, Point p) {
    if (p.dimension() != dimension_) throw InputError("replacement point changes chain dimension");
    points_.at(i) = std::move(p);
  }

  bool operator==(const Chain&) const = default;

private:
  std::size_t dimension_ = 0;
  std::vector<Point> points_;
};

inline Chain reversed(const Chain& chain) {
  Chain out;
  for (auto it = chain.points().rbegin(); it != chain.points().rend(); ++it) out.push_back(*it);
  return out;
}

/// Nonnegative extended real: a finite radius or +infinity.
class Degree {
public:
  constexpr Degree() noexcept = default;
  explicit Degree(double value) : value_(value) {
    if (std::isnan(value) || value < 0.0) throw InputError("degree must be a nonnegative number");
  }

  static constexpr Degree infinity() noexcept {
    Degree d;
    d.value_ = std::numeric_limits<double>::infinity();
    return d;
  }

  constexpr double value() const noexcept { return value_; }
  constexpr bool is_infinite() const noexcept {
    return value_ == std::numeric_limits<double>::infinity();
  }

  friend constexpr bool operator==(Degree a, Degree b) noexcept { return a.value_ == b.value_; }
  friend constexpr auto operator<=>(Degree a, Degree b) noexcept {
    return std::weak_order(a.value_, b.value_);
  }

private:
  double value_ = 0.0;
};

inline Degree min(Degree a, Degree b) noexcept { return b < a ? b : a; }
inline Degree max(Degree a, Degree b) noexcept { return a < b ? b : a; }

}  // namespace monochain
