#pragma once

#include <cmath>

#include "hyppoisson/errors.hpp"

namespace hyppoisson {

// Quaternion w + x i + y j + z k with the Hamilton product.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_)
      : w(w_), x(x_), y(y_), z(z_) {}
  // Real scalar embeds as w + 0i + 0j + 0k.
  constexpr Quaternion(double real) : w(real) {}  // NOLINT(runtime/explicit)

  constexpr double real() const { return w; }
  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
  constexpr double norm_sq() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm_sq()); }

  Quaternion unit() const {
    const double n = norm();
    if (n == 0.0) throw ZeroQuaternion("Quaternion::unit of zero quaternion");
    return {w / n, x / n, y / n, z / n};
  }

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

  friend constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
  friend constexpr Quaternion operator*(double s, const Quaternion& q) {
    return {s * q.w, s * q.x, s * q.y, s * q.z};
  }
  friend constexpr Quaternion operator*(const Quaternion& q, double s) {
    return s * q;
  }
};

}  // namespace hyppoisson
