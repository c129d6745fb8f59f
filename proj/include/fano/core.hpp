#ifndef FANO_CORE_HPP
#define FANO_CORE_HPP

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fano {

using Int = long long;
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when an input violates a documented precondition (degenerate hull,
// origin not interior, non-reflexive polytope, malformed file, ...).
struct input_error : std::runtime_error {
  explicit input_error(const std::string& m) : std::runtime_error(m) {}
};

// Thrown when an internal invariant fails; indicates a bug upstream.
struct invariant_error : std::logic_error {
  explicit invariant_error(const std::string& m) : std::logic_error(m) {}
};

struct Vec2 {
  Int x = 0, y = 0;
  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(Int s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(Vec2 a, Vec2 b) { return !(a == b); }
  friend bool operator<(Vec2 a, Vec2 b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
};

struct Vec3 {
  Int x = 0, y = 0, z = 0;
  friend Vec3 operator+(Vec3 a, Vec3 b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Vec3 operator-(Vec3 a, Vec3 b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Vec3 operator*(Int s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend bool operator==(Vec3 a, Vec3 b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator!=(Vec3 a, Vec3 b) { return !(a == b); }
  friend bool operator<(Vec3 a, Vec3 b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
  }
};

inline Int cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline Int dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline Int dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
          a.x * b.y - a.y * b.x};
}

inline Int igcd(Int a, Int b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

// gcd of the absolute values of the components; 0 for the zero vector.
inline Int content(Vec2 v) { return igcd(v.x, v.y); }
inline Int content(Vec3 v) { return igcd(igcd(v.x, v.y), v.z); }

inline Vec2 primitive(Vec2 v) {
  Int g = content(v);
  if (g == 0) throw invariant_error("primitive(0)");
  return {v.x / g, v.y / g};
}
inline Vec3 primitive(Vec3 v) {
  Int g = content(v);
  if (g == 0) throw invariant_error("primitive(0)");
  return {v.x / g, v.y / g, v.z / g};
}

inline Int det3(Vec3 a, Vec3 b, Vec3 c) { return dot(a, cross(b, c)); }

// lattice length of the segment [a, b]
inline Int lattice_length(Vec2 a, Vec2 b) { return content(b - a); }
inline Int lattice_length(Vec3 a, Vec3 b) { return content(b - a); }

inline BigInt binom(Int n, Int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (Int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

}  // namespace fano

#endif
