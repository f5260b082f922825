#pragma once

#include <cmath>
#include <complex>

namespace lcmc {

// Parameter-plane vector/point (Euclidean semantics).
struct Vec2 {
    double u = 0.0;
    double v = 0.0;

    Vec2 operator+(Vec2 o) const { return {u + o.u, v + o.v}; }
    Vec2 operator-(Vec2 o) const { return {u - o.u, v - o.v}; }
    Vec2 operator*(double s) const { return {u * s, v * s}; }
    Vec2 operator/(double s) const { return {u / s, v / s}; }
    Vec2 operator-() const { return {-u, -v}; }
};

inline Vec2 operator*(double s, Vec2 a) { return a * s; }

inline double dot(Vec2 a, Vec2 b) { return a.u * b.u + a.v * b.v; }
inline double cross(Vec2 a, Vec2 b) { return a.u * b.v - a.v * b.u; }
inline double norm(Vec2 a) { return std::hypot(a.u, a.v); }

inline Vec2 normalized(Vec2 a) {
    const double n = norm(a);
    return {a.u / n, a.v / n};
}

inline std::complex<double> to_complex(Vec2 a) { return {a.u, a.v}; }
inline Vec2 from_complex(std::complex<double> z) { return {z.real(), z.imag()}; }

} // namespace lcmc
