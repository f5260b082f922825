#pragma once

#include <cmath>

#include "lcmc/errors.hpp"

namespace lcmc {

// Vector of L^3: R^3 with the metric dx1^2 + dx2^2 - dx3^2. The x3 axis is
// the timelike one; (0,0,1) fixes the future orientation.
struct LVec3 {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;

    LVec3 operator+(const LVec3& o) const { return {x1 + o.x1, x2 + o.x2, x3 + o.x3}; }
    LVec3 operator-(const LVec3& o) const { return {x1 - o.x1, x2 - o.x2, x3 - o.x3}; }
    LVec3 operator*(double s) const { return {x1 * s, x2 * s, x3 * s}; }
    LVec3 operator/(double s) const { return {x1 / s, x2 / s, x3 / s}; }
    LVec3 operator-() const { return {-x1, -x2, -x3}; }

    bool finite() const {
        return std::isfinite(x1) && std::isfinite(x2) && std::isfinite(x3);
    }
};

inline LVec3 operator*(double s, const LVec3& a) { return a * s; }

enum class CausalClass { Spacelike, Timelike, Lightlike };

const char* to_string(CausalClass c);

// <a,b> = a1 b1 + a2 b2 - a3 b3
inline double minkowski_inner(const LVec3& a, const LVec3& b) {
    return a.x1 * b.x1 + a.x2 * b.x2 - a.x3 * b.x3;
}

// sqrt(|<v,v>|), the Lorentzian magnitude for either causal class.
inline double lorentz_norm(const LVec3& v) {
    return std::sqrt(std::fabs(minkowski_inner(v, v)));
}

// Euclidean norm; used only for error scaling and plotting, never as a metric.
inline double euclid_norm(const LVec3& v) {
    return std::sqrt(v.x1 * v.x1 + v.x2 * v.x2 + v.x3 * v.x3);
}

// Classifies by the exact sign of <v,v>. The zero vector is spacelike.
// No tolerance here: callers that sample noisy data apply their own.
CausalClass causal_class(const LVec3& v);

// The unique c with <c,w> = det(a,b,w) for all w. Bilinear, antisymmetric,
// Lorentz-orthogonal to both arguments.
LVec3 lorentz_cross(const LVec3& a, const LVec3& b);

// True iff x3 > 0. Only meaningful for timelike or lightlike vectors;
// spacelike input is rejected.
bool is_future_directed(const LVec3& v);

// Angle between two future-directed timelike vectors:
// |<a,b>| = |a||b| cosh(beta). Symmetric and scale invariant.
double timelike_angle(const LVec3& a, const LVec3& b);

// Angle between a nonzero spacelike s and a future-directed timelike t:
// |<s,t>| = |s||t| sinh(beta).
double mixed_angle(const LVec3& s, const LVec3& t);

// Orthonormal frame along a boundary curve of a spacelike surface:
// tau unit spacelike tangent, normal unit future timelike, conormal
// = -tau ^ normal unit spacelike, pointing into the surface.
struct BoundaryFrame {
    LVec3 tau;
    LVec3 normal;
    LVec3 conormal;
};

// Worst deviation of the frame from its defining relations
// (<tau,tau>=1, <N,N>=-1, <nu,nu>=1, pairwise orthogonal, nu = -tau^N).
double frame_residual(const BoundaryFrame& f);

} // namespace lcmc
