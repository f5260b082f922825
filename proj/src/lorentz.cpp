#include "lcmc/lorentz.hpp"

#include <algorithm>

namespace lcmc {

const char* to_string(CausalClass c) {
    switch (c) {
        case CausalClass::Spacelike: return "spacelike";
        case CausalClass::Timelike: return "timelike";
        case CausalClass::Lightlike: return "lightlike";
    }
    return "?";
}

CausalClass causal_class(const LVec3& v) {
    if (!v.finite()) throw CausalError("causal_class: non-finite input");
    const double q = minkowski_inner(v, v);
    if (q > 0.0) return CausalClass::Spacelike;
    if (q < 0.0) return CausalClass::Timelike;
    // q == 0: the zero vector counts as spacelike, anything else is lightlike.
    if (v.x1 == 0.0 && v.x2 == 0.0 && v.x3 == 0.0) return CausalClass::Spacelike;
    return CausalClass::Lightlike;
}

LVec3 lorentz_cross(const LVec3& a, const LVec3& b) {
    // Euclidean cross product, with the x3 component flipped so that
    // <a^b, w> = det(a,b,w) in the Lorentzian inner product.
    return {a.x2 * b.x3 - a.x3 * b.x2,
            a.x3 * b.x1 - a.x1 * b.x3,
            -(a.x1 * b.x2 - a.x2 * b.x1)};
}

bool is_future_directed(const LVec3& v) {
    if (causal_class(v) == CausalClass::Spacelike)
        throw CausalError("is_future_directed: spacelike input has no time orientation");
    return v.x3 > 0.0;
}

static void require_future_timelike(const LVec3& v, const char* who) {
    if (causal_class(v) != CausalClass::Timelike)
        throw CausalError(std::string(who) + ": argument is not timelike");
    if (!(v.x3 > 0.0))
        throw CausalError(std::string(who) + ": argument is not future-directed");
}

double timelike_angle(const LVec3& a, const LVec3& b) {
    require_future_timelike(a, "timelike_angle");
    require_future_timelike(b, "timelike_angle");
    const double ratio = std::fabs(minkowski_inner(a, b)) / (lorentz_norm(a) * lorentz_norm(b));
    // For future-directed timelike pairs the ratio is >= 1 exactly; clamp rounding.
    return std::acosh(std::max(ratio, 1.0));
}

double mixed_angle(const LVec3& s, const LVec3& t) {
    if (causal_class(s) != CausalClass::Spacelike)
        throw CausalError("mixed_angle: first argument is not spacelike");
    if (lorentz_norm(s) == 0.0)
        throw CausalError("mixed_angle: first argument is the zero vector");
    require_future_timelike(t, "mixed_angle");
    return std::asinh(std::fabs(minkowski_inner(s, t)) / (lorentz_norm(s) * lorentz_norm(t)));
}

double frame_residual(const BoundaryFrame& f) {
    const LVec3 nu_ref = -lorentz_cross(f.tau, f.normal);
    double r = 0.0;
    r = std::max(r, std::fabs(minkowski_inner(f.tau, f.tau) - 1.0));
    r = std::max(r, std::fabs(minkowski_inner(f.normal, f.normal) + 1.0));
    r = std::max(r, std::fabs(minkowski_inner(f.conormal, f.conormal) - 1.0));
    r = std::max(r, std::fabs(minkowski_inner(f.tau, f.normal)));
    r = std::max(r, std::fabs(minkowski_inner(f.tau, f.conormal)));
    r = std::max(r, std::fabs(minkowski_inner(f.normal, f.conormal)));
    r = std::max(r, euclid_norm(f.conormal - nu_ref));
    return r;
}

} // namespace lcmc
