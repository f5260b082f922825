#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lcmc/surface.hpp"

namespace lcmc {

// Totally umbilic support surface: spacelike/timelike plane, hyperbolic
// plane of pseudoradius c (optionally shifted along x3), or a de Sitter
// surface. Lightlike planes are rejected at construction.
class SupportSurface {
public:
    enum class Kind { SpacelikePlane, TimelikePlane, HyperbolicPlane, DeSitter };

    // Plane {<normal, x> = offset}; the factory classifies the normal and
    // rejects lightlike ones.
    static SupportSurface spacelike_plane(const LVec3& unit_future_normal, double offset);
    static SupportSurface timelike_plane(const LVec3& unit_spacelike_normal, double offset);
    // {<x - (0,0,shift3), x - (0,0,shift3)> = -c^2, x3 > shift3}
    static SupportSurface hyperbolic_plane(double c, double shift3 = 0.0);
    // {<x, x> = c^2}
    static SupportSurface de_sitter(double c);

    Kind kind() const { return kind_; }
    // true for supports whose unit normal is timelike (spacelike surfaces)
    bool spacelike_support() const {
        return kind_ == Kind::SpacelikePlane || kind_ == Kind::HyperbolicPlane;
    }

    // |defining equation| at x.
    double membership_residual(const LVec3& x) const;

    // Unit normal at an on-surface point: future timelike for spacelike
    // supports, unit spacelike otherwise. Rejects x off the surface by more
    // than 1e-5.
    LVec3 normal_at(const LVec3& x) const;

    const char* kind_name() const;

    double scale() const { return c_; }
    double shift() const { return shift_; }
    const LVec3& plane_normal() const { return normal_; }
    double plane_offset() const { return offset_; }

private:
    SupportSurface(Kind k) : kind_(k) {}
    Kind kind_;
    LVec3 normal_{};       // planes
    double offset_ = 0.0;  // planes
    double c_ = 0.0;       // hyperbolic plane / de Sitter
    double shift_ = 0.0;   // hyperbolic plane apex shift along x3
};

// Boundary curve of a patch together with the support surface it lies on.
struct BoundaryComponent {
    std::string label;
    std::function<Vec2(double)> curve;  // s in [0,1], image on the patch boundary
    SupportSurface support;
    int samples = 128;
};

enum class Orientation { InwardConormal, Forward, Reverse };

// Trihedron {tau, N, nu = -tau ^ N} at curve(s). InwardConormal flips the
// tangent if needed so the conormal points into the surface.
BoundaryFrame boundary_frame(const ParametricPatch& patch,
                             const std::function<Vec2(double)>& curve, double s,
                             Orientation orientation = Orientation::InwardConormal);

// Contact angle between the surface frame and the support at x, from
// |<N, N_Sigma>| = cosh(beta) (spacelike support) or sinh(beta) (timelike
// support). `residual` is the trihedra reconstruction error: rebuilding
// (nu, N) from nu_Sigma = -tau ^ N_Sigma through the hyperbolic-rotation
// equations (with the angle sign and, for timelike supports, the normal
// orientation resolved automatically) must reproduce the input frame.
struct ContactAngle {
    double beta = 0.0;
    double residual = 0.0;
};

ContactAngle contact_angle(const BoundaryFrame& frame, const SupportSurface& support,
                           const LVec3& x);

// (nu, N) from the hyperbolic-rotation equations for a given angle:
//   spacelike support: nu = cosh(b) nu_S + sinh(b) N_S, N = sinh(b) nu_S + cosh(b) N_S
//   timelike support:  nu = sinh(b) nu_S + cosh(b) N_S, N = cosh(b) nu_S + sinh(b) N_S
// with nu_S = -tau ^ N_S. Causal classes of the inputs are validated.
std::pair<LVec3, LVec3> trihedra_roundtrip(double beta, const LVec3& tau,
                                           const LVec3& n_sigma,
                                           SupportSurface::Kind support_kind);

enum class CapillaryVerdict { Capillary, NotConstantAngle, NotLineOfCurvature };

const char* to_string(CapillaryVerdict v);

struct CapillaryReport {
    std::string edge;
    std::vector<std::pair<double, double>> beta_profile;  // (s, beta)
    double beta_mean = 0.0;
    double beta_spread = 0.0;       // max beta - min beta
    double joachimsthal_max = 0.0;  // max |II(tau, nu)| along the component
    double membership_max = 0.0;    // worst support-surface residual
    CapillaryVerdict verdict = CapillaryVerdict::Capillary;
};

// max |II(tau, nu)| along the component (near zero certifies the component
// is a line of curvature).
double joachimsthal_check(const ParametricPatch& patch, const BoundaryComponent& comp);

// Samples the contact angle along the component and issues the verdict:
// Capillary iff the angle spread stays under 1e-4 (1 + mean) and the
// Joachimsthal residual under 1e-5 (1 + max |kappa|).
CapillaryReport capillary_constancy_check(const ParametricPatch& patch,
                                          const BoundaryComponent& comp);

} // namespace lcmc
