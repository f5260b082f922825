#include "lcmc/capillary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lcmc {

const char* to_string(CapillaryVerdict v) {
    switch (v) {
        case CapillaryVerdict::Capillary: return "Capillary";
        case CapillaryVerdict::NotConstantAngle: return "NotConstantAngle";
        case CapillaryVerdict::NotLineOfCurvature: return "NotLineOfCurvature";
    }
    return "?";
}

SupportSurface SupportSurface::spacelike_plane(const LVec3& n, double offset) {
    const CausalClass cc = causal_class(n);
    if (cc == CausalClass::Lightlike)
        throw CausalError("support: lightlike planes are not admissible");
    if (cc != CausalClass::Timelike)
        throw CausalError("spacelike_plane: normal must be timelike");
    if (!(n.x3 > 0.0)) throw CausalError("spacelike_plane: normal must be future-directed");
    if (std::fabs(minkowski_inner(n, n) + 1.0) > 1e-9)
        throw CausalError("spacelike_plane: normal must be unit");
    SupportSurface s(Kind::SpacelikePlane);
    s.normal_ = n;
    s.offset_ = offset;
    return s;
}

SupportSurface SupportSurface::timelike_plane(const LVec3& n, double offset) {
    const CausalClass cc = causal_class(n);
    if (cc == CausalClass::Lightlike)
        throw CausalError("support: lightlike planes are not admissible");
    if (cc != CausalClass::Spacelike || lorentz_norm(n) == 0.0)
        throw CausalError("timelike_plane: normal must be spacelike");
    if (std::fabs(minkowski_inner(n, n) - 1.0) > 1e-9)
        throw CausalError("timelike_plane: normal must be unit");
    SupportSurface s(Kind::TimelikePlane);
    s.normal_ = n;
    s.offset_ = offset;
    return s;
}

SupportSurface SupportSurface::hyperbolic_plane(double c, double shift3) {
    if (!(c > 0.0)) throw DomainError("hyperbolic_plane: c must be positive");
    SupportSurface s(Kind::HyperbolicPlane);
    s.c_ = c;
    s.shift_ = shift3;
    return s;
}

SupportSurface SupportSurface::de_sitter(double c) {
    if (!(c > 0.0)) throw DomainError("de_sitter: c must be positive");
    SupportSurface s(Kind::DeSitter);
    s.c_ = c;
    return s;
}

const char* SupportSurface::kind_name() const {
    switch (kind_) {
        case Kind::SpacelikePlane: return "spacelike_plane";
        case Kind::TimelikePlane: return "timelike_plane";
        case Kind::HyperbolicPlane: return "hyperbolic_plane";
        case Kind::DeSitter: return "de_sitter";
    }
    return "?";
}

double SupportSurface::membership_residual(const LVec3& x) const {
    switch (kind_) {
        case Kind::SpacelikePlane:
        case Kind::TimelikePlane:
            return std::fabs(minkowski_inner(normal_, x) - offset_);
        case Kind::HyperbolicPlane: {
            const LVec3 y = x - LVec3{0, 0, shift_};
            if (!(y.x3 > 0.0)) return std::numeric_limits<double>::infinity();
            return std::fabs(minkowski_inner(y, y) + c_ * c_);
        }
        case Kind::DeSitter:
            return std::fabs(minkowski_inner(x, x) - c_ * c_);
    }
    return 0.0;
}

LVec3 SupportSurface::normal_at(const LVec3& x) const {
    if (membership_residual(x) > 1e-5)
        throw DomainError("support normal: point is off the surface");
    switch (kind_) {
        case Kind::SpacelikePlane:
        case Kind::TimelikePlane:
            return normal_;
        case Kind::HyperbolicPlane:
            return (x - LVec3{0, 0, shift_}) / c_;
        case Kind::DeSitter:
            return x / c_;
    }
    return {};
}

BoundaryFrame boundary_frame(const ParametricPatch& patch,
                             const std::function<Vec2(double)>& curve, double s,
                             Orientation orientation) {
    const Vec2 p = curve(s);
    const FundamentalData fd = fundamental_data(patch, p.u, p.v);

    // parameter-plane tangent of the curve (second-order one-sided stencils
    // at the endpoints)
    const double ds = 1e-5;
    Vec2 tp;
    if (s + ds <= 1.0 && s - ds >= 0.0)
        tp = (curve(s + ds) - curve(s - ds)) / (2.0 * ds);
    else if (s + ds <= 1.0)
        tp = (curve(s) * -3.0 + curve(s + ds) * 4.0 - curve(s + 2 * ds)) / (2.0 * ds);
    else
        tp = (curve(s) * 3.0 - curve(s - ds) * 4.0 + curve(s - 2 * ds)) / (2.0 * ds);
    if (orientation == Orientation::Reverse) tp = -tp;

    const Jet2 j = patch.jet(p.u, p.v);
    LVec3 T = j.Xu * tp.u + j.Xv * tp.v;
    const double Tn = lorentz_norm(T);
    if (!(Tn > 0.0) || causal_class(T) != CausalClass::Spacelike)
        throw CausalError("boundary_frame: boundary tangent is not spacelike");
    LVec3 tau = T / Tn;
    LVec3 nu = -lorentz_cross(tau, fd.normal);

    if (orientation == Orientation::InwardConormal) {
        // push an inward parameter direction to the tangent plane and make
        // sure the conormal points that way
        const PatchDomain& dom = patch.domain();
        const double h = 1e-6 * dom.bounding_box().diameter();
        const Vec2 grad{(dom.boundary_distance({p.u + h, p.v}) -
                         dom.boundary_distance({p.u - h, p.v})) / (2 * h),
                        (dom.boundary_distance({p.u, p.v + h}) -
                         dom.boundary_distance({p.u, p.v - h})) / (2 * h)};
        const LVec3 inward = j.Xu * grad.u + j.Xv * grad.v;
        if (minkowski_inner(nu, inward) < 0.0) {
            tau = -tau;
            nu = -nu;
        }
    }
    return {tau, fd.normal, nu};
}

ContactAngle contact_angle(const BoundaryFrame& frame, const SupportSurface& support,
                           const LVec3& x) {
    if (support.membership_residual(x) > 1e-5)
        throw DomainError("contact_angle: point is off the support surface");
    const LVec3 n_sigma = support.normal_at(x);

    double beta;
    if (support.spacelike_support())
        beta = timelike_angle(frame.normal, n_sigma);
    else
        beta = mixed_angle(n_sigma, frame.normal);

    // Reconstruction check. The hyperbolic-rotation equations hold with a
    // signed angle (and, for timelike supports, either orientation of the
    // support normal); search the small sign set and keep the best residual.
    double best = std::numeric_limits<double>::infinity();
    const double ch = std::cosh(beta), sh = std::sinh(beta);
    for (const double eps_n : {1.0, -1.0}) {
        if (support.spacelike_support() && eps_n < 0.0) continue;  // future normal is canonical
        const LVec3 ns = n_sigma * eps_n;
        const LVec3 nu_s = -lorentz_cross(frame.tau, ns);
        for (const double sgn : {1.0, -1.0}) {
            LVec3 nu_hat, n_hat;
            if (support.spacelike_support()) {
                nu_hat = nu_s * ch + ns * (sgn * sh);
                n_hat = nu_s * (sgn * sh) + ns * ch;
            } else {
                nu_hat = nu_s * (sgn * sh) + ns * ch;
                n_hat = nu_s * ch + ns * (sgn * sh);
            }
            const double r = std::max(euclid_norm(nu_hat - frame.conormal),
                                      euclid_norm(n_hat - frame.normal));
            best = std::min(best, r);
        }
    }
    if (best > 1e-4)
        throw FrameError("contact_angle: trihedra reconstruction residual too large");
    return {beta, best};
}

std::pair<LVec3, LVec3> trihedra_roundtrip(double beta, const LVec3& tau,
                                           const LVec3& n_sigma,
                                           SupportSurface::Kind kind) {
    if (beta < 0.0) throw DomainError("trihedra_roundtrip: beta must be nonnegative");
    if (causal_class(tau) != CausalClass::Spacelike ||
        std::fabs(minkowski_inner(tau, tau) - 1.0) > 1e-9)
        throw CausalError("trihedra_roundtrip: tau must be unit spacelike");
    if (std::fabs(minkowski_inner(tau, n_sigma)) > 1e-9)
        throw FrameError("trihedra_roundtrip: tau and the support normal must be orthogonal");

    const bool spacelike_kind = kind == SupportSurface::Kind::SpacelikePlane ||
                                kind == SupportSurface::Kind::HyperbolicPlane;
    if (spacelike_kind) {
        if (causal_class(n_sigma) != CausalClass::Timelike || !(n_sigma.x3 > 0.0) ||
            std::fabs(minkowski_inner(n_sigma, n_sigma) + 1.0) > 1e-9)
            throw CausalError(
                "trihedra_roundtrip: spacelike support needs a unit future timelike normal");
    } else {
        if (causal_class(n_sigma) != CausalClass::Spacelike ||
            std::fabs(minkowski_inner(n_sigma, n_sigma) - 1.0) > 1e-9)
            throw CausalError(
                "trihedra_roundtrip: timelike support needs a unit spacelike normal");
    }

    const LVec3 nu_s = -lorentz_cross(tau, n_sigma);
    const double ch = std::cosh(beta), sh = std::sinh(beta);
    LVec3 nu, N;
    if (spacelike_kind) {
        nu = nu_s * ch + n_sigma * sh;
        N = nu_s * sh + n_sigma * ch;
    } else {
        if (!(nu_s.x3 > 0.0))
            throw CausalError(
                "trihedra_roundtrip: support conormal is past-directed; flip tau");
        nu = nu_s * sh + n_sigma * ch;
        N = nu_s * ch + n_sigma * sh;
    }
    return {nu, N};
}

double joachimsthal_check(const ParametricPatch& patch, const BoundaryComponent& comp) {
    return curve_mixed_second_form(patch, comp.curve, std::max(comp.samples, 16));
}

CapillaryReport capillary_constancy_check(const ParametricPatch& patch,
                                          const BoundaryComponent& comp) {
    if (comp.samples < 16)
        throw SamplingError("capillary_constancy_check: need at least 16 samples");

    CapillaryReport rep;
    rep.edge = comp.label;

    double kappa_max = 0.0;
    double beta_min = std::numeric_limits<double>::infinity();
    double beta_max = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (int k = 0; k < comp.samples; ++k) {
        const double s = double(k) / (comp.samples - 1);
        const Vec2 p = comp.curve(s);
        const LVec3 x = patch.position(p.u, p.v);
        rep.membership_max = std::max(rep.membership_max, comp.support.membership_residual(x));
        if (comp.support.membership_residual(x) > 1e-5)
            throw DomainError("capillary_constancy_check: curve is off the support surface");

        const BoundaryFrame frame = boundary_frame(patch, comp.curve, s);
        const ContactAngle ca = contact_angle(frame, comp.support, x);
        rep.beta_profile.emplace_back(s, ca.beta);
        beta_min = std::min(beta_min, ca.beta);
        beta_max = std::max(beta_max, ca.beta);
        sum += ca.beta;

        const FundamentalData fd = fundamental_data(patch, p.u, p.v);
        kappa_max = std::max({kappa_max, std::fabs(fd.kappa1), std::fabs(fd.kappa2)});
    }
    rep.beta_mean = sum / comp.samples;
    rep.beta_spread = beta_max - beta_min;
    rep.joachimsthal_max = joachimsthal_check(patch, comp);

    const double joach_gate = 1e-5 * (1.0 + kappa_max);
    if (rep.beta_spread >= 1e-4 * (1.0 + rep.beta_mean))
        rep.verdict = CapillaryVerdict::NotConstantAngle;
    else if (rep.joachimsthal_max >= joach_gate)
        rep.verdict = CapillaryVerdict::NotLineOfCurvature;
    else
        rep.verdict = CapillaryVerdict::Capillary;
    return rep;
}

} // namespace lcmc
