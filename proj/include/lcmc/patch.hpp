#pragma once

#include <functional>

#include "lcmc/domain.hpp"
#include "lcmc/lorentz.hpp"

namespace lcmc {

// Position and derivatives of an immersion at one parameter point.
struct Jet2 {
    LVec3 X, Xu, Xv, Xuu, Xuv, Xvv;
};

// Immersion X(u,v) over a PatchDomain. Derivatives come either from a
// caller-supplied jet (analytic mode) or from second-order finite
// differences of the position map. Near the boundary the centered stencils
// clamp to one-sided second-order ones; `eval_margin` widens the region on
// which the position map may be evaluated beyond the closed domain.
class ParametricPatch {
public:
    using PositionFn = std::function<LVec3(double, double)>;
    using JetFn = std::function<Jet2(double, double)>;

    ParametricPatch(PatchDomain domain, JetFn jet, PositionFn position);
    // fd_step <= 0 selects the default 1e-4 * (domain diameter).
    ParametricPatch(PatchDomain domain, PositionFn position, double fd_step = 0.0);

    const PatchDomain& domain() const { return domain_; }
    bool analytic() const { return static_cast<bool>(jet_); }
    double fd_step() const { return h_; }

    double eval_margin() const { return margin_; }
    void set_eval_margin(double m) { margin_ = m; }

    LVec3 position(double u, double v) const;
    Jet2 jet(double u, double v) const;

    // Same position map, derivatives forced through finite differences.
    ParametricPatch finite_difference_copy(double fd_step) const;

private:
    LVec3 eval_checked(double u, double v) const;
    Jet2 fd_jet(double u, double v) const;

    PatchDomain domain_;
    JetFn jet_;
    PositionFn pos_;
    double h_ = 0.0;
    double margin_ = 0.0;
};

// Alias for the operation name used throughout: position plus first and
// second derivatives at (u,v).
inline Jet2 evaluate_derivatives(const ParametricPatch& p, double u, double v) {
    return p.jet(u, v);
}

} // namespace lcmc
