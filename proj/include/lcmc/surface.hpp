#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "lcmc/patch.hpp"

namespace lcmc {

// Kernel execution mode. Serial is the reference implementation; Parallel
// runs the same row-wise kernels under OpenMP and reduces rows in index
// order, so both modes produce identical results.
enum class ExecMode { Serial, Parallel };

struct FirstForm {
    double E = 0, F = 0, G = 0;
};

// Everything the rest of the library needs at one parameter point.
// e, f, g use the convention e = <N, X_uu> with N the future-directed unit
// timelike normal. Principal curvatures are the eigenvalues of dN expressed
// in the (X_u, X_v) basis; with this convention the hyperbolic plane of
// radius c (normal X/c) has kappa1 = kappa2 = +1/c.
struct FundamentalData {
    double E = 0, F = 0, G = 0;
    double e = 0, f = 0, g = 0;
    LVec3 normal;
    double H = 0, K = 0;
    double kappa1 = 0, kappa2 = 0;  // kappa1 >= kappa2
    std::optional<Vec2> dir1, dir2; // first-form-unit principal directions; absent near umbilics
    double lambda2 = 0;             // = E; the conformal factor squared on isothermal charts
};

FirstForm first_form(const ParametricPatch& patch, double u, double v);
FundamentalData fundamental_data(const ParametricPatch& patch, double u, double v);

// Principal directions straight from form coefficients (eigenvectors of the
// shape operator), first-form normalized, deterministic sign representative.
// Throws DegeneracyError when the point is umbilic to working precision.
std::pair<Vec2, Vec2> principal_directions_from_forms(double E, double F, double G,
                                                      double e, double f, double g);

// --- grid kernels -----------------------------------------------------------

// Deterministic reduction over the n x n parameter lattice restricted to the
// closed domain. `fn` must be pure.
struct GridScanResult {
    double value = 0.0;
    Vec2 at;
    long samples = 0;
};

GridScanResult grid_scan_min(const PatchDomain& dom, int grid, ExecMode exec,
                             const std::function<double(double, double)>& fn);
GridScanResult grid_scan_max(const PatchDomain& dom, int grid, ExecMode exec,
                             const std::function<double(double, double)>& fn);

struct SpacelikeReport {
    bool pass = false;
    double min_value = 0.0;  // min over the grid of EG - F^2
    Vec2 worst_point;
};

SpacelikeReport spacelike_check(const ParametricPatch& patch, int grid,
                                ExecMode exec = ExecMode::Parallel);

// max over the grid of (|E-G| + |F|) / max(E,G); a chart counts as
// isothermal below 1e-6.
double isothermal_residual(const ParametricPatch& patch, int grid,
                           ExecMode exec = ExecMode::Parallel);

inline constexpr double kIsothermalGate = 1e-6;

// max |II(tau, nu)| along a parameter curve s in [0,1] -> (u,v) on the patch,
// where tau is the unit tangent of the image curve and nu = -tau ^ N the unit
// in-surface conormal. dN/ds uses centered differences over the curve samples
// (second-order one-sided at the endpoints). Near-zero values certify that
// the curve is a line of curvature.
double curve_mixed_second_form(const ParametricPatch& patch,
                               const std::function<Vec2(double)>& curve,
                               int samples);

} // namespace lcmc
