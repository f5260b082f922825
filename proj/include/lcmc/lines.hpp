#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lcmc/surface.hpp"

namespace lcmc {

enum class CurvatureFamily { First, Second };

const char* to_string(CurvatureFamily f);

struct TraceConfig {
    double step = 0.01;            // parameter-plane arclength per step
    int max_steps = 10000;
    double umbilic_stop_tol = 1e-5;  // stop when kappa1 - kappa2 drops below
    bool boundary_stop = true;
};

enum class StopReason { Boundary, Umbilic, MaxSteps, FieldDegenerate };

const char* to_string(StopReason r);

struct CurvatureTrace {
    CurvatureFamily family = CurvatureFamily::First;
    std::vector<Vec2> points_param;
    std::vector<LVec3> points_ambient;
    StopReason stop_reason = StopReason::MaxSteps;
};

// The two principal directions at a non-umbilic point, first-form normalized,
// deterministic sign representative. Solutions of the curvature-line
// quadratic -f du^2 + (e-g) du dv + f dv^2 = 0 on isothermal charts.
std::pair<Vec2, Vec2> line_field(const ParametricPatch& patch, double u, double v);

// Runge-Kutta integration of one principal family with sign continuation:
// every stage picks the root whose first-form inner product with the
// previous direction is positive. The final step bisects onto the domain
// boundary to 1e-9 parameter distance.
CurvatureTrace trace_curvature_line(const ParametricPatch& patch, Vec2 start,
                                    CurvatureFamily family, TraceConfig config = {},
                                    double initial_sign = 1.0);

// Independent traces; Parallel runs them concurrently and keeps input order.
std::vector<CurvatureTrace> trace_many(
    const ParametricPatch& patch,
    const std::vector<std::pair<Vec2, CurvatureFamily>>& starts,
    TraceConfig config = {}, ExecMode exec = ExecMode::Parallel);

// Residual of the curvature-line quadratic at a trace point for a
// parameter-unit direction; bounded by 1e-6 * lambda^2 along valid traces.
double trace_quadratic_residual(const ParametricPatch& patch, Vec2 point, Vec2 dir);

// CSV: header trace_id,family,u,v,x1,x2,x3, one row per point.
void export_traces_csv(std::span<const CurvatureTrace> traces, const std::string& path);

// SVG 1.1, plain paths: parameter-plane panel and an orthographic ambient
// projection panel, one path per trace, stroke color per family.
void export_traces_svg(std::span<const CurvatureTrace> traces, const std::string& path);

} // namespace lcmc
