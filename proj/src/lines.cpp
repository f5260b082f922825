#include "lcmc/lines.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <locale>
#include <sstream>

namespace lcmc {

const char* to_string(CurvatureFamily f) {
    return f == CurvatureFamily::First ? "first" : "second";
}

const char* to_string(StopReason r) {
    switch (r) {
        case StopReason::Boundary: return "boundary";
        case StopReason::Umbilic: return "umbilic";
        case StopReason::MaxSteps: return "max_steps";
        case StopReason::FieldDegenerate: return "field_degenerate";
    }
    return "?";
}

std::pair<Vec2, Vec2> line_field(const ParametricPatch& patch, double u, double v) {
    const FundamentalData fd = fundamental_data(patch, u, v);
    if (!fd.dir1 || !fd.dir2)
        throw DegeneracyError("line_field: umbilic point");
    return {*fd.dir1, *fd.dir2};
}

double trace_quadratic_residual(const ParametricPatch& patch, Vec2 point, Vec2 dir) {
    const FundamentalData fd = fundamental_data(patch, point.u, point.v);
    const Vec2 d = normalized(dir);
    return std::fabs(-fd.f * d.u * d.u + (fd.e - fd.g) * d.u * d.v + fd.f * d.v * d.v);
}

namespace {

struct FieldSample {
    bool umbilic = false;
    Vec2 dir;  // parameter-unit direction, sign-aligned with the reference
};

FieldSample sample_direction(const ParametricPatch& patch, Vec2 p,
                             CurvatureFamily family, Vec2 ref, double stop_tol) {
    const FundamentalData fd = fundamental_data(patch, p.u, p.v);
    if (fd.kappa1 - fd.kappa2 < stop_tol || !fd.dir1 || !fd.dir2)
        return {true, {}};
    Vec2 d = family == CurvatureFamily::First ? *fd.dir1 : *fd.dir2;
    // sign continuation in the first form
    const double align = fd.E * d.u * ref.u + fd.F * (d.u * ref.v + d.v * ref.u) +
                         fd.G * d.v * ref.v;
    if (align < 0.0) d = -d;
    if (align == 0.0 && (ref.u != 0.0 || ref.v != 0.0))
        throw DegeneracyError("trace: direction orthogonal to the previous one");
    return {false, normalized(d)};
}

// One RK4 step of length h from p; throws DomainError if a stage leaves the
// evaluable region.
Vec2 rk4_step(const ParametricPatch& patch, Vec2 p, Vec2 ref, CurvatureFamily family,
              double h, double stop_tol, Vec2* out_dir) {
    auto dir = [&](Vec2 q, Vec2 r) {
        const FieldSample s = sample_direction(patch, q, family, r, stop_tol);
        if (s.umbilic) throw DegeneracyError("trace: stage hit an umbilic");
        return s.dir;
    };
    const Vec2 k1 = dir(p, ref);
    const Vec2 k2 = dir(p + k1 * (h / 2.0), k1);
    const Vec2 k3 = dir(p + k2 * (h / 2.0), k2);
    const Vec2 k4 = dir(p + k3 * h, k3);
    const Vec2 delta = (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
    if (out_dir) *out_dir = normalized(delta);
    return p + delta;
}

} // namespace

CurvatureTrace trace_curvature_line(const ParametricPatch& patch, Vec2 start,
                                    CurvatureFamily family, TraceConfig config,
                                    double initial_sign) {
    if (!(config.step > 0.0) || config.max_steps <= 0)
        throw DomainError("trace: step and max_steps must be positive");
    const PatchDomain& dom = patch.domain();
    if (!dom.contains(start))
        throw DomainError("trace: start outside the domain");

    CurvatureTrace tr;
    tr.family = family;

    // Everywhere-umbilic surfaces have no line field; the start sample
    // already tells us.
    {
        const FundamentalData fd = fundamental_data(patch, start.u, start.v);
        if (fd.kappa1 - fd.kappa2 < config.umbilic_stop_tol || !fd.dir1)
            throw DegeneracyError(
                "trace: start point is umbilic (everywhere-umbilic surface?)");
    }

    Vec2 p = start;
    Vec2 ref = (family == CurvatureFamily::First ? line_field(patch, p.u, p.v).first
                                                 : line_field(patch, p.u, p.v).second) *
               initial_sign;
    tr.points_param.push_back(p);
    tr.points_ambient.push_back(patch.position(p.u, p.v));
    tr.stop_reason = StopReason::MaxSteps;

    for (int step = 0; step < config.max_steps; ++step) {
        Vec2 next, dir;
        bool outside = false;
        try {
            next = rk4_step(patch, p, ref, family, config.step, config.umbilic_stop_tol, &dir);
            if (!dom.contains(next)) outside = true;
        } catch (const DomainError&) {
            outside = true;
        } catch (const DegeneracyError&) {
            // an RK4 stage ran into the umbilic region
            tr.stop_reason = StopReason::Umbilic;
            return tr;
        }

        if (outside) {
            if (!config.boundary_stop) {
                tr.stop_reason = StopReason::Boundary;
                return tr;
            }
            // bisect the step length until the endpoint lands on the boundary
            double lo = 0.0, hi = config.step;
            Vec2 landing = p;
            for (int it = 0; it < 60; ++it) {
                const double mid = 0.5 * (lo + hi);
                Vec2 cand;
                bool ok = true;
                try {
                    cand = rk4_step(patch, p, ref, family, mid, config.umbilic_stop_tol, nullptr);
                    ok = dom.contains(cand);
                } catch (const std::exception&) {
                    ok = false;
                }
                if (ok) {
                    lo = mid;
                    landing = cand;
                } else {
                    hi = mid;
                }
                if (hi - lo < 1e-9) break;
            }
            if (norm(landing - p) > 0.0) {
                tr.points_param.push_back(landing);
                tr.points_ambient.push_back(patch.position(landing.u, landing.v));
            }
            tr.stop_reason = StopReason::Boundary;
            return tr;
        }

        // umbilic stop at the new point
        try {
            const FundamentalData fd = fundamental_data(patch, next.u, next.v);
            if (fd.kappa1 - fd.kappa2 < config.umbilic_stop_tol) {
                tr.points_param.push_back(next);
                tr.points_ambient.push_back(patch.position(next.u, next.v));
                tr.stop_reason = StopReason::Umbilic;
                return tr;
            }
        } catch (const DegeneracyError&) {
            tr.stop_reason = StopReason::FieldDegenerate;
            return tr;
        }

        p = next;
        ref = dir;
        tr.points_param.push_back(p);
        tr.points_ambient.push_back(patch.position(p.u, p.v));
    }
    return tr;
}

std::vector<CurvatureTrace> trace_many(
    const ParametricPatch& patch,
    const std::vector<std::pair<Vec2, CurvatureFamily>>& starts, TraceConfig config,
    ExecMode exec) {
    std::vector<CurvatureTrace> out(starts.size());
    std::vector<std::string> errors(starts.size());
    auto run = [&](size_t k) {
        try {
            out[k] = trace_curvature_line(patch, starts[k].first, starts[k].second, config);
        } catch (const std::exception& ex) {
            errors[k] = ex.what();
        }
    };
    if (exec == ExecMode::Parallel) {
        const long n = static_cast<long>(starts.size());
#pragma omp parallel for schedule(dynamic)
        for (long k = 0; k < n; ++k) run(static_cast<size_t>(k));
    } else {
        for (size_t k = 0; k < starts.size(); ++k) run(k);
    }
    for (size_t k = 0; k < starts.size(); ++k)
        if (!errors[k].empty()) throw DegeneracyError("trace_many: " + errors[k]);
    return out;
}

// --- export ------------------------------------------------------------------

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open output file: " + path);
    out.imbue(std::locale::classic());
    out.precision(17);
    return out;
}

// fixed axonometric projection of ambient points
Vec2 project_iso(const LVec3& x) {
    const double c = 0.70710678118654752;
    return {(x.x1 - x.x2) * c, x.x3 - (x.x1 + x.x2) * 0.5};
}

const char* family_color(CurvatureFamily f) {
    return f == CurvatureFamily::First ? "#1f77b4" : "#d62728";
}

} // namespace

void export_traces_csv(std::span<const CurvatureTrace> traces, const std::string& path) {
    if (traces.empty()) throw IoError("export_traces_csv: no traces to write");
    std::ofstream out = open_out(path);
    out << "trace_id,family,u,v,x1,x2,x3\n";
    for (size_t id = 0; id < traces.size(); ++id) {
        const auto& tr = traces[id];
        for (size_t k = 0; k < tr.points_param.size(); ++k) {
            const Vec2 p = tr.points_param[k];
            const LVec3 x = tr.points_ambient[k];
            out << id << ',' << to_string(tr.family) << ',' << p.u << ',' << p.v << ','
                << x.x1 << ',' << x.x2 << ',' << x.x3 << '\n';
        }
    }
    if (!out) throw IoError("export_traces_csv: write failed: " + path);
}

void export_traces_svg(std::span<const CurvatureTrace> traces, const std::string& path) {
    if (traces.empty()) throw IoError("export_traces_svg: no traces to write");

    auto bounds = [](auto&& point_of, const auto& all) {
        double u0 = 1e300, u1 = -1e300, v0 = 1e300, v1 = -1e300;
        for (const auto& tr : all) {
            for (size_t k = 0; k < tr.points_param.size(); ++k) {
                const Vec2 p = point_of(tr, k);
                u0 = std::min(u0, p.u);
                u1 = std::max(u1, p.u);
                v0 = std::min(v0, p.v);
                v1 = std::max(v1, p.v);
            }
        }
        if (u1 <= u0) u1 = u0 + 1.0;
        if (v1 <= v0) v1 = v0 + 1.0;
        return BBox{u0, u1, v0, v1};
    };
    auto param_of = [](const CurvatureTrace& tr, size_t k) { return tr.points_param[k]; };
    auto ambient_of = [](const CurvatureTrace& tr, size_t k) {
        return project_iso(tr.points_ambient[k]);
    };
    const BBox pb = bounds(param_of, traces);
    const BBox ab = bounds(ambient_of, traces);

    const double panel = 480.0, margin = 24.0;
    auto mapper = [panel, margin](const BBox& bb, double x_off) {
        const double s = (panel - 2 * margin) / std::max(bb.width(), bb.height());
        return [=](Vec2 p) {
            return Vec2{x_off + margin + (p.u - bb.u0) * s,
                        panel - margin - (p.v - bb.v0) * s};
        };
    };
    auto to_param = mapper(pb, 0.0);
    auto to_amb = mapper(ab, panel + margin);

    std::ofstream out = open_out(path);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << 2 * panel + margin << "\" height=\"" << panel << "\">\n";

    auto emit = [&](auto&& point_of, auto&& to_screen) {
        for (const auto& tr : traces) {
            out << "<path fill=\"none\" stroke=\"" << family_color(tr.family)
                << "\" stroke-width=\"1\" d=\"";
            for (size_t k = 0; k < tr.points_param.size(); ++k) {
                const Vec2 s = to_screen(point_of(tr, k));
                out << (k == 0 ? 'M' : 'L') << s.u << ' ' << s.v << ' ';
            }
            out << "\"/>\n";
        }
    };
    emit(param_of, to_param);
    emit(ambient_of, to_amb);
    out << "</svg>\n";
    if (!out) throw IoError("export_traces_svg: write failed: " + path);
}

} // namespace lcmc
