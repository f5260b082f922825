#include "lcmc/hopf.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>

namespace lcmc {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

double wrap_to_half(double d, double modulus) {
    return d - modulus * std::round(d / modulus);
}

// Total variation of the continuous lift of an angle function sampled on a
// closed loop. `angle_at(phi)` returns an angle defined modulo `modulus`;
// the sample count doubles until consecutive lifted jumps stay under
// opts.max_jump.
double loop_variation(const std::function<double(double)>& angle_at, double modulus,
                      const LoopOptions& opts) {
    for (int n = std::max(opts.min_samples, 8);; n *= 2) {
        std::vector<double> a(n);
        for (int k = 0; k < n; ++k) a[k] = angle_at(kTwoPi * k / n);
        double total = 0.0, max_jump = 0.0;
        for (int k = 0; k < n; ++k) {
            const double d = wrap_to_half(a[(k + 1) % n] - a[k], modulus);
            total += d;
            max_jump = std::max(max_jump, std::fabs(d));
        }
        if (max_jump < opts.max_jump) return total;
        if (2 * n > opts.max_samples)
            throw SamplingError("loop sampling too coarse even at the maximum sample count");
    }
}

double direction_angle(Vec2 d) { return std::atan2(d.v, d.u); }

Vec2 unit_dir(double theta) { return {std::cos(theta), std::sin(theta)}; }

// Direction winding of a field given in local chart coordinates whose value
// on the lower half plane is produced by reflecting the upper half:
// theta(zeta) = -theta(conj zeta). Returns the full-loop line-field index.
double reflected_loop_index(const std::function<double(std::complex<double>)>& theta_upper,
                            double radius, const LoopOptions& opts) {
    auto angle_at = [&](double phi) {
        const std::complex<double> zeta = std::polar(radius, phi);
        if (zeta.imag() >= 0.0) return 2.0 * theta_upper(zeta);
        return -2.0 * theta_upper(std::conj(zeta));
    };
    return loop_variation(angle_at, kTwoPi, opts) / (2.0 * kTwoPi);
}

} // namespace

const char* to_string(UmbilicKind k) {
    switch (k) {
        case UmbilicKind::Interior: return "interior";
        case UmbilicKind::BoundaryRegular: return "boundary";
        case UmbilicKind::VertexAcute: return "vertex_acute";
        case UmbilicKind::VertexReflex: return "vertex_reflex";
    }
    return "?";
}

const char* to_string(IndexMethod m) {
    switch (m) {
        case IndexMethod::ArgumentPrinciple: return "argument_principle";
        case IndexMethod::DirectionWinding: return "direction_winding";
        case IndexMethod::Reflection: return "reflection";
        case IndexMethod::CornerStraightening: return "corner_straightening";
    }
    return "?";
}

HopfSample hopf_function(const ParametricPatch& patch, double u, double v) {
    const FundamentalData fd = fundamental_data(patch, u, v);
    const double dev = (std::fabs(fd.E - fd.G) + std::fabs(fd.F)) / std::max(fd.E, fd.G);
    if (dev >= kIsothermalGate)
        throw ChartError("hopf_function: chart is not isothermal at the sample point");
    return {{u, v}, {fd.e - fd.g, -2.0 * fd.f}, fd.lambda2};
}

double cr_residual(const ParametricPatch& patch, int grid, ExecMode exec) {
    if (grid < 6)
        throw SamplingError("cr_residual: grid too coarse (fewer than 4 interior points per axis)");
    if (isothermal_residual(patch, grid, exec) >= kIsothermalGate)
        throw ChartError("cr_residual: chart is not isothermal");

    const PatchDomain& dom = patch.domain();
    const BBox bb = dom.bounding_box();
    const double du = bb.width() / (grid - 1);
    const double dv = bb.height() / (grid - 1);

    std::vector<std::complex<double>> phi(static_cast<size_t>(grid) * grid);
    std::vector<char> in(static_cast<size_t>(grid) * grid, 0);
    auto idx = [grid](int i, int j) { return static_cast<size_t>(j) * grid + i; };

    std::vector<std::string> row_err(grid);
    auto fill_row = [&](int j) {
        const double v = bb.v0 + j * dv;
        for (int i = 0; i < grid; ++i) {
            const double u = bb.u0 + i * du;
            if (!dom.contains({u, v})) continue;
            try {
                phi[idx(i, j)] = hopf_function(patch, u, v).phi;
                in[idx(i, j)] = 1;
            } catch (const std::exception& ex) {
                row_err[j] = ex.what();
                return;
            }
        }
    };
    if (exec == ExecMode::Parallel) {
#pragma omp parallel for schedule(static)
        for (int j = 0; j < grid; ++j) fill_row(j);
    } else {
        for (int j = 0; j < grid; ++j) fill_row(j);
    }
    for (int j = 0; j < grid; ++j)
        if (!row_err[j].empty()) throw ChartError("cr_residual: " + row_err[j]);

    double max_phi = 0.0, max_dzbar = 0.0;
    long interior = 0;
    for (int j = 1; j + 1 < grid; ++j) {
        for (int i = 1; i + 1 < grid; ++i) {
            if (!in[idx(i, j)]) continue;
            max_phi = std::max(max_phi, std::abs(phi[idx(i, j)]));
            if (!in[idx(i - 1, j)] || !in[idx(i + 1, j)] || !in[idx(i, j - 1)] ||
                !in[idx(i, j + 1)])
                continue;
            const std::complex<double> dphi_du =
                (phi[idx(i + 1, j)] - phi[idx(i - 1, j)]) / (2.0 * du);
            const std::complex<double> dphi_dv =
                (phi[idx(i, j + 1)] - phi[idx(i, j - 1)]) / (2.0 * dv);
            const std::complex<double> dzbar =
                0.5 * (dphi_du + std::complex<double>(0, 1) * dphi_dv);
            max_dzbar = std::max(max_dzbar, std::abs(dzbar));
            ++interior;
        }
    }
    if (interior < 16)
        throw SamplingError("cr_residual: too few interior lattice points");
    return max_dzbar / (max_phi + DBL_EPSILON);
}

int winding_of_phi(std::span<const HopfSample> loop) {
    const size_t n = loop.size();
    if (n < 8) throw SamplingError("winding_of_phi: need at least 8 loop samples");
    double max_mag = 0.0, min_mag = std::numeric_limits<double>::infinity();
    for (const auto& s : loop) {
        const double m = std::abs(s.phi);
        max_mag = std::max(max_mag, m);
        min_mag = std::min(min_mag, m);
    }
    if (!(min_mag > 1e-12 * max_mag) || max_mag <= 0.0)
        throw SamplingError("winding_of_phi: |phi| under the noise floor on the loop");

    double total = 0.0;
    for (size_t k = 0; k < n; ++k) {
        const double d = wrap_to_half(
            std::arg(loop[(k + 1) % n].phi) - std::arg(loop[k].phi), kTwoPi);
        if (std::fabs(d) >= kPi / 2.0)
            throw SamplingError("winding_of_phi: consecutive argument jump exceeds pi/2");
        total += d;
    }
    const double w = total / kTwoPi;
    const int n_int = static_cast<int>(std::lround(w));
    if (std::fabs(w - n_int) > 0.1)
        throw SamplingError("winding_of_phi: loop does not close to an integer winding");
    return n_int;
}

PhiField patch_phi_field(const ParametricPatch& patch) {
    return [patch](std::complex<double> z) {
        return hopf_function(patch, z.real(), z.imag()).phi;
    };
}

DirectionField patch_direction_field(const ParametricPatch& patch) {
    return [patch](Vec2 p) {
        const FundamentalData fd = fundamental_data(patch, p.u, p.v);
        if (!fd.dir1)
            throw DegeneracyError("direction field: umbilic point on the sampling loop");
        return normalized(*fd.dir1);
    };
}

DirectionField phi_direction_field(PhiField phi) {
    return [phi = std::move(phi)](Vec2 p) {
        const std::complex<double> val = phi(to_complex(p));
        if (std::abs(val) <= 0.0)
            throw DegeneracyError("direction field: phi vanishes on the sampling loop");
        return unit_dir(-0.5 * std::arg(val));
    };
}

double phi_winding(const PhiField& phi, std::complex<double> center, double radius,
                   const LoopOptions& opts) {
    double max_mag = 0.0;
    double min_mag = std::numeric_limits<double>::infinity();
    auto angle_at = [&](double a) {
        const std::complex<double> val = phi(center + std::polar(radius, a));
        const double m = std::abs(val);
        max_mag = std::max(max_mag, m);
        min_mag = std::min(min_mag, m);
        return std::arg(val);
    };
    const double total = loop_variation(angle_at, kTwoPi, opts);
    if (!(min_mag > 1e-12 * max_mag) || max_mag <= 0.0)
        throw SamplingError("phi_winding: |phi| under the noise floor on the loop");
    return total / kTwoPi;
}

double rotation_index_interior(const PhiField& phi, std::complex<double> center,
                               double radius, const LoopOptions& opts) {
    return -0.5 * phi_winding(phi, center, radius, opts);
}

double direction_winding_index(const DirectionField& field, Vec2 center, double radius,
                               const LoopOptions& opts) {
    auto angle_at = [&](double a) {
        const Vec2 d = field(center + unit_dir(a) * radius);
        return 2.0 * direction_angle(d);
    };
    return loop_variation(angle_at, kTwoPi, opts) / (2.0 * kTwoPi);
}

double rotation_index_interior(const ParametricPatch& patch, Vec2 point,
                               double loop_radius, const LoopOptions& opts) {
    const double di = direction_winding_index(patch_direction_field(patch), point,
                                              loop_radius, opts);
    try {
        const double ai =
            rotation_index_interior(patch_phi_field(patch), to_complex(point),
                                    loop_radius, opts);
        if (std::fabs(ai - di) > 0.05)
            throw SamplingError(
                "rotation_index_interior: argument-principle and direction-winding "
                "routes disagree");
        return ai;
    } catch (const ChartError&) {
        // chart not isothermal: only the direction route is meaningful
        return di;
    }
}

double rotation_index_boundary(const DirectionField& upper_field, double radius,
                               const LoopOptions& opts) {
    auto theta_upper = [&](std::complex<double> zeta) {
        return direction_angle(upper_field(from_complex(zeta)));
    };
    return 0.5 * reflected_loop_index(theta_upper, radius, opts);
}

double rotation_index_boundary(const ParametricPatch& patch, Vec2 boundary_point,
                               double arc_radius, const LoopOptions& opts) {
    const ConformalChart chart = patch.domain().boundary_chart(boundary_point);
    const std::complex<double> z0 = to_complex(boundary_point);

    // The edge must be a line of curvature here: probe II(tau, nu) on a short
    // chart-straight arc through the point.
    {
        const double half = 0.25 * arc_radius * std::abs(chart.derivative(z0));
        auto seg = [&](double s) {
            return from_complex(chart.from_chart({(2.0 * s - 1.0) * half, 0.0}));
        };
        const double II = curve_mixed_second_form(patch, seg, 9);
        const FundamentalData fd = fundamental_data(patch, boundary_point.u, boundary_point.v);
        const double kmax = std::max(std::fabs(fd.kappa1), std::fabs(fd.kappa2));
        if (II > 1e-5 * (1.0 + kmax))
            throw FrameError("rotation_index_boundary: boundary is not a line of curvature here");
    }

    const DirectionField base = patch_direction_field(patch);
    auto theta_upper = [&](std::complex<double> zeta) {
        const std::complex<double> z = chart.from_chart(zeta);
        const Vec2 d = base(from_complex(z));
        return direction_angle(d) + std::arg(chart.derivative(z));
    };
    const double r_chart = arc_radius * std::abs(chart.derivative(z0));
    return 0.5 * reflected_loop_index(theta_upper, r_chart, opts);
}

double rotation_index_vertex(const DirectionField& wedge_field, double opening,
                             double radius, const LoopOptions& opts) {
    if (opening < 0.05 || opening > kTwoPi - 0.05)
        throw DomainError("rotation_index_vertex: degenerate corner opening");
    const double p = kPi / opening;
    const double r_w = std::pow(radius, p);
    auto theta_upper = [&](std::complex<double> w) {
        // principal branch: arg w in [0, pi] maps to arg zeta in [0, opening]
        const std::complex<double> zeta = std::pow(w, 1.0 / p);
        const Vec2 d = wedge_field(from_complex(zeta));
        return direction_angle(d) + (p - 1.0) * std::arg(zeta);
    };
    return 0.5 * reflected_loop_index(theta_upper, r_w, opts);
}

double rotation_index_vertex(const ParametricPatch& patch, const DomainVertex& vx,
                             double arc_radius, const LoopOptions& opts) {
    const auto vc = patch.domain().vertex_chart(vx);
    if (vc.opening < 0.05 || vc.opening > kTwoPi - 0.05)
        throw DomainError("rotation_index_vertex: degenerate corner");
    const double metric = vertex_angle(patch, vx);
    if (std::fabs(metric - vc.opening) > 0.05)
        throw ChartError("rotation_index_vertex: chart is not conformal at the vertex");

    const DirectionField base = patch_direction_field(patch);
    auto field_in_chart = [&](Vec2 zeta_pt) {
        const std::complex<double> zeta = to_complex(zeta_pt);
        const std::complex<double> z = vc.chart.from_chart(zeta);
        const Vec2 d = base(from_complex(z));
        const double theta = direction_angle(d) + std::arg(vc.chart.derivative(z));
        return unit_dir(theta);
    };
    const double r_chart =
        arc_radius * std::abs(vc.chart.derivative(to_complex(vx.point)));
    return rotation_index_vertex(field_in_chart, vc.opening, r_chart, opts);
}

double vertex_angle(const ParametricPatch& patch, const DomainVertex& vx) {
    const FirstForm ff = first_form(patch, vx.point.u, vx.point.v);
    auto form = [&](Vec2 a, Vec2 b) {
        return ff.E * a.u * b.u + ff.F * (a.u * b.v + a.v * b.u) + ff.G * a.v * b.v;
    };
    const double qa = form(vx.edge_a, vx.edge_a);
    const double qb = form(vx.edge_b, vx.edge_b);
    if (!(qa > 0.0) || !(qb > 0.0))
        throw DegeneracyError("vertex_angle: zero-length one-sided edge tangent");
    const double ca = std::clamp(form(vx.edge_a, vx.edge_b) / std::sqrt(qa * qb), -1.0, 1.0);
    const double base = std::acos(ca);

    bool reflex;
    try {
        reflex = patch.domain().vertex_chart(vx).opening > kPi;
    } catch (const ChartError&) {
        // corners without a straightening chart: probe the parameter bisector
        const Vec2 mid = normalized(normalized(vx.edge_a) + normalized(vx.edge_b));
        const double eps = 1e-5 * patch.domain().bounding_box().diameter();
        reflex = !patch.domain().contains(vx.point + mid * eps);
    }
    return reflex ? kTwoPi - base : base;
}

// --- umbilic detection -------------------------------------------------------

namespace {

Vec2 snap_to_boundary(const PatchDomain& dom, Vec2 p) {
    const double scale = dom.bounding_box().diameter();
    for (int it = 0; it < 6; ++it) {
        const double d = dom.boundary_distance(p);
        if (std::fabs(d) < 1e-12 * scale) break;
        const double h = 1e-7 * scale;
        const Vec2 grad{(dom.boundary_distance({p.u + h, p.v}) -
                         dom.boundary_distance({p.u - h, p.v})) / (2 * h),
                        (dom.boundary_distance({p.u, p.v + h}) -
                         dom.boundary_distance({p.u, p.v - h})) / (2 * h)};
        const double g2 = dot(grad, grad);
        if (!(g2 > 1e-12)) break;
        p = p - grad * (d / g2);
    }
    return p;
}

double kappa_gap(const ParametricPatch& patch, double u, double v) {
    const FundamentalData fd = fundamental_data(patch, u, v);
    return fd.kappa1 - fd.kappa2;
}

// Shrinking 3x3 pattern search around a lattice minimum; the step width only
// contracts when the center stays the best point, so the search can follow a
// descent path across several cells before zooming in.
Vec2 refine_minimum(const ParametricPatch& patch, Vec2 p, double cell) {
    double w = cell;
    const double floor_w = 1e-10 * patch.domain().bounding_box().diameter();
    for (int it = 0; it < 80 && w > floor_w; ++it) {
        Vec2 best = p;
        double best_val = std::numeric_limits<double>::infinity();
        try {
            best_val = kappa_gap(patch, p.u, p.v);
        } catch (const std::exception&) {
        }
        for (int i = -1; i <= 1; ++i) {
            for (int j = -1; j <= 1; ++j) {
                if (i == 0 && j == 0) continue;
                const Vec2 q{p.u + i * w, p.v + j * w};
                if (!patch.domain().contains(q)) continue;
                double val;
                try {
                    val = kappa_gap(patch, q.u, q.v);
                } catch (const std::exception&) {
                    continue;
                }
                if (val < best_val) {
                    best_val = val;
                    best = q;
                }
            }
        }
        if (best.u == p.u && best.v == p.v)
            w *= 0.4;
        else
            p = best;
    }
    return p;
}

} // namespace

UmbilicScan find_umbilics(const ParametricPatch& patch, int grid, double merge_radius,
                          ExecMode exec) {
    const PatchDomain& dom = patch.domain();
    const BBox bb = dom.bounding_box();
    const double du = bb.width() / (grid - 1);
    const double dv = bb.height() / (grid - 1);
    const double cell = std::min(du, dv);
    if (merge_radius <= 0.0) merge_radius = 3.0 * cell;

    const size_t n2 = static_cast<size_t>(grid) * grid;
    std::vector<double> gap(n2, std::numeric_limits<double>::quiet_NaN());
    std::vector<double> gate(n2, 0.0);
    std::vector<char> in(n2, 0);
    auto idx = [grid](int i, int j) { return static_cast<size_t>(j) * grid + i; };

    std::vector<std::string> row_err(grid);
    auto fill_row = [&](int j) {
        const double v = bb.v0 + j * dv;
        for (int i = 0; i < grid; ++i) {
            const double u = bb.u0 + i * du;
            if (!dom.contains({u, v})) continue;
            try {
                const FundamentalData fd = fundamental_data(patch, u, v);
                gap[idx(i, j)] = fd.kappa1 - fd.kappa2;
                gate[idx(i, j)] = 1e-6 * (1.0 + std::fabs(fd.H));
                in[idx(i, j)] = 1;
            } catch (const std::exception& ex) {
                row_err[j] = ex.what();
                return;
            }
        }
    };
    if (exec == ExecMode::Parallel) {
#pragma omp parallel for schedule(static)
        for (int j = 0; j < grid; ++j) fill_row(j);
    } else {
        for (int j = 0; j < grid; ++j) fill_row(j);
    }
    for (int j = 0; j < grid; ++j)
        if (!row_err[j].empty()) throw DegeneracyError("find_umbilics: " + row_err[j]);

    long inside = 0, below = 0;
    for (size_t k = 0; k < n2; ++k) {
        if (!in[k]) continue;
        ++inside;
        if (gap[k] < gate[k]) ++below;
    }
    UmbilicScan scan;
    if (inside == 0) throw SamplingError("find_umbilics: empty grid");
    scan.umbilic_fraction = double(below) / double(inside);
    if (scan.umbilic_fraction >= 0.99) {
        scan.everywhere_umbilic = true;
        return scan;
    }

    // Grid nodes rarely sit close enough to an isolated umbilic to clear the
    // 1e-6 gate outright (the gap grows linearly off the zero), so collect
    // local minima under a loose pre-filter, refine them down to the zero,
    // and only then apply the strict gate.
    std::vector<UmbilicHit> raw;
    for (int j = 0; j < grid; ++j) {
        for (int i = 0; i < grid; ++i) {
            if (!in[idx(i, j)]) continue;
            const double val = gap[idx(i, j)];
            if (!(val < 5e4 * gate[idx(i, j)])) continue;  // pre-filter: 0.05 (1 + |H|)
            bool is_min = true;
            for (int a = -1; a <= 1 && is_min; ++a)
                for (int b = -1; b <= 1 && is_min; ++b) {
                    if (a == 0 && b == 0) continue;
                    const int ii = i + a, jj = j + b;
                    if (ii < 0 || jj < 0 || ii >= grid || jj >= grid) continue;
                    if (in[idx(ii, jj)] && gap[idx(ii, jj)] < val) is_min = false;
                }
            if (is_min)
                raw.push_back({{bb.u0 + i * du, bb.v0 + j * dv}, UmbilicKind::Interior, val});
        }
    }

    // refine, keep the ones that reach the gate, merge nearby hits
    std::vector<UmbilicHit> refined;
    for (auto& h : raw) {
        h.location = refine_minimum(patch, h.location, cell);
        try {
            const FundamentalData fd = fundamental_data(patch, h.location.u, h.location.v);
            h.kappa_gap = fd.kappa1 - fd.kappa2;
            if (h.kappa_gap < 1e-6 * (1.0 + std::fabs(fd.H))) refined.push_back(h);
        } catch (const std::exception&) {
        }
    }
    std::vector<UmbilicHit>& kept = refined;
    std::sort(kept.begin(), kept.end(), [](const UmbilicHit& a, const UmbilicHit& b) {
        return a.kappa_gap < b.kappa_gap;
    });
    for (const auto& h : kept) {
        bool merged = false;
        for (const auto& acc : scan.hits)
            if (norm(acc.location - h.location) < merge_radius) merged = true;
        if (!merged) scan.hits.push_back(h);
    }

    // classify by position in the domain
    const auto verts = dom.vertices();
    for (auto& h : scan.hits) {
        double dvx = std::numeric_limits<double>::infinity();
        const DomainVertex* nearest = nullptr;
        for (const auto& vx : verts) {
            const double d = norm(h.location - vx.point);
            if (d < dvx) {
                dvx = d;
                nearest = &vx;
            }
        }
        if (nearest && dvx < std::max(merge_radius, 2.0 * cell)) {
            h.location = nearest->point;
            const double ang = vertex_angle(patch, *nearest);
            h.kind = ang < kPi ? UmbilicKind::VertexAcute : UmbilicKind::VertexReflex;
        } else if (dom.boundary_distance(h.location) < 1.5 * cell) {
            h.location = snap_to_boundary(dom, h.location);
            h.kind = UmbilicKind::BoundaryRegular;
        } else {
            h.kind = UmbilicKind::Interior;
        }
    }
    return scan;
}

// --- accounting --------------------------------------------------------------

IndexReport poincare_hopf_report(std::vector<UmbilicRecord> records,
                                 const PatchDomain& domain) {
    IndexReport rep;
    rep.records = std::move(records);
    rep.euler_characteristic = domain.euler_characteristic();

    double sum = 0.0;
    const double tol = 0.05;
    for (const auto& r : rep.records) {
        sum += r.index;
        switch (r.kind) {
            case UmbilicKind::Interior:
                if (r.order >= 1 && std::fabs(r.index + 0.5 * r.order) > tol)
                    rep.violations.push_back("interior index disagrees with -order/2");
                if (r.order >= 0 && r.index > -0.5 + tol)
                    rep.violations.push_back("interior rotation index above -1/2");
                break;
            case UmbilicKind::BoundaryRegular:
                if (r.index > -0.25 + tol)
                    rep.violations.push_back("boundary rotation index above -1/4");
                break;
            case UmbilicKind::VertexAcute:
                ++rep.acute_vertex_count;
                if (r.index > 0.25 + tol)
                    rep.violations.push_back("acute-vertex rotation index above 1/4");
                break;
            case UmbilicKind::VertexReflex:
                if (r.index > -0.25 + tol)
                    rep.violations.push_back("reflex-vertex rotation index above -1/4");
                break;
        }
    }
    rep.index_sum = sum;
    rep.residual = std::fabs(sum - rep.euler_characteristic);
    rep.lemma_sum_bound = 0.25 * rep.acute_vertex_count;
    rep.contradiction_regime = rep.acute_vertex_count <= 3;
    rep.consistent = rep.violations.empty() && rep.residual <= kIndexResidualGate;
    return rep;
}

IndexReport index_report(const ParametricPatch& patch, int grid, ExecMode exec) {
    const PatchDomain& dom = patch.domain();
    const BBox bb = dom.bounding_box();
    const double cell = std::min(bb.width(), bb.height()) / (grid - 1);

    const UmbilicScan scan = find_umbilics(patch, grid, 0.0, exec);
    if (scan.everywhere_umbilic) {
        IndexReport rep;
        rep.everywhere_umbilic = true;
        rep.euler_characteristic = dom.euler_characteristic();
        rep.ph_applicable = false;
        return rep;
    }

    bool isothermal = false;
    try {
        isothermal = isothermal_residual(patch, std::min(grid, 65), exec) < kIsothermalGate;
    } catch (const std::exception&) {
    }

    std::vector<UmbilicRecord> records;
    const LoopOptions opts;

    for (const auto& h : scan.hits) {
        UmbilicRecord rec;
        rec.location = h.location;
        rec.kind = h.kind;
        if (h.kind == UmbilicKind::Interior) {
            const double r = 5.0 * cell;
            const double di =
                direction_winding_index(patch_direction_field(patch), h.location, r, opts);
            if (isothermal) {
                const double w =
                    phi_winding(patch_phi_field(patch), to_complex(h.location), r, opts);
                rec.index = -0.5 * w;
                rec.order = static_cast<int>(std::lround(w));
                rec.method = IndexMethod::ArgumentPrinciple;
                if (std::fabs(rec.index - di) > 0.05)
                    throw SamplingError("index_report: interior index routes disagree");
            } else {
                rec.index = di;
                rec.order = static_cast<int>(std::lround(-2.0 * di));
                rec.method = IndexMethod::DirectionWinding;
            }
        } else if (h.kind == UmbilicKind::BoundaryRegular) {
            rec.index = rotation_index_boundary(patch, h.location, 8.0 * cell, opts);
            rec.order = static_cast<int>(std::lround(-4.0 * rec.index));
            rec.method = IndexMethod::Reflection;
        } else {
            continue;  // vertex hits merge into the vertex records below
        }
        records.push_back(rec);
    }

    bool vertices_complete = true;
    for (const auto& vx : dom.vertices()) {
        UmbilicRecord rec;
        rec.location = vx.point;
        rec.angle = vertex_angle(patch, vx);
        rec.kind = rec.angle < kPi ? UmbilicKind::VertexAcute : UmbilicKind::VertexReflex;
        try {
            rec.index = rotation_index_vertex(patch, vx, 8.0 * cell, opts);
        } catch (const ChartError&) {
            // corner without a straightening chart: the accounting cannot
            // close, but the remaining records are still reported
            vertices_complete = false;
            continue;
        }
        rec.method = IndexMethod::CornerStraightening;
        if (isothermal) {
            // exponent of |Phi dz^2| in the straightened chart: negative
            // values mean the quadratic differential has a pole here
            const auto vc = dom.vertex_chart(vx);
            const double p = kPi / vc.opening;
            const std::complex<double> zv = to_complex(vx.point);
            const double r_chart = 8.0 * cell * std::abs(vc.chart.derivative(zv));
            const double r_w = std::pow(r_chart, p);
            const PhiField phi = patch_phi_field(patch);
            double logs = 0.0;
            int count = 0;
            double prev = 0.0;
            bool usable = true;
            for (int k = 0; k <= 5; ++k) {
                const std::complex<double> w = std::polar(r_w * std::pow(0.5, k), kPi / 2.0);
                const std::complex<double> zeta = std::pow(w, 1.0 / p);
                const std::complex<double> z = vc.chart.from_chart(zeta);
                const std::complex<double> dzeta_dw = (1.0 / p) * std::pow(w, 1.0 / p - 1.0);
                const std::complex<double> dz_dw = dzeta_dw / vc.chart.derivative(z);
                const double mag = std::abs(phi(z) * dz_dw * dz_dw);
                if (!(mag > 1e-290)) {
                    usable = false;
                    break;
                }
                if (k > 0) {
                    logs += std::log2(prev / mag);
                    ++count;
                }
                prev = mag;
            }
            if (usable && count > 0) {
                const double expo = logs / count;
                const int m = static_cast<int>(std::lround(expo));
                if (std::fabs(expo - m) < 0.35) rec.order = m;
            }
        }
        records.push_back(rec);
    }

    // The reflection-based accounting needs every boundary edge to be a line
    // of curvature; probe each edge before claiming index-sum consistency.
    bool edges_ok = true;
    for (const auto& e : dom.edges()) {
        double kmax = 0.0;
        try {
            for (double s : {0.25, 0.5, 0.75}) {
                const Vec2 p = e.point(s);
                const FundamentalData fd = fundamental_data(patch, p.u, p.v);
                kmax = std::max({kmax, std::fabs(fd.kappa1), std::fabs(fd.kappa2)});
            }
            // trim endpoints so dN/ds never straddles a corner
            auto inner = [&e](double s) { return e.point(0.02 + 0.96 * s); };
            if (curve_mixed_second_form(patch, inner, 64) > 1e-5 * (1.0 + kmax))
                edges_ok = false;
        } catch (const std::exception&) {
            edges_ok = false;
        }
        if (!edges_ok) break;
    }

    IndexReport rep = poincare_hopf_report(std::move(records), dom);
    rep.ph_applicable = edges_ok && vertices_complete;
    if (!vertices_complete)
        rep.violations.push_back("a vertex has no straightening chart; index sum incomplete");
    rep.contradiction_regime = rep.contradiction_regime && rep.ph_applicable;
    if (!rep.ph_applicable)
        rep.consistent = rep.violations.empty();  // residual is informational only
    return rep;
}

} // namespace lcmc
