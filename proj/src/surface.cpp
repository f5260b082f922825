#include "lcmc/surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace lcmc {

FirstForm first_form(const ParametricPatch& patch, double u, double v) {
    const Jet2 j = patch.jet(u, v);
    return {minkowski_inner(j.Xu, j.Xu), minkowski_inner(j.Xu, j.Xv),
            minkowski_inner(j.Xv, j.Xv)};
}

std::pair<Vec2, Vec2> principal_directions_from_forms(double E, double F, double G,
                                                      double e, double f, double g) {
    const double W2 = E * G - F * F;
    if (!(W2 > 0.0))
        throw DegeneracyError("principal_directions: first form is not positive definite");

    // Shape operator S = -I^{-1} II (the matrix of dN in the X_u, X_v basis).
    const double s11 = -(G * e - F * f) / W2;
    const double s12 = -(G * f - F * g) / W2;
    const double s21 = -(E * f - F * e) / W2;
    const double s22 = -(E * g - F * f) / W2;

    const double H = 0.5 * (s11 + s22);
    // (H^2 - K) written to avoid the tr^2/4 - det cancellation near umbilics
    double disc = 0.25 * (s11 - s22) * (s11 - s22) + s12 * s21;
    if (disc < 0.0) disc = 0.0;
    const double sq = std::sqrt(disc);
    const double k1 = H + sq, k2 = H - sq;
    if (std::fabs(k1 - k2) < 1e-8 * (1.0 + std::fabs(H)))
        throw DegeneracyError("principal_directions: umbilic point");

    auto eigvec = [&](double kappa) {
        // Row of (S - kappa I) with the larger magnitude gives the kernel direction.
        const double r1u = s11 - kappa, r1v = s12;
        const double r2u = s21, r2v = s22 - kappa;
        Vec2 d = (r1u * r1u + r1v * r1v >= r2u * r2u + r2v * r2v) ? Vec2{-r1v, r1u}
                                                                  : Vec2{-r2v, r2u};
        const double q = E * d.u * d.u + 2.0 * F * d.u * d.v + G * d.v * d.v;
        d = d / std::sqrt(q);
        // deterministic representative: nonnegative u-component, ties broken
        // by the v-component; the tolerance keeps axis-aligned directions
        // from being decided by rounding noise
        const double tol = 1e-12 * norm(d);
        if (d.u < -tol || (std::fabs(d.u) <= tol && d.v < 0.0)) d = -d;
        return d;
    };
    return {eigvec(k1), eigvec(k2)};
}

FundamentalData fundamental_data(const ParametricPatch& patch, double u, double v) {
    const Jet2 j = patch.jet(u, v);
    FundamentalData fd;
    fd.E = minkowski_inner(j.Xu, j.Xu);
    fd.F = minkowski_inner(j.Xu, j.Xv);
    fd.G = minkowski_inner(j.Xv, j.Xv);
    const double W2 = fd.E * fd.G - fd.F * fd.F;
    if (!(fd.E > 0.0) || !(fd.G > 0.0) || !(W2 > 0.0))
        throw DegeneracyError("fundamental_data: tangent plane is not spacelike");

    const LVec3 c = lorentz_cross(j.Xu, j.Xv);
    // <X_u ^ X_v, X_u ^ X_v> = F^2 - EG = -W2, so the cross product is
    // timelike with norm sqrt(W2) whenever the first form is spacelike.
    const double cn = std::sqrt(W2);
    if (!(cn > 0.0) || !c.finite())
        throw DegeneracyError("fundamental_data: degenerate immersion (zero cross product)");
    LVec3 N = c / cn;
    if (N.x3 < 0.0) N = -N;

    fd.normal = N;
    fd.e = minkowski_inner(N, j.Xuu);
    fd.f = minkowski_inner(N, j.Xuv);
    fd.g = minkowski_inner(N, j.Xvv);

    fd.H = -(fd.e * fd.G - 2.0 * fd.f * fd.F + fd.g * fd.E) / (2.0 * W2);
    fd.K = (fd.e * fd.g - fd.f * fd.f) / W2;
    // discriminant via the shape-operator entries: the naive H^2 - K loses
    // all significant digits near umbilic points
    const double s11 = -(fd.G * fd.e - fd.F * fd.f) / W2;
    const double s12 = -(fd.G * fd.f - fd.F * fd.g) / W2;
    const double s21 = -(fd.E * fd.f - fd.F * fd.e) / W2;
    const double s22 = -(fd.E * fd.g - fd.F * fd.f) / W2;
    double disc = 0.25 * (s11 - s22) * (s11 - s22) + s12 * s21;
    if (disc < 0.0) disc = 0.0;
    const double sq = std::sqrt(disc);
    fd.kappa1 = fd.H + sq;
    fd.kappa2 = fd.H - sq;
    fd.lambda2 = fd.E;

    if (std::fabs(fd.kappa1 - fd.kappa2) >= 1e-8 * (1.0 + std::fabs(fd.H))) {
        try {
            auto [d1, d2] =
                principal_directions_from_forms(fd.E, fd.F, fd.G, fd.e, fd.f, fd.g);
            fd.dir1 = d1;
            fd.dir2 = d2;
        } catch (const DegeneracyError&) {
            // the eigen route resolves the discriminant slightly differently;
            // points this close to umbilic report no directions
        }
    }
    return fd;
}

// --- grid kernels -----------------------------------------------------------

namespace {

struct RowResult {
    bool any = false;
    double value = 0.0;
    int col = 0;
    std::string error;
};

// Evaluates fn on every lattice point of row j that lies in the domain and
// reduces within the row. Row results are then combined in row order, which
// makes Serial and Parallel bit-identical.
template <bool WantMax>
GridScanResult scan_impl(const PatchDomain& dom, int grid, ExecMode exec,
                         const std::function<double(double, double)>& fn) {
    if (grid < 2) throw SamplingError("grid_scan: grid must be at least 2");
    const BBox bb = dom.bounding_box();
    const double du = bb.width() / (grid - 1);
    const double dv = bb.height() / (grid - 1);

    std::vector<RowResult> rows(grid);
    auto run_row = [&](int jrow) {
        RowResult r;
        const double v = bb.v0 + jrow * dv;
        for (int i = 0; i < grid; ++i) {
            const double u = bb.u0 + i * du;
            if (!dom.contains({u, v})) continue;
            double val;
            try {
                val = fn(u, v);
            } catch (const std::exception& ex) {
                r.error = ex.what();
                return r;
            }
            const bool better = !r.any || (WantMax ? val > r.value : val < r.value);
            if (better) {
                r.value = val;
                r.col = i;
            }
            r.any = true;
        }
        return r;
    };

    if (exec == ExecMode::Parallel) {
#pragma omp parallel for schedule(static)
        for (int jrow = 0; jrow < grid; ++jrow) rows[jrow] = run_row(jrow);
    } else {
        for (int jrow = 0; jrow < grid; ++jrow) rows[jrow] = run_row(jrow);
    }

    GridScanResult out;
    bool any = false;
    for (int jrow = 0; jrow < grid; ++jrow) {
        const RowResult& r = rows[jrow];
        if (!r.error.empty()) throw DegeneracyError("grid_scan: " + r.error);
        if (!r.any) continue;
        const bool better = !any || (WantMax ? r.value > out.value : r.value < out.value);
        if (better) {
            out.value = r.value;
            out.at = {bb.u0 + r.col * du, bb.v0 + jrow * dv};
        }
        any = true;
    }
    // sample count (cheap second pass, membership only)
    long n = 0;
    for (int jrow = 0; jrow < grid; ++jrow)
        for (int i = 0; i < grid; ++i)
            if (dom.contains({bb.u0 + i * du, bb.v0 + jrow * dv})) ++n;
    out.samples = n;
    if (!any) throw SamplingError("grid_scan: no lattice point lies in the domain");
    return out;
}

} // namespace

GridScanResult grid_scan_min(const PatchDomain& dom, int grid, ExecMode exec,
                             const std::function<double(double, double)>& fn) {
    return scan_impl<false>(dom, grid, exec, fn);
}

GridScanResult grid_scan_max(const PatchDomain& dom, int grid, ExecMode exec,
                             const std::function<double(double, double)>& fn) {
    return scan_impl<true>(dom, grid, exec, fn);
}

SpacelikeReport spacelike_check(const ParametricPatch& patch, int grid, ExecMode exec) {
    const auto r = grid_scan_min(patch.domain(), grid, exec, [&](double u, double v) {
        const FirstForm ff = first_form(patch, u, v);
        return ff.E * ff.G - ff.F * ff.F;
    });
    return {r.value > 0.0, r.value, r.at};
}

double isothermal_residual(const ParametricPatch& patch, int grid, ExecMode exec) {
    const auto r = grid_scan_max(patch.domain(), grid, exec, [&](double u, double v) {
        const FirstForm ff = first_form(patch, u, v);
        return (std::fabs(ff.E - ff.G) + std::fabs(ff.F)) / std::max(ff.E, ff.G);
    });
    return r.value;
}

double curve_mixed_second_form(const ParametricPatch& patch,
                               const std::function<Vec2(double)>& curve,
                               int samples) {
    if (samples < 5) throw SamplingError("curve_mixed_second_form: need at least 5 samples");
    std::vector<LVec3> X(samples), N(samples);
    for (int k = 0; k < samples; ++k) {
        const Vec2 p = curve(double(k) / (samples - 1));
        const FundamentalData fd = fundamental_data(patch, p.u, p.v);
        X[k] = patch.position(p.u, p.v);
        N[k] = fd.normal;
    }
    const double ds = 1.0 / (samples - 1);
    auto deriv = [&](const std::vector<LVec3>& y, int k) {
        if (k == 0) return (y[0] * -3.0 + y[1] * 4.0 - y[2]) / (2.0 * ds);
        if (k == samples - 1)
            return (y[k] * 3.0 - y[k - 1] * 4.0 + y[k - 2]) / (2.0 * ds);
        return (y[k + 1] - y[k - 1]) / (2.0 * ds);
    };
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        const LVec3 Xp = deriv(X, k);
        const double speed = lorentz_norm(Xp);
        if (!(speed > 0.0))
            throw DegeneracyError("curve_mixed_second_form: stationary curve point");
        const LVec3 tau = Xp / speed;
        const LVec3 nu = -lorentz_cross(tau, N[k]);
        const double II = -minkowski_inner(deriv(N, k), nu) / speed;
        worst = std::max(worst, std::fabs(II));
    }
    return worst;
}

} // namespace lcmc
