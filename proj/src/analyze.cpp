#include <chrono>
#include <cmath>
#include <sstream>

#include "lcmc/report.hpp"

namespace lcmc {

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch())
        .count();
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

} // namespace

AnalysisReport analyze(const CatalogEntry& entry, const AnalysisOptions& opts) {
    const double t0 = now_ms();

    AnalysisReport rep;
    rep.surface = entry.name;
    rep.params = entry.params;
    rep.grid = opts.grid;

    const ParametricPatch patch = opts.fd_step > 0.0
                                      ? entry.patch.finite_difference_copy(opts.fd_step)
                                      : entry.patch;
    ExpectedValues exp = entry.expected;
    if (opts.tol_h > 0.0) exp.h_tol = opts.tol_h;
    if (opts.tol_kappa > 0.0) exp.kappa_tol = opts.tol_kappa;
    if (opts.tol_beta > 0.0) exp.beta_tol = opts.tol_beta;
    if (opts.tol_angle > 0.0) exp.angle_tol = opts.tol_angle;
    if (opts.tol_index > 0.0) exp.index_tol = opts.tol_index;
    if (opts.tol_sum > 0.0) exp.sum_tol = opts.tol_sum;
    if (opts.tol_cr > 0.0 && exp.cr_max) exp.cr_max = opts.tol_cr;

    auto violate = [&rep](const std::string& what) { rep.violations.push_back(what); };

    // --- grid scans ---------------------------------------------------------
    const SpacelikeReport sl = spacelike_check(patch, opts.grid, opts.exec);
    rep.spacelike_pass = sl.pass;
    rep.spacelike_min = sl.min_value;
    rep.spacelike_worst = sl.worst_point;
    if (!sl.pass) {
        violate("surface is not spacelike (min EG - F^2 = " + fmt(sl.min_value) + ")");
        rep.timings.total_ms = now_ms() - t0;
        return rep;
    }

    rep.isothermal_residual = isothermal_residual(patch, opts.grid, opts.exec);
    const bool isothermal = rep.isothermal_residual < kIsothermalGate;

    rep.kappa_gap_max =
        grid_scan_max(patch.domain(), opts.grid, opts.exec, [&](double u, double v) {
            const FundamentalData fd = fundamental_data(patch, u, v);
            return fd.kappa1 - fd.kappa2;
        }).value;

    if (isothermal) {
        rep.phi_rel_max =
            grid_scan_max(patch.domain(), opts.grid, opts.exec, [&](double u, double v) {
                const FundamentalData fd = fundamental_data(patch, u, v);
                return std::hypot(fd.e - fd.g, 2.0 * fd.f) / fd.lambda2;
            }).value;
        try {
            rep.cr_residual = cr_residual(patch, opts.grid, opts.exec);
        } catch (const Error&) {
        }
    }

    if (exp.mean_curvature) {
        rep.h_dev_max =
            grid_scan_max(patch.domain(), opts.grid, opts.exec, [&](double u, double v) {
                return std::fabs(fundamental_data(patch, u, v).H - *exp.mean_curvature);
            }).value;
    }
    if (exp.kappa_constant) {
        rep.kappa_dev_max =
            grid_scan_max(patch.domain(), opts.grid, opts.exec, [&](double u, double v) {
                const FundamentalData fd = fundamental_data(patch, u, v);
                return std::max(std::fabs(fd.kappa1 - *exp.kappa_constant),
                                std::fabs(fd.kappa2 - *exp.kappa_constant));
            }).value;
    }
    rep.timings.scan_ms = now_ms() - t0;

    // --- umbilics and rotation indices ---------------------------------------
    const double t1 = now_ms();
    rep.index = index_report(patch, opts.grid, opts.exec);
    rep.timings.index_ms = now_ms() - t1;

    // --- capillary ------------------------------------------------------------
    const double t2 = now_ms();
    for (const auto& comp : entry.supports)
        rep.capillary.push_back(capillary_constancy_check(patch, comp));
    rep.timings.capillary_ms = now_ms() - t2;

    // --- expected-value verification -------------------------------------------
    if (exp.everywhere_umbilic != rep.index.everywhere_umbilic)
        violate(std::string("everywhere-umbilic flag expected ") +
                (exp.everywhere_umbilic ? "true" : "false"));
    if (exp.phi_rel_max) {
        if (!rep.phi_rel_max)
            violate("no Hopf-function scan (chart not isothermal)");
        else if (*rep.phi_rel_max > *exp.phi_rel_max)
            violate("|Phi|/lambda^2 = " + fmt(*rep.phi_rel_max) + " above " +
                    fmt(*exp.phi_rel_max));
    }
    if (exp.kappa_gap_max && rep.kappa_gap_max > *exp.kappa_gap_max)
        violate("kappa gap " + fmt(rep.kappa_gap_max) + " above " + fmt(*exp.kappa_gap_max));
    if (exp.isothermal_max && rep.isothermal_residual > *exp.isothermal_max)
        violate("isothermal residual " + fmt(rep.isothermal_residual) + " above " +
                fmt(*exp.isothermal_max));
    if (exp.cr_max) {
        if (!rep.cr_residual)
            violate("no CR residual (chart not isothermal or grid too coarse)");
        else if (*rep.cr_residual > *exp.cr_max)
            violate("CR residual " + fmt(*rep.cr_residual) + " above " + fmt(*exp.cr_max));
    }
    if (exp.mean_curvature && rep.h_dev_max && *rep.h_dev_max > exp.h_tol)
        violate("mean-curvature deviation " + fmt(*rep.h_dev_max) + " above " +
                fmt(exp.h_tol));
    if (exp.kappa_constant && rep.kappa_dev_max && *rep.kappa_dev_max > exp.kappa_tol)
        violate("principal-curvature deviation " + fmt(*rep.kappa_dev_max) + " above " +
                fmt(exp.kappa_tol));

    int isolated = 0, vertices = 0;
    for (const auto& r : rep.index.records) {
        if (r.kind == UmbilicKind::Interior || r.kind == UmbilicKind::BoundaryRegular)
            ++isolated;
        else
            ++vertices;
    }
    if (exp.isolated_umbilics && isolated != *exp.isolated_umbilics)
        violate("found " + std::to_string(isolated) + " isolated umbilics, expected " +
                std::to_string(*exp.isolated_umbilics));
    if (exp.umbilic_location) {
        bool found = false;
        for (const auto& r : rep.index.records)
            if (r.kind == UmbilicKind::Interior &&
                norm(r.location - *exp.umbilic_location) <= exp.umbilic_pos_tol)
                found = true;
        if (!found) violate("no interior umbilic at the constructed location");
    }
    if (exp.umbilic_index) {
        for (const auto& r : rep.index.records)
            if (r.kind == UmbilicKind::Interior &&
                std::fabs(r.index - *exp.umbilic_index) > exp.index_tol)
                violate("interior umbilic index " + fmt(r.index) + " differs from " +
                        fmt(*exp.umbilic_index));
    }
    if (exp.vertex_count && vertices != *exp.vertex_count)
        violate("found " + std::to_string(vertices) + " vertex singularities, expected " +
                std::to_string(*exp.vertex_count));
    for (const auto& r : rep.index.records) {
        if (r.kind != UmbilicKind::VertexAcute && r.kind != UmbilicKind::VertexReflex)
            continue;
        if (exp.vertex_angle && std::fabs(r.angle - *exp.vertex_angle) > exp.angle_tol)
            violate("vertex angle " + fmt(r.angle) + " differs from " +
                    fmt(*exp.vertex_angle));
        if (exp.vertex_index && std::fabs(r.index - *exp.vertex_index) > exp.index_tol)
            violate("vertex index " + fmt(r.index) + " differs from " +
                    fmt(*exp.vertex_index));
    }
    if (exp.index_sum) {
        if (!rep.index.ph_applicable)
            violate("index accounting not applicable (boundary is not a line of curvature)");
        else if (std::fabs(rep.index.index_sum - *exp.index_sum) > exp.sum_tol)
            violate("index sum " + fmt(rep.index.index_sum) + " differs from " +
                    fmt(*exp.index_sum));
    }
    if (rep.index.ph_applicable && !rep.index.everywhere_umbilic && !rep.index.consistent)
        for (const auto& msg : rep.index.violations) violate("index bounds: " + msg);

    for (const auto& cap : rep.capillary) {
        const auto vit = exp.verdicts.find(cap.edge);
        if (vit != exp.verdicts.end() && cap.verdict != vit->second)
            violate("edge " + cap.edge + " verdict " + to_string(cap.verdict) +
                    ", expected " + to_string(vit->second));
        const auto bit = exp.beta_const.find(cap.edge);
        if (bit != exp.beta_const.end() &&
            std::fabs(cap.beta_mean - bit->second) > exp.beta_tol)
            violate("edge " + cap.edge + " contact angle " + fmt(cap.beta_mean) +
                    " differs from " + fmt(bit->second));
        const auto jit = exp.joachimsthal_min.find(cap.edge);
        if (jit != exp.joachimsthal_min.end() && cap.joachimsthal_max < jit->second)
            violate("edge " + cap.edge + " Joachimsthal residual " +
                    fmt(cap.joachimsthal_max) + " below the negative-control floor " +
                    fmt(jit->second));
    }

    rep.timings.total_ms = now_ms() - t0;
    return rep;
}

} // namespace lcmc
