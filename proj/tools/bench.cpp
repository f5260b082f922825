// Benchmark of the grid kernels and the trace batch: serial reference vs the
// OpenMP row-parallel versions. Both paths reduce rows in index order, so the
// results must match exactly; the table prints the check alongside timings.

#include <chrono>
#include <cstdio>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lcmc/catalog.hpp"
#include "lcmc/hopf.hpp"
#include "lcmc/lines.hpp"

using namespace lcmc;

namespace {

double wall_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch())
        .count();
}

template <class F>
double timed(F&& f, int reps = 3) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const double t0 = wall_ms();
        f();
        best = std::min(best, wall_ms() - t0);
    }
    return best;
}

void row(const char* name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-28s %10.1f ms %10.1f ms %8.2fx   %s\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, equal ? "results match" : "MISMATCH");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP: %d threads\n", omp_get_max_threads());
#else
    std::printf("OpenMP: not enabled (serial build)\n");
#endif
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    const CatalogEntry trunc = build_truncated_catenoid();
    const CatalogEntry annulus = build_catenoid_annulus();
    const int big = 769;

    {
        GridScanResult rs{}, rp{};
        auto gap = [&](double u, double v) {
            const FundamentalData fd = fundamental_data(trunc.patch, u, v);
            return fd.kappa1 - fd.kappa2;
        };
        const double ts = timed([&] {
            rs = grid_scan_min(trunc.patch.domain(), big, ExecMode::Serial, gap);
        });
        const double tp = timed([&] {
            rp = grid_scan_min(trunc.patch.domain(), big, ExecMode::Parallel, gap);
        });
        row("kappa-gap scan 769^2", ts, tp,
            rs.value == rp.value && rs.at.u == rp.at.u && rs.at.v == rp.at.v);
    }
    {
        double vs = 0, vp = 0;
        const double ts =
            timed([&] { vs = isothermal_residual(trunc.patch, big, ExecMode::Serial); });
        const double tp =
            timed([&] { vp = isothermal_residual(trunc.patch, big, ExecMode::Parallel); });
        row("isothermal residual 769^2", ts, tp, vs == vp);
    }
    {
        double vs = 0, vp = 0;
        const double ts =
            timed([&] { vs = cr_residual(annulus.patch, 513, ExecMode::Serial); });
        const double tp =
            timed([&] { vp = cr_residual(annulus.patch, 513, ExecMode::Parallel); });
        row("CR residual 513^2", ts, tp, vs == vp);
    }
    {
        const CatalogEntry cat = build_lorentzian_catenoid();
        std::vector<std::pair<Vec2, CurvatureFamily>> starts;
        for (int k = 0; k < 64; ++k) {
            const double s = 0.6 + 1.3 * (k % 8) / 7.0;
            const double t = 0.4 + 5.4 * (k / 8) / 7.0;
            starts.emplace_back(Vec2{s, t},
                                k % 2 ? CurvatureFamily::First : CurvatureFamily::Second);
        }
        TraceConfig cfg;
        cfg.step = 0.002;
        cfg.max_steps = 4000;
        std::vector<CurvatureTrace> as, ap;
        const double ts =
            timed([&] { as = trace_many(cat.patch, starts, cfg, ExecMode::Serial); }, 1);
        const double tp =
            timed([&] { ap = trace_many(cat.patch, starts, cfg, ExecMode::Parallel); }, 1);
        bool equal = as.size() == ap.size();
        for (size_t i = 0; equal && i < as.size(); ++i) {
            equal = as[i].points_param.size() == ap[i].points_param.size() &&
                    as[i].stop_reason == ap[i].stop_reason;
            for (size_t j = 0; equal && j < as[i].points_param.size(); ++j)
                equal = as[i].points_param[j].u == ap[i].points_param[j].u &&
                        as[i].points_param[j].v == ap[i].points_param[j].v;
        }
        row("64 curvature-line traces", ts, tp, equal);
    }
    return 0;
}
