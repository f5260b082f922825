#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "lcmc/catalog.hpp"
#include "lcmc/surface.hpp"

using namespace lcmc;

TEST_CASE("horizontal plane: flat second form, future unit normal") {
    const CatalogEntry e = build_planar_disk(1.0);
    const FundamentalData fd = fundamental_data(e.patch, 0.2, -0.4);
    CHECK(fd.e == 0.0);
    CHECK(fd.f == 0.0);
    CHECK(fd.g == 0.0);
    CHECK(fd.H == 0.0);
    CHECK(fd.K == 0.0);
    CHECK(fd.normal.x1 == 0.0);
    CHECK(fd.normal.x2 == 0.0);
    CHECK(fd.normal.x3 == 1.0);
    CHECK_FALSE(fd.dir1.has_value());  // umbilic: no principal directions
}

TEST_CASE("hyperbolic plane: normal is X/c and both curvatures equal 1/c") {
    for (double c : {0.5, 1.0, 2.0}) {
        const CatalogEntry e = build_hyperbolic_cap(c, 1.0);
        for (auto [u, v] : {std::pair{0.0, 0.0}, {0.2, 0.1}, {-0.3, 0.25}}) {
            const FundamentalData fd = fundamental_data(e.patch, u, v);
            const LVec3 x = e.patch.position(u, v);
            CHECK(euclid_norm(fd.normal - x / c) <= 1e-12 * (1.0 + euclid_norm(x)));
            CHECK(fd.kappa1 == doctest::Approx(1.0 / c).epsilon(1e-9));
            CHECK(fd.kappa2 == doctest::Approx(1.0 / c).epsilon(1e-9));
            CHECK(fd.H == doctest::Approx(1.0 / c).epsilon(1e-9));
            // finite-difference route agrees with the pinned sign convention
            const auto fdm = e.patch.finite_difference_copy(1e-4);
            const FundamentalData f2 = fundamental_data(fdm, u, v);
            CHECK(f2.H == doctest::Approx(1.0 / c).epsilon(1e-6));
        }
    }
}

TEST_CASE("catenoid: maximal, isothermal, closed-form first form") {
    const CatalogEntry e = build_lorentzian_catenoid(1.0, 0.5, 2.0);
    const FundamentalData fd = fundamental_data(e.patch, 1.0, 0.0);
    const double s2 = std::sinh(1.0) * std::sinh(1.0);
    CHECK(std::fabs(fd.H) <= 1e-6);
    CHECK(fd.E == doctest::Approx(s2).epsilon(1e-12));
    CHECK(fd.G == doctest::Approx(s2).epsilon(1e-12));
    CHECK(std::fabs(fd.F) <= 1e-12);
}

TEST_CASE("spacelike check: pass, fail, and the catalog piece") {
    const CatalogEntry plane = build_planar_disk(1.0);
    const SpacelikeReport r1 = spacelike_check(plane.patch, 33);
    CHECK(r1.pass);
    CHECK(r1.min_value == doctest::Approx(1.0));

    // X = (u, v, 2u): timelike tangent direction
    const ParametricPatch bad(PatchDomain::rectangle(0, 1, 0, 1),
                              [](double u, double v) { return LVec3{u, v, 2 * u}; });
    const SpacelikeReport r2 = spacelike_check(bad, 17);
    CHECK_FALSE(r2.pass);
    CHECK(r2.min_value == doctest::Approx(-3.0));

    const CatalogEntry cat = build_lorentzian_catenoid(1.0, 0.5, 2.0);
    CHECK(spacelike_check(cat.patch, 65).pass);
}

TEST_CASE("isothermal residual: plane zero, catenoid tiny, stretched plane 3/4") {
    const CatalogEntry plane = build_planar_disk(1.0);
    CHECK(isothermal_residual(plane.patch, 33) == 0.0);

    const CatalogEntry cat = build_lorentzian_catenoid();
    CHECK(isothermal_residual(cat.patch, 65) < 1e-9);

    const ParametricPatch stretched(PatchDomain::rectangle(0, 1, 0, 1),
                                    [](double u, double v) {
                                        return LVec3{2 * u, v, 0};
                                    });
    CHECK(isothermal_residual(stretched, 17) == doctest::Approx(0.75).epsilon(1e-9));
}

TEST_CASE("normal contract at random points of the catalog surfaces") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (const char* name : {"hyperbolic-cap", "lorentzian-catenoid", "perturbed-cap"}) {
        const CatalogEntry e = build_catalog_entry(name);
        const BBox bb = e.patch.domain().bounding_box();
        int done = 0;
        while (done < 50) {
            const Vec2 p{bb.u0 + bb.width() * U(rng), bb.v0 + bb.height() * U(rng)};
            if (!e.patch.domain().contains(p)) continue;
            ++done;
            const Jet2 j = e.patch.jet(p.u, p.v);
            const FundamentalData fd = fundamental_data(e.patch, p.u, p.v);
            CHECK(std::fabs(minkowski_inner(fd.normal, fd.normal) + 1.0) <= 1e-9);
            CHECK(std::fabs(minkowski_inner(fd.normal, j.Xu)) <=
                  1e-9 * (1.0 + euclid_norm(j.Xu)));
            CHECK(std::fabs(minkowski_inner(fd.normal, j.Xv)) <=
                  1e-9 * (1.0 + euclid_norm(j.Xv)));
            CHECK(fd.normal.x3 > 0.0);
        }
    }
}

TEST_CASE("shape operator maps principal directions to kappa times themselves") {
    const CatalogEntry e = build_lorentzian_catenoid();
    for (auto [u, v] : {std::pair{0.7, 1.0}, {1.3, 4.0}, {1.9, 0.2}}) {
        const FundamentalData fd = fundamental_data(e.patch, u, v);
        REQUIRE(fd.dir1.has_value());
        const double W2 = fd.E * fd.G - fd.F * fd.F;
        const double s11 = -(fd.G * fd.e - fd.F * fd.f) / W2;
        const double s12 = -(fd.G * fd.f - fd.F * fd.g) / W2;
        const double s21 = -(fd.E * fd.f - fd.F * fd.e) / W2;
        const double s22 = -(fd.E * fd.g - fd.F * fd.f) / W2;
        auto check_pair = [&](Vec2 d, double kappa) {
            const Vec2 Sd{s11 * d.u + s12 * d.v, s21 * d.u + s22 * d.v};
            const Vec2 r = Sd - d * kappa;
            const double q = fd.E * r.u * r.u + 2 * fd.F * r.u * r.v + fd.G * r.v * r.v;
            CHECK(std::sqrt(std::fabs(q)) <= 1e-6 * (1.0 + std::fabs(kappa)));
        };
        check_pair(*fd.dir1, fd.kappa1);
        check_pair(*fd.dir2, fd.kappa2);
        // first-form orthogonality of the two directions
        const double cross_form = fd.E * fd.dir1->u * fd.dir2->u +
                                  fd.F * (fd.dir1->u * fd.dir2->v + fd.dir1->v * fd.dir2->u) +
                                  fd.G * fd.dir1->v * fd.dir2->v;
        CHECK(std::fabs(cross_form) <= 1e-6);
    }
}

TEST_CASE("umbilic equivalence: kappa gap and Hopf magnitude vanish together") {
    for (const char* name : {"planar-disk", "hyperbolic-cap"}) {
        const CatalogEntry e = build_catalog_entry(name);
        const auto gap = grid_scan_max(e.patch.domain(), 33, ExecMode::Serial,
                                       [&](double u, double v) {
                                           const FundamentalData fd =
                                               fundamental_data(e.patch, u, v);
                                           return fd.kappa1 - fd.kappa2;
                                       });
        const auto phi = grid_scan_max(e.patch.domain(), 33, ExecMode::Serial,
                                       [&](double u, double v) {
                                           const FundamentalData fd =
                                               fundamental_data(e.patch, u, v);
                                           return std::hypot(fd.e - fd.g, 2 * fd.f) /
                                                  fd.lambda2;
                                       });
        CHECK(gap.value <= 1e-8);
        CHECK(phi.value <= 1e-8);
    }
}

TEST_CASE("finite differences reproduce analytic jets at second order") {
    // observed convergence order of all six coefficients under h -> h/2,
    // on every catalog surface that carries analytic derivatives
    for (const auto& name : catalog_names()) {
        const CatalogEntry e = build_catalog_entry(name);
        if (!e.patch.analytic()) continue;
        const BBox bb = e.patch.domain().bounding_box();
        Vec2 probe{bb.u0 + 0.43 * bb.width(), bb.v0 + 0.57 * bb.height()};
        if (!e.patch.domain().contains(probe))
            probe = {bb.u0 + 0.62 * bb.width(), bb.v0 + 0.33 * bb.height()};
        REQUIRE(e.patch.domain().contains(probe));
        double err[2];
        int k = 0;
        for (double h : {2e-3, 1e-3}) {
            const auto fdp = e.patch.finite_difference_copy(h * bb.diameter());
            const FundamentalData fa = fundamental_data(e.patch, probe.u, probe.v);
            const FundamentalData fb = fundamental_data(fdp, probe.u, probe.v);
            double worst = 0.0;
            for (auto [x, y] : {std::pair{fa.E, fb.E}, {fa.F, fb.F}, {fa.G, fb.G},
                                {fa.e, fb.e}, {fa.f, fb.f}, {fa.g, fb.g}})
                worst = std::max(worst, std::fabs(x - y));
            err[k++] = worst;
        }
        INFO(name << ": err " << err[0] << " -> " << err[1]);
        if (err[0] < 1e-13) {
            // polynomial charts: the stencils are exact, nothing to converge
            CHECK(err[1] < 1e-13);
            continue;
        }
        const double order = std::log2(err[0] / err[1]);
        INFO(name << ": order " << order);
        CHECK(order >= 1.9);
    }
}

TEST_CASE("non-spacelike and degenerate inputs are rejected") {
    const ParametricPatch bad(PatchDomain::rectangle(0, 1, 0, 1),
                              [](double u, double v) { return LVec3{u, v, 2 * u}; });
    CHECK_THROWS_AS(fundamental_data(bad, 0.5, 0.5), DegeneracyError);
    const ParametricPatch pinched(PatchDomain::rectangle(-1, 1, -1, 1),
                                  [](double u, double v) {
                                      return LVec3{u * u, v, 0};  // Xu = 0 at u = 0
                                  });
    CHECK_THROWS_AS(fundamental_data(pinched, 0.0, 0.5), DegeneracyError);
}

TEST_CASE("parallel and serial grid kernels are bit-identical") {
    const CatalogEntry e = build_truncated_catenoid();
    const auto gap = [&](double u, double v) {
        const FundamentalData fd = fundamental_data(e.patch, u, v);
        return fd.kappa1 - fd.kappa2;
    };
    const auto rs = grid_scan_min(e.patch.domain(), 97, ExecMode::Serial, gap);
    const auto rp = grid_scan_min(e.patch.domain(), 97, ExecMode::Parallel, gap);
    CHECK(rs.value == rp.value);
    CHECK(rs.at.u == rp.at.u);
    CHECK(rs.at.v == rp.at.v);
    CHECK(rs.samples == rp.samples);
    CHECK(isothermal_residual(e.patch, 97, ExecMode::Serial) ==
          isothermal_residual(e.patch, 97, ExecMode::Parallel));
}

TEST_CASE("curve second form vanishes along catalog curvature-line edges") {
    const CatalogEntry e = build_truncated_catenoid();
    for (const auto& edge : e.patch.domain().edges()) {
        const double II = curve_mixed_second_form(e.patch, edge.point, 64);
        INFO("edge " << edge.name);
        CHECK(II <= 1e-6);
    }
}
