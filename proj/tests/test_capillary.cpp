#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "lcmc/catalog.hpp"

using namespace lcmc;

TEST_CASE("support surface construction and membership") {
    const SupportSurface hp = SupportSurface::hyperbolic_plane(2.0);
    CHECK(hp.membership_residual({0, 0, 2}) <= 1e-12);
    CHECK(hp.membership_residual({0, 0, 3}) > 1.0);
    const LVec3 n = hp.normal_at({0, 0, 2});
    CHECK(euclid_norm(n - LVec3{0, 0, 1}) <= 1e-12);

    const SupportSurface ds = SupportSurface::de_sitter(1.0);
    CHECK(euclid_norm(ds.normal_at({1, 0, 0}) - LVec3{1, 0, 0}) <= 1e-12);

    const SupportSurface sp = SupportSurface::spacelike_plane({0, 0, 1}, -2.0);
    CHECK(sp.membership_residual({0.3, -0.1, 2.0}) <= 1e-12);
    CHECK(euclid_norm(sp.normal_at({0.3, -0.1, 2.0}) - LVec3{0, 0, 1}) == 0.0);

    CHECK_THROWS_AS(ds.normal_at({2, 0, 0}), DomainError);
}

TEST_CASE("lightlike planes are rejected at construction") {
    const LVec3 lightlike{1, 0, 1};
    CHECK_THROWS_AS(SupportSurface::spacelike_plane(lightlike, 0.0), CausalError);
    CHECK_THROWS_AS(SupportSurface::timelike_plane(lightlike, 0.0), CausalError);
    // wrong causal class for the named kind
    CHECK_THROWS_AS(SupportSurface::spacelike_plane({1, 0, 0}, 0.0), CausalError);
    CHECK_THROWS_AS(SupportSurface::timelike_plane({0, 0, 1}, 0.0), CausalError);
    CHECK_THROWS_AS(SupportSurface::spacelike_plane({0, 0, -1}, 0.0), CausalError);
}

TEST_CASE("boundary frame of the planar disk points inward") {
    const CatalogEntry e = build_de_sitter_configuration(1.0);
    const auto& comp = e.supports[0];
    // s = 0 is the boundary point (1, 0) -> ambient (1, 0, 0)
    const BoundaryFrame f = boundary_frame(e.patch, comp.curve, 0.0);
    CHECK(frame_residual(f) <= 1e-9);
    CHECK(euclid_norm(f.normal - LVec3{0, 0, 1}) <= 1e-12);
    CHECK(euclid_norm(f.conormal - LVec3{-1, 0, 0}) <= 1e-9);
    CHECK(euclid_norm(f.tau - LVec3{0, 1, 0}) <= 1e-9);
}

TEST_CASE("boundary frame on the catenoid circle edge is meridian-aligned") {
    const CatalogEntry e = build_truncated_catenoid();
    const auto& circle_lo = e.supports[0];  // sigma = sigma0 edge
    const BoundaryFrame f = boundary_frame(e.patch, circle_lo.curve, 0.25);
    CHECK(frame_residual(f) <= 1e-8);
    // the conormal lies along the meridian direction X_sigma
    const Vec2 p = circle_lo.curve(0.25);
    const Jet2 j = e.patch.jet(p.u, p.v);
    const LVec3 meridian = j.Xu / lorentz_norm(j.Xu);
    CHECK(std::fabs(std::fabs(minkowski_inner(f.conormal, meridian)) - 1.0) <= 1e-8);
}

TEST_CASE("contact angle on the hyperbolic cap equals the cut height parameter") {
    for (double t_max : {0.5, 1.0, 1.7}) {
        const CatalogEntry e = build_hyperbolic_cap(1.0, t_max);
        const auto& comp = e.supports[0];
        for (double s : {0.0, 0.3, 0.77}) {
            const Vec2 p = comp.curve(s);
            const BoundaryFrame f = boundary_frame(e.patch, comp.curve, s);
            const ContactAngle ca =
                contact_angle(f, comp.support, e.patch.position(p.u, p.v));
            CHECK(std::fabs(ca.beta - t_max) <= 1e-9);
            CHECK(ca.residual <= 1e-6);
        }
    }
}

TEST_CASE("contact angle is zero when the surface normal matches the support") {
    const BoundaryFrame f{{0, 1, 0}, {0, 0, 1}, {-1, 0, 0}};
    const SupportSurface plane = SupportSurface::spacelike_plane({0, 0, 1}, 0.0);
    const ContactAngle ca = contact_angle(f, plane, {0.3, -0.2, 0.0});
    CHECK(ca.beta == 0.0);
    CHECK(ca.residual <= 1e-12);
}

TEST_CASE("contact angle vanishes when the frames coincide") {
    // planar disk inside the de Sitter surface: N orthogonal to N_Sigma
    const CatalogEntry e = build_de_sitter_configuration(1.0);
    const auto& comp = e.supports[0];
    const Vec2 p = comp.curve(0.4);
    const BoundaryFrame f = boundary_frame(e.patch, comp.curve, 0.4);
    const ContactAngle ca = contact_angle(f, comp.support, e.patch.position(p.u, p.v));
    CHECK(ca.beta <= 1e-9);
    CHECK(ca.residual <= 1e-9);
}

TEST_CASE("trihedra equations: identities and explicit angles") {
    const LVec3 tau{0, 1, 0};
    // spacelike support kind, beta = 0: the frames coincide
    {
        const auto [nu, N] = trihedra_roundtrip(0.0, tau, LVec3{0, 0, 1},
                                                SupportSurface::Kind::SpacelikePlane);
        CHECK(euclid_norm(nu - (-lorentz_cross(tau, LVec3{0, 0, 1}))) <= 1e-12);
        CHECK(euclid_norm(N - LVec3{0, 0, 1}) <= 1e-12);
    }
    // hyperbolic norms survive any angle
    for (double beta : {0.3, 1.0, 2.5}) {
        const auto [nu, N] = trihedra_roundtrip(beta, tau, LVec3{0, 0, 1},
                                                SupportSurface::Kind::SpacelikePlane);
        CHECK(std::fabs(minkowski_inner(nu, nu) - 1.0) <= 1e-9);
        CHECK(std::fabs(minkowski_inner(N, N) + 1.0) <= 1e-9);
        CHECK(N.x3 > 0.0);
    }
    // timelike support kind: sinh^2 - cosh^2 identities with beta = 1
    for (double beta : {0.0, 1.0, 2.2}) {
        const auto [nu, N] = trihedra_roundtrip(beta, LVec3{0, -1, 0}, LVec3{1, 0, 0},
                                                SupportSurface::Kind::DeSitter);
        CHECK(std::fabs(minkowski_inner(nu, nu) - 1.0) <= 1e-9);
        CHECK(std::fabs(minkowski_inner(N, N) + 1.0) <= 1e-9);
    }
}

TEST_CASE("trihedra roundtrip recovers the angle over random frames") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    std::uniform_real_distribution<double> B(0.0, 3.0);
    int done = 0;
    while (done < 200) {
        // random boost/rotation of the standard frame
        const double a1 = U(rng) * 3.0, a2 = U(rng) * 3.0, phi = U(rng) * 3.0;
        const LVec3 T{std::sinh(a1) * std::cos(phi), std::sinh(a1) * std::sin(phi),
                      std::cosh(a1)};
        // spacelike unit orthogonal to T
        LVec3 S{std::cos(a2), std::sin(a2), 0};
        const double proj = minkowski_inner(S, T);
        S = S + T * proj;  // <T,T> = -1: this removes the T component
        const double sn = lorentz_norm(S);
        if (!(sn > 0.2)) continue;
        S = S / sn;
        LVec3 tau = -lorentz_cross(S, T);
        tau = tau / lorentz_norm(tau);
        const double beta = B(rng);
        ++done;

        // spacelike kind: N_Sigma = T
        {
            const auto [nu, N] =
                trihedra_roundtrip(beta, tau, T, SupportSurface::Kind::SpacelikePlane);
            const double rec = timelike_angle(N, T);
            CHECK(std::fabs(rec - beta) <= 1e-9);
            CHECK(std::fabs(minkowski_inner(nu, tau)) <= 1e-9);
        }
        // timelike kind: N_Sigma = S (flip tau if the conormal comes out past)
        {
            LVec3 t2 = tau;
            if (!((-lorentz_cross(t2, S)).x3 > 0.0)) t2 = -t2;
            const auto [nu, N] =
                trihedra_roundtrip(beta, t2, S, SupportSurface::Kind::DeSitter);
            const double rec = mixed_angle(S, N);
            CHECK(std::fabs(rec - beta) <= 1e-9);
            CHECK(std::fabs(minkowski_inner(N, N) + 1.0) <= 1e-9);
            CHECK(std::fabs(minkowski_inner(nu, nu) - 1.0) <= 1e-9);
        }
    }
}

TEST_CASE("trihedra roundtrip rejects causal mismatches") {
    const LVec3 tau{0, 1, 0};
    CHECK_THROWS_AS(
        trihedra_roundtrip(1.0, tau, LVec3{1, 0, 0}, SupportSurface::Kind::SpacelikePlane),
        CausalError);
    CHECK_THROWS_AS(
        trihedra_roundtrip(1.0, tau, LVec3{0, 0, 1}, SupportSurface::Kind::DeSitter),
        CausalError);
    CHECK_THROWS_AS(
        trihedra_roundtrip(-0.5, tau, LVec3{0, 0, 1}, SupportSurface::Kind::SpacelikePlane),
        DomainError);
    // tau not orthogonal to the support normal
    CHECK_THROWS_AS(trihedra_roundtrip(1.0, LVec3{0.6, 0.8, 0.3},
                                       LVec3{0, 0, 1},
                                       SupportSurface::Kind::SpacelikePlane),
                    Error);
}

TEST_CASE("joachimsthal residual: catalog edges near zero, tilted cut far away") {
    const CatalogEntry cap = build_hyperbolic_cap(1.0, 1.0);
    CHECK(joachimsthal_check(cap.patch, cap.supports[0]) <= 1e-6);

    const CatalogEntry trunc = build_truncated_catenoid();
    for (const auto& comp : trunc.supports)
        CHECK(joachimsthal_check(trunc.patch, comp) <= 1e-6);

    const CatalogEntry tilted = build_tilted_cut_negative();
    CHECK(joachimsthal_check(tilted.patch, tilted.supports[0]) >= 1e-3);
}

TEST_CASE("capillary verdicts across the catalog") {
    for (const char* name : {"hyperbolic-cap", "truncated-catenoid", "desitter-disk",
                             "desitter-cap"}) {
        const CatalogEntry e = build_catalog_entry(name);
        for (const auto& comp : e.supports) {
            const CapillaryReport rep = capillary_constancy_check(e.patch, comp);
            INFO(name << " / " << rep.edge);
            CHECK(rep.verdict == CapillaryVerdict::Capillary);
            CHECK(rep.membership_max <= 1e-6);
            const auto it = e.expected.beta_const.find(rep.edge);
            if (it != e.expected.beta_const.end())
                CHECK(std::fabs(rep.beta_mean - it->second) <= 1e-6);
        }
    }
}

TEST_CASE("the tilted cut is not a constant-angle configuration") {
    const CatalogEntry e = build_tilted_cut_negative();
    const CapillaryReport rep = capillary_constancy_check(e.patch, e.supports[0]);
    CHECK(rep.verdict == CapillaryVerdict::NotConstantAngle);
    CHECK(rep.beta_spread > 0.1);
    CHECK(rep.joachimsthal_max >= 1e-3);
    CHECK(rep.membership_max <= 1e-6);
}

TEST_CASE("capillary check rejects undersampling and off-support curves") {
    const CatalogEntry e = build_hyperbolic_cap(1.0, 1.0);
    BoundaryComponent few = e.supports[0];
    few.samples = 8;
    CHECK_THROWS_AS(capillary_constancy_check(e.patch, few), SamplingError);

    BoundaryComponent wrong = e.supports[0];
    wrong.support = SupportSurface::spacelike_plane({0, 0, 1}, -99.0);
    CHECK_THROWS_AS(capillary_constancy_check(e.patch, wrong), DomainError);
}
