#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "lcmc/lorentz.hpp"

using namespace lcmc;

namespace {

// independent oracle: plain 3x3 determinant with rows a, b, w
double det3(const LVec3& a, const LVec3& b, const LVec3& w) {
    return a.x1 * (b.x2 * w.x3 - b.x3 * w.x2) - a.x2 * (b.x1 * w.x3 - b.x3 * w.x1) +
           a.x3 * (b.x1 * w.x2 - b.x2 * w.x1);
}

} // namespace

TEST_CASE("minkowski inner product on basis and mixed vectors") {
    CHECK(minkowski_inner({1, 0, 0}, {0, 0, 1}) == 0.0);
    CHECK(minkowski_inner({0, 0, 1}, {0, 0, 1}) == -1.0);
    CHECK(minkowski_inner({1, 2, 2}, {1, 2, 2}) == 1.0);
    // symmetry and bilinearity spot checks
    const LVec3 a{0.3, -1.2, 0.7}, b{2.0, 0.5, -0.4};
    CHECK(minkowski_inner(a, b) == doctest::Approx(minkowski_inner(b, a)));
    CHECK(minkowski_inner(a + b, a) ==
          doctest::Approx(minkowski_inner(a, a) + minkowski_inner(b, a)));
}

TEST_CASE("causal classification with the zero-vector convention") {
    CHECK(causal_class({1, 0, 2}) == CausalClass::Timelike);
    CHECK(causal_class({0, 0, 0}) == CausalClass::Spacelike);
    CHECK(causal_class({1, 0, 1}) == CausalClass::Lightlike);
    CHECK(causal_class({3, 4, 0}) == CausalClass::Spacelike);
}

TEST_CASE("causal trichotomy and scale invariance over random vectors") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> U(-10.0, 10.0);
    for (int k = 0; k < 500; ++k) {
        const LVec3 v{U(rng), U(rng), U(rng)};
        const CausalClass c = causal_class(v);
        for (double lam : {2.0, -0.5, -3.0})
            CHECK(causal_class(v * lam) == c);
    }
    CHECK_THROWS_AS(causal_class({1.0, std::nan(""), 0.0}), CausalError);
}

TEST_CASE("lorentz_cross equals the determinant pairing") {
    const LVec3 e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
    const LVec3 c12 = lorentz_cross(e1, e2);
    CHECK(c12.x1 == 0.0);
    CHECK(c12.x2 == 0.0);
    CHECK(c12.x3 == -1.0);
    const LVec3 c23 = lorentz_cross(e2, e3);
    CHECK(c23.x1 == 1.0);
    CHECK(c23.x2 == 0.0);
    CHECK(c23.x3 == 0.0);

    const LVec3 a{0.4, -2.0, 1.1};
    const LVec3 aa = lorentz_cross(a, a);
    CHECK(euclid_norm(aa) == 0.0);
}

TEST_CASE("randomized determinant oracle, 1000 triples") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> U(-10.0, 10.0);
    for (int k = 0; k < 1000; ++k) {
        const LVec3 a{U(rng), U(rng), U(rng)};
        const LVec3 b{U(rng), U(rng), U(rng)};
        const LVec3 w{U(rng), U(rng), U(rng)};
        const double lhs = minkowski_inner(lorentz_cross(a, b), w);
        const double scale = 1.0 + euclid_norm(a) * euclid_norm(b) * euclid_norm(w);
        CHECK(std::fabs(lhs - det3(a, b, w)) <= 1e-9 * scale);

        // antisymmetry at unit scale
        const LVec3 an = a / euclid_norm(a), bn = b / euclid_norm(b);
        const LVec3 s = lorentz_cross(an, bn) + lorentz_cross(bn, an);
        CHECK(std::fabs(s.x1) <= 1e-12);
        CHECK(std::fabs(s.x2) <= 1e-12);
        CHECK(std::fabs(s.x3) <= 1e-12);
    }
}

TEST_CASE("timelike angle values") {
    CHECK(timelike_angle({0, 0, 1}, {0, 0, 2}) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(timelike_angle({0, 0, 1}, {std::sinh(1.0), 0, std::cosh(1.0)}) ==
          doctest::Approx(1.0).epsilon(1e-12));
    const double t = 0.5;
    CHECK(timelike_angle({std::sinh(t), 0, std::cosh(t)},
                         {-std::sinh(t), 0, std::cosh(t)}) ==
          doctest::Approx(2.0 * t).epsilon(1e-12));
}

TEST_CASE("timelike angle symmetry and scale invariance") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> U(-2.0, 2.0);
    for (int k = 0; k < 200; ++k) {
        const double x1 = U(rng), x2 = U(rng);
        const double y1 = U(rng), y2 = U(rng);
        const LVec3 a{x1, x2, std::sqrt(x1 * x1 + x2 * x2) + 0.3 + std::fabs(U(rng))};
        const LVec3 b{y1, y2, std::sqrt(y1 * y1 + y2 * y2) + 0.3 + std::fabs(U(rng))};
        const double ab = timelike_angle(a, b);
        CHECK(std::fabs(ab - timelike_angle(b, a)) <= 1e-12);
        CHECK(std::fabs(ab - timelike_angle(a * 2.0, b * 3.0)) <= 1e-12 * (1.0 + ab));
    }
}

TEST_CASE("timelike angle rejects wrong inputs") {
    CHECK_THROWS_AS(timelike_angle({1, 0, 0}, {0, 0, 1}), CausalError);
    CHECK_THROWS_AS(timelike_angle({0, 0, -1}, {0, 0, 1}), CausalError);
    CHECK_THROWS_AS(timelike_angle({1, 0, 1}, {0, 0, 1}), CausalError);
}

TEST_CASE("mixed angle values and rejections") {
    CHECK(mixed_angle({1, 0, 0}, {0, 0, 1}) == 0.0);
    CHECK(mixed_angle({std::cosh(1.0), 0, std::sinh(1.0)}, {0, 0, 1}) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mixed_angle({2, 0, 0}, {0, 0, 3}) == 0.0);
    CHECK_THROWS_AS(mixed_angle({0, 0, 1}, {0, 0, 1}), CausalError);
    CHECK_THROWS_AS(mixed_angle({0, 0, 0}, {0, 0, 1}), CausalError);
    CHECK_THROWS_AS(mixed_angle({1, 0, 0}, {1, 0, 0}), CausalError);
}

TEST_CASE("future orientation") {
    CHECK(is_future_directed({0, 0, 1}));
    CHECK_FALSE(is_future_directed({0, 0, -1}));
    CHECK_FALSE(is_future_directed({std::sinh(2.0), 0, -std::cosh(2.0)}));
    CHECK(is_future_directed({1, 0, 1}));  // lightlike is fine
    CHECK_THROWS_AS(is_future_directed({1, 0, 0}), CausalError);
}

TEST_CASE("boundary frame residual detects broken frames") {
    const BoundaryFrame good{{0, 1, 0}, {0, 0, 1}, {-1, 0, 0}};
    CHECK(frame_residual(good) <= 1e-15);
    const BoundaryFrame bad{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};  // outward conormal
    CHECK(frame_residual(bad) > 1.0);
}
