#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ostar/geometry.hpp"
#include "ostar/orlicz.hpp"
#include "ostar/quadrature.hpp"
#include "support.hpp"

using namespace ostar;

TEST_CASE("Direction invariants") {
    CHECK_THROWS_AS(Direction({1.0}), std::invalid_argument);
    CHECK_THROWS_AS(Direction({0.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(Direction::from_vector(std::vector<double>{0.0, 0.0}),
                    std::invalid_argument);
    const Direction u = Direction::from_vector(std::vector<double>{3.0, 4.0});
    CHECK(u[0] == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(u[1] == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(Direction::angle_2d(0.25).theta() == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("make_ball") {
    const StarBody b = make_ball(2, 1.0);
    CHECK(b.rho(Direction::angle_2d(1.2)) == 1.0);
    CHECK(b.positive);
    CHECK(b.continuous);

    const StarBody origin = make_ball(3, 0.0);
    CHECK(origin.rho(Direction::axis(3, 2)) == 0.0);
    CHECK_FALSE(origin.positive);

    const StarBody big = make_ball(2, 2.5);
    CHECK(big.rho(Direction::angle_2d(0.0)) == 2.5);

    CHECK_THROWS_AS(make_ball(1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_ball(2, -1.0), std::invalid_argument);
}

TEST_CASE("make_fourier_star") {
    const StarBody disk = make_fourier_star(1.0, {});
    CHECK(disk.rho(Direction::angle_2d(0.7)) == 1.0);

    const StarBody petal = make_fourier_star(1.0, {{3, 0.5}});
    // min of 1 + 0.5 cos(3t) is 0.5, attained at t = pi/3
    CHECK(petal.rho(Direction::angle_2d(M_PI / 3.0)) ==
          doctest::Approx(0.5).epsilon(1e-14));
    double lo = 10.0;
    for (int i = 0; i < 2000; ++i)
        lo = std::min(lo, petal.rho(Direction::angle_2d(2.0 * M_PI * i / 2000)));
    CHECK(lo == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(petal.lower_bound == doctest::Approx(0.5));

    CHECK_THROWS_AS(make_fourier_star(1.0, {{2, 1.0}}), std::invalid_argument);
}

TEST_CASE("linear_image") {
    const StarBody petal = make_fourier_star(1.0, {{3, 0.5}});
    const SphericalRule probe = build_rule(2, 64);

    SUBCASE("identity map leaves the radial unchanged") {
        const StarBody img = linear_image(petal, LinearMap::identity(2));
        for (const Direction& u : probe.nodes())
            CHECK(img.rho(u) == doctest::Approx(petal.rho(u)).epsilon(1e-14));
    }
    SUBCASE("dilatation of the unit ball") {
        const StarBody img = linear_image(make_ball(2, 1.0), LinearMap::scaling(2, 3.5));
        for (const Direction& u : probe.nodes())
            CHECK(img.rho(u) == doctest::Approx(3.5).epsilon(1e-14));
    }
    SUBCASE("axis radials of an ellipse") {
        const StarBody e = linear_image(make_ball(2, 1.0), LinearMap::diagonal({2.0, 1.0}));
        CHECK(e.rho(Direction::axis(2, 0)) == doctest::Approx(2.0).epsilon(1e-13));
        CHECK(e.rho(Direction::axis(2, 1)) == doctest::Approx(1.0).epsilon(1e-13));
    }
    SUBCASE("degree-1 homogeneity of the set operation") {
        for (double r : {0.25, 1.0, 7.5}) {
            const StarBody img = linear_image(petal, LinearMap::scaling(2, r));
            for (const Direction& u : probe.nodes())
                CHECK(img.rho(u) == doctest::Approx(r * petal.rho(u)).epsilon(1e-12));
        }
    }
    SUBCASE("composition matches the product map") {
        const LinearMap a = LinearMap::random(2, 11);
        const LinearMap b = LinearMap::random(2, 12);
        const StarBody two_step = linear_image(linear_image(petal, a), b);
        const StarBody one_step = linear_image(petal, b.compose_after(a));
        for (const Direction& u : probe.nodes())
            CHECK(two_step.rho(u) ==
                  doctest::Approx(one_step.rho(u)).epsilon(1e-10));
    }
    SUBCASE("singular maps are rejected") {
        Eigen::MatrixXd s(2, 2);
        s << 1.0, 2.0, 2.0, 4.0;
        CHECK_THROWS_AS(LinearMap{s}, std::invalid_argument);
    }
}

TEST_CASE("pth_radial_combination") {
    SUBCASE("p = 1 is radial addition, exactly") {
        const StarBody k = make_fourier_star(1.0, {{2, 0.3}});
        const StarBody l = make_fourier_star(1.5, {{4, 0.2}});
        const StarBody s = pth_radial_combination(0.7, k, 1.0, 2.0, l);
        for (int i = 0; i < 64; ++i) {
            const Direction u = Direction::angle_2d(2.0 * M_PI * i / 64);
            CHECK(s.rho(u) == 0.7 * k.rho(u) + 2.0 * l.rho(u));
        }
    }
    SUBCASE("balls compose in p-norm") {
        const StarBody s1 = pth_radial_combination(1.0, make_ball(2, 2.0), 1.0,
                                                   1.0, make_ball(2, 3.0));
        CHECK(s1.rho(Direction::angle_2d(0.3)) == doctest::Approx(5.0).epsilon(1e-14));
        const StarBody s2 = pth_radial_combination(1.0, make_ball(2, 3.0), 2.0,
                                                   1.0, make_ball(2, 4.0));
        CHECK(s2.rho(Direction::angle_2d(0.3)) == doctest::Approx(5.0).epsilon(1e-14));
    }
    SUBCASE("p < 0 vanishes where either factor vanishes") {
        StarBody half;
        half.dimension = 2;
        half.radial = [](const Direction& u) { return std::max(0.0, u[0]); };
        half.continuous = true;
        half.upper_bound = 1.0;
        const StarBody s =
            pth_radial_combination(1.0, half, -1.0, 1.0, make_ball(2, 1.0));
        CHECK(s.rho(Direction::axis(2, 1)) == 0.0);
        CHECK(s.rho(Direction::axis(2, 0)) == doctest::Approx(0.5).epsilon(1e-14));
    }
    SUBCASE("swap commutes bit-identically for p != 0") {
        const StarBody k = make_fourier_star(1.0, {{3, 0.4}});
        const StarBody l = make_fourier_star(2.0, {{5, 0.7}});
        for (double p : {0.5, 2.0, -1.0}) {
            const StarBody a = pth_radial_combination(1.0, k, p, 1.0, l);
            const StarBody b = pth_radial_combination(1.0, l, p, 1.0, k);
            for (int i = 0; i < 32; ++i) {
                const Direction u = Direction::angle_2d(2.0 * M_PI * i / 32);
                CHECK(a.rho(u) == b.rho(u));
            }
        }
    }
    SUBCASE("p = 0 is routed to log_combination") {
        CHECK_THROWS_AS(pth_radial_combination(1.0, make_ball(2, 1.0), 0.0, 1.0,
                                               make_ball(2, 1.0)),
                        std::invalid_argument);
    }
}

TEST_CASE("radial_metric") {
    const SphericalRule probe = build_rule(2, 384);
    const StarBody disk = make_ball(2, 1.0);
    const StarBody petal = make_fourier_star(1.0, {{3, 0.5}});

    CHECK(radial_metric(petal, petal, probe) == 0.0);
    CHECK(radial_metric(make_ball(2, 2.0), make_ball(2, 4.5), probe) == 2.5);

    // max |0.5 cos 3t| = 0.5; 384 nodes include t = pi/3 exactly.
    CHECK(radial_metric(disk, petal, probe) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(radial_metric(disk, petal, build_rule(2, 256)) <= 0.5);

    SUBCASE("pseudometric on sampled values") {
        const StarBody a = make_fourier_star(1.2, {{2, 0.3}});
        const StarBody b = make_fourier_star(0.9, {{5, 0.1}});
        const StarBody c = make_fourier_star(1.6, {{3, 0.45}});
        CHECK(radial_metric(a, b, probe) == radial_metric(b, a, probe));
        CHECK(radial_metric(a, c, probe) <=
              radial_metric(a, b, probe) + radial_metric(b, c, probe) + 1e-14);
    }
}

TEST_CASE("restrict_to_coordinate_subspace") {
    const StarBody ball3 = make_ball(3, 1.0);
    const StarBody disk = restrict_to_coordinate_subspace(ball3, {0, 1});
    CHECK(disk.dimension == 2);
    CHECK(disk.rho(Direction::angle_2d(1.1)) == doctest::Approx(1.0).epsilon(1e-14));

    const StarBody ellipsoid =
        linear_image(make_ball(3, 1.0), LinearMap::diagonal({2.0, 1.0, 1.0}));
    const StarBody section = restrict_to_coordinate_subspace(ellipsoid, {1, 2});
    for (int i = 0; i < 16; ++i)
        CHECK(section.rho(Direction::angle_2d(2.0 * M_PI * i / 16)) ==
              doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(restrict_to_coordinate_subspace(ball3, {0}),
                    std::invalid_argument);

    SUBCASE("section covariance of the Orlicz sum") {
        const OrliczFunction phi = make_registry_function("lp:2", 2, 3);
        const StarBody k = make_random_smooth_star(3, 5);
        const StarBody l = make_random_smooth_star(3, 6);
        const StarBody lhs =
            restrict_to_coordinate_subspace(orlicz_sum(phi, {k, l}), {0, 2});
        const StarBody rhs =
            orlicz_sum(phi, {restrict_to_coordinate_subspace(k, {0, 2}),
                             restrict_to_coordinate_subspace(l, {0, 2})});
        for (int i = 0; i < 24; ++i) {
            const Direction v = Direction::angle_2d(2.0 * M_PI * i / 24);
            CHECK(lhs.rho(v) == doctest::Approx(rhs.rho(v)).epsilon(1e-12));
        }
    }
}

TEST_CASE("polar_star_body") {
    SUBCASE("ball") {
        const StarBody p = polar_star_body(make_ellipsoid_support(std::vector<double>{2.0, 2.0}));
        CHECK(p.rho(Direction::angle_2d(0.4)) == doctest::Approx(0.5).epsilon(1e-14));
    }
    SUBCASE("ellipsoid support gives 1/|Bu|") {
        const ConvexBodySupport e = make_ellipsoid_support(std::vector<double>{2.0, 1.0});
        const StarBody p = polar_star_body(e);
        for (int i = 0; i < 32; ++i) {
            const Direction u = Direction::angle_2d(2.0 * M_PI * i / 32);
            const double norm = std::hypot(2.0 * u[0], 1.0 * u[1]);
            CHECK(p.rho(u) == doctest::Approx(1.0 / norm).epsilon(1e-13));
        }
    }
    SUBCASE("polar of the square is the cross-polytope") {
        const ConvexBodySupport sq = make_polytope_support(
            {{1.0, 1.0}, {1.0, -1.0}, {-1.0, 1.0}, {-1.0, -1.0}});
        const StarBody p = polar_star_body(sq);
        for (int i = 0; i < 64; ++i) {
            const Direction u = Direction::angle_2d(2.0 * M_PI * i / 64 + 0.01);
            // brute-force polar: 1 / max vertex dot = cross-polytope radial
            const double expected = 1.0 / (std::abs(u[0]) + std::abs(u[1]));
            CHECK(p.rho(u) == doctest::Approx(expected).epsilon(1e-13));
        }
    }
    SUBCASE("nonpositive support is an evaluation error") {
        ConvexBodySupport bad;
        bad.dimension = 2;
        bad.support = [](const Direction& u) { return u[0]; };
        const StarBody p = polar_star_body(bad);
        CHECK_THROWS_AS(p.rho(Direction::axis(2, 1)), std::domain_error);
    }
}
