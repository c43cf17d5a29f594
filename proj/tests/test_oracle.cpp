#include "support.hpp"

#include "medisk/errors.hpp"
#include "medisk/oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace medisk;
using doctest::Approx;

TEST_CASE("enumeration examples") {
    const Norm l3 = Norm::lp(3.0);
    const SolveReport pair = solve_enumeration(l3, PointSet({{0.5, 1.5}, {-2, 0.25}}));
    const Disk ref = two_point_disk(l3, {0.5, 1.5}, {-2, 0.25});
    CHECK(pair.disk.center == ref.center);
    CHECK(pair.disk.radius == ref.radius);

    const SolveReport eq = solve_enumeration(Norm::lp(2.0), PointSet({{0, 0}, {2, 0}, {1, std::sqrt(3.0)}}));
    CHECK(eq.disk.center.x == Approx(1.0).epsilon(1e-10));
    CHECK(eq.disk.center.y == Approx(1.0 / std::sqrt(3.0)).epsilon(1e-10));
    CHECK(eq.disk.radius == Approx(1.1547005383792515).epsilon(1e-10));
    CHECK(eq.algorithm == Algorithm::enumeration);

    const SolveReport one = solve_enumeration(l3, PointSet({{1, 1}}));
    CHECK(one.disk.radius == 0.0);
}

TEST_CASE("limits and errors") {
    CHECK_THROWS_AS(solve_enumeration(Norm::lp(2.0), PointSet()), EmptyInput);
    std::mt19937_64 rng(1);
    CHECK_THROWS_AS(solve_enumeration(Norm::lp(2.0), PointSet(testing::uniform_points(rng, 401))), SizeLimit);
    CHECK_THROWS_AS(solve_minimax_descent(Norm::lp(2.0), PointSet()), EmptyInput);
}

TEST_CASE("candidate list covers pairs and triples") {
    std::size_t skipped = 99;
    const auto c = enumerate_candidates(Norm::lp(2.0), PointSet({{0, 0}, {2, 0}, {1, 5}}), 1e-9, &skipped);
    CHECK(skipped == 0);
    std::size_t pairs = 0, triples = 0, feasible = 0;
    for (const auto& x : c) {
        (x.kind == CandidateDisk::Kind::pair ? pairs : triples)++;
        feasible += x.feasible;
    }
    CHECK(pairs == 3);
    CHECK(triples == 1);
    CHECK(feasible == 1);

    // Collinear triples are skipped and counted.
    const auto d = enumerate_candidates(Norm::lp(2.0), PointSet({{0, 0}, {1, 0}, {2, 0}, {0.5, 0.01}}), 1e-9, &skipped);
    CHECK(skipped >= 1);
}

TEST_CASE("descent examples") {
    const Disk a = solve_minimax_descent(Norm::lp(4.0), PointSet({{-1, 0}, {1, 0}}));
    CHECK(euclid(a.center) < 1e-6);
    CHECK(a.radius == Approx(1.0).epsilon(1e-6));

    const Disk b = solve_minimax_descent(Norm::lp(2.0), PointSet({{0, 0}, {2, 0}, {0, 2}}));
    CHECK(euclid(b.center - Vec2{1, 1}) < 1e-6);
    CHECK(std::abs(b.radius - std::sqrt(2.0)) < 1e-6);

    std::mt19937_64 rng(12);
    const PointSet pts(testing::uniform_points(rng, 12));
    const Norm l15 = Norm::lp(1.5);
    CHECK(std::abs(solve_minimax_descent(l15, pts).radius - solve_enumeration(l15, pts).disk.radius) <= 1e-5);
}

TEST_CASE("property: enumeration minimality and descent agreement") {
    std::mt19937_64 rng(13);
    const double tol = 1e-9;
    for (double p : {1.5, 2.0, 3.0, 4.0}) {
        const Norm n = Norm::lp(p);
        for (int k = 0; k < 30; ++k) {
            const PointSet pts(testing::uniform_points(rng, 2 + k % 11));
            const SolveReport r = solve_enumeration(n, pts, tol);
            CHECK(encloses(r.disk, pts, tol));
            for (const auto& c : enumerate_candidates(n, pts, tol)) {
                if (c.feasible) CHECK(c.disk.radius >= r.disk.radius);
            }
            const Disk d = solve_minimax_descent(n, pts, tol);
            CHECK(std::abs(d.radius - r.disk.radius) <= 10 * tol);
        }
    }
}

TEST_CASE("property: the objective is convex") {
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (double p : {1.5, 4.0}) {
        const Norm n = Norm::lp(p);
        const auto pts = testing::uniform_points(rng, 9);
        for (int i = 0; i < 500; ++i) {
            const Vec2 x{u(rng), u(rng)}, y{u(rng), u(rng)};
            const double mid = testing::spread(n, pts, midpoint(x, y));
            CHECK(mid <= 0.5 * (testing::spread(n, pts, x) + testing::spread(n, pts, y)) + 1e-12);
        }
    }
}
