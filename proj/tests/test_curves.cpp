#include <doctest.h>

#include "fsw/curves.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

using namespace fsw;

namespace {

constexpr double kPi = std::numbers::pi;

Polyline circle(Complex center, double radius, int n) {
    Polyline c;
    c.closed = true;
    for (int j = 0; j < n; ++j)
        c.points.push_back(center + std::polar(radius, 2.0 * kPi * j / n));
    return c;
}

} // namespace

TEST_SUITE_BEGIN("curves");

TEST_CASE("crossing count on synthetic circles") {
    auto unit = count_axis_crossings(circle({0.0, 0.0}, 1.0, 256));
    REQUIRE(unit.size() == 4);
    const double expect[] = {0.0, kPi / 2.0, kPi, 1.5 * kPi};
    const Axis axes[] = {Axis::real_axis, Axis::imag_axis, Axis::real_axis,
                         Axis::imag_axis};
    for (int i = 0; i < 4; ++i) {
        CHECK(std::abs(unit[i].theta - expect[i]) <= 1e-2);
        CHECK(unit[i].axis == axes[i]);
        CHECK(unit[i].multiplicity_tag == 0);
    }

    // a circle strictly in the right half plane only meets the real axis
    auto shifted = count_axis_crossings(circle({3.0, 0.0}, 1.0, 256));
    REQUIRE(shifted.size() == 2);
    CHECK(shifted[0].axis == Axis::real_axis);
    CHECK(shifted[1].axis == Axis::real_axis);
}

TEST_CASE("open curves use a normalized parameter") {
    Polyline seg;
    seg.points = {Complex(1.0, -1.0), Complex(1.0, 1.0)};
    auto hits = count_axis_crossings(seg);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].axis == Axis::real_axis);
    CHECK(hits[0].theta == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("a polyline lying in an axis is not a crossing") {
    Polyline seg;
    seg.points = {Complex(0.0, -1.0), Complex(0.0, 0.0), Complex(0.0, 1.0)};
    auto hits = count_axis_crossings(seg);
    REQUIRE(hits.size() == 1);  // the real-axis crossing at the middle sample
    CHECK(hits[0].axis == Axis::real_axis);
    CHECK(hits[0].theta == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("one segment crossing both axes is an error") {
    Polyline seg;
    seg.points = {Complex(-1.0, -0.5), Complex(1.0, 0.5)};
    CHECK_THROWS_AS(count_axis_crossings(seg), UndersampledCurve);
    Polyline tiny;
    tiny.points = {Complex(1.0, 1.0)};
    CHECK_THROWS_AS(count_axis_crossings(tiny), std::invalid_argument);
}

TEST_CASE("circle image has modulus R e^{R cos theta}") {
    double R = 5.0;
    int n = 512;
    Polyline img = sample_circle_image(R, n);
    REQUIRE(img.points.size() == (std::size_t)n);
    CHECK(img.closed);
    for (int j = 0; j < n; ++j) {
        double theta = 2.0 * kPi * j / n;
        double mod = R * std::exp(R * std::cos(theta));
        Complex expected = std::polar(mod, theta + R * std::sin(theta));
        CHECK(std::abs(img.points[j] - expected) <= 1e-12 * mod);
    }
    CHECK_THROWS_AS(sample_circle_image(R, 32), std::invalid_argument);
    CHECK_THROWS_AS(sample_circle_image(0.0, 512), std::invalid_argument);

    // a vanishingly weak well maps its circle almost rigidly
    Polyline weak = sample_circle_image(1e-6, 64);
    for (const Complex& z : weak.points)
        CHECK(std::abs(z) == doctest::Approx(1e-6).epsilon(3e-6));
}

TEST_CASE("branch images stay on their ray") {
    struct Probe {
        int k;
        AxisRay ray;
        double r_max;
    };
    for (const Probe& pr : {Probe{0, AxisRay::pos_real, 10.0},
                            Probe{0, AxisRay::neg_real, 0.3},
                            Probe{1, AxisRay::pos_real, 10.0},
                            Probe{-1, AxisRay::neg_imag, 5.0},
                            Probe{2, AxisRay::pos_imag, 2.0}}) {
        CAPTURE(pr.k);
        Polyline img = sample_branch_image(pr.k, pr.ray, pr.r_max, 200);
        CHECK_FALSE(img.closed);
        Complex gamma = ray_gamma(pr.ray);
        for (const Complex& w : img.points) {
            Complex z = forward_map(w);
            double s = (z * std::conj(gamma)).real();
            CHECK(s >= -1e-15);
            CHECK(std::abs(z - gamma * s) <= 1e-10 * std::max(1.0, std::abs(z)));
        }
    }
}

TEST_CASE("branch image geometry") {
    // principal branch of the positive ray: real, nonnegative, increasing
    Polyline principal = sample_branch_image(0, AxisRay::pos_real, 10.0, 200);
    CHECK(principal.label == "W(0,+x)");
    for (std::size_t j = 0; j < principal.points.size(); ++j) {
        CHECK(std::abs(principal.points[j].imag()) <= 1e-14);
        CHECK(principal.points[j].real() >= 0.0);
        if (j > 0)
            CHECK(principal.points[j].real() > principal.points[j - 1].real());
    }

    // principal branch short of the branch point: inside (-1, 0)
    Polyline neg = sample_branch_image(0, AxisRay::neg_real, 0.3, 100);
    for (const Complex& w : neg.points) {
        CHECK(w.real() > -1.0);
        CHECK(w.real() <= 0.0);
        CHECK(std::abs(w.imag()) <= 1e-14);
    }

    // branch 1 lives in the strip pi < Im w < 3 pi off the negative axis
    Polyline one = sample_branch_image(1, AxisRay::pos_real, 10.0, 200);
    for (const Complex& w : one.points) {
        CHECK(w.imag() > kPi);
        CHECK(w.imag() < 3.0 * kPi);
    }

    CHECK_THROWS_AS(sample_branch_image(0, AxisRay::pos_real, 10.0, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(sample_branch_image(0, AxisRay::pos_real, 1e-13, 100),
                    std::invalid_argument);
}

TEST_CASE("sampled circle image reproduces the solver's crossings") {
    double R = 5.0;
    SolverReport z = solve_z_plane(R);
    auto sampled = count_axis_crossings(sample_circle_image(R, 8192));
    REQUIRE(sampled.size() == z.all_crossings.size());
    for (std::size_t i = 0; i < sampled.size(); ++i) {
        CAPTURE(i);
        CHECK(std::abs(sampled[i].theta - z.all_crossings[i].theta) <= 1e-5);
        CHECK(sampled[i].axis == z.all_crossings[i].axis);
        CHECK(sampled[i].multiplicity_tag == z.all_crossings[i].multiplicity_tag);
    }
}

TEST_CASE("the map preserves crossing angles") {
    double R = 5.0;
    SolverReport z = solve_z_plane(R);
    std::map<int, int> tally;
    for (const auto& sol : z.all_crossings) {
        if (sol.multiplicity_tag != 0) continue;  // one check per curve point
        int k = branch_of(std::polar(R, sol.theta));
        AngleCheck chk = conformal_angle_check(R, sol, k);
        CAPTURE(sol.theta);
        CHECK(std::abs(chk.w_plane_angle - chk.z_plane_angle) <= 1e-6);
        CHECK(chk.w_plane_angle >= 0.0);
        CHECK(chk.w_plane_angle <= kPi);
        ++tally[k];
    }
    // mirrored real-axis partners revisit the same point, so the per-branch
    // tally counts distinct image points: 4 + 3 + 4 of 11
    CHECK(tally[0] == 4);
    CHECK(tally[1] == 4);
    CHECK(tally[-1] == 3);
}

TEST_CASE("angles at a transversal crossing are right angles") {
    // at theta = 0 the circle meets its image axis squarely
    AngleCheck chk = conformal_angle_check(5.0, {0.0, Axis::real_axis, 0}, 0);
    CHECK(chk.w_plane_angle == doctest::Approx(kPi / 2.0).epsilon(1e-6));
    CHECK(chk.z_plane_angle == doctest::Approx(kPi / 2.0).epsilon(1e-6));
}

TEST_CASE("ground state angle check at strength 2") {
    SolverReport z = solve_z_plane(2.0);
    REQUIRE_FALSE(z.physical.empty());
    const BoundState& gs = z.physical[0];
    PhaseSolution sol{gs.theta, Axis::imag_axis, 0};
    int k = branch_of(std::polar(2.0, gs.theta));
    CHECK(k == 0);
    AngleCheck chk = conformal_angle_check(2.0, sol, k);
    CHECK(std::abs(chk.w_plane_angle - chk.z_plane_angle) <= 1e-6);
}

TEST_CASE("the singular point has no angle") {
    CHECK_THROWS_AS(conformal_angle_check(1.0, {kPi, Axis::real_axis, 0}, -1),
                    DegenerateTangent);
    CHECK_THROWS_AS(conformal_angle_check(0.0, {0.5, Axis::real_axis, 0}, 0),
                    std::invalid_argument);
}

TEST_SUITE_END();
