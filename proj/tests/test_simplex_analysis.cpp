#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "chromaprob/simplex.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chromaprob;

namespace {

Distribution dist(std::vector<Rational> entries) { return make_distribution(std::move(entries)); }

}  // namespace

TEST_CASE("majorization order") {
    Distribution top = dist({Rational(1), Rational(0)});
    Distribution mid = dist({Rational(3, 4), Rational(1, 4)});
    Distribution flat = dist({Rational(1, 2), Rational(1, 2)});
    CHECK(majorizes(top, mid));
    CHECK(majorizes(mid, flat));
    CHECK(majorizes(top, flat));
    CHECK_FALSE(majorizes(flat, mid));
    CHECK(majorizes(flat, flat));

    Distribution a = dist({Rational(1, 2), Rational(1, 4), Rational(1, 4)});
    Distribution b = dist({Rational(2, 5), Rational(2, 5), Rational(1, 5)});
    bool either_way = majorizes(a, b) || majorizes(b, a);
    CHECK_FALSE(either_way);
    CHECK(majorizes(dist({Rational(1, 4), Rational(1, 2), Rational(1, 4)}), b) ==
          majorizes(a, b));
}

TEST_CASE("pinching moves mass toward the mean") {
    Distribution p = dist({Rational(3, 4), Rational(1, 4)});
    Distribution half = pinch(p, 0, 1, Rational(1, 2));
    CHECK(half[0] == Rational(5, 8));
    CHECK(half[1] == Rational(3, 8));
    CHECK(majorizes(p, half));

    Distribution full = pinch(p, 0, 1, Rational(1));
    CHECK(full[0] == Rational(1, 2));
    CHECK(full[1] == Rational(1, 2));

    Distribution same = pinch(p, 0, 1, Rational(0));
    CHECK(same[0] == p[0]);

    Distribution three = dist({Rational(1, 2), Rational(1, 3), Rational(1, 6)});
    Distribution pinched = pinch(three, 0, 2, Rational(1, 3));
    Rational sum = pinched[0] + pinched[1] + pinched[2];
    CHECK(sum == 1);
    CHECK(majorizes(three, pinched));
}

TEST_CASE("pinch sweeps never raise the proper probability on clique or cycle") {
    SchurScanReport k3 = schur_concavity_scan(named_graph("complete:3"), 3, 200, 20240214ULL);
    CHECK(k3.holds_on_samples);
    SchurScanReport c5 = schur_concavity_scan(named_graph("cycle:5"), 2, 200, 20240214ULL);
    CHECK(c5.holds_on_samples);
    SchurScanReport small_star = schur_concavity_scan(named_graph("star:3"), 2, 500, 20240214ULL);
    CHECK(small_star.holds_on_samples);
}

TEST_CASE("the four leaf star fails the pinch sweep with a checkable witness") {
    SchurScanReport report = schur_concavity_scan(named_graph("star:4"), 2, 200, 20240214ULL);
    REQUIRE_FALSE(report.holds_on_samples);
    CHECK(majorizes(report.point, report.pinched));
    CHECK(report.point_value > report.pinched_value);
    Graph star = named_graph("star:4");
    CHECK(report.point_value == proper_probability(star, report.point));
    CHECK(report.pinched_value == proper_probability(star, report.pinched));
}

TEST_CASE("euclidean simplex projection") {
    auto close = [](const std::vector<double>& a, const std::vector<double>& b) {
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == doctest::Approx(b[i]));
    };
    close(project_to_simplex({1.5, 0.5}), {1.0, 0.0});
    close(project_to_simplex({0.4, 0.2, 0.1}), {0.5, 0.3, 0.2});
    close(project_to_simplex({0.25, 0.75}), {0.25, 0.75});
    close(project_to_simplex({-3.0, 0.0, 0.0}), {0.0, 0.5, 0.5});

    std::vector<double> p = project_to_simplex({2.7, -1.3, 0.4, 0.0});
    double sum = 0;
    for (double x : p) {
        CHECK(x >= 0.0);
        sum += x;
    }
    CHECK(sum == doctest::Approx(1.0));
}

TEST_CASE("projected ascent finds interior optima and repeats exactly") {
    Objective bowl = [](const std::vector<double>& x) {
        double a = x[0] - 0.3, b = x[1] - 0.2, c = x[2] - 0.5;
        return 1.0 - a * a - b * b - c * c;
    };
    MaximizeResult r = maximize_over_simplex(bowl, 3);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(r.argmax[0] == doctest::Approx(0.3).epsilon(1e-5));
    CHECK(r.argmax[2] == doctest::Approx(0.5).epsilon(1e-5));

    MaximizeResult again = maximize_over_simplex(bowl, 3);
    CHECK(r.value == again.value);
    CHECK(r.argmax == again.argmax);
}

TEST_CASE("projected ascent on the four leaf star meets the algebraic optimum") {
    ProfileTable table = build_profile_table(star_graph(4), 2);
    Objective objective = [&](const std::vector<double>& x) {
        return evaluate_profile_table(table, x);
    };
    MaximizeResult r = maximize_over_simplex(objective, 2);
    CHECK(r.value == doctest::Approx(1.0 / 12.0).epsilon(1e-9));
    double lo = std::min(r.argmax[0], r.argmax[1]);
    CHECK(lo == doctest::Approx((1.0 - 1.0 / std::sqrt(3.0)) / 2.0).epsilon(1e-4));
}

TEST_CASE("heavy coordinate predicate") {
    Graph star = named_graph("star:3");
    CHECK_FALSE(step1_condition_holds(star, 13, uniform_distribution(13)));
    std::vector<Rational> heavy(13, Rational(1, 400));
    heavy[0] = Rational(97, 100);
    CHECK(step1_condition_holds(star, 13, dist(heavy)));
}

TEST_CASE("heavy coordinate sampling never beats uniform on a claw") {
    Step1Report report = step1_empirical_check(named_graph("star:3"), 13, 100, 20240214ULL);
    CHECK(report.holds_on_samples);
    CHECK(report.trials_run == 100);
    CHECK_FALSE(report.counterexample_found);
    CHECK_THROWS_AS((void)step1_empirical_check(named_graph("star:3"), 3, 10, 1ULL),
                    std::invalid_argument);
}

TEST_CASE("moment growth region") {
    std::vector<Rational> tiny(13, Rational(1, 13));
    CHECK(omega_membership(tiny, 3, 13, 8));
    std::vector<Rational> spike(13, Rational(0));
    spike[0] = Rational(1);
    CHECK_FALSE(omega_membership(spike, 3, 13, 8));

    CHECK(omega1_membership(tiny, 3, 13));
    std::vector<Rational> heavy(13, Rational(0));
    heavy[0] = Rational(1);
    CHECK_FALSE(omega1_membership(heavy, 3, 13));

    CHECK(omega1_subset_omega(3, 13, 200));
    CHECK(omega1_subset_omega(2, 9, 200));
}
