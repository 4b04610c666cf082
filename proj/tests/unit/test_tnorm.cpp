#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "pcms/errors.hpp"
#include "pcms/rng.hpp"
#include "pcms/tnorm.hpp"

using namespace pcms;

namespace {

std::vector<double> uniform_grid(int n) {
    std::vector<double> g;
    for (int i = 0; i < n; ++i) g.push_back(static_cast<double>(i) / (n - 1));
    return g;
}

}  // namespace

TEST_CASE("apply") {
    CHECK(TNorm::product().apply(0.3, 0.7) == doctest::Approx(0.21));
    CHECK(TNorm::minimum().apply(0.3, 0.7) == doctest::Approx(0.3));
    CHECK(TNorm::product().apply(0.5, 1.0) == doctest::Approx(0.5));
    CHECK_THROWS_AS(TNorm::product().apply(-0.1, 0.5), DomainError);
    CHECK_THROWS_AS(TNorm::minimum().apply(0.5, 1.1), DomainError);
}

TEST_CASE("axiom sweep over the 11-grid") {
    for (const TNorm& t : {TNorm::minimum(), TNorm::product()}) {
        AxiomReport r = check_tnorm_axioms(t, uniform_grid(11));
        CHECK(r.all_passed());
    }
    CHECK_THROWS_AS(check_tnorm_axioms(TNorm::minimum(), {}), InputError);
}

TEST_CASE("bounded sum fails the unit law") {
    TNorm broken = TNorm::custom("bounded-sum", [](double a, double b) {
        return std::min(1.0, a + b);
    });
    AxiomReport r = check_tnorm_axioms(broken, {0.5, 0.8});
    CHECK(r.find("T-monotone")->status == CheckStatus::Pass);
    const CheckResult* unit = r.find("T-unit");
    REQUIRE(unit != nullptr);
    CHECK(unit->status == CheckStatus::Fail);
    REQUIRE(unit->witness.has_value());
    CHECK((*unit->witness)[0] == doctest::Approx(0.5));
    CHECK(unit->margin == doctest::Approx(-0.5));
}

TEST_CASE("companion values") {
    CHECK(find_companion(TNorm::minimum(), 0.8, 0.5) == doctest::Approx(0.5));
    CHECK(find_companion(TNorm::product(), 0.8, 0.4) == doctest::Approx(0.5));
    CHECK(find_companion(TNorm::minimum(), 0.9, 0.9 - 1e-9) == doctest::Approx(0.9 - 1e-9));
    CHECK_THROWS_AS(find_companion(TNorm::minimum(), 0.4, 0.4), PreconditionError);
    CHECK_THROWS_AS(find_companion(TNorm::product(), 0.2, 0.5), PreconditionError);
}

TEST_CASE("companion output re-checks on random pairs") {
    SplitMix64 rng(5);
    for (const TNorm& t : {TNorm::minimum(), TNorm::product()}) {
        for (int i = 0; i < 500; ++i) {
            double r1 = 0.05 + 0.9 * rng.unit();
            double r2 = r1 * (0.05 + 0.9 * rng.unit());
            if (!(0.0 < r2 && r2 < r1 && r1 < 1.0)) continue;
            double r3 = find_companion(t, r1, r2);
            CHECK(r3 > 0.0);
            CHECK(r3 < 1.0);
            CHECK(t.apply(r1, r3) >= r2);
        }
    }
}

TEST_CASE("idempotent bounds") {
    CHECK(find_idempotent_bound(TNorm::product(), 0.49) == doctest::Approx(0.7));
    CHECK(find_idempotent_bound(TNorm::minimum(), 0.6) == doctest::Approx(0.6));
    CHECK(find_idempotent_bound(TNorm::product(), 0.99) == doctest::Approx(std::sqrt(0.99)));
    CHECK_THROWS_AS(find_idempotent_bound(TNorm::product(), 1.0), DomainError);

    SplitMix64 rng(6);
    for (const TNorm& t : {TNorm::minimum(), TNorm::product()}) {
        for (int i = 0; i < 500; ++i) {
            double r4 = 0.01 + 0.98 * rng.unit();
            double r5 = find_idempotent_bound(t, r4);
            CHECK(t.apply(r5, r5) >= r4);
        }
    }
}

TEST_CASE("monotonicity and dominance on random grid tuples") {
    SplitMix64 rng(8);
    TNorm mn = TNorm::minimum(), pr = TNorm::product();
    for (int i = 0; i < 1000; ++i) {
        double a = rng.unit(), b = rng.unit();
        double c = std::min(1.0, a + rng.unit() * (1.0 - a));
        double d = std::min(1.0, b + rng.unit() * (1.0 - b));
        CHECK(pr.apply(a, b) <= pr.apply(c, d));
        CHECK(mn.apply(a, b) <= mn.apply(c, d));
        CHECK(mn.apply(a, b) >= pr.apply(a, b));
    }
}

TEST_CASE("product associativity within 1e-15 on the 11-grid") {
    TNorm pr = TNorm::product();
    std::vector<double> g = uniform_grid(11);
    for (double a : g)
        for (double b : g)
            for (double c : g)
                CHECK(std::fabs(pr.apply(a, pr.apply(b, c)) - pr.apply(pr.apply(a, b), c)) <=
                      1e-15);
}
