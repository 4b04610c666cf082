#include "doctest.h"

#include <cmath>

#include "pcms/cone.hpp"
#include "pcms/errors.hpp"
#include "pcms/rng.hpp"

using namespace pcms;

namespace {

Vector v(std::initializer_list<double> c) { return Vector(std::vector<double>(c)); }

}  // namespace

TEST_CASE("orthant membership") {
    ConeSpec cone(2);
    CHECK(cone.contains(v({1.0, 0.0})));
    CHECK_FALSE(cone.contains(v({-0.1, 2.0})));
    CHECK(ConeSpec(1).contains(v({0.0})));

    CHECK(cone.in_interior(v({0.5, 0.5})));
    CHECK_FALSE(cone.in_interior(v({0.0, 1.0})));
    CHECK(ConeSpec(1).in_interior(v({1e-12})));

    CHECK_THROWS_AS(cone.contains(v({1.0})), DimensionError);
    CHECK_THROWS_AS(Vector(std::vector<double>{}), InputError);
    CHECK_THROWS_AS(Vector(std::vector<double>{1.0, std::nan("")}), InputError);
}

TEST_CASE("order classification") {
    ConeSpec cone(2);
    CHECK(cone.order(v({1, 2}), v({2, 3})) == OrderRelation::Ll);
    CHECK(cone.order(v({1, 2}), v({1, 3})) == OrderRelation::Lt);
    CHECK(cone.order(v({1, 0}), v({0, 1})) == OrderRelation::NotComparable);
    CHECK(cone.order(v({1, 2}), v({1, 2})) == OrderRelation::Leq);
}

TEST_CASE("interior points are order-transitively inside the cone") {
    ConeSpec cone(2);
    SplitMix64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Vector a = v({rng.unit(), rng.unit()});
        if (cone.in_interior(a)) CHECK(cone.contains(a));
        Vector b = a + v({rng.unit(), rng.unit()});
        Vector c = b + v({rng.unit(), rng.unit()});
        if (cone.leq(a, b) && cone.leq(b, c)) CHECK(cone.leq(a, c));
    }
}

TEST_CASE("cone axiom sweep on the orthant") {
    ConeSpec cone(2);
    std::vector<Vector> samples{v({0, 0}), v({1, 1}), v({0.5, 2}), v({1, 0})};
    AxiomReport r = check_cone_axioms(cone, samples, {0.0, 1.0, 2.0});
    CHECK(r.all_passed());
    CHECK(r.find("P2") != nullptr);
    CHECK(r.find("P3")->status == CheckStatus::Pass);
}

TEST_CASE("pointedness fails with opposite samples claimed in P") {
    ConeSpec cone(2);
    AxiomReport r = check_cone_axioms(cone, {v({1, 1}), v({-1, -1})}, {1.0});
    const CheckResult* p3 = r.find("P3");
    REQUIRE(p3 != nullptr);
    CHECK(p3->status == CheckStatus::Fail);
    REQUIRE(p3->witness.has_value());
    CHECK((*p3->witness == Witness{1.0, 1.0}));
}

TEST_CASE("exhaustive dim-1 sweep") {
    ConeSpec cone(1);
    AxiomReport r = check_cone_axioms(cone, {v({0.5}), v({2.0})}, {0.5, 3.0});
    CHECK(r.all_passed());
    CHECK_THROWS_AS(check_cone_axioms(cone, {}, {1.0}), InputError);
}

TEST_CASE("normal constant estimates") {
    ConeSpec sup2(2, ConeNorm::Sup);
    CHECK(normal_constant_estimate(sup2, {{v({1, 1}), v({2, 2})}, {v({0, 1}), v({1, 1})}}) ==
          doctest::Approx(1.0));

    ConeSpec euc2(2, ConeNorm::Euclidean);
    CHECK(normal_constant_estimate(euc2, {{v({1, 0}), v({1, 1})}}) ==
          doctest::Approx(1.0 / std::sqrt(2.0)));

    ConeSpec sup1(1);
    CHECK(normal_constant_estimate(sup1, {{v({0.3}), v({0.3})}}) == doctest::Approx(1.0));

    CHECK_THROWS_AS(normal_constant_estimate(sup2, {{v({1, 0}), v({0, 1})}}), PreconditionError);
    CHECK_THROWS_AS(normal_constant_estimate(sup1, {{v({0.0}), v({0.0})}}), PreconditionError);
}

TEST_CASE("sup-norm orthant realizes K = 1 on random ordered pairs") {
    ConeSpec cone(3, ConeNorm::Sup);
    SplitMix64 rng(11);
    for (int i = 0; i < 300; ++i) {
        Vector x = v({rng.unit(), rng.unit(), rng.unit()});
        Vector y = x + v({rng.unit(), rng.unit(), rng.unit()});
        CHECK(cone.norm(x) <= cone.norm(y));
    }
}

TEST_CASE("common lower interior point") {
    ConeSpec cone(2);
    Vector c = common_lower_interior(cone, v({2, 4}), v({3, 1}));
    CHECK(c == v({1.0, 0.5}));
    CHECK(common_lower_interior(cone, v({1, 1}), v({1, 1})) == v({0.5, 0.5}));
    CHECK(common_lower_interior(ConeSpec(1), v({4}), v({6})) == v({2.0}));
    CHECK_THROWS_AS(common_lower_interior(cone, v({0, 1}), v({1, 1})), PreconditionError);

    SplitMix64 rng(3);
    for (int i = 0; i < 200; ++i) {
        Vector c1 = v({rng.unit() + 0.01, rng.unit() + 0.01});
        Vector c2 = v({rng.unit() + 0.01, rng.unit() + 0.01});
        Vector low = common_lower_interior(cone, c1, c2);
        CHECK(cone.in_interior(low));
        CHECK(cone.leq(low, c1));
        CHECK(cone.leq(low, c2));
    }
}

TEST_CASE("interior stability under addition on random samples") {
    ConeSpec cone(2);
    SplitMix64 rng(19);
    for (int i = 0; i < 200; ++i) {
        Vector p = v({rng.unit(), 0.0});                       // boundary of P
        Vector q = v({rng.unit() + 0.01, rng.unit() + 0.01});  // interior
        CHECK(cone.in_interior(p + q));
    }
}
