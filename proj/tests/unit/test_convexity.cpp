#include "doctest.h"

#include <cmath>

#include "pcms/convexity.hpp"
#include "pcms/errors.hpp"
#include "pcms/rng.hpp"

using namespace pcms;

namespace {

Vector t1(double v) { return Vector::uniform(1, v); }

PcmSpace fraction_unit(int samples = 5) {
    return PcmSpace(Carrier::interval(0.0, 1.0, samples), ConeSpec(1), TNorm::minimum(),
                    Kernel::fraction());
}

PcmSpace heaviside_unit(int samples = 5) {
    return PcmSpace(Carrier::interval(0.0, 1.0, samples), ConeSpec(1), TNorm::minimum(),
                    Kernel::heaviside());
}

const std::vector<double> kMus{0.25, 0.5, 0.75};

// Off the 1/16 distance lattice of the 5-point grid, so step comparisons
// never sit on a jump.
const std::vector<Vector> kEps{t1(0.3), t1(0.7)};

}  // namespace

TEST_CASE("affine structure point evaluation") {
    ConvexStructure cs = ConvexStructure::affine();
    CHECK(cs.s_point(0.2, 0.8, 0.5) == doctest::Approx(0.5));
    CHECK(cs.s_point(0.3, 0.9, 0.0) == 0.9);
    CHECK(cs.s_point(0.3, 0.9, 1.0) == 0.3);
    CHECK(cs.s_point(0.0, 1.0, 0.25) == doctest::Approx(0.75));
    CHECK_THROWS_AS(cs.s_point(0.0, 1.0, 1.5), DomainError);
}

TEST_CASE("boundary laws are exact on random pairs") {
    ConvexStructure cs = ConvexStructure::affine();
    SplitMix64 rng(31);
    for (int i = 0; i < 1000; ++i) {
        double x = rng.unit() * 10.0 - 5.0;
        double y = rng.unit() * 10.0 - 5.0;
        CHECK(cs.s_point(x, y, 0.0) == y);
        CHECK(cs.s_point(x, y, 1.0) == x);
        double mu = rng.unit();
        CHECK(cs.s_point(x, x, mu) == x);
    }
}

TEST_CASE("tabulated structures validate their endpoint entries") {
    using Entry = ConvexStructure::TableEntry;
    ConvexStructure tab = ConvexStructure::tabulated(
        {Entry{0.0, 1.0, 0.0, 1.0}, Entry{0.0, 1.0, 0.5, 0.4}, Entry{0.0, 1.0, 1.0, 0.0}});
    CHECK(tab.s_point(0.0, 1.0, 0.5) == 0.4);
    CHECK_THROWS_AS(tab.s_point(0.0, 1.0, 0.25), DomainError);
    CHECK_THROWS_AS(ConvexStructure::tabulated({Entry{0.0, 1.0, 0.0, 0.7}}), InputError);
}

TEST_CASE("G1 holds on the step and fraction spaces") {
    ConvexStructure cs = ConvexStructure::affine();
    for (PcmSpace space : {heaviside_unit(), fraction_unit()}) {
        AxiomReport r = check_convexity_inequality(space, cs, space.sample_points(), kMus, kEps);
        CHECK(r.all_passed());
        CHECK(r.find("ConvexityIneq")->margin >= -1e-12);
    }
}

TEST_CASE("G1 at coincident points holds with both sides 1") {
    PcmSpace space = fraction_unit();
    ConvexStructure cs = ConvexStructure::affine();
    AxiomReport r = check_convexity_inequality(space, cs, {0.4, 0.4}, {0.5}, {t1(1.0)});
    CHECK(r.all_passed());
}

TEST_CASE("G3 strictness with degenerate coincidences flagged") {
    ConvexStructure cs = ConvexStructure::affine();
    for (PcmSpace space : {heaviside_unit(), fraction_unit()}) {
        AxiomReport r = check_strict_comparison(space, cs, space.sample_points(), kMus, kEps);
        CHECK(r.all_passed());
        CHECK(r.find("StrictIneq")->status == CheckStatus::Pass);
    }

    // x = y tuples coincide on both sides and are flagged, never failed.
    PcmSpace fr = fraction_unit();
    AxiomReport r = check_strict_comparison(fr, cs, {0.2, 0.2, 0.7}, {0.5}, {t1(1.0)});
    CHECK(r.all_passed());
    CHECK(r.find("StrictIneq-equality")->status == CheckStatus::Degenerate);
}

TEST_CASE("G3 spot values on the step kernel") {
    PcmSpace hv = heaviside_unit();
    ConvexStructure cs = ConvexStructure::affine();
    // x=0, y=1, z=0.5, mu=0.5: equality at eps=0.6 (both 1), strict at 0.4.
    double s = cs.s_point(0.0, 1.0, 0.5);
    CHECK(hv.eval_kernel(s, 0.5, t1(0.6)) == 1.0);
    CHECK(std::min(hv.eval_kernel(0.0, 0.5, t1(0.6)), hv.eval_kernel(0.5, 1.0, t1(0.6))) == 1.0);
    CHECK(hv.eval_kernel(s, 0.5, t1(0.4)) == 1.0);
    CHECK(std::min(hv.eval_kernel(0.0, 0.5, t1(0.4)), hv.eval_kernel(0.5, 1.0, t1(0.4))) == 0.0);
}

TEST_CASE("G3 spot value on the fraction kernel") {
    PcmSpace fr = fraction_unit();
    ConvexStructure cs = ConvexStructure::affine();
    double s = cs.s_point(0.0, 1.0, 0.5);
    double lhs = fr.eval_kernel(s, 0.0, t1(1.0));
    double rhs = std::min(fr.eval_kernel(0.0, 0.0, t1(1.0)), fr.eval_kernel(0.0, 1.0, t1(1.0)));
    CHECK(lhs == doctest::Approx(1.0 / 1.5));
    CHECK(rhs == doctest::Approx(0.5));
    CHECK(lhs > rhs);
}

TEST_CASE("strict convexity equalities and uniqueness") {
    ConvexStructure cs = ConvexStructure::affine();

    // Dense off-lattice t grid discriminates every candidate on a 101 z-grid.
    std::vector<Vector> dense;
    for (int i = 0; i < 100; ++i) dense.push_back(t1(0.005 + 0.01 * i));

    for (PcmSpace space : {heaviside_unit(), fraction_unit()}) {
        AxiomReport r =
            check_strict_convexity(space, cs, {0.0, 1.0}, {0.3, 0.5}, dense, 101);
        CHECK(r.all_passed());
        CHECK(r.find("StrictConvexity-splitting")->margin >= -1e-12);
        CHECK(r.find("StrictConvexity-uniqueness")->status == CheckStatus::Pass);
    }
}

TEST_CASE("strict convexity splitting spot values from the step kernel") {
    PcmSpace hv = heaviside_unit();
    ConvexStructure cs = ConvexStructure::affine();
    double z = cs.s_point(0.0, 1.0, 0.3);  // 0.7
    CHECK(z == doctest::Approx(0.7));
    CHECK(hv.eval_kernel(z, 0.0, t1(0.5)) == hv.eval_kernel(0.0, 1.0, t1(0.5 / 0.7)));
    CHECK(hv.eval_kernel(z, 0.0, t1(0.8)) == 1.0);
    CHECK(hv.eval_kernel(0.0, 1.0, t1(0.8 / 0.7)) == 1.0);
}

TEST_CASE("coarse t grids report uniqueness as degenerate, not failed") {
    PcmSpace hv = heaviside_unit();
    ConvexStructure cs = ConvexStructure::affine();
    AxiomReport r = check_strict_convexity(hv, cs, {0.0, 1.0}, {0.5}, {t1(0.3), t1(0.7)}, 101);
    CHECK(r.all_passed());
    CHECK(r.find("StrictConvexity-uniqueness")->status == CheckStatus::Degenerate);
}

TEST_CASE("convex sets under the affine structure") {
    ConvexStructure cs = ConvexStructure::affine();
    std::vector<double> mus;
    for (int i = 0; i <= 10; ++i) mus.push_back(i / 10.0);

    IntervalUnion interval{{RealInterval{0.2, 0.7}}};
    std::vector<double> xs;
    for (int i = 0; i <= 10; ++i) xs.push_back(0.2 + 0.05 * i);
    CHECK(is_convex_set(cs, interval, xs, mus));

    IntervalUnion split{{RealInterval{0.0, 0.3}, RealInterval{0.7, 1.0}}};
    CHECK_FALSE(is_convex_set(cs, split, {0.1, 0.9}, {0.5}));

    IntervalUnion singleton{{RealInterval{0.4, 0.4}}};
    CHECK(is_convex_set(cs, singleton, {0.4}, mus));
}

TEST_CASE("closed convex shells") {
    ConvexStructure cs = ConvexStructure::affine();
    RealInterval shell = closed_convex_shell(cs, {0.2, 0.9, 0.4});
    CHECK(shell.lo == 0.2);
    CHECK(shell.hi == 0.9);

    RealInterval point = closed_convex_shell(cs, {0.3});
    CHECK(point.lo == 0.3);
    CHECK(point.hi == 0.3);

    RealInterval full = closed_convex_shell(cs, {0.0, 1.0});
    CHECK(full.lo == 0.0);
    CHECK(full.hi == 1.0);

    using Entry = ConvexStructure::TableEntry;
    ConvexStructure tab = ConvexStructure::tabulated({Entry{0.0, 1.0, 0.5, 0.5}});
    CHECK_THROWS_AS(closed_convex_shell(tab, {0.0, 1.0}), UnsupportedError);
}

TEST_CASE("shell monotonicity and idempotence on random sets") {
    ConvexStructure cs = ConvexStructure::affine();
    SplitMix64 rng(37);
    for (int i = 0; i < 200; ++i) {
        std::vector<double> y1, y2;
        for (int k = 0; k < 4; ++k) y1.push_back(rng.unit());
        y2 = y1;
        for (int k = 0; k < 3; ++k) y2.push_back(rng.unit());
        RealInterval s1 = closed_convex_shell(cs, y1);
        RealInterval s2 = closed_convex_shell(cs, y2);
        CHECK(s2.lo <= s1.lo);
        CHECK(s1.hi <= s2.hi);
        RealInterval again = closed_convex_shell(cs, {s1.lo, s1.hi});
        CHECK(again.lo == s1.lo);
        CHECK(again.hi == s1.hi);
    }
}

TEST_CASE("closed balls are convex") {
    ConvexStructure cs = ConvexStructure::affine();
    PcmSpace fr = fraction_unit(21);
    std::vector<double> probes = fr.sample_points();

    AxiomReport r = closed_ball_convexity_check(fr, cs, 0.5, t1(1.0), 0.4, probes, kMus);
    CHECK(r.all_passed());
    CHECK(r.find("Ball-convex")->status == CheckStatus::Pass);

    PcmSpace hv = heaviside_unit(21);
    AxiomReport rh = closed_ball_convexity_check(hv, cs, 0.0, t1(0.3), 0.5, probes, kMus);
    CHECK(rh.all_passed());

    // A lambda so tight the ball is a single point still passes.
    AxiomReport rp = closed_ball_convexity_check(fr, cs, 0.5, t1(0.1), 1e-6, probes, kMus);
    CHECK(rp.all_passed());
}

TEST_CASE("every distinct pair admits an interior point off the endpoints") {
    // Lemma-C echo for the affine structure.
    ConvexStructure cs = ConvexStructure::affine();
    SplitMix64 rng(41);
    for (int i = 0; i < 500; ++i) {
        double x = rng.unit(), y = rng.unit();
        if (x == y) continue;
        bool off = false;
        for (double mu : kMus) {
            double s = cs.s_point(x, y, mu);
            off = off || (s != x && s != y);
        }
        CHECK(off);
    }
}

TEST_CASE("no strict-interior tuple stays on equality across a separating grid") {
    // Lemma-B echo: whenever S(x,y,mu) lies off {x,y}, some eps separates the
    // two sides of the strictness inequality. The midpoint of the gap between
    // d(S,z) and max(d(x,z), d(y,z)) always works for the step kernel.
    PcmSpace hv = heaviside_unit();
    ConvexStructure cs = ConvexStructure::affine();
    SplitMix64 rng(43);
    for (int i = 0; i < 500; ++i) {
        double x = rng.unit(), y = rng.unit(), z = rng.unit();
        double mu = 0.05 + 0.9 * rng.unit();
        if (x == y) continue;
        double s = cs.s_point(x, y, mu);
        if (s == x || s == y) continue;
        double near = std::fabs(s - z);
        double far = std::max(std::fabs(x - z), std::fabs(y - z));
        REQUIRE(near < far);
        double eps = 0.5 * (near + far);
        double lhs = hv.eval_kernel(s, z, t1(eps));
        double rhs = std::min(hv.eval_kernel(x, z, t1(eps)), hv.eval_kernel(z, y, t1(eps)));
        CHECK(lhs > rhs);
    }
}
