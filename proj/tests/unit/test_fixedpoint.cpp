#include "doctest.h"

#include <cmath>

#include "pcms/fixedpoint.hpp"
#include "pcms/rng.hpp"

using namespace pcms;

namespace {

Vector t1(double v) { return Vector::uniform(1, v); }

const RealInterval kUnit{0.0, 1.0};
const double kQuadRoot = (3.0 - std::sqrt(3.0)) / 2.0;

PcmSpace heaviside_unit(int samples = 21) {
    return PcmSpace(Carrier::interval(0.0, 1.0, samples), ConeSpec(1), TNorm::minimum(),
                    Kernel::heaviside());
}

PcmSpace fraction_unit(int samples = 11) {
    return PcmSpace(Carrier::interval(0.0, 1.0, samples), ConeSpec(1), TNorm::minimum(),
                    Kernel::fraction());
}

}  // namespace

TEST_CASE("self-map construction and range checks") {
    SelfMap half = SelfMap::scale_half(kUnit);
    CHECK(half.apply(0.8) == doctest::Approx(0.4));

    SelfMap quad = SelfMap::quad(kUnit);
    CHECK(quad.apply(0.0) == doctest::Approx(0.5));
    CHECK(quad.apply(1.0) == doctest::Approx(1.0 / 3.0 + 0.5));

    try {
        SelfMap::affine(1.0, 0.9, kUnit);
        FAIL("affine(1, 0.9) does not map [0,1] into itself");
    } catch (const ConstructionError& e) {
        const CheckResult* range = e.report().find("SelfMap-range");
        REQUIRE(range != nullptr);
        REQUIRE(range->witness.has_value());
        CHECK((*range->witness)[0] == doctest::Approx(0.2));  // first offending grid point
    }

    SelfMap escaped = SelfMap::affine(2.0, -0.5, kUnit, false);
    CHECK(escaped.apply(0.0) == doctest::Approx(-0.5));
}

TEST_CASE("tabulated maps interpolate") {
    SelfMap tab = SelfMap::tabulated({0.0, 0.5, 1.0}, {0.2, 0.6, 0.4}, kUnit);
    CHECK(tab.apply(0.25) == doctest::Approx(0.4));
    CHECK(tab.apply(0.5) == doctest::Approx(0.6));
    CHECK_THROWS_AS(SelfMap::tabulated({0.0, 0.0}, {0.1, 0.2}, kUnit), InputError);
}

TEST_CASE("nonexpansive sweeps") {
    PcmSpace hv = heaviside_unit();
    std::vector<Vector> eps{t1(0.3), t1(0.6), t1(1.2)};

    AxiomReport quad = check_nonexpansive(hv, SelfMap::quad(kUnit), hv.sample_points(), eps);
    CHECK(quad.all_passed());

    AxiomReport ident =
        check_nonexpansive(hv, SelfMap::identity(kUnit), hv.sample_points(), eps);
    CHECK(ident.all_passed());
    CHECK(ident.find("Nonexpansive")->margin == doctest::Approx(0.0));

    SelfMap expansive = SelfMap::affine(2.0, -0.5, kUnit, false);
    AxiomReport r = check_nonexpansive(hv, expansive, {0.0, 0.5}, {t1(0.6)});
    const CheckResult* g5 = r.find("Nonexpansive");
    REQUIRE(g5 != nullptr);
    CHECK(g5->status == CheckStatus::Fail);
    REQUIRE(g5->witness.has_value());
    CHECK(g5->margin == doctest::Approx(-1.0));  // H jumps from 1 to 0
}

TEST_CASE("pair condition sweeps") {
    PcmSpace fr = fraction_unit();
    std::vector<Vector> ts{t1(0.5), t1(1.0), t1(2.0)};
    SelfMap half = SelfMap::scale_half(kUnit);

    AxiomReport r = check_pair_condition(fr, half, half, fr.sample_points(), ts);
    CHECK(r.all_passed());
    CHECK(r.find("PairCondition")->margin >= -1e-12);

    SelfMap ident = SelfMap::identity(kUnit);
    AxiomReport ri = check_pair_condition(fr, ident, ident, fr.sample_points(), ts);
    CHECK(ri.all_passed());
    CHECK(ri.find("PairCondition")->margin == doctest::Approx(0.0));
}

TEST_CASE("nonexpansiveness of f transfers to the pair (f, f)") {
    PcmSpace hv = heaviside_unit();
    std::vector<Vector> eps{t1(0.3), t1(0.6), t1(1.2)};
    for (SelfMap f : {SelfMap::quad(kUnit), SelfMap::scale_half(kUnit)}) {
        AxiomReport single = check_nonexpansive(hv, f, hv.sample_points(), eps);
        AxiomReport pair = check_pair_condition(hv, f, f, hv.sample_points(), eps);
        CHECK(single.all_passed());
        CHECK(pair.all_passed());
    }
}

TEST_CASE("solver reproduces the halving fixed point at zero") {
    SelfMap half = SelfMap::scale_half(kUnit);
    FixedPointResult r = find_common_fixed_point(half, half, ConvexStructure::affine());
    CHECK(std::fabs(r.point) <= 1e-9);
    CHECK(r.method == SolveMethod::Exact);
    CHECK(verify_fixed_point(half, half, r.point, 1e-9));
}

TEST_CASE("solver reproduces the quadratic fixed point") {
    SelfMap quad = SelfMap::quad(kUnit);
    FixedPointResult r = find_common_fixed_point(quad, quad, ConvexStructure::affine());
    CHECK(std::fabs(r.point - kQuadRoot) <= 1e-9);
    CHECK(std::max(r.residual_f, r.residual_g) <= 1e-9);
}

TEST_CASE("identity converges to the first Picard probe") {
    SelfMap ident = SelfMap::identity(kUnit);
    FixedPointResult r = find_common_fixed_point(ident, ident, ConvexStructure::affine());
    CHECK(r.point == doctest::Approx(0.5));
    CHECK(r.method == SolveMethod::Picard);
    CHECK(r.residual_f == 0.0);
}

TEST_CASE("tabulated maps fall through to the iteration or grid stages") {
    // Fixed point of the interpolant of x -> 1 - x/2 is 2/3.
    std::vector<double> xs, ys;
    for (int i = 0; i <= 100; ++i) {
        double x = i / 100.0;
        xs.push_back(x);
        ys.push_back(1.0 - x / 2.0);
    }
    SelfMap tab = SelfMap::tabulated(xs, ys, kUnit);
    FixedPointResult r = find_common_fixed_point(tab, tab, ConvexStructure::affine());
    CHECK(r.point == doctest::Approx(2.0 / 3.0).epsilon(1e-8));
    CHECK(r.method != SolveMethod::Exact);
}

TEST_CASE("solver failure carries the best candidate") {
    // f and g have no common fixed point: f fixes 0, g fixes 1.
    SelfMap f = SelfMap::scale_half(kUnit);
    SelfMap g = SelfMap::affine(0.5, 0.5, kUnit);
    try {
        find_common_fixed_point(f, g, ConvexStructure::affine(), {1e-9, 10000, 0.5, 1001});
        FAIL("maps share no fixed point");
    } catch (const SolveError& e) {
        CHECK(std::max(e.best().residual_f, e.best().residual_g) > 1e-9);
    }
}

TEST_CASE("verification oracle") {
    SelfMap half = SelfMap::scale_half(kUnit);
    CHECK(verify_fixed_point(half, half, 0.0, 0.0));

    SelfMap quad = SelfMap::quad(kUnit);
    CHECK(verify_fixed_point(quad, quad, kQuadRoot, 1e-12));
    CHECK_FALSE(verify_fixed_point(quad, quad, 0.4, 1e-12));
    CHECK_THROWS_AS(verify_fixed_point(quad, quad, (3.0 + std::sqrt(3.0)) / 2.0, 1e-12),
                    DomainError);
}

TEST_CASE("grid oracle lands within one cell of the quadratic root") {
    SelfMap quad = SelfMap::quad(kUnit);
    const long n = 100000;
    double x = grid_fixed_point_oracle(quad, quad, n);
    CHECK(std::fabs(x - kQuadRoot) <= 1.0 / static_cast<double>(n - 1));

    double serial = grid_fixed_point_oracle(quad, quad, n, ExecMode::Serial);
    CHECK(x == serial);
}

TEST_CASE("picard decay on the halving map is exactly geometric") {
    SelfMap half = SelfMap::scale_half(kUnit);
    double x = 0.75;
    for (int n = 1; n <= 40; ++n) {
        x = half.apply(x);
        CHECK(x == 0.75 * std::pow(0.5, n));  // halving is exact in binary
    }
}

TEST_CASE("mann iterates stay inside the domain") {
    ConvexStructure cs = ConvexStructure::affine();
    SplitMix64 rng(47);
    for (SelfMap f : {SelfMap::quad(kUnit), SelfMap::scale_half(kUnit)}) {
        for (int trial = 0; trial < 50; ++trial) {
            double x = rng.unit();
            double mu = 0.05 + 0.9 * rng.unit();
            for (int n = 0; n < 100; ++n) {
                x = cs.s_point(x, f.apply(x), mu);
                CHECK(kUnit.contains(x));
            }
        }
    }
}

TEST_CASE("converged results always pass the verification oracle") {
    ConvexStructure cs = ConvexStructure::affine();
    std::vector<SelfMap> maps{SelfMap::scale_half(kUnit), SelfMap::quad(kUnit),
                              SelfMap::identity(kUnit), SelfMap::affine(0.3, 0.2, kUnit)};
    for (const SelfMap& f : maps) {
        FixedPointResult r = find_common_fixed_point(f, f, cs);
        CHECK(verify_fixed_point(f, f, r.point, 1e-9));
    }
}
